import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ftbackbone.errors import InputError
from ftbackbone.graph import (
    Graph,
    articulation_points,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_connected,
    is_k_connected,
    local_connectivity,
    neighbors_in,
    petersen_graph,
)

from _oracles import brute_k_connected, min_node_cut, random_graph


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(range(n), chosen)


class TestGraphType:
    def test_rejects_self_loop_and_parallel_edge(self):
        with pytest.raises(InputError):
            Graph([1], [(1, 1)])
        with pytest.raises(InputError):
            Graph([1, 2], [(1, 2), (2, 1)])

    def test_preserves_ids(self):
        g = Graph([7, 3, 100], [(100, 3)])
        assert g.nodes == (3, 7, 100)
        assert g.neighbors(3) == (100,)
        assert g.neighbors(7) == ()

    @given(graphs())
    def test_symmetry_and_edge_count(self, g):
        for u in g:
            for v in g.neighbors(u):
                assert u in g.adj[v]
        assert g.edge_count * 2 == sum(g.degree(v) for v in g)
        assert list(g.edges()) == sorted(g.edges())


class TestInducedSubgraph:
    def test_complete_restriction(self):
        assert induced_subgraph(complete_graph(5), [1, 2, 3]) == complete_graph(3)

    def test_cycle_independent_set(self):
        h = induced_subgraph(cycle_graph(6), [1, 3, 5])
        assert h.nodes == (1, 3, 5) and h.edge_count == 0

    def test_petersen_outer_cycle(self):
        p = petersen_graph()
        h = induced_subgraph(p, range(5))
        expected = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
        assert set(h.edges()) == expected
        # brute check against the explicit edge list
        assert set(h.edges()) == {(u, v) for u, v in p.edges() if u < 5 and v < 5}

    def test_unknown_node(self):
        with pytest.raises(InputError):
            induced_subgraph(complete_graph(3), [1, 9])

    @given(graphs(), st.data())
    def test_idempotent(self, g, data):
        c = data.draw(st.sets(st.sampled_from(g.nodes)) if len(g) else st.just(set()))
        h = induced_subgraph(g, c)
        assert induced_subgraph(h, c) == h


class TestConnectivity:
    def test_is_connected_examples(self):
        assert is_connected(cycle_graph(6))
        two_triangles = Graph(range(6), [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(two_triangles)
        assert not is_connected(Graph())
        assert is_connected(Graph([4]))

    def test_local_connectivity_examples(self):
        k4 = complete_graph(4)
        assert all(local_connectivity(k4, u, v) == 3 for u, v in combinations(k4.nodes, 2))
        assert local_connectivity(cycle_graph(5), 1, 2) == 2
        k23 = complete_bipartite(2, 3)
        assert local_connectivity(k23, 1, 2) == 3
        assert min_node_cut(k23, 1, 2) == 3

    def test_local_connectivity_errors(self):
        with pytest.raises(InputError):
            local_connectivity(complete_graph(3), 1, 1)
        with pytest.raises(InputError):
            local_connectivity(complete_graph(3), 1, 7)

    def test_is_k_connected_examples(self):
        assert is_k_connected(complete_graph(4), 3)
        assert is_k_connected(cycle_graph(5), 2)
        assert not is_k_connected(cycle_graph(5), 3)
        assert is_k_connected(complete_bipartite(3, 3), 3)
        assert brute_k_connected(complete_bipartite(3, 3), 3)
        assert not is_k_connected(complete_graph(3), 3)
        assert not is_k_connected(Graph(), 1)
        assert not is_k_connected(Graph([1]), 1)

    def test_neighbors_in(self):
        assert neighbors_in(complete_graph(5), 5, [1, 2, 3]) == (1, 2, 3)
        assert neighbors_in(cycle_graph(6), 1, [2, 4]) == (2,)
        star = Graph(range(5), [(0, i) for i in range(1, 5)])
        assert neighbors_in(star, 1, [0, 2]) == (0,)

    def test_local_connectivity_matches_cut_enumeration(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.9))
            for u, v in combinations(g.nodes, 2):
                assert local_connectivity(g, u, v) == min_node_cut(g, u, v)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=8), st.integers(1, 4))
    def test_k_connectivity_matches_removal(self, g, k):
        assert is_k_connected(g, k) == brute_k_connected(g, k)

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=9))
    def test_articulation_points_match_removal(self, g):
        expected = set()
        for v in g:
            rest = [w for w in g.nodes if w != v]
            if not rest:
                continue
            sub = induced_subgraph(g, rest)
            before = len(_comps(g))
            if len(_comps(sub)) > before:
                expected.add(v)
        assert articulation_points(g.adj) == expected


def _comps(g):
    seen, count = set(), 0
    for s in g.nodes:
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return range(count)
