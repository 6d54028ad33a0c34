import random
from fractions import Fraction
from itertools import combinations

import pytest

from ftbackbone.errors import InputError, OracleSizeError
from ftbackbone.graph import Graph, complete_bipartite, complete_graph, cycle_graph, is_k_connected
from ftbackbone.instances import gen_random_3connected
from ftbackbone.oracle import brute_min_kmcds, empirical_ratio, oracle_node_cap, verify_kmcds

from _oracles import random_graph


def test_verify_examples():
    assert verify_kmcds(complete_graph(5), [1, 2, 3, 4], 3, 3).is_valid
    rep = verify_kmcds(cycle_graph(6), [1, 2, 3], 2, 1)
    # the path 1-2-3 has a cut node, and node 5 sees none of it
    assert not rep.is_valid and not rep.connectivity_ok and rep.failed_domination == [(5, 0, 1)]
    rep = verify_kmcds(complete_bipartite(3, 3), [1, 2, 4, 5], 3, 3)
    assert not rep.is_valid and not rep.connectivity_ok
    # nodes 3 and 6 each see only two of the four
    assert rep.failed_domination == [(3, 2, 3), (6, 2, 3)]


def test_verify_unknown_node():
    with pytest.raises(InputError):
        verify_kmcds(complete_graph(3), [1, 99], 1, 1)


def test_report_invariant():
    rng = random.Random(1)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        c = rng.sample(g.nodes, rng.randint(1, len(g)))
        for k in (1, 2, 3):
            rep = verify_kmcds(g, c, k, 2)
            assert rep.is_valid == (not rep.failed_domination and rep.connectivity_ok)


def test_whole_vertex_set_matches_k_connectivity():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8), rng.random())
        for k in (1, 2, 3):
            assert verify_kmcds(g, g.nodes, k, 5).is_valid == is_k_connected(g, k)


def test_brute_examples():
    assert len(brute_min_kmcds(complete_graph(5), 3, 3)) == 4
    assert brute_min_kmcds(complete_bipartite(3, 3), 3, 3) == (1, 2, 3, 4, 5, 6)
    star = Graph(range(7), [(0, i) for i in range(1, 7)])
    assert brute_min_kmcds(star, 1, 1) == (0,)


def test_brute_size_cap_and_guard():
    assert brute_min_kmcds(complete_bipartite(3, 3), 3, 3, size_cap=5) is None
    with pytest.raises(OracleSizeError):
        brute_min_kmcds(cycle_graph(30), 2, 1)


def test_env_cap_only_lowers(monkeypatch):
    monkeypatch.setenv("BACKBONE_ORACLE_CAP", "5")
    assert oracle_node_cap() == 5
    with pytest.raises(OracleSizeError):
        brute_min_kmcds(complete_graph(6), 3, 3)
    monkeypatch.setenv("BACKBONE_ORACLE_CAP", "100")
    assert oracle_node_cap() == 22


def test_brute_is_minimum_by_double_enumeration():
    for seed in range(12):
        g = gen_random_3connected(rng_n := 6 + seed % 5, 0.3, seed)
        for k, m in ((2, 3), (3, 3), (1, 2)):
            best = brute_min_kmcds(g, k, m)
            assert verify_kmcds(g, best, k, m).is_valid
            # nothing smaller, checked with no pruning at all
            for r in range(1, len(best)):
                assert not any(verify_kmcds(g, c, k, m).is_valid for c in combinations(g.nodes, r))
            assert rng_n == len(g)


def test_supersets_of_valid_sets_stay_valid():
    rng = random.Random(4)
    for seed in range(15):
        g = gen_random_3connected(10, 0.25, seed)
        for k in (2, 3):
            best = brute_min_kmcds(g, k, 3)
            rest = [v for v in g if v not in best]
            for _ in range(5):
                extra = rng.sample(rest, rng.randint(0, len(rest)))
                assert verify_kmcds(g, set(best) | set(extra), k, 3).is_valid


def test_empirical_ratio():
    assert empirical_ratio(complete_graph(5), 4, 3, 3) == (4, Fraction(1))
    assert empirical_ratio(complete_bipartite(3, 3), 6, 3, 3) == (6, Fraction(1))
    r = empirical_ratio(complete_graph(6), 6, 3, 3)
    assert r.opt == 4 and r.ratio == Fraction(3, 2) and r.ratio >= 1
