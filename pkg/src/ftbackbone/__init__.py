"""Fault-tolerant virtual backbones: 3-connected m-fold dominating sets."""

from .bricks import (
    Brick,
    BrickDecomposition,
    MarkedGraph,
    decompose,
    delta_f,
    find_good_two_separator,
    marked_s_components,
    potential,
)
from .errors import (
    GenerationError,
    GraphParseError,
    InputError,
    InternalError,
    OracleSizeError,
    PreconditionError,
)
from .graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    is_connected,
    is_k_connected,
    local_connectivity,
    neighbors_in,
    petersen_graph,
    wheel_graph,
)
from .greedy import Candidate, RunTrace, enumerate_candidates, gamma_bound, solve_3m_cds
from .instances import (
    UdgInstance,
    gen_random_3connected,
    gen_udg,
    parse_graph,
    parse_points,
    write_graph,
    write_points,
)
from .oracle import ValidityReport, brute_min_kmcds, empirical_ratio, verify_kmcds
from .seeds import (
    SEED_BUILDERS,
    BaseCdsResult,
    biconnect,
    compute_2m_cds,
    connect_to_cds,
    greedy_m_fold_ds,
)

__version__ = "0.1.0"
