"""netdiv: network diversion on plane graphs.

Find the cheapest set of edges whose removal forces all s-t traffic
through one designated edge, by reducing to a shortest odd path in the
dual graph.  Also ships the odd/even path solver itself, parity-
constrained path reductions, diverse minimal cut enumeration, seeded
instance generators, and a benchmark harness.
"""

from .errors import (
    CoincidentPointsError,
    DegenerateInputError,
    DisconnectedGraphError,
    EmbeddingError,
    EulerCheckError,
    GraphError,
    NegativeWeightError,
    ParallelEdgeError,
    SelfLoopError,
    ValidationError,
    VertexRangeError,
)
from .graph import (
    Path,
    WeightedGraph,
    bfs_path,
    build_graph,
    connected,
    reachable_from,
)
from .plane import (
    DualGraph,
    PlaneGraph,
    compute_dual,
    rotation_from_coordinates,
    trace_faces,
    verify_embedding,
)
from .trackers import NaiveBaseTracker, UnionFindBaseTracker
from .oddpath import OddPathResult, shortest_even_path, shortest_odd_path
from .parity import (
    SubdividedGraph,
    detour_path,
    shortest_path_odd_in_F,
    subdivide_except,
)
from .diversion import (
    ALREADY_BRIDGE,
    INFEASIBLE,
    OPTIMAL,
    DiversionInstance,
    DiversionSolution,
    solve,
    validate_solution,
)
from .cuts import DiverseCutsReport, diverse_cuts, min_cut_weight
from .generate import (
    GeneratedInstance,
    GeneratorConfig,
    SplitMix64,
    gen_delaunay,
    gen_grid,
    generate,
)

__version__ = "0.1.0"

__all__ = [
    "ALREADY_BRIDGE",
    "CoincidentPointsError",
    "DegenerateInputError",
    "DisconnectedGraphError",
    "DiverseCutsReport",
    "DiversionInstance",
    "DiversionSolution",
    "DualGraph",
    "EmbeddingError",
    "EulerCheckError",
    "GeneratedInstance",
    "GeneratorConfig",
    "GraphError",
    "INFEASIBLE",
    "NaiveBaseTracker",
    "NegativeWeightError",
    "OPTIMAL",
    "OddPathResult",
    "ParallelEdgeError",
    "Path",
    "PlaneGraph",
    "SelfLoopError",
    "SplitMix64",
    "SubdividedGraph",
    "UnionFindBaseTracker",
    "ValidationError",
    "VertexRangeError",
    "WeightedGraph",
    "bfs_path",
    "build_graph",
    "compute_dual",
    "connected",
    "detour_path",
    "diverse_cuts",
    "gen_delaunay",
    "gen_grid",
    "generate",
    "min_cut_weight",
    "reachable_from",
    "rotation_from_coordinates",
    "shortest_even_path",
    "shortest_odd_path",
    "shortest_path_odd_in_F",
    "solve",
    "subdivide_except",
    "trace_faces",
    "validate_solution",
    "verify_embedding",
]
