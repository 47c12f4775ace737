"""Structure entropy of networks.

Three per-vertex probability distributions over a graph (degree
fractions, degree-partition cell fractions, interior shortest-path
count fractions) and their Shannon entropies, plus the node-removal
information-loss experiment and a small CLI.
"""

from .centrality import (
    BetweennessVector,
    PathCounts,
    betweenness,
    brute_force_path_counts,
    path_counts,
)
from .datasets import REGISTRY, DatasetEntry, karate, petersen
from .entropy import (
    EntropyReport,
    Partition,
    betweenness_entropy,
    degree_entropy,
    degree_partition,
    entropy_report,
    orbit_partition_oracle,
    partition_entropy,
    shannon,
)
from .errors import (
    DegenerateGraphError,
    InvalidDistributionError,
    InvalidPartitionError,
    MissingKindError,
    OverflowLimitError,
    ParseError,
    SizeLimitError,
    StructentError,
    UnknownVertexError,
    VerificationError,
)
from .graph import (
    Graph,
    connected_components,
    degrees,
    parse_graph,
    remove_vertex,
    write_graph,
)
from .paths import SsspResult, downstream_path_counts, sssp
from .report import Report, conventions, render
from .robustness import (
    LossRow,
    LossTable,
    information_loss,
    rank_by_loss,
    single_loss,
)

__version__ = "0.1.0"

__all__ = [
    "BetweennessVector",
    "DatasetEntry",
    "DegenerateGraphError",
    "EntropyReport",
    "Graph",
    "InvalidDistributionError",
    "InvalidPartitionError",
    "LossRow",
    "LossTable",
    "MissingKindError",
    "OverflowLimitError",
    "ParseError",
    "Partition",
    "PathCounts",
    "REGISTRY",
    "Report",
    "SizeLimitError",
    "SsspResult",
    "StructentError",
    "UnknownVertexError",
    "VerificationError",
    "betweenness",
    "betweenness_entropy",
    "brute_force_path_counts",
    "connected_components",
    "conventions",
    "degree_entropy",
    "degree_partition",
    "degrees",
    "downstream_path_counts",
    "entropy_report",
    "information_loss",
    "karate",
    "orbit_partition_oracle",
    "parse_graph",
    "partition_entropy",
    "path_counts",
    "petersen",
    "rank_by_loss",
    "remove_vertex",
    "render",
    "shannon",
    "single_loss",
    "sssp",
    "write_graph",
]
