"""Embedded benchmark graphs and the dataset registry.

The 34-vertex friendship network (78 unweighted edges, labels "1" to
"34") is embedded so the core test suite and CLI defaults need no
files. The registry also carries expectation rows for five public
networks; those load from user-supplied paths since redistribution and
auto-download are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph

# fmt: off
KARATE_EDGES: tuple[tuple[str, str], ...] = (
    ("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("1", "6"), ("1", "7"),
    ("1", "8"), ("1", "9"), ("1", "11"), ("1", "12"), ("1", "13"), ("1", "14"),
    ("1", "18"), ("1", "20"), ("1", "22"), ("1", "32"), ("2", "3"), ("2", "4"),
    ("2", "8"), ("2", "14"), ("2", "18"), ("2", "20"), ("2", "22"), ("2", "31"),
    ("3", "4"), ("3", "8"), ("3", "9"), ("3", "10"), ("3", "14"), ("3", "28"),
    ("3", "29"), ("3", "33"), ("4", "8"), ("4", "13"), ("4", "14"), ("5", "7"),
    ("5", "11"), ("6", "7"), ("6", "11"), ("6", "17"), ("7", "17"), ("9", "31"),
    ("9", "33"), ("9", "34"), ("10", "34"), ("14", "34"), ("15", "33"), ("15", "34"),
    ("16", "33"), ("16", "34"), ("19", "33"), ("19", "34"), ("20", "34"), ("21", "33"),
    ("21", "34"), ("23", "33"), ("23", "34"), ("24", "26"), ("24", "28"), ("24", "30"),
    ("24", "33"), ("24", "34"), ("25", "26"), ("25", "28"), ("25", "32"), ("26", "32"),
    ("27", "30"), ("27", "34"), ("28", "34"), ("29", "32"), ("29", "34"), ("30", "33"),
    ("30", "34"), ("31", "33"), ("31", "34"), ("32", "33"), ("32", "34"), ("33", "34"),
)
# fmt: on


def karate() -> Graph:
    """Zachary's karate club: 34 vertices, 78 edges, unweighted."""
    return Graph.from_edges(KARATE_EDGES, nodes=[str(i) for i in range(1, 35)])


def petersen() -> Graph:
    """Petersen graph: 10 vertices, 15 edges, 3-regular, vertex-transitive.

    Outer 5-cycle "1".."5", inner pentagram "6".."10", spokes between.
    """
    edges: list[tuple[str, str]] = []
    for i in range(5):
        edges.append((str(i + 1), str((i + 1) % 5 + 1)))
        edges.append((str(i + 6), str((i + 2) % 5 + 6)))
        edges.append((str(i + 1), str(i + 6)))
    return Graph.from_edges(edges, nodes=[str(i) for i in range(1, 11)])


@dataclass(frozen=True)
class Expectation:
    """A published value to compare against, with its tolerance.

    enforced = False marks values we print and diff but do not fail on:
    used for the one published number that is not reproducible from the
    stated definitions (see README).
    """

    value: float
    tolerance: float
    enforced: bool = True
    note: str = ""


@dataclass(frozen=True)
class DatasetEntry:
    """Registry row: counts are hard expectations, entropies optional.

    source is a builder name for embedded graphs ("embedded:karate") or
    empty when the user must supply a file.
    """

    name: str
    expected_nodes: int
    expected_edges: int
    source: str = ""
    format: str = "edgelist"
    expectations: dict[str, Expectation] = field(default_factory=dict)


_BET_NOTE = (
    "published value; not reproducible from the published definitions "
    "(reported for reference, compared informationally)"
)

# tolerance 0.05 for the five large networks: dataset-version drift makes
# tighter bounds meaningless (edge counts match only for the right version)
REGISTRY: dict[str, DatasetEntry] = {
    e.name: e
    for e in (
        DatasetEntry(
            name="karate",
            expected_nodes=34,
            expected_edges=78,
            source="embedded:karate",
            expectations={
                "h_deg": Expectation(3.2609, 0.001),
                "h_bet": Expectation(2.8857, 0.003, enforced=False, note=_BET_NOTE),
            },
        ),
        DatasetEntry(
            name="petersen",
            expected_nodes=10,
            expected_edges=15,
            source="embedded:petersen",
            expectations={
                "h_deg": Expectation(2.3026, 0.0001),
                "h_partition": Expectation(0.0, 0.0001),
            },
        ),
        DatasetEntry(
            name="us-airport",
            expected_nodes=500,
            expected_edges=5962,
            expectations={
                "h_deg": Expectation(5.0250, 0.05),
                "h_bet": Expectation(4.7338, 0.05),
                "h_partition": Expectation(3.1263, 0.05),
            },
        ),
        DatasetEntry(
            name="email",
            expected_nodes=1133,
            expected_edges=10902,
            expectations={
                "h_deg": Expectation(6.6310, 0.05),
                "h_bet": Expectation(5.5021, 0.05),
                "h_partition": Expectation(3.1780, 0.05),
            },
        ),
        DatasetEntry(
            name="yeast",
            expected_nodes=2375,
            expected_edges=23386,
            expectations={
                "h_deg": Expectation(7.0539, 0.05),
                "h_bet": Expectation(6.0931, 0.05),
                "h_partition": Expectation(3.0345, 0.05),
            },
        ),
        DatasetEntry(
            name="us-powergrid",
            expected_nodes=4941,
            expected_edges=13188,
            expectations={
                "h_deg": Expectation(8.3208, 0.05),
                "h_bet": Expectation(5.7191, 0.05),
                "h_partition": Expectation(1.7018, 0.05),
            },
        ),
        DatasetEntry(
            name="germany-highway",
            expected_nodes=1168,
            expected_edges=2486,
            expectations={
                "h_deg": Expectation(6.9947, 0.05),
                "h_bet": Expectation(5.6383, 0.05),
                "h_partition": Expectation(0.6909, 0.05),
            },
        ),
    )
}

_EMBEDDED = {"embedded:karate": karate, "embedded:petersen": petersen}


def load_embedded(entry: DatasetEntry) -> Graph:
    """Build the graph for an embedded registry row."""
    try:
        builder = _EMBEDDED[entry.source]
    except KeyError:
        raise ValueError(
            f"dataset {entry.name!r} is not embedded; supply a file path"
        ) from None
    return builder()
