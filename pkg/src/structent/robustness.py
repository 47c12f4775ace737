"""Node-removal information loss.

For every vertex: remove it, recompute the chosen entropies on the
smaller graph from scratch, and report i_loss = H_before - H_after.
Negative loss means the removal increased entropy. Measures that are
undefined on the reduced graph (an edgeless remainder, a complete
remainder) yield an explicit None marker, never a silent zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .centrality import betweenness
from .entropy import KINDS, EntropyReport, entropy_report
from .errors import DegenerateGraphError, MissingKindError
from .graph import Graph, degrees, remove_vertex


@dataclass(frozen=True)
class LossRow:
    """One removal experiment: intact-graph context plus the deltas.

    degree and bet describe the vertex in the intact graph (bet is None
    when the bet measure was not requested or is degenerate on the
    intact graph). h_after and i_loss are keyed by measure kind; None
    marks a measure that is undefined on the reduced graph.
    """

    vertex: str
    degree: int
    bet: float | None
    h_after: dict[str, float | None]
    i_loss: dict[str, float | None]


@dataclass(frozen=True)
class LossTable:
    """Baseline entropies plus one LossRow per vertex in label order."""

    baseline: EntropyReport
    kinds: tuple[str, ...]
    rows: list[LossRow]


def _baseline_value(baseline: EntropyReport, kind: str) -> float | None:
    return {
        "deg": baseline.h_deg,
        "bet": baseline.h_bet,
        "partition": baseline.h_partition,
    }[kind]


def information_loss(
    g: Graph, kinds: Sequence[str] = KINDS, threads: int = 1
) -> LossTable:
    """Remove each vertex in turn and measure the entropy change.

    Every row recomputes the requested entropies on the reduced graph
    with no incremental shortcuts, so each h_after is exactly what the
    standalone entropy functions return for that graph. Requires at
    least 3 vertices; removal below 2 leaves nothing to measure.
    """
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown entropy kind {kind!r}")
    kinds = tuple(kinds)
    if g.n < 3:
        raise DegenerateGraphError(
            f"loss analysis needs at least 3 vertices, got {g.n}"
        )
    baseline = entropy_report(g, kinds=kinds, threads=threads)
    degs = degrees(g)
    bet_vec: list[float] | None = None
    if "bet" in kinds:
        try:
            bet_vec = betweenness(g, threads=threads).bet
        except DegenerateGraphError:
            bet_vec = None

    rows: list[LossRow] = []
    for v in range(g.n):
        label = g.label(v)
        reduced = remove_vertex(g, label)
        after = entropy_report(reduced, kinds=kinds, threads=threads)
        h_after: dict[str, float | None] = {}
        i_loss: dict[str, float | None] = {}
        for kind in kinds:
            base = _baseline_value(baseline, kind)
            val = _baseline_value(after, kind)
            h_after[kind] = val
            i_loss[kind] = None if base is None or val is None else base - val
        rows.append(
            LossRow(
                vertex=label,
                degree=degs[v],
                bet=None if bet_vec is None else bet_vec[v],
                h_after=h_after,
                i_loss=i_loss,
            )
        )
    return LossTable(baseline=baseline, kinds=kinds, rows=rows)


def single_loss(
    g: Graph, label: str, kinds: Sequence[str] = KINDS, threads: int = 1
) -> LossTable:
    """Loss table restricted to one vertex removal (fast path for the CLI).

    Same row contents as the matching information_loss row, without
    computing the other n-1 removals.
    """
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown entropy kind {kind!r}")
    kinds = tuple(kinds)
    if g.n < 3:
        raise DegenerateGraphError(
            f"loss analysis needs at least 3 vertices, got {g.n}"
        )
    v = g.index(label)
    baseline = entropy_report(g, kinds=kinds, threads=threads)
    bet_val: float | None = None
    if "bet" in kinds:
        try:
            bet_val = betweenness(g, threads=threads).bet[v]
        except DegenerateGraphError:
            bet_val = None
    after = entropy_report(remove_vertex(g, label), kinds=kinds, threads=threads)
    h_after: dict[str, float | None] = {}
    i_loss: dict[str, float | None] = {}
    for kind in kinds:
        base = _baseline_value(baseline, kind)
        val = _baseline_value(after, kind)
        h_after[kind] = val
        i_loss[kind] = None if base is None or val is None else base - val
    row = LossRow(
        vertex=label,
        degree=degrees(g)[v],
        bet=bet_val,
        h_after=h_after,
        i_loss=i_loss,
    )
    return LossTable(baseline=baseline, kinds=kinds, rows=[row])


def rank_by_loss(table: LossTable, kind: str) -> list[str]:
    """Vertex labels by descending i_loss for the given measure.

    Ties break by ascending label; rows whose i_loss is undefined sort
    after every defined row, again in ascending label order. Raises
    MissingKindError when the table never computed that measure.
    """
    if kind not in table.kinds:
        raise MissingKindError(
            f"loss table has kinds {table.kinds}, not {kind!r}"
        )
    defined = [r for r in table.rows if r.i_loss[kind] is not None]
    undefined = [r for r in table.rows if r.i_loss[kind] is None]
    defined.sort(key=lambda r: (-r.i_loss[kind], r.vertex))  # type: ignore[operator]
    undefined.sort(key=lambda r: r.vertex)
    return [r.vertex for r in defined + undefined]
