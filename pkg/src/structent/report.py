"""Report assembly and rendering: table, CSV, JSON.

Every emission carries the convention block (log base, pair convention,
tie tolerance, weight semantics, version) so that numbers remain
interpretable away from this tool. Table output rounds entropies to 4
decimals to mirror the reference tables; CSV and JSON carry full
precision. Output is byte-identical across runs and thread counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .entropy import EntropyReport
from .graph import Graph
from .paths import TIE_RTOL
from .robustness import LossTable

VERSION = "0.1.0"

_KIND_TITLE = {"deg": "degree", "bet": "betweenness", "partition": "partition"}


def conventions() -> dict[str, object]:
    return {
        "log_base": "natural (nats)",
        "pair_convention": "ordered",
        "tie_tolerance": TIE_RTOL,
        "weight_semantics": "length",
        "version": VERSION,
    }


@dataclass(frozen=True)
class Report:
    """Graph summary, entropies, optional loss table, conventions."""

    graph: dict[str, object]
    entropies: EntropyReport
    loss: LossTable | None = None

    @classmethod
    def build(cls, g: Graph, entropies: EntropyReport, loss: LossTable | None = None):
        return cls(
            graph={"n": g.n, "m": g.m, "weighted": g.is_weighted, "labels": list(g.labels)},
            entropies=entropies,
            loss=loss,
        )


def _fmt(x: float | None, places: int = 4) -> str:
    return "undefined" if x is None else f"{x:.{places}f}"


def _conv_lines() -> list[str]:
    conv = conventions()
    return [
        "conventions: "
        + "  ".join(f"{k}={v}" for k, v in conv.items())
    ]


def render_table(report: Report) -> str:
    g = report.graph
    lines = [
        f"graph: n={g['n']} m={g['m']} weighted={str(g['weighted']).lower()}",
    ]
    ent = report.entropies
    for kind, value in (("deg", ent.h_deg), ("bet", ent.h_bet), ("partition", ent.h_partition)):
        if value is None and kind not in ent.notes:
            continue  # not requested
        title = f"H_{_KIND_TITLE[kind]}"
        if value is None:
            lines.append(f"{title:<14} undefined ({ent.notes[kind]})")
        else:
            lines.append(f"{title:<14} {value:.4f}")
    if report.loss is not None:
        lines.append("")
        lines.append(_loss_table_text(report.loss))
    lines.extend(_conv_lines())
    return "\n".join(lines) + "\n"


def _loss_table_text(loss: LossTable) -> str:
    kinds = loss.kinds
    head = ["vertex", "degree"]
    if "bet" in kinds:
        head.append("bet")
    for k in kinds:
        head.append(f"H_{_KIND_TITLE[k]}_after")
        head.append(f"i_loss_{_KIND_TITLE[k]}")
    rows = [head]
    for r in loss.rows:
        row = [r.vertex, str(r.degree)]
        if "bet" in kinds:
            row.append(_fmt(r.bet))
        for k in kinds:
            row.append(_fmt(r.h_after[k]))
            row.append(_fmt(r.i_loss[k]))
        rows.append(row)
    widths = [max(len(r[c]) for r in rows) for c in range(len(head))]
    out = []
    for r in rows:
        out.append("  ".join(s.rjust(w) for s, w in zip(r, widths)))
    return "\n".join(out)


def _csv_cell(x: float | None) -> str:
    return "" if x is None else repr(x)


def render_csv(report: Report) -> str:
    lines = ["# " + _conv_lines()[0]]
    g = report.graph
    lines.append(f"# graph: n={g['n']} m={g['m']} weighted={str(g['weighted']).lower()}")
    if report.loss is None:
        lines.append("measure,entropy_nats")
        ent = report.entropies
        for kind, value in (
            ("deg", ent.h_deg),
            ("bet", ent.h_bet),
            ("partition", ent.h_partition),
        ):
            if value is None and kind not in ent.notes:
                continue
            lines.append(f"H_{_KIND_TITLE[kind]},{_csv_cell(value)}")
    else:
        loss = report.loss
        head = ["vertex", "degree"]
        if "bet" in loss.kinds:
            head.append("bet")
        for k in loss.kinds:
            head.append(f"h_after_{_KIND_TITLE[k]}")
            head.append(f"i_loss_{_KIND_TITLE[k]}")
        lines.append(",".join(head))
        for r in loss.rows:
            row = [r.vertex, str(r.degree)]
            if "bet" in loss.kinds:
                row.append(_csv_cell(r.bet))
            for k in loss.kinds:
                row.append(_csv_cell(r.h_after[k]))
                row.append(_csv_cell(r.i_loss[k]))
            lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _entropies_json(report: Report) -> dict[str, object]:
    ent = report.entropies
    labels: list[str] = report.graph["labels"]  # type: ignore[assignment]
    out: dict[str, object] = {}
    for kind, value, vec in (
        ("deg", ent.h_deg, ent.p_deg),
        ("bet", ent.h_bet, ent.p_bet),
        ("partition", ent.h_partition, ent.p_partition),
    ):
        if value is None and kind not in ent.notes:
            continue
        block: dict[str, object] = {"entropy_nats": value}
        if vec is not None:
            if kind == "partition":
                block["cell_probabilities"] = list(vec)
            else:
                block["probabilities"] = dict(zip(labels, vec))
        if kind in ent.notes:
            block["note"] = ent.notes[kind]
        out[f"h_{_KIND_TITLE[kind]}"] = block
    return out


def render_json(report: Report) -> str:
    g = dict(report.graph)
    payload: dict[str, object] = {
        "graph": g,
        "conventions": conventions(),
        "entropies": _entropies_json(report),
    }
    if report.loss is not None:
        loss = report.loss
        payload["loss_rows"] = [
            {
                "vertex": r.vertex,
                "degree": r.degree,
                "bet": r.bet,
                "h_after": {_KIND_TITLE[k]: r.h_after[k] for k in loss.kinds},
                "i_loss": {_KIND_TITLE[k]: r.i_loss[k] for k in loss.kinds},
            }
            for r in loss.rows
        ]
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def render(report: Report, output: str = "table") -> str:
    if output == "table":
        return render_table(report)
    if output == "csv":
        return render_csv(report)
    if output == "json":
        return render_json(report)
    raise ValueError(f"unknown output format {output!r}")
