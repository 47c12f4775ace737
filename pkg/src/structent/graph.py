"""Immutable undirected weighted graph with parsers and writers.

Vertices carry arbitrary string labels; internally they are dense
indices 0..n-1 in first-seen order. Edge weights are positive reals
interpreted as lengths (larger = farther). Parallel input edges are
merged keeping the minimum weight; self-loops are dropped with a
warning since they cannot lie on a shortest path between distinct
vertices.
"""

from __future__ import annotations

import re
import warnings
from collections.abc import Iterable

from .errors import ParseError, UnknownVertexError

EdgeTriple = tuple[str, str, float]


class Graph:
    """Undirected weighted graph, immutable after construction.

    Safe for concurrent reads. Build instances through ``from_edges``
    or one of the parsers, not by mutating internals.
    """

    __slots__ = ("_labels", "_index", "_adj", "_m", "is_weighted")

    def __init__(
        self,
        labels: tuple[str, ...],
        adj: tuple[tuple[tuple[int, float], ...], ...],
        m: int,
        is_weighted: bool,
    ):
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._adj = adj
        self._m = m
        self.is_weighted = is_weighted

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str] | EdgeTriple],
        nodes: Iterable[str] = (),
    ) -> "Graph":
        """Build a graph from (u, v) or (u, v, weight) tuples.

        ``nodes`` pre-registers labels in a fixed order (and is the only
        way to get isolated vertices); labels met only in ``edges`` are
        appended in first-seen order. Parallel edges keep the minimum
        weight, self-loops are dropped with a warning.
        """
        labels: list[str] = []
        index: dict[str, int] = {}

        def vid(lab: str) -> int:
            got = index.get(lab)
            if got is None:
                got = index[lab] = len(labels)
                labels.append(lab)
            return got

        for lab in nodes:
            vid(lab)
        pair_w: dict[tuple[int, int], float] = {}
        is_weighted = False
        for e in edges:
            if len(e) == 3:
                u, v, w = e  # type: ignore[misc]
                w = float(w)
            else:
                u, v = e  # type: ignore[misc]
                w = 1.0
            if w <= 0:
                raise ValueError(f"edge ({u!r}, {v!r}) has nonpositive weight {w}")
            if w != 1.0:
                is_weighted = True
            iu, iv = vid(u), vid(v)
            if iu == iv:
                warnings.warn(f"dropping self-loop at {u!r}", stacklevel=2)
                continue
            key = (iu, iv) if iu < iv else (iv, iu)
            old = pair_w.get(key)
            if old is None or w < old:
                pair_w[key] = w

        nbrs: list[list[tuple[int, float]]] = [[] for _ in labels]
        for (iu, iv), w in pair_w.items():
            nbrs[iu].append((iv, w))
            nbrs[iv].append((iu, w))
        adj = tuple(tuple(sorted(ns)) for ns in nbrs)
        return cls(tuple(labels), adj, len(pair_w), is_weighted)

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {label!r}") from None

    def label(self, i: int) -> str:
        return self._labels[i]

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def neighbors(self, i: int) -> tuple[tuple[int, float], ...]:
        """Neighbors of vertex index i as (index, weight), ascending index."""
        return self._adj[i]

    def edges(self) -> list[EdgeTriple]:
        """All edges once each, as (label_u, label_v, w), deterministic order."""
        out: list[EdgeTriple] = []
        for u in range(self.n):
            for v, w in self._adj[u]:
                if u < v:
                    out.append((self._labels[u], self._labels[v], w))
        return out

    def unweighted(self) -> "Graph":
        """Copy with every weight forced to 1 and the weighted flag cleared."""
        adj = tuple(tuple((v, 1.0) for v, _ in ns) for ns in self._adj)
        return Graph(self._labels, adj, self._m, False)

    def as_weighted(self) -> "Graph":
        """Copy flagged weighted even if all weights are 1 (forces the
        weighted shortest-path engine; results are unchanged)."""
        return Graph(self._labels, self._adj, self._m, True)

    def scaled(self, c: float) -> "Graph":
        """Copy with every weight multiplied by c > 0."""
        if c <= 0:
            raise ValueError("scale factor must be positive")
        adj = tuple(tuple((v, w * c) for v, w in ns) for ns in self._adj)
        return Graph(self._labels, adj, self._m, True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._labels == other._labels
            and self._adj == other._adj
            and self.is_weighted == other.is_weighted
        )

    def __hash__(self) -> int:
        return hash((self._labels, self._adj))

    def __repr__(self) -> str:
        kind = "weighted" if self.is_weighted else "unweighted"
        return f"Graph(n={self.n}, m={self.m}, {kind})"


def degrees(g: Graph) -> list[int]:
    """Incident-edge count per vertex, weights ignored."""
    return [len(g.neighbors(i)) for i in range(g.n)]


def remove_vertex(g: Graph, label: str) -> Graph:
    """New graph without ``label`` and its incident edges.

    Remaining labels keep their relative order; the result may be
    disconnected or edgeless.
    """
    drop = g.index(label)
    keep = [i for i in range(g.n) if i != drop]
    remap = {old: new for new, old in enumerate(keep)}
    labels = tuple(g.label(i) for i in keep)
    adj = tuple(
        tuple((remap[v], w) for v, w in g.neighbors(i) if v != drop) for i in keep
    )
    m = sum(len(ns) for ns in adj) // 2
    return Graph(labels, adj, m, g.is_weighted)


def connected_components(g: Graph) -> list[set[str]]:
    """Maximal connected vertex sets, ordered by smallest member index."""
    seen = [False] * g.n
    comps: list[set[str]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        comp = {g.label(s)}
        while stack:
            v = stack.pop()
            for w, _ in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.add(g.label(w))
                    stack.append(w)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# parsers

_FORMATS = ("edgelist", "pajek", "gml")


def parse_graph(text: str | bytes, format: str = "edgelist") -> Graph:
    """Parse graph text in one of the supported formats.

    Args:
        text: file content, str or UTF-8 bytes.
        format: "edgelist", "pajek", or "gml".

    Returns:
        Graph with labels preserved from the input and absent weights
        defaulting to 1.

    Raises:
        ParseError: malformed input, nonpositive weight, or empty graph,
            with the offending line number where known.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if format == "edgelist":
        g = parse_edgelist(text)
    elif format == "pajek":
        g = parse_pajek(text)
    elif format == "gml":
        g = parse_gml(text)
    else:
        raise ParseError(f"unknown format {format!r}; expected one of {_FORMATS}")
    if g.n == 0:
        raise ParseError("empty graph: input defines no vertices")
    return g


def _edge_from_fields(fields: list[str], ln: int) -> EdgeTriple:
    if len(fields) == 2:
        return fields[0], fields[1], 1.0
    if len(fields) == 3:
        try:
            w = float(fields[2])
        except ValueError:
            raise ParseError(f"bad weight {fields[2]!r}", ln) from None
        if not w > 0:
            raise ParseError(f"nonpositive weight {fields[2]}", ln)
        return fields[0], fields[1], w
    raise ParseError(f"expected 'u v [w]', got {len(fields)} fields", ln)


def parse_edgelist(text: str) -> Graph:
    """One edge per line: "u v [w]"; '#' starts a comment; blank lines ignored."""
    edges: list[EdgeTriple] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        edges.append(_edge_from_fields(line.split(), ln))
    return Graph.from_edges(edges)


_PAJEK_VERTEX = re.compile(r'^\s*(\d+)(?:\s+"([^"]*)"|\s+(\S+))?\s*')


def parse_pajek(text: str) -> Graph:
    """Pajek .net subset: *Vertices with optional quoted names, *Edges/*Arcs.

    Arcs are symmetrized with a warning; vertex ids must be 1..n.
    """
    n_declared = 0
    names: dict[int, str] = {}
    edges: list[EdgeTriple] = []
    section = None
    saw_arcs = False
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("*"):
            if low.startswith("*vertices"):
                parts = line.split()
                if len(parts) < 2:
                    raise ParseError("*Vertices needs a count", ln)
                try:
                    n_declared = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {parts[1]!r}", ln) from None
                section = "vertices"
            elif low.startswith("*edges"):
                section = "edges"
            elif low.startswith("*arcs"):
                section = "arcs"
                saw_arcs = True
            else:
                raise ParseError(f"unsupported section {line.split()[0]!r}", ln)
            continue
        if section == "vertices":
            m = _PAJEK_VERTEX.match(line)
            if not m:
                raise ParseError(f"bad vertex line {line!r}", ln)
            vid = int(m.group(1))
            if not 1 <= vid <= n_declared:
                raise ParseError(f"vertex id {vid} outside 1..{n_declared}", ln)
            if vid in names:
                raise ParseError(f"duplicate vertex id {vid}", ln)
            name = m.group(2) if m.group(2) is not None else m.group(3)
            names[vid] = name if name is not None else str(vid)
        elif section in ("edges", "arcs"):
            fields = line.split()
            if len(fields) < 2:
                raise ParseError(f"expected 'u v [w]', got {line!r}", ln)
            try:
                iu, iv = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError(f"bad endpoint in {line!r}", ln) from None
            for x in (iu, iv):
                if not 1 <= x <= n_declared:
                    raise ParseError(f"vertex id {x} outside 1..{n_declared}", ln)
            w = 1.0
            if len(fields) >= 3:
                try:
                    w = float(fields[2])
                except ValueError:
                    raise ParseError(f"bad weight {fields[2]!r}", ln) from None
                if not w > 0:
                    raise ParseError(f"nonpositive weight {fields[2]}", ln)
            lu = names.get(iu, str(iu))
            lv = names.get(iv, str(iv))
            edges.append((lu, lv, w))
        else:
            raise ParseError(f"data before any *section: {line!r}", ln)
    if saw_arcs:
        warnings.warn("*Arcs section symmetrized to undirected edges", stacklevel=2)
    declared = [names.get(i, str(i)) for i in range(1, n_declared + 1)]
    return Graph.from_edges(edges, nodes=declared)


_GML_TOKEN = re.compile(r'"[^"]*"|\[|\]|[^\s\[\]]+')


def parse_gml(text: str) -> Graph:
    """GML subset: graph [ node [ id N ] ... edge [ source A target B value W ] ]."""
    tokens: list[tuple[str, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        for tok in _GML_TOKEN.findall(raw.split("#", 1)[0]):
            tokens.append((tok, ln))
    pos = 0

    def peek() -> tuple[str, int]:
        return tokens[pos] if pos < len(tokens) else ("", tokens[-1][1] if tokens else 0)

    def take() -> tuple[str, int]:
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def parse_block(ln0: int) -> dict[str, object]:
        """Parse key/value pairs until the matching close bracket."""
        out: dict[str, object] = {}
        blocks: list[tuple[str, dict[str, object]]] = []
        while True:
            tok, ln = take()
            if tok == "]":
                out["__blocks__"] = blocks
                return out
            if tok == "":
                raise ParseError("unterminated block", ln0)
            key = tok
            val, vln = take()
            if val == "[":
                blocks.append((key, parse_block(vln)))
            elif val == "":
                raise ParseError(f"key {key!r} has no value", ln)
            else:
                out[key] = val.strip('"') if val.startswith('"') else val

    tok, ln = take()
    if tok != "graph":
        raise ParseError(f"expected 'graph', got {tok!r}", ln)
    tok, ln = take()
    if tok != "[":
        raise ParseError("expected '[' after 'graph'", ln)
    top = parse_block(ln)

    ids: dict[str, str] = {}
    order: list[str] = []
    edges: list[EdgeTriple] = []
    for key, block in top["__blocks__"]:  # type: ignore[union-attr]
        if key == "node":
            nid = block.get("id")
            if nid is None:
                raise ParseError("node block without id")
            nid = str(nid)
            if nid in ids:
                raise ParseError(f"duplicate node id {nid}")
            label = str(block.get("label", nid))
            ids[nid] = label
            order.append(label)
        elif key == "edge":
            src, tgt = block.get("source"), block.get("target")
            if src is None or tgt is None:
                raise ParseError("edge block needs source and target")
            raw_w = block.get("value", block.get("weight", "1"))
            try:
                w = float(str(raw_w))
            except ValueError:
                raise ParseError(f"bad edge value {raw_w!r}") from None
            if not w > 0:
                raise ParseError(f"nonpositive edge value {raw_w}")
            su, sv = str(src), str(tgt)
            if su not in ids or sv not in ids:
                missing = su if su not in ids else sv
                raise ParseError(f"edge references undeclared node id {missing}")
            edges.append((ids[su], ids[sv], w))
    return Graph.from_edges(edges, nodes=order)


# ---------------------------------------------------------------------------
# writers (inverse of the parsers; parse(write(g)) == g)


def write_edgelist(g: Graph) -> str:
    connected = {x for u, v, _ in g.edges() for x in (u, v)}
    for lab in g.labels:
        if lab not in connected:
            raise ValueError(
                f"edgelist format cannot represent isolated vertex {lab!r}; "
                "use pajek or gml"
            )
    lines = []
    for u, v, w in g.edges():
        lines.append(f"{u} {v}" if w == 1.0 else f"{u} {v} {w!r}")
    return "\n".join(lines) + "\n"


def write_pajek(g: Graph) -> str:
    lines = [f"*Vertices {g.n}"]
    for i, lab in enumerate(g.labels, start=1):
        lines.append(f'{i} "{lab}"')
    lines.append("*Edges")
    for u, v, w in g.edges():
        iu, iv = g.index(u) + 1, g.index(v) + 1
        lines.append(f"{iu} {iv}" if w == 1.0 else f"{iu} {iv} {w!r}")
    return "\n".join(lines) + "\n"


def write_gml(g: Graph) -> str:
    lines = ["graph ["]
    for i, lab in enumerate(g.labels):
        lines.append(f'  node [ id {i} label "{lab}" ]')
    for u, v, w in g.edges():
        iu, iv = g.index(u), g.index(v)
        tail = "" if w == 1.0 else f" value {w!r}"
        lines.append(f"  edge [ source {iu} target {iv}{tail} ]")
    lines.append("]")
    return "\n".join(lines) + "\n"


def write_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return write_edgelist(g)
    if format == "pajek":
        return write_pajek(g)
    if format == "gml":
        return write_gml(g)
    raise ValueError(f"unknown format {format!r}; expected one of {_FORMATS}")
