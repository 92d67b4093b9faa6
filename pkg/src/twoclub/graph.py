"""Simple undirected graphs, file parsers and neighborhood queries.

Vertices are dense 0-based integers. Formats with 1-based labels (METIS,
DIMACS) are shifted on the way in and back on the way out.
"""
from __future__ import annotations

import logging
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

logger = logging.getLogger(__name__)

FORMATS = ("metis", "dimacs", "edge_list", "auto")


class GraphFormatError(ValueError):
    """Raised for malformed graph input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted adjacency tuples.

    Build instances through :meth:`from_edges`; the constructor trusts its
    input. ``offset`` records the label base of the source file (0 or 1) so
    that vertex sets can be written back in original labels.
    """

    adjacency: tuple[tuple[int, ...], ...]
    offset: int = field(default=0, compare=False)
    dropped_loops: int = field(default=0, compare=False)
    dropped_duplicates: int = field(default=0, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], offset: int = 0) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        loops = dups = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                loops += 1
                continue
            if v in nbrs[u]:
                dups += 1
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        if loops or dups:
            logger.warning("dropped %d self-loops and %d duplicate edges", loops, dups)
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        return cls(adjacency, offset, loops, dups)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def n_nonisolated(self) -> int:
        """Vertex count excluding isolated vertices."""
        return sum(1 for a in self.adjacency if a)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, a in enumerate(self.adjacency) for v in a if u < v]

    def neighbor_sets(self) -> list[frozenset[int]]:
        return [frozenset(a) for a in self.adjacency]

    def density(self) -> float:
        n = self.n
        return 0.0 if n < 2 else self.m / (n * (n - 1) / 2)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class InducedSubgraph:
    graph: Graph
    to_parent: tuple[int, ...]

    def to_local(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.to_parent)}


# ---------------------------------------------------------------- queries


def closed_two_neighborhood(g: Graph, v: int, removed: Sequence[bool] | None = None) -> list[int]:
    """Sorted vertices within distance two of ``v`` (including ``v``).

    With ``removed`` given, distances are taken in the graph without the
    flagged vertices.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    if removed is not None and removed[v]:
        raise ValueError(f"vertex {v} is removed")
    seen = {v}
    adj = g.adjacency
    for w in adj[v]:
        if removed is not None and removed[w]:
            continue
        seen.add(w)
        for x in adj[w]:
            if removed is None or not removed[x]:
                seen.add(x)
    return sorted(seen)


def connected_components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        out.append(sorted(members))
    return out


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    verts = sorted(set(s))
    if verts and (verts[0] < 0 or verts[-1] >= g.n):
        raise IndexError("vertex set contains out-of-range vertex")
    local = {p: i for i, p in enumerate(verts)}
    adjacency = tuple(
        tuple(local[w] for w in g.adjacency[p] if w in local) for p in verts
    )
    return InducedSubgraph(Graph(adjacency, g.offset), tuple(verts))


# ---------------------------------------------------------------- parsing


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not t.lstrip("+-").isdigit())
        raise GraphFormatError(f"non-numeric token {bad!r}", lineno) from None


def _parse_metis(text: str) -> Graph:
    header = None
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("%"):
            continue
        if header is None:
            if not line:
                continue
            vals = _ints(line.split(), lineno)
            if len(vals) < 2:
                raise GraphFormatError("METIS header needs 'n m'", lineno)
            if len(vals) > 2 and vals[2] not in (0, 100):
                raise GraphFormatError("weighted METIS graphs are not supported", lineno)
            header = (vals[0], vals[1])
            continue
        rows.append((lineno, _ints(line.split(), lineno)))
    if header is None:
        raise GraphFormatError("missing METIS header", 1)
    n = header[0]
    if len(rows) > n:
        # trailing blank lines are fine, anything else is not
        extra = [r for r in rows[n:] if r[1]]
        if extra:
            raise GraphFormatError(f"more than {n} adjacency lines", extra[0][0])
    edges = []
    for v, (lineno, nb) in enumerate(rows[:n]):
        for w in nb:
            if not 1 <= w <= n:
                raise GraphFormatError(f"vertex index {w} out of range 1..{n}", lineno)
            edges.append((v, w - 1))
    return _from_directed_listing(n, edges, offset=1)


def _from_directed_listing(n: int, arcs: list[tuple[int, int]], offset: int) -> Graph:
    # METIS lists every edge from both sides; only a repeated arc is a duplicate
    directed: set[tuple[int, int]] = set()
    undirected = []
    dups = 0
    for u, v in arcs:
        if (u, v) in directed:
            dups += 1
            continue
        directed.add((u, v))
        if u == v or (v, u) not in directed:
            undirected.append((u, v))
    g = Graph.from_edges(n, undirected, offset)
    if dups:
        logger.warning("dropped %d repeated adjacency entries", dups)
        g = Graph(g.adjacency, offset, g.dropped_loops, g.dropped_duplicates + dups)
    return g


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError("expected 'p edge n m'", lineno)
            n = _ints(parts[2:3], lineno)[0]
            continue
        if parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before 'p' header", lineno)
            if len(parts) < 3:
                raise GraphFormatError("edge line needs two endpoints", lineno)
            u, v = _ints(parts[1:3], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex index {x} out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1))
            continue
        raise GraphFormatError(f"unexpected line type {parts[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header", 1)
    return Graph.from_edges(n, edges, offset=1)


def _parse_edge_list(text: str) -> Graph:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) < 2:
            raise GraphFormatError("edge line needs two integers", lineno)
        u, v = _ints(parts[:2], lineno)
        if u < 0 or v < 0:
            raise GraphFormatError("negative vertex label", lineno)
        pairs.append((u, v))
    if not pairs:
        return Graph.from_edges(0, [])
    offset = 1 if min(min(p) for p in pairs) >= 1 else 0
    n = max(max(p) for p in pairs) + 1 - offset
    return Graph.from_edges(n, [(u - offset, v - offset) for u, v in pairs], offset)


def detect_format(text: str) -> str:
    """Guess the format: DIMACS header first, then a METIS header, else edge list."""
    lines = [l.strip() for l in text.splitlines() if not l.strip().startswith("%")]
    data = [l for l in lines if l and not l.startswith(("#", "c"))]
    if data and data[0].startswith("p"):
        return "dimacs"
    while lines and not lines[0]:
        lines.pop(0)
    if lines:
        head = lines[0].split()
        if 2 <= len(head) <= 4 and all(t.isdigit() for t in head):
            n, m = int(head[0]), int(head[1])
            body = lines[1:]
            while body and not body[-1]:
                body.pop()
            tokens = sum(len(l.split()) for l in body)
            if len(body) <= n and tokens == 2 * m and (len(head) == 2 or int(head[2]) in (0, 100)):
                return "metis"
    return "edge_list"


def parse(text: str, format: str = "auto") -> Graph:
    """Parse ``text`` in METIS, DIMACS or edge-list format.

    Self-loops and repeated edges are dropped (and counted on the returned
    graph) rather than rejected.
    """
    if format not in FORMATS and format != "edges":
        raise ValueError(f"unknown format {format!r}")
    if format == "auto":
        format = detect_format(text)
    if format == "metis":
        return _parse_metis(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    return _parse_edge_list(text)


def read_graph(path, format: str = "auto") -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), format)


# ---------------------------------------------------------------- emitters


def emit(g: Graph, format: str) -> str:
    """Canonical text for ``g``; ``parse(emit(g, f), f) == g`` for every format."""
    if format == "metis":
        lines = [f"{g.n} {g.m}"]
        lines += [" ".join(str(w + 1) for w in a) for a in g.adjacency]
        return "\n".join(lines) + "\n"
    if format == "dimacs":
        lines = [f"p edge {g.n} {g.m}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    if format in ("edge_list", "edges"):
        # isolated vertices are lost; use metis or dimacs when n matters
        return "".join(f"{u} {v}\n" for u, v in g.edges())
    raise ValueError(f"unknown format {format!r}")
