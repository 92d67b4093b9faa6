"""Pairwise compatibility and the reversible per-kernel search state.

A vertex set is a t-robust, t-hereditary or t-connected 2-club exactly when
all of its pairs are compatible. :class:`KernelState` keeps, for the alive
vertices of one kernel, the common-neighbor matrix, the incompatibility
graph and (derived) compatibility counts up to date under vertex deletion,
and records every change in an undo log so branching can roll back.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .flow import disjoint_paths
from .graph import InducedSubgraph

MODELS = ("robust", "hereditary", "connected")


@dataclass(frozen=True)
class ModelSpec:
    model: str
    t: int

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")
        if not isinstance(self.t, int) or isinstance(self.t, bool):
            raise TypeError("t must be an int")
        low = 0 if self.model == "hereditary" else 1
        if self.t < low:
            raise ValueError(f"t must be >= {low} for the {self.model} model")

    @property
    def degree_threshold(self) -> int:
        """Solutions (other than small hereditary cliques) have min degree >= this."""
        return self.t + 1 if self.model == "hereditary" else self.t

    @property
    def base_case(self) -> bool:
        """True when the model coincides with plain 2-clubs."""
        return self.t == (0 if self.model == "hereditary" else 1)

    @property
    def min_size(self) -> int:
        return 1 if self.model == "hereditary" else self.t + 1

    @property
    def no_choice_threshold(self) -> int:
        return {"robust": self.t, "hereditary": self.t + 1, "connected": 1}[self.model]

    def __str__(self) -> str:
        return f"{self.t}-{self.model}"


def pair_compatible(spec: ModelSpec, adjacent: bool, common: int, paths=None) -> bool:
    """Compatibility from adjacency and common-neighbor count.

    ``paths`` is a zero-argument callable returning the capped disjoint path
    count; it is only consulted for the connected model.
    """
    t = spec.t
    if spec.model == "robust":
        return common >= t or (adjacent and common >= t - 1)
    if spec.model == "hereditary":
        return adjacent or common >= t + 1
    if not adjacent and common == 0:
        return False
    return paths() >= t


class Checkpoint(NamedTuple):
    owner: int
    position: int


_ids = itertools.count()


class KernelState:
    """Mutable search state over the vertices of one induced subgraph.

    Vertex identifiers are local to ``sub.graph``. Only alive vertices are
    meaningful in ``cn`` and ``incompat``; entries of dead vertices are kept
    as they were at deletion time so that undo can restore them verbatim.
    """

    def __init__(self, sub: InducedSubgraph, spec: ModelSpec, seed_vertex: int | None = None):
        g = sub.graph
        k = g.n
        self.sub = sub
        self.spec = spec
        self.size = k
        self.nbrs = [frozenset(a) for a in g.adjacency]
        self.alive = [True] * k
        self.alive_count = k
        self.marked = [False] * k
        self.marked_list: list[int] = []
        self.deg = [len(a) for a in g.adjacency]
        self.flow_calls = 0
        self._id = next(_ids)
        self._log: list[tuple] = []

        cn = [[0] * k for _ in range(k)]
        for w in range(k):
            nb = g.adjacency[w]
            for i, a in enumerate(nb):
                row = cn[a]
                for b in nb[i + 1:]:
                    row[b] += 1
                    cn[b][a] += 1
        self.cn = cn

        self.incompat: list[set[int]] = [set() for _ in range(k)]
        for a in range(k):
            for b in range(a + 1, k):
                if not self._evaluate(a, b):
                    self.incompat[a].add(b)
                    self.incompat[b].add(a)

        # vertex-cover rule cache: last matching size, vertices it covers,
        # and incompatibilities created since that are not covered
        self.vc_bound = 0
        self.vc_cover: frozenset[int] | None = None
        self.vc_new = 0

        if seed_vertex is not None:
            if not 0 <= seed_vertex < k:
                raise IndexError("seed vertex not in kernel")
            self.marked[seed_vertex] = True
            self.marked_list.append(seed_vertex)

    # ------------------------------------------------------------ queries

    def _evaluate(self, a: int, b: int) -> bool:
        spec = self.spec
        return pair_compatible(
            spec,
            b in self.nbrs[a],
            self.cn[a][b],
            lambda: self._paths(a, b, spec.t),
        )

    def _paths(self, a: int, b: int, cap: int) -> int:
        self.flow_calls += 1
        return disjoint_paths(self.nbrs, a, b, cap, self.alive)

    def compatible(self, u: int, v: int) -> bool:
        """Evaluate the model predicate on the alive subgraph from scratch."""
        if u == v:
            raise ValueError("compatibility is defined for distinct vertices")
        if not (self.alive[u] and self.alive[v]):
            raise ValueError("queried vertex is not alive")
        return self._evaluate(u, v)

    def compat_count(self, v: int) -> int:
        """Alive vertices compatible with ``v``, counting ``v`` itself."""
        return self.alive_count - len(self.incompat[v])

    def compat_counts(self) -> dict[int, int]:
        return {v: self.compat_count(v) for v in self.alive_vertices()}

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.size) if self.alive[v]]

    def incompatible_pairs(self) -> list[tuple[int, int]]:
        return sorted(
            (a, b) for a in range(self.size) if self.alive[a] for b in self.incompat[a] if a < b
        )

    def to_parent(self, vertices) -> list[int]:
        tp = self.sub.to_parent
        return sorted(tp[v] for v in vertices)

    # ------------------------------------------------------------ mutation

    def checkpoint(self) -> Checkpoint:
        return Checkpoint(self._id, len(self._log))

    def mark(self, v: int) -> Checkpoint:
        if not self.alive[v]:
            raise ValueError(f"cannot mark dead vertex {v}")
        cp = self.checkpoint()
        if not self.marked[v]:
            self.marked[v] = True
            self.marked_list.append(v)
            self._log.append(("mark", v))
        return cp

    def delete_vertex(self, v: int) -> Checkpoint:
        """Delete alive, unmarked ``v``; return the checkpoint preceding it."""
        if not self.alive[v]:
            raise ValueError(f"vertex {v} is already deleted")
        if self.marked[v]:
            raise ValueError(f"vertex {v} is marked and cannot be deleted")
        cp = self.checkpoint()
        alive = self.alive
        alive[v] = False
        self.alive_count -= 1
        live_nb = [w for w in self.nbrs[v] if alive[w]]
        deg = self.deg
        for w in live_nb:
            deg[w] -= 1
        cn = self.cn
        for i, a in enumerate(live_nb):
            row = cn[a]
            for b in live_nb[i + 1:]:
                row[b] -= 1
                cn[b][a] -= 1
        incompat = self.incompat
        for w in incompat[v]:
            incompat[w].discard(v)

        created: list[tuple[int, int]] = []
        if self.spec.model == "connected":
            candidates = (
                (a, b)
                for a in range(self.size)
                if alive[a]
                for b in range(a + 1, self.size)
                if alive[b] and b not in incompat[a]
            )
        else:
            # only pairs whose common-neighbor count dropped can change
            candidates = (
                (a, b) for i, a in enumerate(live_nb) for b in live_nb[i + 1:] if b not in incompat[a]
            )
        for a, b in list(candidates):
            if not self._evaluate(a, b):
                incompat[a].add(b)
                incompat[b].add(a)
                created.append((a, b))

        vc_prev = (self.vc_bound, self.vc_cover, self.vc_new)
        if self.vc_cover is not None:
            cover = self.vc_cover
            self.vc_new += sum(1 for a, b in created if a not in cover and b not in cover)
        self._log.append(("del", v, created, vc_prev))
        return cp

    def set_vc_cache(self, bound: int, cover: frozenset[int]) -> None:
        self._log.append(("vc", (self.vc_bound, self.vc_cover, self.vc_new)))
        self.vc_bound, self.vc_cover, self.vc_new = bound, cover, 0

    def undo_to(self, checkpoint: Checkpoint) -> None:
        owner, position = checkpoint
        if owner != self._id:
            raise ValueError("checkpoint belongs to a different state")
        if position > len(self._log):
            raise ValueError("checkpoint is stale (already undone past it)")
        log = self._log
        while len(log) > position:
            entry = log.pop()
            kind = entry[0]
            if kind == "mark":
                v = entry[1]
                self.marked[v] = False
                self.marked_list.remove(v)
            elif kind == "vc":
                self.vc_bound, self.vc_cover, self.vc_new = entry[1]
            else:
                _, v, created, vc_prev = entry
                self._restore(v, created)
                self.vc_bound, self.vc_cover, self.vc_new = vc_prev

    def _restore(self, v: int, created) -> None:
        incompat = self.incompat
        for a, b in created:
            incompat[a].discard(b)
            incompat[b].discard(a)
        for w in incompat[v]:
            incompat[w].add(v)
        alive = self.alive
        live_nb = [w for w in self.nbrs[v] if alive[w]]
        cn = self.cn
        for i, a in enumerate(live_nb):
            row = cn[a]
            for b in live_nb[i + 1:]:
                row[b] += 1
                cn[b][a] += 1
        for w in live_nb:
            self.deg[w] += 1
        alive[v] = True
        self.alive_count += 1

    @property
    def log_depth(self) -> int:
        return len(self._log)


def init_state(sub: InducedSubgraph, spec: ModelSpec, seed_vertex: int | None = None) -> KernelState:
    return KernelState(sub, spec, seed_vertex)


def find_incompatible_pair(state: KernelState) -> tuple[int, int] | None:
    """Branching candidate: an incompatible pair ``(u, w)``.

    ``u`` is the unmarked vertex with the fewest compatible vertices (ties
    to the smaller id); ``w`` is its smallest incompatible partner. Returns
    ``None`` when all alive pairs are compatible.
    """
    best = None
    best_key = None
    incompat = state.incompat
    marked = state.marked
    for v in range(state.size):
        if not state.alive[v] or not incompat[v]:
            continue
        key = (marked[v], -len(incompat[v]), v)
        if best_key is None or key < best_key:
            best, best_key = v, key
    if best is None:
        return None
    return best, min(incompat[best])
