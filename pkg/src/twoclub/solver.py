"""Exact search for maximum well-connected 2-clubs.

Any 2-club lies inside the closed 2-neighborhood of each of its members, so
the graph is processed one such neighborhood ("kernel") at a time, seeded
with its center vertex marked. Kernels are visited in nondecreasing order
of their initial size; a processed center is removed from later kernels.
Inside a kernel, a fix/delete branching on incompatible pairs runs under
the reduction rules of :mod:`twoclub.reductions`.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field

from . import oracle
from .compat import KernelState, ModelSpec, find_incompatible_pair
from .graph import Graph, closed_two_neighborhood, induced_subgraph
from .reductions import Outcome, apply_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Limits:
    time_limit: float | None = None
    node_limit: int | None = None

    def __post_init__(self):
        for name in ("time_limit", "node_limit"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass
class Solution:
    vertices: list[int]
    spec: ModelSpec
    verified: bool = False

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass
class SolveReport:
    best: Solution | None
    spec: ModelSpec
    kernels_built: int = 0
    kernels_skipped: int = 0
    branch_nodes: int = 0
    flow_calls: int = 0
    rule_firings: Counter = field(default_factory=Counter)
    wall_time: float = 0.0
    timed_out: bool = False
    clique_fallback: bool = False

    @property
    def size(self) -> int | None:
        return None if self.best is None else self.best.size

    @property
    def optimal(self) -> bool:
        return not self.timed_out

    def counters(self) -> dict:
        return {
            "kernels_built": self.kernels_built,
            "kernels_skipped": self.kernels_skipped,
            "branch_nodes": self.branch_nodes,
            "flow_calls": self.flow_calls,
            "rule_firings": dict(sorted(self.rule_firings.items())),
        }


class LimitReached(Exception):
    pass


class _Budget:
    def __init__(self, limits: Limits | None):
        limits = limits or Limits()
        self.deadline = None if limits.time_limit is None else time.perf_counter() + limits.time_limit
        self.node_limit = limits.node_limit
        self.nodes = 0

    def tick(self, node: bool = False) -> None:
        if node:
            self.nodes += 1
            if self.node_limit is not None and self.nodes > self.node_limit:
                raise LimitReached("node limit")
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise LimitReached("time limit")


def _masks(g: Graph) -> list[int]:
    out = []
    for a in g.adjacency:
        m = 0
        for w in a:
            m |= 1 << w
        out.append(m)
    return out


def clique_max(g: Graph, budget: _Budget | None = None) -> list[int]:
    """A maximum clique of ``g`` (branch and bound with a greedy coloring bound)."""
    adj = _masks(g)
    best: list[int] = []

    def colored(p: int) -> list[tuple[int, int]]:
        out = []
        uncolored = p
        color = 0
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                uncolored &= ~low
                q &= ~low & ~adj[v]
                out.append((v, color))
        return out

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        if budget is not None:
            budget.tick()
        for v, c in reversed(colored(p)):
            if len(r) + c <= len(best):
                return
            r.append(v)
            sub = p & adj[v]
            if sub:
                expand(r, sub)
            elif len(r) > len(best):
                best = sorted(r)
            r.pop()
            p &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return best


def initial_lower_bound(g: Graph, spec: ModelSpec) -> tuple[int, list[int]]:
    """Closed neighborhood of a maximum-degree vertex in the plain 2-club case."""
    if not spec.base_case or g.n == 0:
        return 0, []
    v = max(range(g.n), key=lambda x: (g.degree(x), -x))
    witness = sorted((v, *g.adjacency[v]))
    if len(witness) < spec.min_size:
        return 0, []
    return len(witness), witness


def _prefilter(g: Graph, spec: ModelSpec, seed: int, best_size: int) -> list[int] | None:
    """Low-degree cascade on a kernel before any compatibility data exists.

    Returns the surviving local vertices, or ``None`` when the seed dies.
    """
    threshold = spec.degree_threshold
    base = spec.base_case
    alive = [True] * g.n
    deg = [len(a) for a in g.adjacency]

    def doomed(v: int) -> bool:
        if deg[v] < threshold:
            return True
        if base and deg[v] == 1:
            (w,) = (x for x in g.adjacency[v] if alive[x])
            return deg[w] + 1 <= best_size
        return False

    stack = [v for v in range(g.n) if doomed(v)]
    while stack:
        v = stack.pop()
        if not alive[v] or not doomed(v):
            continue
        if v == seed:
            return None
        alive[v] = False
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                stack.append(w)
                if base:
                    stack.extend(x for x in g.adjacency[w] if alive[x] and deg[x] == 1)
    return [v for v in range(g.n) if alive[v]]


class _Search:
    def __init__(self, spec: ModelSpec, best_size: int, budget: _Budget, report: SolveReport):
        self.spec = spec
        self.best_size = best_size
        self.best: list[int] | None = None
        self.budget = budget
        self.report = report

    def reduce(self, state: KernelState, in_branching: bool) -> bool:
        out = apply_all(state, self.best_size, in_branching)
        self.report.rule_firings.update(out.firings)
        return out.kind is not Outcome.PRUNE

    def run(self, state: KernelState) -> None:
        self.budget.tick(node=True)
        self.report.branch_nodes += 1
        if state.alive_count <= self.best_size:
            return
        pair = find_incompatible_pair(state)
        if pair is None:
            if state.alive_count >= self.spec.min_size:
                self.best_size = state.alive_count
                self.best = state.to_parent(state.alive_vertices())
            return
        u, w = pair
        if state.marked[u]:
            # both endpoints marked: the marked-incompatible rule was skipped
            return
        cp = state.checkpoint()
        state.delete_vertex(u)
        if self.reduce(state, True):
            self.run(state)
        state.undo_to(cp)
        state.mark(u)
        if self.reduce(state, True):
            self.run(state)
        state.undo_to(cp)


def branch(state: KernelState, best_size: int = 0, limits: Limits | None = None) -> list[int] | None:
    """Best solution larger than ``best_size`` consistent with the marks, in parent ids."""
    report = SolveReport(None, state.spec)
    search = _Search(state.spec, best_size, _Budget(limits), report)
    if search.reduce(state, False):
        search.run(state)
    return search.best


def solve(g: Graph, spec: ModelSpec, limits: Limits | None = None) -> SolveReport:
    """Maximum ``spec`` 2-club of ``g``.

    On a time or node limit the best verified incumbent is returned with
    ``timed_out`` set.
    """
    start = time.perf_counter()
    budget = _Budget(limits)
    report = SolveReport(None, spec)
    best_size, best = initial_lower_bound(g, spec)
    search = _Search(spec, best_size, budget, report)
    search.best = best or None

    try:
        sizes = [len(closed_two_neighborhood(g, v)) for v in range(g.n)]
        order = sorted(range(g.n), key=lambda v: (sizes[v], v))
        removed = [False] * g.n
        for v in order:
            budget.tick()
            _process_kernel(g, v, removed, search, report)
            removed[v] = True
        if spec.model == "hereditary" and search.best_size < spec.t + 1:
            clique = clique_max(g, budget)
            if len(clique) > search.best_size:
                report.clique_fallback = True
                search.best_size, search.best = len(clique), clique
    except LimitReached as exc:
        logger.info("stopped early: %s", exc)
        report.timed_out = True

    if search.best:
        sol = Solution(sorted(search.best), spec)
        sol.verified = oracle.check_solution(g, sol.vertices, spec)
        if not sol.verified:
            raise RuntimeError(f"solver produced an invalid {spec} 2-club: {sol.vertices}")
        report.best = sol
    report.wall_time = time.perf_counter() - start
    return report


def _process_kernel(g: Graph, v: int, removed: list[bool], search: _Search, report: SolveReport) -> None:
    kernel = closed_two_neighborhood(g, v, removed)
    if len(kernel) <= search.best_size:
        report.kernels_skipped += 1
        return
    sub = induced_subgraph(g, kernel)
    seed = kernel.index(v)
    keep = _prefilter(sub.graph, search.spec, seed, search.best_size)
    if keep is None or len(keep) <= search.best_size:
        report.kernels_skipped += 1
        return
    if len(keep) < sub.graph.n:
        inner = induced_subgraph(sub.graph, keep)
        sub = type(sub)(inner.graph, tuple(sub.to_parent[i] for i in inner.to_parent))
        seed = keep.index(seed)
    report.kernels_built += 1
    state = KernelState(sub, search.spec, seed)
    try:
        if search.reduce(state, False):
            search.run(state)
    finally:
        report.flow_calls += state.flow_calls
