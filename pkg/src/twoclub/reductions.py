"""Data reduction rules on a :class:`~twoclub.compat.KernelState`.

Every rule either shrinks the state (deleting or marking vertices), reports
that the current branch cannot hold a solution larger than ``best_size``
(prune), or leaves the state alone. Rules never undo their own work; the
caller checkpoints before applying them.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from .compat import KernelState

RULE_NAMES = (
    "marked_incompatible",
    "incompatible_resolution",
    "low_degree",
    "low_compatibility",
    "vertex_cover",
    "no_choice",
)


class Outcome(enum.Enum):
    REDUCED = "reduced"
    PRUNE = "prune"
    FIXPOINT = "fixpoint"


@dataclass
class RuleOutcome:
    kind: Outcome
    firings: Counter = field(default_factory=Counter)

    @property
    def pruned(self) -> bool:
        return self.kind is Outcome.PRUNE


def _result(changes: int, rule: str, firings: Counter | None = None) -> RuleOutcome:
    firings = firings if firings is not None else Counter()
    if changes:
        firings[rule] += changes
        return RuleOutcome(Outcome.REDUCED, firings)
    return RuleOutcome(Outcome.FIXPOINT, firings)


def _prune(rule: str, firings: Counter | None = None) -> RuleOutcome:
    firings = firings if firings is not None else Counter()
    firings[rule + "_prune"] += 1
    return RuleOutcome(Outcome.PRUNE, firings)


def rule_marked_incompatible(state: KernelState) -> RuleOutcome:
    """Prune when two marked vertices are incompatible."""
    marked = state.marked
    for m in state.marked_list:
        if any(marked[w] for w in state.incompat[m]):
            return _prune("marked_incompatible")
    return RuleOutcome(Outcome.FIXPOINT)


def rule_incompatible_resolution(state: KernelState) -> RuleOutcome:
    """Delete every unmarked vertex incompatible with a marked one."""
    deleted = 0
    changed = True
    while changed:
        changed = False
        for m in list(state.marked_list):
            for w in sorted(state.incompat[m]):
                if not state.alive[w] or w not in state.incompat[m]:
                    continue
                if state.marked[w]:
                    return _prune("marked_incompatible", Counter({"incompatible_resolution": deleted}))
                state.delete_vertex(w)
                deleted += 1
                changed = True
    return _result(deleted, "incompatible_resolution")


def rule_low_degree(state: KernelState, best_size: int = 0) -> RuleOutcome:
    """Cascade-delete vertices whose alive degree is too low.

    Below ``spec.degree_threshold`` a vertex cannot be in a solution (for the
    hereditary model: in a solution other than a clique of size <= t+1,
    which the solver covers separately). In the plain 2-club case a
    degree-one vertex is also deleted once its neighbor's closed
    neighborhood cannot beat ``best_size``.
    """
    spec = state.spec
    threshold = spec.degree_threshold
    base = spec.base_case
    alive, deg, nbrs = state.alive, state.deg, state.nbrs

    def doomed(v: int) -> bool:
        d = deg[v]
        if d < threshold:
            return True
        if base and d == 1:
            (w,) = (x for x in nbrs[v] if alive[x])
            return deg[w] + 1 <= best_size
        return False

    stack = [v for v in range(state.size) if alive[v] and doomed(v)]
    deleted = 0
    while stack:
        v = stack.pop()
        if not alive[v] or not doomed(v):
            continue
        if state.marked[v]:
            return _prune("low_degree", Counter({"low_degree": deleted}))
        live_nb = [w for w in nbrs[v] if alive[w]]
        state.delete_vertex(v)
        deleted += 1
        stack.extend(live_nb)
        if base:
            # a smaller neighbor degree can doom that neighbor's degree-one vertices
            for w in live_nb:
                stack.extend(x for x in nbrs[w] if alive[x] and deg[x] == 1)
    return _result(deleted, "low_degree")


def rule_low_compatibility(state: KernelState, best_size: int) -> RuleOutcome:
    """Delete vertices compatible with at most ``best_size`` vertices (self included)."""
    deleted = 0
    changed = True
    while changed:
        changed = False
        for v in range(state.size):
            if state.alive[v] and state.compat_count(v) <= best_size:
                if state.marked[v]:
                    return _prune("low_compatibility", Counter({"low_compatibility": deleted}))
                state.delete_vertex(v)
                deleted += 1
                changed = True
    return _result(deleted, "low_compatibility")


def greedy_matching(state: KernelState) -> list[tuple[int, int]]:
    """Maximal matching of the incompatibility graph, scanning edges in id order."""
    matched = set()
    out = []
    for a in range(state.size):
        if not state.alive[a] or a in matched:
            continue
        for b in sorted(state.incompat[a]):
            if b > a and b not in matched:
                matched.add(a)
                matched.add(b)
                out.append((a, b))
                break
    return out


def rule_vertex_cover(state: KernelState, best_size: int) -> RuleOutcome:
    """Prune when alive vertices minus a vertex-cover lower bound cannot beat ``best_size``.

    The bound is a maximal matching of the incompatibility graph. When the
    cached bound plus the uncovered conflicts created since could not
    trigger the test, the matching is not recomputed.
    """
    alive = state.alive_count
    if alive <= best_size:
        return _prune("vertex_cover")
    if state.vc_cover is not None and alive - state.vc_bound - state.vc_new > best_size:
        return RuleOutcome(Outcome.FIXPOINT, Counter({"vertex_cover_skipped": 1}))
    matching = greedy_matching(state)
    cover = frozenset(x for e in matching for x in e)
    state.set_vc_cache(len(matching), cover)
    if alive - len(matching) <= best_size:
        return _prune("vertex_cover")
    return RuleOutcome(Outcome.FIXPOINT, Counter({"vertex_cover_computed": 1}))


def rule_no_choice(state: KernelState) -> RuleOutcome:
    """Mark the common neighbors of nonadjacent marked pairs that need all of them."""
    x = state.spec.no_choice_threshold
    marked_now = 0
    changed = True
    while changed:
        changed = False
        ms = sorted(state.marked_list)
        for i, a in enumerate(ms):
            for b in ms[i + 1:]:
                if b in state.nbrs[a] or state.cn[a][b] != x:
                    continue
                for w in sorted(state.nbrs[a] & state.nbrs[b]):
                    if state.alive[w] and not state.marked[w]:
                        state.mark(w)
                        marked_now += 1
                        changed = True
    return _result(marked_now, "no_choice")


def apply_all(state: KernelState, best_size: int, in_branching: bool = False) -> RuleOutcome:
    """Apply the rules to a joint fixpoint, cheapest first.

    The vertex cover rule only runs with ``in_branching`` set.
    """
    total = Counter()
    any_change = False
    steps = (
        lambda: rule_marked_incompatible(state),
        lambda: rule_low_degree(state, best_size),
        lambda: rule_incompatible_resolution(state),
        lambda: rule_low_compatibility(state, best_size),
        lambda: rule_no_choice(state),
    )
    changed = True
    while changed:
        changed = False
        for step in steps:
            out = step()
            total.update(out.firings)
            if out.kind is Outcome.PRUNE:
                return RuleOutcome(Outcome.PRUNE, total)
            if out.kind is Outcome.REDUCED:
                any_change = changed = True
    if in_branching:
        out = rule_vertex_cover(state, best_size)
        total.update(out.firings)
        if out.kind is Outcome.PRUNE:
            return RuleOutcome(Outcome.PRUNE, total)
    return RuleOutcome(Outcome.REDUCED if any_change else Outcome.FIXPOINT, total)
