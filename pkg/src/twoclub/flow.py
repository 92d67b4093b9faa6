"""Internally vertex-disjoint path counting by unit-capacity max flow.

Every vertex ``w`` other than the endpoints is split into ``in(w) -> out(w)``
with capacity one; each undirected edge becomes two unit arcs
``out(a) -> in(b)`` and ``out(b) -> in(a)``. Augmenting paths are found by
BFS (Edmonds-Karp order) and the search stops as soon as ``cap`` paths are
known, so a call costs O(cap * m).
"""
from __future__ import annotations

from collections import deque
from typing import Callable, Sequence


def disjoint_paths(
    nbrs: Sequence[Sequence[int]],
    u: int,
    v: int,
    cap: int,
    alive: Callable[[int], bool] | Sequence[bool] | None = None,
) -> int:
    """Return ``min(cap, number of internally disjoint u-v paths)``.

    ``nbrs`` is any adjacency structure supporting iteration and ``in``.
    Vertices with a falsy ``alive`` entry are ignored. A direct edge between
    ``u`` and ``v`` counts as one path with no internal vertex; the remaining
    paths are counted in the graph without that edge.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if alive is None:
        is_alive = lambda w: True  # noqa: E731
    elif callable(alive):
        is_alive = alive
    else:
        is_alive = alive.__getitem__
    if not (is_alive(u) and is_alive(v)):
        raise ValueError("endpoint is not alive")
    if cap <= 0:
        return 0

    found = 1 if v in nbrs[u] else 0
    need = cap - found
    if need <= 0:
        return cap

    # node 2w is in(w), 2w+1 is out(w); residual capacities keyed by arc
    source, sink = 2 * u + 1, 2 * v
    residual: dict[tuple[int, int], int] = {}
    arcs: dict[int, list[int]] = {}

    def add_arc(a: int, b: int) -> None:
        if (a, b) not in residual:
            arcs.setdefault(a, []).append(b)
            arcs.setdefault(b, []).append(a)
            residual[(a, b)] = 0
            residual.setdefault((b, a), 0)
        residual[(a, b)] = 1

    # only vertices reachable from u matter; grow the network by BFS
    seen = {u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a != u and a != v:
            add_arc(2 * a, 2 * a + 1)
        if a == v:
            continue
        for b in nbrs[a]:
            if not is_alive(b) or b == u:
                continue
            if a == u and b == v:
                continue
            add_arc(2 * a + 1, 2 * b)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    if v not in seen:
        return found

    flow = 0
    while flow < need:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in arcs.get(a, ()):
                if b not in parent and residual[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            residual[(a, b)] -= 1
            residual[(b, a)] += 1
            b = a
        flow += 1
    return found + flow


def internally_disjoint_paths(state, u: int, v: int, cap: int) -> int:
    """Path count between alive kernel vertices ``u`` and ``v``, capped at ``cap``."""
    if not (state.alive[u] and state.alive[v]):
        raise ValueError("endpoint is not alive")
    state.flow_calls += 1
    return disjoint_paths(state.nbrs, u, v, cap, state.alive)
