"""Reference checks written straight from the definitions.

Nothing here touches the search engine: robust clubs are checked by
counting paths of length at most two, hereditary clubs by the common
neighbor characterization (and, for small sets, by literally deleting
every vertex subset of size at most t), connected clubs by deleting every
vertex subset of size below t and testing connectivity.
"""
from __future__ import annotations

import itertools
from math import comb
from typing import Iterable

from .compat import ModelSpec
from .graph import Graph

MAX_BRUTE_FORCE_N = 16
LITERAL_HEREDITARY_LIMIT = 12
LITERAL_CONNECTED_BUDGET = 200_000


def _masks(g: Graph) -> list[int]:
    out = []
    for a in g.adjacency:
        m = 0
        for w in a:
            m |= 1 << w
        out.append(m)
    return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _connected(adj: list[int], mask: int) -> bool:
    if not mask:
        return True
    reach = frontier = mask & -mask
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        frontier = nxt & mask & ~reach
        reach |= frontier
    return reach == mask


def _is_two_club(adj: list[int], mask: int) -> bool:
    members = _bits(mask)
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            if not (adj[u] >> v) & 1 and not adj[u] & adj[v] & mask:
                return False
    return True


def _robust(adj: list[int], members: list[int], mask: int, t: int) -> bool:
    if len(members) < t + 1:
        return False
    for i, u in enumerate(members):
        au = adj[u]
        for v in members[i + 1:]:
            # each length-two path has one inner vertex, so they are disjoint
            paths = ((au >> v) & 1) + (au & adj[v] & mask).bit_count()
            if paths < t:
                return False
    return True


def _hereditary_pairs(adj: list[int], members: list[int], mask: int, t: int) -> bool:
    if not members:
        return False
    for i, u in enumerate(members):
        au = adj[u]
        for v in members[i + 1:]:
            if not (au >> v) & 1 and (au & adj[v] & mask).bit_count() < t + 1:
                return False
    return True


def _hereditary_literal(adj: list[int], members: list[int], mask: int, t: int) -> bool:
    if not members:
        return False
    for r in range(0, min(t, len(members) - 1) + 1):
        for removed in itertools.combinations(members, r):
            rest = mask
            for x in removed:
                rest &= ~(1 << x)
            if not _is_two_club(adj, rest):
                return False
    return True


def _connected_literal(adj: list[int], members: list[int], mask: int, t: int) -> bool:
    if len(members) <= t or not _is_two_club(adj, mask):
        return False
    for v in members:
        if (adj[v] & mask).bit_count() < t:
            return False
    for r in range(t):
        for removed in itertools.combinations(members, r):
            rest = mask
            for x in removed:
                rest &= ~(1 << x)
            if not _connected(adj, rest):
                return False
    return True


def _connected_via_networkx(g: Graph, members: list[int], t: int) -> bool:
    import networkx as nx

    mask_set = set(members)
    h = nx.Graph()
    h.add_nodes_from(members)
    h.add_edges_from((u, v) for u in members for v in g.adjacency[u] if v in mask_set and u < v)
    if len(members) <= t or not nx.is_connected(h) or nx.diameter(h) > 2:
        return False
    return nx.node_connectivity(h) >= t


def _validate(g: Graph, s: Iterable[int]) -> list[int]:
    members = sorted(set(s))
    for v in members:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise IndexError(f"vertex {v!r} not in graph")
    return members


def check_solution(g: Graph, s: Iterable[int], spec: ModelSpec) -> bool:
    """True iff ``s`` is a ``spec.t``-well-connected 2-club of ``spec.model`` in ``g``."""
    members = _validate(g, s)
    if not members:
        return False
    t = spec.t
    adj = _masks(g)
    mask = 0
    for v in members:
        mask |= 1 << v
    if spec.model == "robust":
        return _robust(adj, members, mask, t)
    if spec.model == "hereditary":
        ok = _hereditary_pairs(adj, members, mask, t)
        if len(members) <= LITERAL_HEREDITARY_LIMIT:
            literal = _hereditary_literal(adj, members, mask, t)
            if literal != ok:
                raise AssertionError(
                    f"hereditary characterizations disagree on {members} (t={t})"
                )
        return ok
    cost = sum(comb(len(members), r) for r in range(min(t, len(members) + 1)))
    if cost <= LITERAL_CONNECTED_BUDGET:
        return _connected_literal(adj, members, mask, t)
    return _connected_via_networkx(g, members, t)


def _feasible(adj: list[int], members: list[int], mask: int, spec: ModelSpec) -> bool:
    if spec.model == "robust":
        return _robust(adj, members, mask, spec.t)
    if spec.model == "hereditary":
        return _hereditary_pairs(adj, members, mask, spec.t)
    return _connected_literal(adj, members, mask, spec.t)


def max_consistent(
    g: Graph,
    spec: ModelSpec,
    allowed: Iterable[int] | None = None,
    required: Iterable[int] = (),
    keep=None,
) -> list[int] | None:
    """Largest solution using only ``allowed`` vertices and containing ``required``.

    Sizes are tried from large to small; within a size the lexicographically
    smallest feasible set wins. ``keep``, if given, is an extra filter on
    candidate vertex lists.
    """
    pool = sorted(range(g.n) if allowed is None else set(allowed))
    if len(pool) > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force limited to {MAX_BRUTE_FORCE_N} vertices, got {len(pool)}")
    need = sorted(set(required))
    if not set(need) <= set(pool):
        return None
    free = [v for v in pool if v not in set(need)]
    adj = _masks(g)
    base = 0
    for v in need:
        base |= 1 << v
    for k in range(len(free), -1, -1):
        if k + len(need) == 0:
            break
        for extra in itertools.combinations(free, k):
            members = sorted((*need, *extra))
            mask = base
            for v in extra:
                mask |= 1 << v
            if _feasible(adj, members, mask, spec) and (keep is None or keep(members)):
                return members
    return None


def brute_force_max(g: Graph, spec: ModelSpec) -> list[int] | None:
    """Largest solution by enumeration, or ``None`` when there is none."""
    if g.n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force limited to n <= {MAX_BRUTE_FORCE_N}, got {g.n}")
    found = max_consistent(g, spec)
    if found is not None and not check_solution(g, found, spec):
        raise AssertionError(f"oracle predicates disagree on {found}")
    return found


def brute_force_clique_number(g: Graph) -> int:
    if g.n > MAX_BRUTE_FORCE_N:
        raise ValueError(f"brute force limited to n <= {MAX_BRUTE_FORCE_N}, got {g.n}")
    adj = _masks(g)
    best = 0
    for mask in range(1, 1 << g.n):
        size = mask.bit_count()
        if size <= best:
            continue
        if all((adj[v] | (1 << v)) & mask == mask for v in _bits(mask)):
            best = size
    return best
