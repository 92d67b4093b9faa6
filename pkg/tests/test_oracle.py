import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import graphs
from twoclub import ModelSpec, brute_force_max, check_solution
from twoclub.graph import Graph
from twoclub.oracle import (
    _connected_literal,
    _connected_via_networkx,
    _hereditary_literal,
    _hereditary_pairs,
    _masks,
    brute_force_clique_number,
    max_consistent,
)


def test_k33_connected(k33):
    assert check_solution(k33, range(6), ModelSpec("connected", 3))
    assert not check_solution(k33, range(6), ModelSpec("connected", 4))


def test_hub_and_ring_not_hereditary():
    g = graphs.hub_and_ring(3)
    assert not check_solution(g, range(g.n), ModelSpec("hereditary", 1))


def test_clique_is_hereditary_for_any_t():
    assert check_solution(graphs.complete(3), [0, 1, 2], ModelSpec("hereditary", 1000))


def test_empty_and_invalid():
    assert not check_solution(graphs.complete(3), [], ModelSpec("hereditary", 0))
    with pytest.raises(IndexError):
        check_solution(graphs.complete(3), [3], ModelSpec("robust", 1))


def test_min_size_conventions():
    g = graphs.complete(3)
    assert not check_solution(g, [0], ModelSpec("robust", 1))
    assert check_solution(g, [0, 1], ModelSpec("robust", 1))
    assert not check_solution(g, [0, 1], ModelSpec("connected", 2))
    assert check_solution(g, [0], ModelSpec("hereditary", 2))


@pytest.mark.parametrize(
    "g, spec, expected",
    [
        (graphs.cycle(5), ModelSpec("connected", 2), 5),
        (graphs.cycle(4), ModelSpec("robust", 2), None),
        (graphs.star(4), ModelSpec("hereditary", 1), 2),
    ],
)
def test_brute_force_examples(g, spec, expected):
    found = brute_force_max(g, spec)
    assert (None if found is None else len(found)) == expected


def test_ties_are_lexicographic():
    assert brute_force_max(graphs.star(4), ModelSpec("hereditary", 1)) == [0, 1]


def test_size_guard():
    with pytest.raises(ValueError):
        brute_force_max(Graph.from_edges(17, []), ModelSpec("robust", 1))
    with pytest.raises(ValueError):
        brute_force_clique_number(Graph.from_edges(17, []))


def test_max_consistent_with_marks():
    g = graphs.path(3)
    spec = ModelSpec("hereditary", 0)
    assert max_consistent(g, spec) == [0, 1, 2]
    assert max_consistent(g, spec, allowed=[0, 2]) == [0]
    assert max_consistent(g, spec, allowed=[0, 1], required=[2]) is None
    assert max_consistent(g, spec, keep=lambda s: len(s) < 3) == [0, 1]


def test_networkx_route_agrees_with_literal():
    g = graphs.hub_and_ring(2)
    members = list(range(g.n))
    adj = _masks(g)
    mask = (1 << g.n) - 1
    for t in (1, 2, 3):
        assert _connected_via_networkx(g, members, t) == _connected_literal(adj, members, mask, t)


def test_large_connected_check_uses_networkx():
    # 25 vertices and t >= 7 exceed the literal enumeration budget;
    # the ring vertices have degree 9, which is also the connectivity
    g = graphs.hub_and_ring(4)
    assert check_solution(g, range(g.n), ModelSpec("connected", 4))
    assert check_solution(g, range(g.n), ModelSpec("connected", 9))
    assert not check_solution(g, range(g.n), ModelSpec("connected", 10))


@st.composite
def st_graph(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@settings(max_examples=80, deadline=None)
@given(st_graph(), st.integers(0, 3))
def test_common_neighbor_characterization(g, t):
    """Pairwise counting and literal vertex deletion agree on every vertex set."""
    adj = _masks(g)
    for mask in range(1, 1 << g.n):
        members = [v for v in range(g.n) if mask >> v & 1]
        assert _hereditary_pairs(adj, members, mask, t) == _hereditary_literal(adj, members, mask, t)
