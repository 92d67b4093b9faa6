import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import graphs
from twoclub import ModelSpec
from twoclub.compat import KernelState
from twoclub.flow import disjoint_paths, internally_disjoint_paths
from twoclub.graph import induced_subgraph


def _state(g):
    return KernelState(induced_subgraph(g, range(g.n)), ModelSpec("connected", 1))


@pytest.mark.parametrize(
    "g, u, v, cap, expected",
    [
        (graphs.k33(), 0, 1, 3, 3),
        (graphs.k33(), 0, 4, 3, 3),
        (graphs.cycle(5), 0, 2, 5, 2),
        (graphs.cycle(5), 1, 4, 5, 2),
        (graphs.complete(4), 0, 1, 4, 3),
        (graphs.star(4), 1, 2, 2, 1),
    ],
)
def test_examples(g, u, v, cap, expected):
    state = _state(g)
    calls = state.flow_calls
    assert internally_disjoint_paths(state, u, v, cap) == expected
    assert state.flow_calls == calls + 1


def test_cap_is_respected():
    g = graphs.complete(6)
    assert disjoint_paths(g.neighbor_sets(), 0, 1, 2) == 2
    assert disjoint_paths(g.neighbor_sets(), 0, 1, 1) == 1
    assert disjoint_paths(g.neighbor_sets(), 0, 1, 0) == 0


def test_disconnected_pair():
    g = graphs.Graph.from_edges(4, [(0, 1), (2, 3)])
    assert disjoint_paths(g.neighbor_sets(), 0, 3, 5) == 0


def test_alive_mask_and_errors():
    g = graphs.cycle(5)
    nb = g.neighbor_sets()
    alive = [True, True, True, False, True]
    assert disjoint_paths(nb, 0, 2, 5, alive) == 1
    assert disjoint_paths(nb, 0, 2, 5, lambda w: w != 1) == 1
    with pytest.raises(ValueError):
        disjoint_paths(nb, 0, 3, 5, alive)
    with pytest.raises(ValueError):
        disjoint_paths(nb, 0, 0, 5)
    state = _state(g)
    state.delete_vertex(3)
    with pytest.raises(ValueError):
        internally_disjoint_paths(state, 0, 3, 2)


def _networkx_paths(g, u, v):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    if h.has_edge(u, v):
        h.remove_edge(u, v)
        return 1 + nx.node_connectivity(h, u, v)
    return nx.node_connectivity(h, u, v)


@st.composite
def st_graph(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return graphs.Graph.from_edges(n, chosen)


@settings(max_examples=80)
@given(st_graph())
def test_matches_networkx(g):
    nb = g.neighbor_sets()
    for u, v in itertools.combinations(range(g.n), 2):
        assert disjoint_paths(nb, u, v, g.n) == _networkx_paths(g, u, v)


@settings(max_examples=80)
@given(st_graph(), st.data())
def test_symmetric_and_monotone_under_deletion(g, data):
    nb = g.neighbor_sets()
    u, v = data.draw(st.sampled_from(list(itertools.combinations(range(g.n), 2))))
    full = disjoint_paths(nb, u, v, g.n)
    assert disjoint_paths(nb, v, u, g.n) == full
    for w in range(g.n):
        if w in (u, v):
            continue
        alive = [x != w for x in range(g.n)]
        assert disjoint_paths(nb, u, v, g.n, alive) <= full
