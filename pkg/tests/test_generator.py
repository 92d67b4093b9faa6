import numpy as np
import pytest
from scipy import stats

from twoclub.generator import GenParams, generate, random_graph


def test_extremes():
    assert random_graph(10, 0.0, 0.0, 1).m == 0
    assert random_graph(10, 1.0, 1.0, 1).m == 45


def test_deterministic():
    a = random_graph(40, 0.1, 0.5, 123)
    b = generate(GenParams(40, 0.1, 0.5, 123))
    assert a.adjacency == b.adjacency
    assert random_graph(40, 0.1, 0.5, 124).adjacency != a.adjacency


def test_frozen_instance():
    # pins the bit stream so instances stay reproducible across releases
    g = random_graph(8, 0.2, 0.6, 42)
    assert g.edges() == FROZEN_8_02_06_42


FROZEN_8_02_06_42 = [
    (0, 1), (0, 2), (0, 3), (0, 7), (1, 2), (1, 4), (2, 3),
    (2, 7), (3, 5), (3, 6), (4, 7), (5, 6), (5, 7), (6, 7),
]


def test_raw_stream_mapping():
    # vertex probabilities are the first n raw outputs scaled into [a, b]
    raw = np.random.PCG64(7).random_raw(3)
    u = [(int(x) >> 11) / 2.0**53 for x in raw]
    g = random_graph(3, 0.0, 1.0, 7)
    draws = [(int(x) >> 11) / 2.0**53 for x in np.random.PCG64(7).random_raw(6)[3:]]
    expected = [
        (i, j)
        for k, (i, j) in enumerate([(0, 1), (0, 2), (1, 2)])
        if draws[k] < (u[i] + u[j]) / 2
    ]
    assert g.edges() == expected


@pytest.mark.parametrize(
    "n, a, b, seed",
    [(0, 0.1, 0.2, 0), (5, 0.3, 0.2, 0), (5, -0.1, 0.2, 0), (5, 0.1, 1.2, 0), (5, 0.1, 0.2, -1), (5, 0.1, 0.2, 2**64)],
)
def test_invalid_params(n, a, b, seed):
    with pytest.raises(ValueError):
        GenParams(n, a, b, seed)


def test_uniform_model_edge_probability():
    """With a == b the empirical edge frequency matches p (chi-square)."""
    p, n, seeds = 0.3, 100, 50
    pairs = n * (n - 1) // 2
    edges = np.array([random_graph(n, p, p, s).m for s in range(seeds)])
    observed = np.array([edges.sum(), seeds * pairs - edges.sum()])
    expected = np.array([p, 1 - p]) * seeds * pairs
    assert stats.chisquare(observed, expected).pvalue > 0.001


def test_density_regime():
    mean = np.mean([random_graph(150, 0.05, 0.25, s).density() for s in range(50)])
    assert mean == pytest.approx(0.15, abs=0.02)
