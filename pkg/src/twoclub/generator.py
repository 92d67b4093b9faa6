"""Random graphs with per-vertex edge probabilities.

Each vertex draws ``p_v`` uniformly from ``[a, b]``; each pair ``{u, v}``
becomes an edge with probability ``(p_u + p_v) / 2``, so the expected
density is ``(a + b) / 2``. With ``a == b`` this is the uniform G(n, p)
model.

Randomness comes from the PCG64 bit generator (PCG-XSL-RR 128/64) seeded via
numpy's SeedSequence. Only raw 64-bit outputs are consumed and mapped to
doubles as ``(x >> 11) * 2**-53``, so a given seed yields the same graph on
every platform and numpy version.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

_TO_UNIT = 2.0 ** -53


@dataclass(frozen=True)
class GenParams:
    n: int
    a: float
    b: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.a <= self.b <= 1.0:
            raise ValueError("need 0 <= a <= b <= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


def _uniforms(bitgen: np.random.PCG64, count: int) -> np.ndarray:
    raw = bitgen.random_raw(count)
    return (np.asarray(raw, dtype=np.uint64) >> np.uint64(11)).astype(np.float64) * _TO_UNIT


def generate(p: GenParams) -> Graph:
    bitgen = np.random.PCG64(p.seed)
    n = p.n
    probs = p.a + (p.b - p.a) * _uniforms(bitgen, n)
    iu, ju = np.triu_indices(n, k=1)
    draws = _uniforms(bitgen, len(iu))
    keep = draws < (probs[iu] + probs[ju]) / 2.0
    edges = zip(iu[keep].tolist(), ju[keep].tolist())
    return Graph.from_edges(n, edges)


def random_graph(n: int, a: float, b: float, seed: int = 0) -> Graph:
    return generate(GenParams(n, a, b, seed))
