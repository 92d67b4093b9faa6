"""scikit-learn style front end.

>>> import numpy as np
>>> from twoclub.estimator import TwoClubFinder
>>> X = np.ones((4, 4)) - np.eye(4)
>>> TwoClubFinder(model="hereditary", t=2).fit(X).size_
4
"""
from __future__ import annotations

import numbers

import numpy as np
import scipy.sparse as sp
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils import check_array
from sklearn.utils.validation import check_is_fitted

from .compat import MODELS, ModelSpec
from .graph import Graph
from .solver import Limits, solve


def check_graph(X) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepts a :class:`Graph`, a networkx graph with integer nodes
    ``0..n-1``, or a square symmetric adjacency matrix (dense or sparse).
    Nonzero off-diagonal entries are edges; the diagonal is ignored.
    """
    if isinstance(X, Graph):
        return X
    if hasattr(X, "nodes") and hasattr(X, "edges") and not hasattr(X, "shape"):
        n = X.number_of_nodes()
        if set(X.nodes) != set(range(n)):
            raise ValueError("networkx graph nodes must be the integers 0..n-1")
        if X.is_directed():
            raise ValueError("directed graphs are not supported")
        return Graph.from_edges(n, ((u, v) for u, v in X.edges if u != v))
    A = check_array(X, accept_sparse=("csr", "csc", "coo"), ensure_2d=True, dtype=None,
                    ensure_min_samples=0, ensure_min_features=0)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {A.shape}")
    n = A.shape[0]
    if sp.issparse(A):
        A = sp.coo_matrix(A)
        A.eliminate_zeros()
        rows, cols = A.row, A.col
    else:
        rows, cols = np.nonzero(A)
    pairs = {(int(r), int(c)) for r, c in zip(rows, cols) if r != c}
    if any((c, r) not in pairs for r, c in pairs):
        raise ValueError("adjacency matrix must be symmetric")
    return Graph.from_edges(n, ((r, c) for r, c in pairs if r < c))


def check_spec(model, t) -> ModelSpec:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    if not isinstance(t, numbers.Integral) or isinstance(t, bool):
        raise TypeError(f"t must be an integer, got {type(t).__name__}")
    return ModelSpec(model, int(t))


class TwoClubFinder(ClusterMixin, BaseEstimator):
    """Find a maximum t-robust, t-hereditary or t-connected 2-club.

    Parameters
    ----------
    model : {"robust", "hereditary", "connected"}
    t : int
        Connectivity parameter; at least 1 (robust, connected) or 0
        (hereditary).
    time_limit : float, optional
        Seconds before the search stops and keeps its best incumbent.
    node_limit : int, optional
        Maximum number of branching nodes.

    Attributes
    ----------
    club_ : ndarray of int
        Vertices of the best 2-club found (empty if none exists).
    size_ : int
    labels_ : ndarray of shape (n_vertices,)
        1 for club members, 0 otherwise.
    optimal_ : bool
        False when a limit stopped the search early.
    report_ : SolveReport
    """

    def __init__(self, model="robust", t=1, time_limit=None, node_limit=None):
        self.model = model
        self.t = t
        self.time_limit = time_limit
        self.node_limit = node_limit

    def fit(self, X, y=None):
        spec = check_spec(self.model, self.t)
        graph = check_graph(X)
        report = solve(graph, spec, Limits(self.time_limit, self.node_limit))
        vertices = report.best.vertices if report.best else []
        self.report_ = report
        self.club_ = np.asarray(vertices, dtype=np.intp)
        self.size_ = len(vertices)
        self.labels_ = np.zeros(graph.n, dtype=np.intp)
        self.labels_[self.club_] = 1
        self.optimal_ = not report.timed_out
        self.n_vertices_in_ = graph.n
        return self

    def predict(self, X=None):
        """Membership labels of the fitted graph; ``X``, if given, must be that graph's size."""
        check_is_fitted(self, "labels_")
        if X is not None and check_graph(X).n != self.n_vertices_in_:
            raise ValueError("predict only applies to the graph seen in fit")
        return self.labels_.copy()
