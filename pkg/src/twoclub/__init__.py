"""Exact maximum t-robust, t-hereditary and t-connected 2-clubs."""
from .compat import KernelState, ModelSpec, find_incompatible_pair, init_state
from .graph import (
    Graph,
    GraphFormatError,
    InducedSubgraph,
    closed_two_neighborhood,
    connected_components,
    emit,
    induced_subgraph,
    parse,
    read_graph,
)
from .oracle import brute_force_max, check_solution
from .solver import Limits, Solution, SolveReport, clique_max, initial_lower_bound, solve

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphFormatError",
    "InducedSubgraph",
    "KernelState",
    "Limits",
    "ModelSpec",
    "Solution",
    "SolveReport",
    "brute_force_max",
    "check_solution",
    "clique_max",
    "closed_two_neighborhood",
    "connected_components",
    "emit",
    "find_incompatible_pair",
    "induced_subgraph",
    "init_state",
    "initial_lower_bound",
    "parse",
    "read_graph",
    "solve",
]
