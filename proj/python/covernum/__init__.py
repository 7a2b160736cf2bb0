"""Edge-cover numbers of graphs by graph classes."""

import json

from ._core import (
    BudgetExceeded,
    CapacityError,
    Error,
    Graph,
    UnsupportedClass,
    chromatic_number,
    clique_number,
    is_member,
    suite_names,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "CapacityError",
    "Error",
    "Graph",
    "UnsupportedClass",
    "chromatic_number",
    "clique_number",
    "cover",
    "is_member",
    "recognize",
    "solve",
    "suite_names",
    "verify",
]


def recognize(graph, cls):
    """Membership of `graph` in `cls` with a JSON-like witness."""
    return json.loads(_core._recognize(graph, cls))


def cover(graph, cls):
    """Constructive cover certificate for bipartite, chi-le:<k> or chi-le-f:<f>."""
    return json.loads(_core._cover(graph, cls))


def solve(graph, cls, max_edges=22, decision=None):
    """Exact cover number, or a decision for at most `decision` parts."""
    return json.loads(_core._solve(graph, cls, max_edges, decision))


def verify(suite, n_max=5, samples=200, sample_sizes=(6, 7), seed=1):
    return json.loads(_core._verify(suite, n_max, samples, list(sample_sizes), seed))
