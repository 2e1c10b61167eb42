"""Matching counts and the matching polynomial
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from twolift._bounds import RootBound, compare_root_to_bound, regular_bound
from twolift._config import DEFAULT_SETTINGS, Settings
from twolift._constants import BOUND_KIND, BOUND_PRECISION
from twolift._errors import BudgetExceededError, CertificationError
from twolift._graph import Graph
from twolift._poly import IntPoly, largest_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MatchingCounts:
    """`counts[i]` is the number of matchings with `i` edges.

    The sequence always has `vertex_count // 2 + 1` entries and starts with `1`.
    """

    vertex_count: int
    counts: Tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.counts[i] if i < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        """Number of matchings of any size, including the empty one."""
        return sum(self.counts)


def _normalize(vertex_count: int, counts: Sequence[int]) -> MatchingCounts:
    size = vertex_count // 2 + 1
    padded = list(counts[:size]) + [0] * (size - len(counts))
    return MatchingCounts(vertex_count, tuple(padded))


def matching_counts(g: Graph) -> MatchingCounts:
    """Count the matchings of `g` by size.

    Uses the edge recurrence: the matchings of `G` are those avoiding an edge `e`
    plus those using it, and the latter are the matchings of `G` without both
    endpoints of `e`, each extended by `e`.
    """
    edges = g.edges

    def count(start: int, alive: int) -> List[int]:
        for j in range(start, len(edges)):
            u, v = edges[j]
            if alive >> u & 1 and alive >> v & 1:
                without = count(j + 1, alive)
                using = count(j + 1, alive & ~(1 << u) & ~(1 << v))
                result = without + [0] * (len(using) + 1 - len(without))
                for i, c in enumerate(using):
                    result[i + 1] += c
                return result
        return [1]

    return _normalize(g.vertex_count, count(0, (1 << g.vertex_count) - 1))


def matching_counts_bruteforce(
    g: Graph, *, settings: Settings = DEFAULT_SETTINGS
) -> MatchingCounts:
    """Count matchings by enumerating every edge subset.

    Raises:
        BudgetExceededError: if `g` has more than `settings.bruteforce_max_edges` edges.
    """
    if g.edge_count > settings.bruteforce_max_edges:
        raise BudgetExceededError(
            f"brute-force enumeration of {g.edge_count} edges exceeds the budget of "
            f"{settings.bruteforce_max_edges}"
        )
    counts = [0] * (g.vertex_count // 2 + 1)
    for size in range(len(counts)):
        for subset in combinations(g.edges, size):
            endpoints = {w for edge in subset for w in edge}
            if len(endpoints) == 2 * size:
                counts[size] += 1
    return _normalize(g.vertex_count, counts)


def matching_polynomial(
    g: Graph, counts: Optional[MatchingCounts] = None
) -> IntPoly:
    """The matching polynomial `sum_i (-1)**i m_i x**(n - 2i)`.

    Args:
        g: The graph.
        counts: Matching counts of `g`, if already known.
    """
    if counts is None:
        counts = matching_counts(g)
    n = g.vertex_count
    coefficients = [0] * (n + 1)
    for i, m in enumerate(counts.counts):
        coefficients[n - 2 * i] = (-1) ** i * m
    return IntPoly(coefficients)


def matching_root_bound(g: Graph) -> RootBound:
    """The largest root of the matching polynomial of `g` as a
    [RootBound][twolift.RootBound].

    For maximum degree `d >= 2` the root is checked to be at most `2*sqrt(d-1)`.

    Raises:
        ValueError: for the graph without vertices.
        CertificationError: if the check fails.
    """
    if g.vertex_count == 0:
        raise ValueError("the graph without vertices has no matching roots")
    mu = matching_polynomial(g)
    root = largest_root(mu, BOUND_PRECISION)
    d = g.max_degree
    if d >= 2:
        verdict = compare_root_to_bound(mu, regular_bound(d, warn=False))
        if not verdict.passed:
            raise CertificationError(
                f"matching polynomial {mu} has a root above 2*sqrt({d - 1})"
            )
        logger.debug("matching root of %r is %s 2*sqrt(%d)", g, verdict.value, d - 1)
    return RootBound(mu, root, BOUND_KIND.MATCHING_ROOT, (d,))
