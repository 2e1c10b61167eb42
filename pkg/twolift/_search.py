"""Finding good signings and certifying Ramanujan graphs
"""
from __future__ import annotations

import itertools
import logging
import random
import warnings
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from twolift._bounds import (
    RootBound,
    compare_absolute_roots_to_bound,
    compare_root_to_bound,
    cover_bound,
)
from twolift._certificate import (
    BoundCheck,
    Certificate,
    EigenvalueInterval,
    GraphSummary,
    TrailStep,
)
from twolift._config import DEFAULT_SETTINGS, Settings
from twolift._constants import COMPARISON, METHOD, VERDICT
from twolift._errors import BudgetExceededError, CertificationError
from twolift._expectation import conditional_expectation
from twolift._graph import (
    Graph,
    PartialSigning,
    Signing,
    adjacency_matrix,
    biregular_degrees,
    components,
    regular_degree,
    signed_adjacency,
    to_networkx,
)
from twolift._matching import matching_root_bound
from twolift._poly import (
    IntPoly,
    char_poly,
    common_interlacing,
    isolate_roots,
    largest_root,
    order_roots,
)

logger = logging.getLogger(__name__)


def _edge_order(
    g: Graph, order: Optional[Sequence[int]], settings: Settings
) -> List[int]:
    if order is not None:
        order = list(order)
        if sorted(order) != list(range(g.edge_count)):
            raise ValueError(
                f"order must be a permutation of the {g.edge_count} edge indices"
            )
        return order

    order = list(range(g.edge_count))
    if settings.shuffle_seed is not None:
        random.Random(settings.shuffle_seed).shuffle(order)
    return order


def _largest_eigenvalue_approx(matrix: np.ndarray) -> Optional[float]:
    if matrix.size == 0:
        return None
    return float(np.linalg.eigvalsh(matrix.astype(np.float64)).max())


def _signing_certificate(
    g: Graph,
    signing: Signing,
    method: METHOD,
    trail: Tuple[TrailStep, ...],
    settings: Settings,
) -> Certificate:
    matrix = signed_adjacency(g, signing)
    f = char_poly(matrix)
    bound = matching_root_bound(g)
    verdict = compare_root_to_bound(f, bound)
    if not verdict.passed:
        raise CertificationError(
            f"largest eigenvalue of the signing exceeds the largest matching root of "
            f"{g!r}"
        )

    cover = cover_bound(g)
    isolation = isolate_roots(f, settings.precision)
    return Certificate(
        graph=GraphSummary.of(g),
        bound=bound,
        eigenvalues=tuple(
            EigenvalueInterval.from_root(root, multiplicity)
            for root, multiplicity in isolation
        ),
        verdict=verdict,
        method=method,
        trail=trail,
        checks=(BoundCheck("cover", cover, compare_root_to_bound(f, cover)),),
        signing=signing,
        two_sided=compare_root_to_bound(f.reflect(), bound).passed,
        approx=_largest_eigenvalue_approx(matrix),
    )


def _check_search_budget(g: Graph, settings: Settings) -> None:
    if g.vertex_count == 0:
        raise ValueError("cannot sign the graph without vertices")
    if g.vertex_count > settings.max_vertices or g.edge_count > settings.max_edges:
        raise BudgetExceededError(
            f"{g!r} exceeds the search budget of {settings.max_vertices} vertices and "
            f"{settings.max_edges} edges"
        )


def find_good_signing(
    g: Graph,
    *,
    order: Optional[Sequence[int]] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> Tuple[Signing, Certificate]:
    """Find a signing whose largest eigenvalue is at most the largest root of the
    matching polynomial of `g`.

    Edges are fixed one at a time. For each edge both branches of the conditional
    expectation are formed and the one with the smaller largest root is kept (`+1` on
    ties). The branches form an interlacing family, so the largest root never
    increases along the way, and it starts at the largest matching root.

    **Example:**

    ```py
    from twolift import complete_bipartite, find_good_signing

    signing, certificate = find_good_signing(complete_bipartite(3, 3))
    assert certificate.passed
    ```

    Args:
        g: A graph with at least one vertex. It need not be bipartite; only the
            largest eigenvalue is controlled.

    Keyword Args:
        order: Edge indices in the order they are fixed. Defaults to the edge-list
            order, shuffled when `settings.shuffle_seed` is set.
        settings: Budgets and switches.

    Raises:
        BudgetExceededError: if `g` exceeds `settings.max_vertices` or
            `settings.max_edges`.
        CertificationError: if a step increases the largest root or the final
            signing fails its certificate. Either means a bug.

    Returns:
        The signing and its certificate.
    """
    _check_search_budget(g, settings)
    order = _edge_order(g, order, settings)

    partial = PartialSigning.unset(g.edge_count)
    parent = conditional_expectation(g, partial, settings=settings)
    parent_root = largest_root(parent)
    trail: List[TrailStep] = []

    for edge in order:
        plus = conditional_expectation(g, partial.fix(edge, 1), settings=settings)
        # the two branches sum to their parent
        minus = parent - plus
        plus_root, minus_root = largest_root(plus), largest_root(minus)
        comparison = plus_root.compare(minus_root)
        if comparison is COMPARISON.GREATER:
            choice, chosen, chosen_root = -1, minus, minus_root
        else:
            choice, chosen, chosen_root = 1, plus, plus_root

        descent = chosen_root.compare(parent_root)
        if descent is COMPARISON.GREATER:
            raise CertificationError(
                f"fixing edge {edge} of {g!r} increased the largest root"
            )

        interlacing = None
        if settings.check_interlacing:
            interlacing = common_interlacing([plus, minus])

        step = TrailStep(
            edge=edge,
            endpoints=g.edges[edge],
            choice=choice,
            comparison=comparison,
            descent=descent,
            interlacing=interlacing,
        )
        logger.debug("step %d: %s", len(trail), step)
        trail.append(step)

        partial = partial.fix(edge, choice)
        parent, parent_root = chosen, chosen_root

    signing = partial.to_signing()
    certificate = _signing_certificate(
        g, signing, METHOD.GREEDY, tuple(trail), settings
    )
    return signing, certificate


def exhaustive_best_signing(
    g: Graph, *, settings: Settings = DEFAULT_SETTINGS
) -> Tuple[Signing, Certificate]:
    """The signing with the smallest largest eigenvalue, by trying all of them.

    Signings are enumerated in lexicographic order with `+1` before `-1`; the first
    minimizer wins.

    Raises:
        BudgetExceededError: if `g` has more than `settings.exhaustive_max_edges`
            edges.
    """
    if g.edge_count > settings.exhaustive_max_edges:
        raise BudgetExceededError(
            f"{g!r} has more edges than the exhaustive budget of "
            f"{settings.exhaustive_max_edges}"
        )
    if g.vertex_count == 0:
        raise ValueError("cannot sign the graph without vertices")

    # many signings share a characteristic polynomial (switching equivalence)
    first_signing: Dict[IntPoly, Tuple[int, ...]] = {}
    for signs in itertools.product((1, -1), repeat=g.edge_count):
        f = char_poly(signed_adjacency(g, signs))
        first_signing.setdefault(f, signs)

    best_poly: Optional[IntPoly] = None
    best_root = None
    for f in first_signing:
        root = largest_root(f)
        if best_root is None or root.compare(best_root) is COMPARISON.LESS:
            best_poly, best_root = f, root
    assert best_poly is not None

    logger.debug(
        "%d signings of %r give %d characteristic polynomials",
        2**g.edge_count,
        g,
        len(first_signing),
    )
    signing = Signing(signs=first_signing[best_poly])
    certificate = _signing_certificate(g, signing, METHOD.EXHAUSTIVE, (), settings)
    return signing, certificate


def _trivial_polynomial(g: Graph) -> Tuple[IntPoly, List[str]]:
    """The product of the trivial eigenvalue factors over all components."""
    notes = []
    d = regular_degree(g)
    parts = components(g)
    trivial = IntPoly([1])
    if d is not None and d > 0:
        graph = to_networkx(g)
        bipartite_parts = sum(
            1 for part in parts if nx.is_bipartite(graph.subgraph(part))
        )
        trivial = IntPoly([-d, 1]) ** len(parts)
        if bipartite_parts:
            trivial = trivial * IntPoly([d, 1]) ** bipartite_parts
        notes.append(
            f"trivial eigenvalue {d} on {len(parts)} components, -{d} on "
            f"{bipartite_parts}"
        )
        return trivial, notes

    degrees = biregular_degrees(g)
    if degrees is not None:
        c, d = degrees
        trivial = IntPoly([-c * d, 0, 1]) ** len(parts)
        notes.append(f"trivial eigenvalues +-sqrt({c * d}) on {len(parts)} components")
    return trivial, notes


def certify_ramanujan(
    g: Graph,
    bound: Optional[RootBound] = None,
    *,
    settings: Settings = DEFAULT_SETTINGS,
) -> Certificate:
    """Certify that every non-trivial eigenvalue of `g` has absolute value at most
    the bound.

    The characteristic polynomial of the adjacency matrix is computed exactly and the
    trivial eigenvalues are divided out: `d` for every component of a `d`-regular
    graph and `-d` for every bipartite one, or `+-sqrt(cd)` for every component of a
    `(c, d)`-biregular graph. The remaining roots are compared in absolute value with
    `bound`, by default the universal cover bound of `g`.

    Args:
        g: A regular or biregular bipartite graph. Other graphs need `bound`.
        bound: The threshold. Defaults to [cover_bound][twolift.cover_bound].

    Raises:
        ValueError: if `g` is neither regular nor biregular bipartite and no `bound`
            is given.

    Returns:
        A certificate whose `verdict` is `EXCEEDS` when some non-trivial eigenvalue is
        too large in absolute value.
    """
    is_regular = regular_degree(g) is not None and g.edge_count > 0
    if bound is None:
        if not is_regular and biregular_degrees(g) is None:
            raise ValueError(
                f"{g!r} is neither regular nor biregular bipartite; "
                "pass a custom bound"
            )
        bound = cover_bound(g)

    summary = GraphSummary.of(g)
    if summary.component_count > 1:
        warnings.warn(
            f"Certifying a graph with {summary.component_count} components; each "
            "contributes its own trivial eigenvalues"
        )

    matrix = adjacency_matrix(g)
    f = char_poly(matrix)
    trivial, notes = _trivial_polynomial(g)
    nontrivial = f.exact_quotient(trivial)
    if nontrivial is None:
        raise CertificationError(
            f"trivial eigenvalues do not divide the spectrum of {g!r}"
        )

    if nontrivial.degree < 1:
        verdict = VERDICT.ALL_BELOW
    elif summary.bipartite:
        # the spectrum of a bipartite graph is symmetric about zero
        verdict = compare_root_to_bound(nontrivial, bound)
    else:
        verdict = compare_absolute_roots_to_bound(nontrivial, bound)

    tagged = []
    for poly, is_trivial in ((trivial, True), (nontrivial, False)):
        if poly.degree >= 1:
            for root, multiplicity in isolate_roots(poly, settings.precision):
                tagged.append((root, (multiplicity, is_trivial)))
    eigenvalues = tuple(
        EigenvalueInterval.from_root(root, multiplicity, is_trivial)
        for root, (multiplicity, is_trivial) in order_roots(tagged)
    )

    logger.info("%r: non-trivial spectrum %s %s", g, verdict.value, bound.describe())
    return Certificate(
        graph=summary,
        bound=bound,
        eigenvalues=eigenvalues,
        verdict=verdict,
        method=METHOD.DIRECT,
        approx=_largest_eigenvalue_approx(matrix),
        notes=tuple(notes),
    )
