"""Algebraic thresholds that spectra are certified against
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from twolift._constants import BOUND_KIND, BOUND_PRECISION, VERDICT
from twolift._graph import Graph, biregular_degrees, regular_degree
from twolift._poly import IntPoly, IsolatedRoot, largest_root, sturm_chain


@dataclass(frozen=True)
class RootBound:
    """A real algebraic number used as an upper bound for eigenvalues.

    The bound is the unique root of `minimal_poly` held by `root`. For `regular(d)`
    the polynomial is `x**2 - 4(d-1)`, whose positive root is `2*sqrt(d-1)`; for
    `biregular(c, d)` it is `x**4 - 2(c+d-2)x**2 + (c-d)**2`, whose largest root is
    `sqrt(c-1) + sqrt(d-1)`.
    """

    minimal_poly: IntPoly
    root: IsolatedRoot
    kind: BOUND_KIND
    parameters: Tuple[int, ...] = ()
    """`(d,)` for regular bounds, `(c, d)` for biregular bounds."""

    degenerate: bool = False
    """Set for degree parameters where the bound cannot separate anything."""

    @property
    def interval(self) -> Tuple[Fraction, Fraction]:
        """Rational interval holding the bound and no other root of `minimal_poly`."""
        return (self.root.lo, self.root.hi)

    def __float__(self) -> float:
        return float(self.root)

    def describe(self) -> str:
        if self.kind is BOUND_KIND.REGULAR:
            return f"2*sqrt({self.parameters[0] - 1})"
        if self.kind is BOUND_KIND.BIREGULAR:
            c, d = self.parameters
            return f"sqrt({c - 1}) + sqrt({d - 1})"
        return f"largest root of {self.minimal_poly.to_sympy().as_expr()}"


def _bound_root(poly: IntPoly) -> IsolatedRoot:
    return largest_root(poly, BOUND_PRECISION, check=False)


def regular_bound(d: int, *, warn: bool = True) -> RootBound:
    """The spectral radius `2*sqrt(d-1)` of the infinite `d`-regular tree.

    Bounds for `d <= 2` are flagged as degenerate with a warning: every cycle and
    every matching is trivially within them.
    """
    if d < 1:
        raise ValueError(f"degree must be at least 1, got {d}")
    poly = IntPoly([-4 * (d - 1), 0, 1])
    degenerate = d <= 2
    if degenerate and warn:
        warnings.warn(f"The Ramanujan bound for degree {d} is degenerate")
    return RootBound(poly, _bound_root(poly), BOUND_KIND.REGULAR, (d,), degenerate)


def biregular_bound(c: int, d: int, *, warn: bool = True) -> RootBound:
    """The spectral radius `sqrt(c-1) + sqrt(d-1)` of the infinite
    `(c, d)`-biregular tree."""
    if c < 1 or d < 1:
        raise ValueError(f"degrees must be at least 1, got ({c}, {d})")
    poly = IntPoly([(c - d) ** 2, 0, -2 * (c + d - 2), 0, 1])
    degenerate = min(c, d) <= 1 or max(c, d) <= 2
    if degenerate and warn:
        warnings.warn(
            f"The biregular Ramanujan bound for degrees ({c}, {d}) is degenerate"
        )
    return RootBound(poly, _bound_root(poly), BOUND_KIND.BIREGULAR, (c, d), degenerate)


def custom_bound(
    poly: IntPoly, interval: Optional[Tuple[Fraction, Fraction]] = None
) -> RootBound:
    """A bound given by any integer polynomial.

    Args:
        poly: Polynomial with at least one real root.
        interval: `(lo, hi)` such that `poly` has exactly one root in `(lo, hi]`. By
            default the largest real root of `poly` is used.

    Raises:
        ValueError: if `interval` does not hold exactly one root.
    """
    if interval is None:
        return RootBound(poly, _bound_root(poly), BOUND_KIND.CUSTOM)

    lo, hi = (Fraction(t) for t in interval)
    square_free = poly.square_free_part()
    count = sturm_chain(square_free).count_roots(lo, hi)
    if count != 1:
        raise ValueError(
            f"{poly} has {count} roots in ({lo}, {hi}], expected exactly 1"
        )
    root = IsolatedRoot(square_free, lo, hi)
    if square_free.sign_at(hi) == 0:
        root = IsolatedRoot.exact(square_free, hi)
    return RootBound(poly, root, BOUND_KIND.CUSTOM)


def cover_bound(g: Graph) -> RootBound:
    """The spectral radius of the universal cover of `g`, when it has a closed form.

    `d`-regular graphs get `regular(d)`, bipartite `(c, d)`-biregular graphs get
    `biregular(c, d)`. Every other graph gets the largest root of its matching
    polynomial, which is at most the spectral radius of its universal cover.
    """
    d = regular_degree(g)
    if d is not None and d > 0:
        return regular_bound(d)

    degrees = biregular_degrees(g)
    if degrees is not None:
        return biregular_bound(*degrees)

    from twolift._matching import matching_root_bound

    return matching_root_bound(g)


def compare_root_to_bound(f: IntPoly, bound: RootBound) -> VERDICT:
    """Classify the largest root of a real-rooted `f` against `bound`.

    Raises:
        NotRealRootedError: if `f` is not real-rooted.
    """
    return VERDICT.from_comparison(largest_root(f).compare(bound.root))


def compare_absolute_roots_to_bound(f: IntPoly, bound: RootBound) -> VERDICT:
    """Classify the largest absolute value of a root of `f` against `bound`."""
    return VERDICT.worst(
        compare_root_to_bound(f, bound), compare_root_to_bound(f.reflect(), bound)
    )
