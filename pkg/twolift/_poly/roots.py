"""Exact isolation and comparison of real roots
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple, TypeVar, Union

from twolift._constants import COMPARISON, DEFAULT_PRECISION
from twolift._errors import NotRealRootedError
from twolift._poly.intpoly import IntPoly
from twolift._poly.sturm import cauchy_bound, sturm_chain

Rational = Union[int, Fraction]
T = TypeVar("T")


def _midpoint(lo: Fraction, hi: Fraction) -> Fraction:
    return (lo + hi) / 2


@dataclass(frozen=True)
class IsolatedRoot:
    """A real algebraic number given by a square-free integer polynomial and a
    rational interval.

    The polynomial has exactly one root in the half-open interval `(lo, hi]`. When
    `lo == hi` the root is known exactly and equals that rational.
    """

    poly: IntPoly
    """Square-free integer polynomial vanishing at the root."""

    lo: Fraction
    hi: Fraction

    @classmethod
    def exact(cls, poly: IntPoly, value: Rational) -> IsolatedRoot:
        value = Fraction(value)
        return cls(poly, value, value)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __float__(self) -> float:
        return float(_midpoint(self.lo, self.hi))

    def bisect(self) -> IsolatedRoot:
        """Halve the interval, keeping the half that holds the root."""
        if self.is_exact:
            return self
        mid = _midpoint(self.lo, self.hi)
        if self.poly.sign_at(mid) == 0:
            return IsolatedRoot.exact(self.poly, mid)
        if sturm_chain(self.poly).count_roots(self.lo, mid) == 1:
            return IsolatedRoot(self.poly, self.lo, mid)
        return IsolatedRoot(self.poly, mid, self.hi)

    def refine(self, precision: Rational = DEFAULT_PRECISION) -> IsolatedRoot:
        """Bisect until the interval is no wider than `precision`."""
        if precision <= 0:
            raise ValueError(f"precision must be positive, got {precision}")
        root = self
        while root.width > precision:
            root = root.bisect()
        return root

    def compare_to(self, value: Rational) -> COMPARISON:
        """Exact comparison of the root with a rational number."""
        value = Fraction(value)
        if self.is_exact:
            return _compare_values(self.lo, value)
        if value <= self.lo:
            return COMPARISON.GREATER
        if value > self.hi:
            return COMPARISON.LESS
        if self.poly.sign_at(value) == 0:
            return COMPARISON.EQUAL
        # The root lies in (lo, value) or in (value, hi]
        if sturm_chain(self.poly).count_roots(self.lo, value) == 1:
            return COMPARISON.LESS
        return COMPARISON.GREATER

    def compare(self, other: IsolatedRoot) -> COMPARISON:
        """Exact three-way comparison with another isolated root.

        Both intervals are refined until they separate. If they keep overlapping, the
        roots are equal exactly when the gcd of the two polynomials has a root in the
        overlap, which is decided once with a Sturm count.
        """
        if self.is_exact:
            return _flip(other.compare_to(self.lo))
        if other.is_exact:
            return self.compare_to(other.lo)

        a, b = self, other
        common: Optional[IntPoly] = None
        while True:
            if a.is_exact or b.is_exact:
                return a.compare(b)
            if a.hi <= b.lo:
                return COMPARISON.LESS
            if b.hi <= a.lo:
                return COMPARISON.GREATER

            if common is None:
                common = a.poly.gcd(b.poly)
            if common.degree >= 1:
                lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
                if sturm_chain(common).count_roots(lo, hi) > 0:
                    return COMPARISON.EQUAL

            a, b = a.bisect(), b.bisect()

    def __lt__(self, other: IsolatedRoot) -> bool:
        return self.compare(other) is COMPARISON.LESS

    def __le__(self, other: IsolatedRoot) -> bool:
        return self.compare(other) is not COMPARISON.GREATER


def _compare_values(a: Fraction, b: Fraction) -> COMPARISON:
    if a < b:
        return COMPARISON.LESS
    if a > b:
        return COMPARISON.GREATER
    return COMPARISON.EQUAL


def _flip(comparison: COMPARISON) -> COMPARISON:
    return {
        COMPARISON.LESS: COMPARISON.GREATER,
        COMPARISON.GREATER: COMPARISON.LESS,
        COMPARISON.EQUAL: COMPARISON.EQUAL,
    }[comparison]


@dataclass(frozen=True)
class RootIsolation:
    """Every distinct real root of a polynomial, in ascending order.

    The intervals are pairwise disjoint and each holds exactly one root of the
    polynomial; `multiplicities[i]` is the multiplicity of `roots[i]`.
    """

    poly: IntPoly
    roots: Tuple[IsolatedRoot, ...]
    multiplicities: Tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Tuple[IsolatedRoot, int]]:
        return iter(zip(self.roots, self.multiplicities))

    @property
    def intervals(self) -> List[Tuple[Fraction, Fraction]]:
        return [(root.lo, root.hi) for root in self.roots]

    @property
    def real_root_count(self) -> int:
        """Real roots counted with multiplicity."""
        return sum(self.multiplicities)

    @property
    def largest(self) -> IsolatedRoot:
        if not self.roots:
            raise ValueError(f"{self.poly} has no real roots")
        return self.roots[-1]

    @property
    def smallest(self) -> IsolatedRoot:
        if not self.roots:
            raise ValueError(f"{self.poly} has no real roots")
        return self.roots[0]

    def expanded(self) -> List[IsolatedRoot]:
        """Roots repeated by multiplicity, ascending."""
        return [
            root
            for root, multiplicity in zip(self.roots, self.multiplicities)
            for _ in range(multiplicity)
        ]

    def kth_largest(self, k: int) -> IsolatedRoot:
        """The `k`-th largest root counted with multiplicity (`k=1` is the largest)."""
        expanded = self.expanded()
        if not 1 <= k <= len(expanded):
            raise IndexError(f"k must be between 1 and {len(expanded)}, got {k}")
        return expanded[-k]


def _isolate_square_free(poly: IntPoly) -> List[IsolatedRoot]:
    chain = sturm_chain(poly)
    bound = cauchy_bound(poly)
    found: List[IsolatedRoot] = []
    pending = [(Fraction(-bound), Fraction(bound))]
    while pending:
        lo, hi = pending.pop()
        count = chain.count_roots(lo, hi)
        if count == 0:
            continue
        if count == 1:
            root = IsolatedRoot(poly, lo, hi)
            if poly.sign_at(hi) == 0:
                root = IsolatedRoot.exact(poly, hi)
            found.append(root)
            continue
        mid = _midpoint(lo, hi)
        pending.append((lo, mid))
        pending.append((mid, hi))
    return found


def _separate(a: IsolatedRoot, b: IsolatedRoot) -> Tuple[IsolatedRoot, IsolatedRoot]:
    # a < b, so bisection eventually makes the intervals disjoint
    while not (a.hi < b.lo or (a.hi == b.lo and (a.is_exact or not b.is_exact))):
        a, b = a.bisect(), b.bisect()
    return a, b


def order_roots(
    tagged: Sequence[Tuple[IsolatedRoot, T]]
) -> List[Tuple[IsolatedRoot, T]]:
    """Sort distinct roots ascending, each paired with a tag, and refine neighbours
    until their intervals are disjoint.

    Raises:
        ValueError: if two of the roots are equal.
    """
    ordered = sorted(tagged, key=functools.cmp_to_key(lambda a, b: _cmp(a[0], b[0])))
    roots = [root for root, _ in ordered]
    for i in range(len(roots) - 1):
        if roots[i].compare(roots[i + 1]) is COMPARISON.EQUAL:
            raise ValueError("roots to order must be distinct")
        roots[i], roots[i + 1] = _separate(roots[i], roots[i + 1])
    return [(root, tag) for root, (_, tag) in zip(roots, ordered)]


def isolate_roots(
    f: IntPoly,
    precision: Rational = DEFAULT_PRECISION,
    *,
    require_real_rooted: bool = True,
) -> RootIsolation:
    """Isolate every distinct real root of `f` in intervals of width `<= precision`.

    The square-free factorization of `f` gives the multiplicities; each factor is
    isolated by Sturm-guided bisection, then neighbouring intervals of different
    factors are refined until they are disjoint.

    Args:
        f: Nonzero integer polynomial.
        precision: Maximum interval width. Defaults to `2**-32`.

    Keyword Args:
        require_real_rooted: Raise if `f` has non-real roots. Defaults to `True`.

    Raises:
        NotRealRootedError: if `require_real_rooted` and `f` is not real-rooted.

    Returns:
        The isolation, ascending.
    """
    if f.is_zero:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    precision = Fraction(precision)
    if precision <= 0:
        raise ValueError(f"precision must be positive, got {precision}")

    tagged: List[Tuple[IsolatedRoot, int]] = []
    for factor, multiplicity in f.square_free_factorization():
        for root in _isolate_square_free(factor):
            tagged.append((root.refine(precision), multiplicity))

    if require_real_rooted and sum(m for _, m in tagged) != f.degree:
        raise NotRealRootedError(f"{f} is not real-rooted")

    ordered = order_roots(tagged)
    return RootIsolation(
        poly=f,
        roots=tuple(root for root, _ in ordered),
        multiplicities=tuple(m for _, m in ordered),
    )


def _cmp(a: IsolatedRoot, b: IsolatedRoot) -> int:
    return {COMPARISON.LESS: -1, COMPARISON.EQUAL: 0, COMPARISON.GREATER: 1}[
        a.compare(b)
    ]


def is_real_rooted(f: IntPoly) -> bool:
    """Whether every root of `f` is real, counting multiplicity.

    Constants (degree 0) are real-rooted vacuously.

    Raises:
        ValueError: if `f` is the zero polynomial.
    """
    if f.is_zero:
        raise ValueError("the zero polynomial has no well-defined roots")
    real_roots = sum(
        multiplicity * sturm_chain(factor).real_root_count
        for factor, multiplicity in f.square_free_factorization()
    )
    return real_roots == f.degree


def largest_root(
    f: IntPoly, precision: Optional[Rational] = None, *, check: bool = True
) -> IsolatedRoot:
    """The largest real root of `f`.

    Only the top of the spectrum is bisected, which is much cheaper than a full
    isolation.

    Args:
        f: Integer polynomial of degree at least 1.
        precision: Refine the interval to this width. By default the interval is
            only as narrow as isolation needs.

    Keyword Args:
        check: Raise `NotRealRootedError` unless `f` is real-rooted.
    """
    if f.degree < 1:
        raise ValueError(f"{f} has no roots")
    if check and not is_real_rooted(f):
        raise NotRealRootedError(f"{f} is not real-rooted")

    poly = f.square_free_part()
    chain = sturm_chain(poly)
    bound = cauchy_bound(poly)
    lo, hi = Fraction(-bound), Fraction(bound)
    count = chain.count_roots(lo, hi)
    if count == 0:
        raise NotRealRootedError(f"{f} has no real roots")
    while count > 1:
        mid = _midpoint(lo, hi)
        upper = chain.count_roots(mid, hi)
        if upper >= 1:
            lo, count = mid, upper
        else:
            hi = mid

    root = IsolatedRoot(poly, lo, hi)
    if poly.sign_at(hi) == 0:
        root = IsolatedRoot.exact(poly, hi)
    if precision is not None:
        root = root.refine(precision)
    return root


def smallest_root(
    f: IntPoly, precision: Optional[Rational] = None, *, check: bool = True
) -> IsolatedRoot:
    """The smallest real root of `f`, as the negated largest root of `f(-x)`."""
    top = largest_root(f.reflect(), precision, check=check)
    return _negate(top)


def _negate(root: IsolatedRoot) -> IsolatedRoot:
    poly = root.poly.reflect()
    # -root lies in [-hi, -lo); lo must not be a root for (-hi, -lo] to isolate it
    while not root.is_exact and root.poly.sign_at(root.lo) == 0:
        root = root.bisect()
    if root.is_exact:
        return IsolatedRoot.exact(poly, -root.lo)
    if root.poly.sign_at(root.hi) == 0:
        return IsolatedRoot.exact(poly, -root.hi)
    return IsolatedRoot(poly, -root.hi, -root.lo)


def compare_largest_roots(f: IntPoly, g: IntPoly) -> COMPARISON:
    """Exact trichotomy of the largest root of `f` against the largest root of `g`.

    Raises:
        NotRealRootedError: if either polynomial is not real-rooted.

    Example:
        >>> compare_largest_roots(IntPoly([-2, 0, 1]), IntPoly([-20, -2, 10, 1]))
        <COMPARISON.EQUAL: 'EQUAL'>
    """
    return largest_root(f).compare(largest_root(g))
