"""Interlacing and common interlacing of real-rooted polynomials
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ, Poly

from twolift._poly.intpoly import X, IntPoly
from twolift._poly.roots import is_real_rooted, isolate_roots
from twolift._utils import to_sympy_rational
from twolift.traits import _as_rational


def interlaces(g: IntPoly, f: IntPoly) -> bool:
    """Whether `g` interlaces `f`.

    With roots `a_1 <= ... <= a_{n-1}` of `g` and `b_1 <= ... <= b_n` of `f`
    (counted with multiplicity), `g` interlaces `f` when
    `b_1 <= a_1 <= b_2 <= a_2 <= ... <= a_{n-1} <= b_n`.

    Raises:
        ValueError: if `deg f != deg g + 1`.
        NotRealRootedError: if either polynomial is not real-rooted.
    """
    if f.degree != g.degree + 1:
        raise ValueError(
            f"interlacing needs deg f = deg g + 1, got {f.degree} and {g.degree}"
        )
    alphas = isolate_roots(g).expanded() if g.degree > 0 else []
    betas = isolate_roots(f).expanded()
    for i, alpha in enumerate(alphas):
        if not (betas[i] <= alpha and alpha <= betas[i + 1]):
            return False
    return True


def _check_same_degree(fs: Sequence[IntPoly]) -> int:
    degrees = {f.degree for f in fs}
    if len(degrees) > 1:
        raise ValueError(f"polynomials must share one degree, got {sorted(degrees)}")
    for f in fs:
        if f.leading_coefficient <= 0:
            raise ValueError(f"leading coefficients must be positive, got {f}")
    return degrees.pop()


def common_interlacing(fs: Sequence[IntPoly]) -> bool:
    """Whether the polynomials have a common interlacing.

    Decided on the roots: writing `b[i][j]` for the `j`-th smallest root of `fs[i]`,
    a common interlacing exists exactly when `max_i b[i][j] <= min_i b[i][j+1]`
    for every `j`.

    Args:
        fs: Real-rooted polynomials of one degree with positive leading coefficients.

    Raises:
        ValueError: on mixed degrees or a non-positive leading coefficient.
        NotRealRootedError: if a polynomial is not real-rooted.
    """
    fs = list(fs)
    if not fs:
        return True
    n = _check_same_degree(fs)
    if len(fs) == 1:
        return True

    roots = [isolate_roots(f).expanded() for f in fs]
    for j in range(n - 1):
        for lower in roots:
            for upper in roots:
                if not lower[j] <= upper[j + 1]:
                    return False
    return True


def convex_combination(
    fs: Sequence[IntPoly], lambdas: Sequence[Fraction]
) -> IntPoly:
    """`sum(lambdas[i] * fs[i])` scaled by a positive integer to clear denominators."""
    if len(fs) != len(lambdas):
        raise ValueError(f"got {len(fs)} polynomials but {len(lambdas)} weights")

    weights = []
    for entry in lambdas:
        weight = _as_rational(entry)
        if weight is None or weight < 0:
            raise ValueError(f"weights must be non-negative rationals, got {entry!r}")
        weights.append(weight)
    if sum(weights) != 1:
        raise ValueError(f"weights must sum to 1, got {sum(weights)}")

    total = Poly(0, X, domain=QQ)
    for f, weight in zip(fs, weights):
        total += f.to_rational() * to_sympy_rational(weight)
    return IntPoly.clear_denominators(total)[1]


def convex_combination_check(
    fs: Sequence[IntPoly], lambdas: Sequence[Fraction]
) -> bool:
    """Whether the convex combination `sum(lambdas[i] * fs[i])` is real-rooted.

    A single `False` refutes a common interlacing of `fs`; `True` for one choice of
    weights proves nothing about the others.

    Raises:
        ValueError: if the weights are negative, do not sum to 1 or do not match
            `fs`, or the polynomials do not share a degree.
    """
    _check_same_degree(fs)
    return is_real_rooted(convex_combination(fs, lambdas))
