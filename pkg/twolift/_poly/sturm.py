"""Sturm sequences and sign-variation root counting

Sturm's theorem: for a square-free polynomial `p` the number of distinct real roots in
the half-open interval `(a, b]` equals `V(a) - V(b)`, where `V(t)` is the number of
sign changes in the Sturm sequence evaluated at `t` (zeros dropped). This holds even
when `a` or `b` is itself a root.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from twolift._poly.intpoly import IntPoly

Rational = Union[int, Fraction]


def count_sign_changes(signs) -> int:
    """Count sign changes in a sequence, ignoring zeros."""
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


class SturmChain:
    """The canonical Sturm sequence of the square-free part of a polynomial.

    The sequence is computed by sympy over `QQ`; each element is then scaled by a
    positive integer so that all evaluations stay in integers. Positive scaling does
    not change sign variations.
    """

    def __init__(self, f: IntPoly):
        if f.degree < 1:
            raise ValueError(
                f"Sturm chains need a polynomial of degree at least 1, got {f}"
            )
        self.square_free = f.square_free_part()
        sequence = self.square_free.to_sympy().sturm()
        self.polys: Tuple[IntPoly, ...] = tuple(
            IntPoly.clear_denominators(p)[1] for p in sequence
        )

    def __len__(self) -> int:
        return len(self.polys)

    def variations(self, t: Optional[Rational], *, at: int = 1) -> int:
        """Sign variations at `t`; `t=None` means `+inf` (`at=1`) or `-inf`
        (`at=-1`)."""
        if t is None:
            signs = [
                (1 if p.leading_coefficient > 0 else -1) * (at**p.degree)
                for p in self.polys
            ]
        else:
            signs = [p.sign_at(t) for p in self.polys]
        return count_sign_changes(signs)

    def count_roots(
        self, lo: Optional[Rational] = None, hi: Optional[Rational] = None
    ) -> int:
        """Number of distinct real roots in `(lo, hi]`; `None` is unbounded."""
        return self.variations(lo, at=-1) - self.variations(hi, at=1)

    @property
    def real_root_count(self) -> int:
        """Number of distinct real roots."""
        return self.count_roots(None, None)


@lru_cache(maxsize=4096)
def sturm_chain(f: IntPoly) -> SturmChain:
    return SturmChain(f)


def cauchy_bound(f: IntPoly) -> int:
    """An integer `B` with every complex root of `f` strictly inside `(-B, B)`."""
    if f.degree < 1:
        raise ValueError("constant polynomials have no roots")
    lead = abs(f.leading_coefficient)
    largest = max(abs(c) for c in f.coefficients[:-1])
    # 1 + max |a_i / a_n|, rounded up, plus one to keep the bound strict
    return 2 + -(-largest // lead)
