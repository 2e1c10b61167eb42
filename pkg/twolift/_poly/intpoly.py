"""Exact integer polynomials in one variable
"""
from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple, Union

import sympy
from sympy import QQ, ZZ, Poly

X = sympy.Symbol("x")
"""The variable every twolift polynomial is written in."""


def _to_int(value) -> int:
    if isinstance(value, bool):
        raise TypeError("expected an integer coefficient, got bool")
    try:
        return operator.index(value)
    except TypeError:
        # sympy Integer
        if getattr(value, "is_Integer", False):
            return int(value)
        raise TypeError(f"expected an integer coefficient, got {value!r}") from None


class IntPoly:
    """An exact polynomial with arbitrary-precision integer coefficients.

    Coefficients are given in ascending degree: `IntPoly([-1, 0, 1])` is `x**2 - 1`.
    Instances are immutable and hashable. Arithmetic, division, gcd and square-free
    decomposition are delegated to [sympy.Poly][sympy.polys.polytools.Poly] over
    `ZZ`.
    """

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [_to_int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coefficients: Tuple[int, ...] = tuple(coeffs)
        if coeffs:
            self._poly = Poly.from_list(coeffs[::-1], X, domain=ZZ)
        else:
            self._poly = Poly(0, X, domain=ZZ)

    @classmethod
    def from_sympy(cls, poly: Union[Poly, sympy.Expr]) -> IntPoly:
        """Convert a sympy polynomial or expression with integer coefficients."""
        if not isinstance(poly, Poly):
            poly = Poly(poly, X)
        coeffs = poly.all_coeffs()[::-1]
        if any(not c.is_integer for c in map(sympy.sympify, coeffs)):
            raise ValueError(f"polynomial has non-integer coefficients: {poly}")
        return cls(int(c) for c in coeffs)

    @classmethod
    def from_roots(cls, roots: Iterable[int], leading: int = 1) -> IntPoly:
        """Build `leading * prod(x - r)` for integer roots `r`."""
        result = cls([leading])
        for r in roots:
            result = result * cls([-_to_int(r), 1])
        return result

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPoly:
        return cls([0] * degree + [coefficient])

    @classmethod
    def clear_denominators(cls, poly: Poly) -> Tuple[int, IntPoly]:
        """Scale a rational polynomial to an integer one.

        Returns `(factor, p)` where `factor > 0` and `p == factor * poly`. Positive
        scaling leaves the roots untouched.
        """
        poly = Poly(poly, X, domain=QQ) if not isinstance(poly, Poly) else poly
        if poly.is_zero:
            return 1, cls()
        factor, scaled = poly.clear_denoms(convert=True)
        return int(factor), cls.from_sympy(scaled)

    @property
    def coefficients(self) -> Tuple[int, ...]:
        """Coefficients in ascending degree; empty for the zero polynomial."""
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree, `-1` for the zero polynomial."""
        return len(self._coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coefficients

    @property
    def leading_coefficient(self) -> int:
        return self._coefficients[-1] if self._coefficients else 0

    def to_sympy(self) -> Poly:
        return self._poly

    def to_rational(self) -> Poly:
        return self._poly.set_domain(QQ)

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly.from_sympy(self._poly + _coerce(other)._poly)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly.from_sympy(self._poly - _coerce(other)._poly)

    def __mul__(self, other: Union[IntPoly, int]) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self._coefficients)
        return IntPoly.from_sympy(self._poly * _coerce(other)._poly)

    __rmul__ = __mul__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self._coefficients)

    def __pow__(self, exponent: int) -> IntPoly:
        return IntPoly.from_sympy(self._poly**exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(self._coefficients)

    def __repr__(self) -> str:
        return f"IntPoly({self._poly.as_expr()})"

    def __call__(self, t: Union[int, Fraction]) -> Fraction:
        return self.evaluate(t)

    def evaluate(self, t: Union[int, Fraction]) -> Fraction:
        """Exact value at a rational point (Horner's rule)."""
        t = Fraction(t)
        result = Fraction(0)
        for c in reversed(self._coefficients):
            result = result * t + c
        return result

    def sign_at(self, t: Union[int, Fraction]) -> int:
        """Sign of the value at `t`, evaluated homogeneously in integers."""
        t = Fraction(t)
        p, q = t.numerator, t.denominator
        n = self.degree
        total = 0
        p_power = 1
        for i, c in enumerate(self._coefficients):
            total += c * p_power * q ** (n - i)
            p_power *= p
        return (total > 0) - (total < 0)

    def derivative(self) -> IntPoly:
        return IntPoly.from_sympy(self._poly.diff(X))

    def shift(self, a: int) -> IntPoly:
        """The polynomial `x -> self(x + a)`."""
        return IntPoly.from_sympy(self._poly.shift(a))

    def reflect(self) -> IntPoly:
        """The polynomial whose roots are the negated roots, with the same leading
        coefficient sign: `(-1)**deg * self(-x)`."""
        n = self.degree
        return IntPoly(
            c * (-1) ** ((n - i) % 2) for i, c in enumerate(self._coefficients)
        )

    def parity(self) -> Optional[int]:
        """`0` if only even powers occur, `1` if only odd powers occur, else `None`.

        The zero polynomial is reported as even.
        """
        degrees = {i % 2 for i, c in enumerate(self._coefficients) if c}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    def divmod(self, other: IntPoly) -> Tuple[Poly, Poly]:
        """Quotient and remainder over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        return self.to_rational().div(other.to_rational())

    def exact_quotient(self, other: IntPoly) -> Optional[IntPoly]:
        """`self / other` if `other` divides `self` with an integer quotient, else
        `None`."""
        quotient, remainder = self.divmod(other)
        if not remainder.is_zero:
            return None
        try:
            return IntPoly.from_sympy(quotient)
        except ValueError:
            return None

    def divides(self, other: IntPoly) -> bool:
        """Whether `self` divides `other` exactly over the rationals."""
        _, remainder = other.divmod(self)
        return remainder.is_zero

    def gcd(self, other: IntPoly) -> IntPoly:
        """Greatest common divisor, primitive with positive leading coefficient."""
        result = IntPoly.from_sympy(self._poly.gcd(other._poly))
        return -result if result.leading_coefficient < 0 else result

    def square_free_part(self) -> IntPoly:
        if self.degree < 1:
            return IntPoly([1]) if not self.is_zero else IntPoly()
        return IntPoly.from_sympy(self._poly.sqf_part())

    def square_free_factorization(self) -> List[Tuple[IntPoly, int]]:
        """Pairwise coprime square-free factors with their multiplicities.

        The constant content is dropped; factors of degree zero are omitted.
        """
        _, factors = self._poly.sqf_list()
        return [
            (IntPoly.from_sympy(factor), multiplicity)
            for factor, multiplicity in factors
            if factor.degree() > 0
        ]


def _coerce(value: Union[IntPoly, int]) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    return IntPoly([value])
