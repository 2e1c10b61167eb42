from fractions import Fraction

import numpy as np
import pytest
from sympy import QQ, Poly

from twolift import (
    IntPoly,
    SturmChain,
    adjacency_matrix,
    char_poly,
    complete_bipartite,
)
from twolift._poly.intpoly import X
from twolift._poly.sturm import cauchy_bound, count_sign_changes


def test_coefficients_are_ascending():
    f = IntPoly([-1, 0, 1, 0])
    assert f.coefficients == (-1, 0, 1)
    assert f.degree == 2
    assert f.leading_coefficient == 1
    assert IntPoly().degree == -1
    assert IntPoly().is_zero


def test_arithmetic():
    f = IntPoly([1, 1])
    g = IntPoly([-1, 1])
    assert f * g == IntPoly([-1, 0, 1])
    assert f + g == IntPoly([0, 2])
    assert f - g == IntPoly([2])
    assert -f == IntPoly([-1, -1])
    assert f**3 == IntPoly([1, 3, 3, 1])
    assert 3 * f == IntPoly([3, 3])


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError, match="integer coefficient"):
        IntPoly([1, 0.5])

    with pytest.raises(ValueError, match="non-integer coefficients"):
        IntPoly.from_sympy(Poly(X**2 / 2, X, domain=QQ))


def test_clear_denominators():
    factor, f = IntPoly.clear_denominators(Poly(X**2 / 2 - Fraction(1, 3), X))
    assert factor == 6
    assert f == IntPoly([-2, 0, 3])


def test_evaluate_and_sign():
    f = IntPoly([-2, 0, 1])
    assert f(3) == 7
    assert f(Fraction(1, 2)) == Fraction(-7, 4)
    assert f.sign_at(Fraction(3, 2)) == 1
    assert f.sign_at(Fraction(7, 5)) == -1
    assert IntPoly([-4, 0, 1]).sign_at(2) == 0


def test_shift_and_reflect():
    f = IntPoly.from_roots([1, 2])
    assert f.shift(1) == IntPoly.from_roots([0, 1])
    assert f.reflect() == IntPoly.from_roots([-1, -2])
    assert IntPoly.from_roots([1, 2, 3]).reflect().leading_coefficient == 1


def test_parity():
    assert IntPoly([-9, 0, 1]).parity() == 0
    assert IntPoly([0, -3, 0, 1]).parity() == 1
    assert IntPoly([1, 1]).parity() is None


def test_division():
    f = IntPoly.from_roots([1, 1, 2])
    assert IntPoly.from_roots([1]).divides(f)
    assert not IntPoly.from_roots([3]).divides(f)
    assert f.exact_quotient(IntPoly.from_roots([1, 2])) == IntPoly.from_roots([1])
    assert f.exact_quotient(IntPoly.from_roots([3])) is None
    with pytest.raises(ZeroDivisionError):
        f.divmod(IntPoly())


def test_gcd_and_square_free():
    f = IntPoly.from_roots([1, 1, 2])
    g = IntPoly.from_roots([1, 3])
    assert f.gcd(g) == IntPoly.from_roots([1])
    assert f.square_free_part() == IntPoly.from_roots([1, 2])
    factors = dict(
        (multiplicity, factor) for factor, multiplicity in f.square_free_factorization()
    )
    assert factors == {1: IntPoly.from_roots([2]), 2: IntPoly.from_roots([1])}


def test_char_poly_of_complete_bipartite():
    # eigenvalues 3, -3 and 0 four times
    f = char_poly(adjacency_matrix(complete_bipartite(3, 3)))
    assert f == IntPoly([0, 0, 0, 0, -9, 0, 1])


def test_char_poly_of_small_matrices():
    assert char_poly(np.zeros((0, 0), dtype=np.int64)) == IntPoly([1])
    assert char_poly([[2]]) == IntPoly([-2, 1])
    assert char_poly([[0, 1], [1, 0]]) == IntPoly([-1, 0, 1])

    with pytest.raises(ValueError, match="square"):
        char_poly([[0, 1, 2], [1, 0, 2]])

    with pytest.raises(ValueError, match="square"):
        char_poly(np.zeros((2, 3), dtype=np.int64))


def test_sturm_chain_counts():
    chain = SturmChain(IntPoly([-2, 0, 1]))
    assert chain.real_root_count == 2
    assert chain.count_roots(0, 2) == 1
    assert chain.count_roots(None, 0) == 1
    assert chain.count_roots(Fraction(3, 2), 2) == 0


def test_sturm_chain_counts_roots_at_right_endpoint():
    chain = SturmChain(IntPoly.from_roots([0, 1, 2]))
    assert chain.count_roots(0, 1) == 1
    assert chain.count_roots(-1, 2) == 3
    assert chain.count_roots(Fraction(1, 2), Fraction(3, 2)) == 1


def test_sturm_chain_uses_square_free_part():
    chain = SturmChain(IntPoly.from_roots([1, 1, 1, -1]))
    assert chain.real_root_count == 2

    with pytest.raises(ValueError, match="degree at least 1"):
        SturmChain(IntPoly([5]))


def test_sign_changes_and_cauchy_bound():
    assert count_sign_changes([1, 0, -1, -1, 1]) == 2
    f = IntPoly([498, -51, -17, 2])
    bound = cauchy_bound(f)
    assert f.sign_at(bound) != 0
    assert bound > 250
