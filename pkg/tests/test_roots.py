import random
from fractions import Fraction

import pytest

from twolift import (
    COMPARISON,
    IntPoly,
    IsolatedRoot,
    NotRealRootedError,
    compare_largest_roots,
    is_real_rooted,
    isolate_roots,
    largest_root,
    smallest_root,
)
from twolift._poly import order_roots

SQRT2 = IntPoly([-2, 0, 1])


def test_real_rootedness_of_sum():
    # (x + 1)(x + 2) + (x - 1)(x - 2) = 2x^2 + 4
    f = IntPoly.from_roots([-1, -2])
    g = IntPoly.from_roots([1, 2])
    assert is_real_rooted(f)
    assert is_real_rooted(g)
    assert not is_real_rooted(f + g)


def test_real_rootedness_edge_cases():
    assert is_real_rooted(IntPoly([3]))
    assert is_real_rooted(IntPoly.from_roots([1, 1, 1]))
    assert not is_real_rooted(IntPoly([1, 0, 0, 1]))
    with pytest.raises(ValueError, match="zero polynomial"):
        is_real_rooted(IntPoly())


def test_isolate_cubic_sum():
    # (x + 5)(x - 9)(x - 10) + (x + 6)(x - 1)(x - 8)
    f = IntPoly([498, -51, -17, 2])
    isolation = isolate_roots(f)
    assert len(isolation) == 3
    for root, approx in zip(isolation.roots, [-5.3, 6.4, 7.4]):
        assert abs(float(root) - approx) < 0.05
        assert root.width <= Fraction(1, 2**32)


def test_isolation_intervals_are_disjoint_and_ascending():
    f = IntPoly.from_roots([3, -1, 0, 2]) * IntPoly([-2, 0, 1])
    isolation = isolate_roots(f, Fraction(1, 16))
    intervals = isolation.intervals
    assert len(intervals) == 6
    for (lo, hi), (next_lo, _) in zip(intervals, intervals[1:]):
        assert lo <= hi <= next_lo
    assert all(hi - lo <= Fraction(1, 16) for lo, hi in intervals)


def test_isolation_multiplicities():
    f = IntPoly.from_roots([1, 1, -2])
    isolation = isolate_roots(f)
    assert isolation.multiplicities == (1, 2)
    assert isolation.real_root_count == 3
    assert abs(float(isolation.kth_largest(1)) - 1) < 1e-9
    assert abs(float(isolation.kth_largest(2)) - 1) < 1e-9
    assert abs(float(isolation.kth_largest(3)) + 2) < 1e-9
    with pytest.raises(IndexError):
        isolation.kth_largest(4)


def test_isolate_rejects_complex_roots():
    with pytest.raises(NotRealRootedError):
        isolate_roots(IntPoly([1, 0, 1]))

    partial = isolate_roots(
        IntPoly([1, 0, 1]) * IntPoly([-3, 1]), require_real_rooted=False
    )
    assert len(partial) == 1
    assert partial.largest.compare_to(3) is COMPARISON.EQUAL


def test_largest_and_smallest_root():
    root = largest_root(SQRT2, Fraction(1, 2**20))
    assert abs(float(root) - 2**0.5) < 1e-6
    low = smallest_root(SQRT2, Fraction(1, 2**20))
    assert abs(float(low) + 2**0.5) < 1e-6

    top = largest_root(IntPoly.from_roots([0, 0, 4]))
    assert top.compare_to(4) is COMPARISON.EQUAL
    bottom = smallest_root(IntPoly.from_roots([-3, 1]))
    assert bottom.compare_to(-3) is COMPARISON.EQUAL


def test_largest_root_requires_real_roots():
    with pytest.raises(NotRealRootedError):
        largest_root(IntPoly([1, 0, 1]) * IntPoly([-1, 1]))
    with pytest.raises(ValueError, match="has no roots"):
        largest_root(IntPoly([2]))


def test_compare_to_rational():
    root = largest_root(SQRT2)
    assert root.compare_to(Fraction(3, 2)) is COMPARISON.LESS
    assert root.compare_to(Fraction(7, 5)) is COMPARISON.GREATER
    half = IsolatedRoot.exact(IntPoly([-1, 2]), Fraction(1, 2))
    assert half.compare_to(Fraction(1, 2)) is COMPARISON.EQUAL
    assert half.compare(root) is COMPARISON.LESS


def test_compare_equal_roots_of_different_polynomials():
    # sqrt(2) is the largest root of both
    assert compare_largest_roots(SQRT2, IntPoly([-20, -2, 10, 1])) is COMPARISON.EQUAL


def test_compare_largest_roots_with_an_extra_linear_factor():
    rng = random.Random(5)
    for _ in range(30):
        roots = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))]
        f = IntPoly.from_roots(roots)
        r = Fraction(rng.randint(-30, 30), rng.randint(1, 4))
        extended = f * IntPoly([-r.numerator, r.denominator])
        expected = COMPARISON.LESS if r > max(roots) else COMPARISON.EQUAL
        assert compare_largest_roots(f, extended) is expected

    f = SQRT2 * IntPoly([1, 1])
    assert compare_largest_roots(f, f * IntPoly([-7, 5])) is COMPARISON.EQUAL
    assert compare_largest_roots(f, f * IntPoly([-3, 2])) is COMPARISON.LESS


def test_compare_close_roots():
    # sqrt(2) against 1414213/1000000
    below = IntPoly([-1414213, 1000000])
    assert compare_largest_roots(below, SQRT2) is COMPARISON.LESS
    assert compare_largest_roots(SQRT2, below) is COMPARISON.GREATER
    assert largest_root(below) < largest_root(SQRT2)
    assert largest_root(SQRT2) <= largest_root(SQRT2)


def test_refine_keeps_the_root():
    root = largest_root(IntPoly([-3, 0, 1]))
    refined = root.refine(Fraction(1, 1000))
    assert refined.width <= Fraction(1, 1000)
    assert refined.lo >= root.lo
    assert refined.hi <= root.hi
    assert refined.compare(root) is COMPARISON.EQUAL
    with pytest.raises(ValueError, match="precision must be positive"):
        root.refine(0)


def test_order_roots():
    a = largest_root(IntPoly([-3, 0, 1]))
    b = largest_root(SQRT2)
    c = IsolatedRoot.exact(IntPoly([-1, 1]), 1)
    ordered = order_roots([(a, "a"), (b, "b"), (c, "c")])
    assert [tag for _, tag in ordered] == ["c", "b", "a"]

    with pytest.raises(ValueError, match="distinct"):
        order_roots([(b, 1), (largest_root(IntPoly([-20, -2, 10, 1])), 2)])
