from fractions import Fraction

import sympy


def to_sympy_rational(value: Fraction) -> sympy.Rational:
    """Convert a `Fraction` to the equal sympy `Rational`."""
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def format_rational(value: Fraction) -> str:
    """`"num/den"`, the text form of every rational in a certificate."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
