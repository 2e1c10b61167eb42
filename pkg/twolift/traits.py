"""Traits that validate and normalize the fields of twolift records.

Refer to https://traitlets.readthedocs.io/en/stable/defining_traits.html for
documentation on how to define new traitlet types.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Any, Optional, Tuple

import numpy as np
import traitlets
from traitlets import TraitError
from traitlets.utils.descriptions import class_of, describe

from twolift._constants import SIDE


# traitlets.TraitType.error ignores the `info` passed in; this subclass formats it
# into the message.
class FixedErrorTraitType(traitlets.TraitType):
    def error(self, obj, value, error=None, info=None):
        """Raise a TraitError

        Parameters
        ----------
        obj : HasTraits or None
            The instance which owns the trait.
        value : any
            The value that caused the error.
        error : Exception (default: None)
            An error that was raised by a child trait.
        info : str (default: None)
            A description of the expected value. By default this is infered from this
            trait's ``info`` method.
        """
        if error is not None:
            return super().error(obj, value, error=error, info=info)

        if self.name is None:
            raise TraitError(value, info or self.info(), self)

        if obj is not None:
            owner = f"The '{self.name}' trait of {class_of(obj)} instance"
        else:
            owner = f"The '{self.name}' trait"
        raise TraitError(
            f"{owner} expected {info or self.info()}, not {describe('the', value)}."
        )


def _as_int(value: Any) -> Optional[int]:
    if isinstance(value, bool):
        return None
    try:
        return operator.index(value)
    except TypeError:
        return None


def _as_rational(value: Any) -> Optional[Fraction]:
    # Floats are refused: every threshold and weight must be exact.
    if isinstance(value, (bool, float, np.floating)):
        return None
    if isinstance(value, Fraction):
        return value
    integer = _as_int(value)
    if integer is not None:
        return Fraction(integer)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            return None
    # sympy Rational and friends
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return None


class EdgeListTrait(FixedErrorTraitType):
    """An ordered list of undirected edges.

    Accepts any sequence (or two-column integer numpy array) of vertex pairs. Each
    pair is stored as `(min, max)`; the order of the sequence is kept because it is
    the canonical order of signings. Self-loops and duplicate edges are rejected.
    """

    default_value = ()
    info_text = "a sequence of (u, v) vertex pairs"

    def validate(self, obj, value) -> Tuple[Tuple[int, int], ...]:
        if isinstance(value, np.ndarray):
            if value.size == 0:
                value = []
            elif value.ndim != 2 or value.shape[1] != 2:
                self.error(obj, value, info="an edge array of shape (m, 2)")
            else:
                value = value.tolist()

        if not isinstance(value, (list, tuple)):
            self.error(obj, value)

        edges = []
        seen = set()
        for pair in value:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                self.error(obj, value, info="pairs of exactly two vertices")

            u, v = (_as_int(x) for x in pair)
            if u is None or v is None:
                self.error(obj, value, info="integer vertex indices")

            if u < 0 or v < 0:
                self.error(obj, value, info="non-negative vertex indices")

            if u == v:
                self.error(obj, value, info=f"no self-loops (found ({u}, {v}))")

            edge = (min(u, v), max(u, v))
            if edge in seen:
                self.error(obj, value, info=f"no duplicate edges (found {edge} twice)")

            seen.add(edge)
            edges.append(edge)

        return tuple(edges)


class SignVectorTrait(FixedErrorTraitType):
    """A vector of edge signs.

    Entries must be `+1` or `-1`. With `allow_unset=True`, `0` and `None` are also
    accepted and mean "not fixed yet"; both are stored as `0`.
    """

    default_value = ()

    def __init__(self, *args, allow_unset: bool = False, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self.allow_unset = allow_unset
        self.info_text = (
            "a sequence with entries +1, -1 or 0 (unset)"
            if allow_unset
            else "a sequence with entries +1 or -1"
        )

    def validate(self, obj, value) -> Tuple[int, ...]:
        if isinstance(value, np.ndarray):
            if not np.issubdtype(value.dtype, np.integer) or value.ndim != 1:
                self.error(obj, value, info="a one-dimensional integer array")
            value = value.tolist()

        if not isinstance(value, (list, tuple)):
            self.error(obj, value)

        allowed = {1, -1, 0} if self.allow_unset else {1, -1}
        signs = []
        for entry in value:
            sign = 0 if (entry is None and self.allow_unset) else _as_int(entry)
            if sign not in allowed:
                self.error(obj, value)
            signs.append(sign)

        return tuple(signs)


class SideVectorTrait(FixedErrorTraitType):
    """A vector of bipartition sides, stored as a tuple of [SIDE][twolift.SIDE].

    Entries may be `SIDE` members or the strings `"L"` and `"R"`.
    """

    default_value = ()
    info_text = 'a sequence with entries "L" or "R"'

    def validate(self, obj, value) -> Tuple[SIDE, ...]:
        if not isinstance(value, (list, tuple)):
            self.error(obj, value)

        sides = []
        for entry in value:
            try:
                sides.append(SIDE(entry))
            except (TypeError, ValueError):
                self.error(obj, value)
        return tuple(sides)


class ProbabilityVectorTrait(FixedErrorTraitType):
    """A vector of exact probabilities.

    Entries may be `int`, `fractions.Fraction`, sympy rationals or strings such as
    `"1/3"`; they are stored as `Fraction`. Floats are rejected.
    """

    default_value = ()
    info_text = "a sequence of exact rationals between 0 and 1"

    def validate(self, obj, value) -> Tuple[Fraction, ...]:
        if not isinstance(value, (list, tuple)):
            self.error(obj, value)

        probabilities = []
        for entry in value:
            p = _as_rational(entry)
            if p is None:
                self.error(
                    obj,
                    value,
                    info="exact rationals (int, str or Fraction), not floats",
                )
            if p < 0 or p > 1:
                self.error(obj, value, info="probabilities between 0 and 1")
            probabilities.append(p)

        return tuple(probabilities)


class RationalTrait(FixedErrorTraitType):
    """A single exact rational, stored as `Fraction`."""

    default_value = Fraction(0)
    info_text = "an exact rational (int, str or Fraction)"

    def __init__(self, *args, positive: bool = False, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self.positive = positive

    def validate(self, obj, value) -> Fraction:
        rational = _as_rational(value)
        if rational is None:
            self.error(obj, value)

        if self.positive and rational <= 0:
            self.error(obj, value, info="a positive rational")

        return rational
