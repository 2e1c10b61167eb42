from enum import Enum
from fractions import Fraction

DEFAULT_PRECISION = Fraction(1, 2**32)
"""Default width of certified root intervals."""

BOUND_PRECISION = Fraction(1, 2**10)
"""Width used for the isolating interval stored on a RootBound."""


class COMPARISON(str, Enum):
    """Outcome of an exact comparison between two real algebraic numbers"""

    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"


class VERDICT(str, Enum):
    """Largest root of a polynomial classified against a RootBound"""

    ALL_BELOW = "ALL_BELOW"
    TOUCHES = "TOUCHES"
    EXCEEDS = "EXCEEDS"

    @property
    def passed(self) -> bool:
        return self is not VERDICT.EXCEEDS

    @classmethod
    def from_comparison(cls, comparison: COMPARISON) -> "VERDICT":
        return {
            COMPARISON.LESS: cls.ALL_BELOW,
            COMPARISON.EQUAL: cls.TOUCHES,
            COMPARISON.GREATER: cls.EXCEEDS,
        }[comparison]

    @classmethod
    def worst(cls, *verdicts: "VERDICT") -> "VERDICT":
        order = [cls.ALL_BELOW, cls.TOUCHES, cls.EXCEEDS]
        return max(verdicts, key=order.index, default=cls.ALL_BELOW)


class BOUND_KIND(str, Enum):
    """Where the algebraic threshold of a RootBound comes from"""

    REGULAR = "regular"
    BIREGULAR = "biregular"
    MATCHING_ROOT = "matching-root"
    CUSTOM = "custom"


class SIDE(str, Enum):
    L = "L"
    R = "R"


class METHOD(str, Enum):
    """How the signing or spectrum in a Certificate was obtained"""

    GREEDY = "greedy"
    EXHAUSTIVE = "exhaustive"
    DIRECT = "direct"
