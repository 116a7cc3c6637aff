"""Rank/degree lattice of a smooth projective curve.

Classes are pairs (r, d) in Z^2 where d is the Euler characteristic
pairing against the structure sheaf convention: the structure sheaf of a
genus-g curve is (1, 1-g) and a point sheaf is (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidClassError, ZeroClassError
from .exact import INFINITY


@dataclass(frozen=True)
class CurveContext:
    """Base curve data; only the genus enters numerical computations."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")


@dataclass(frozen=True)
class NumClass:
    """A lattice class (rank, degree)."""

    r: int
    d: int

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.r + other.r, self.d + other.d)

    def __sub__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.r - other.r, self.d - other.d)

    def __neg__(self) -> "NumClass":
        return NumClass(-self.r, -self.d)

    @property
    def is_zero(self) -> bool:
        return self.r == 0 and self.d == 0


def slope(c: NumClass):
    """d/r for positive rank; INFINITY for positive-degree torsion classes."""
    if c.is_zero:
        raise ZeroClassError("slope of the zero class is undefined")
    if c.r < 0:
        raise InvalidClassError(f"slope needs rank >= 0, got {c}")
    if c.r == 0:
        if c.d > 0:
            return INFINITY
        raise InvalidClassError(f"no sheaf realizes {c}")
    return Fraction(c.d, c.r)


def is_semistable_class(genus: int, c: NumClass) -> bool:
    """Whether some slope-semistable sheaf has class c.

    Positive genus curves carry semistable bundles of every rank and
    degree; on the rational curve the only semistable bundles are powers
    of a single line bundle, so the degree must be divisible by the rank.
    """
    if c.is_zero:
        raise ZeroClassError("the zero class is not a sheaf class")
    if c.r < 0:
        return False
    if c.r == 0:
        return c.d > 0
    if genus >= 1:
        return True
    return c.d % c.r == 0


def euler_form(genus: int, c1: NumClass, c2: NumClass) -> int:
    """Euler pairing chi(c1, c2) = r1*d2 - r2*d1 + r1*r2*(1-genus)."""
    return c1.r * c2.d - c2.r * c1.d + c1.r * c2.r * (1 - genus)
