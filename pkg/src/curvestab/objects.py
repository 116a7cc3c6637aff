"""Formal direct sums of shifted semistable classes.

A formal object is a multiset of pairs (shift k, class c) standing for a
direct sum of shifted semistable sheaves.  The canonical form sorts
factors by shift (descending) and then slope (descending, torsion on
top) and merges factors that share both shift and slope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidClassError, MixedGenusError
from .numclass import NumClass, is_semistable_class, slope


def _slope_sort_key(c: NumClass):
    # torsion (slope infinity) first, then finite slopes descending
    if c.r == 0:
        return (0, Fraction(0))
    return (1, -Fraction(c.d, c.r))


@dataclass(frozen=True)
class FormalObject:
    """Canonical formal object over a curve of the stored genus."""

    factors: tuple[tuple[int, NumClass], ...]
    genus: int

    def shift(self, s: int) -> "FormalObject":
        return FormalObject(tuple((k + s, c) for k, c in self.factors), self.genus)

    @property
    def is_zero(self) -> bool:
        return not self.factors


def canonicalize(raw, genus: int) -> FormalObject:
    """Validate and canonicalize a list of (shift, (r, d)) pairs.

    Every class must be a semistable class for the given genus; the
    offending entry is named otherwise.
    """
    entries: list[tuple[int, NumClass]] = []
    for idx, (k, c) in enumerate(raw):
        if not isinstance(c, NumClass):
            c = NumClass(*c)
        if not is_semistable_class(genus, c):
            raise InvalidClassError(
                f"factor {idx}: {c} is not a semistable class at genus {genus}"
            )
        entries.append((int(k), c))
    entries.sort(key=lambda kc: (-kc[0],) + _slope_sort_key(kc[1]))
    merged: list[tuple[int, NumClass]] = []
    for k, c in entries:
        if merged:
            k0, c0 = merged[-1]
            if k0 == k and _slope_sort_key(c0) == _slope_sort_key(c):
                merged[-1] = (k0, c0 + c)
                continue
        merged.append((k, c))
    return FormalObject(tuple(merged), genus)


def signed_class(obj: FormalObject) -> NumClass:
    """Alternating-sum image of the object in the lattice."""
    total = NumClass(0, 0)
    for k, c in obj.factors:
        total = total + c if k % 2 == 0 else total - c
    return total


def concat(a: FormalObject, b: FormalObject) -> FormalObject:
    if a.genus != b.genus:
        raise MixedGenusError("cannot concatenate objects over different curves")
    return canonicalize(list(a.factors) + list(b.factors), a.genus)
