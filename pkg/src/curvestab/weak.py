"""Weak see-saw and trichotomy checks over numerical short exact sequences.

A numerical SES is a triple of classes (sub, total, quot) with
total = sub + quot, all three presentable by the heart of the point
being checked.  Phase labels are taken in (0, 1]: any class with
nonzero charge labels 1 exactly -- the heart's charges fill a ray --
while a charge-zero class labels t + k, where k records whether the
class enters the heart unshifted or through the shift by one.

The enumerated corpus is sorted by a deterministic key, so the first
violating sequence (the reported witness) is reproducible run to run.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingPhaseLabelError
from .exact import INFINITY
from .numclass import NumClass
from .stability import Boundary, Geometric, StabilityPoint, Variant, central_charge


class Rule(enum.Enum):
    CLSY = "clsy"
    STRICT_TRICHOTOMY = "strict_trichotomy"
    REGULARITY = "regularity"
    NONTRIVIAL_Z = "nontrivial_z"


@dataclass(frozen=True)
class NumericalSES:
    sub: NumClass
    total: NumClass
    quot: NumClass

    def __post_init__(self):
        if self.sub + self.quot != self.total:
            raise ValueError("total class must be the sum of sub and quot")


@dataclass(frozen=True)
class AxiomVerdict:
    passed: bool
    witness: NumericalSES | None
    violated_rule: Rule | None


def heart_admissible(point: StabilityPoint, c: NumClass) -> bool:
    """Whether c is the class of an object of the heart at this point."""
    r, d = c.r, c.d
    if r == 0 and d == 0:
        return False
    if isinstance(point, Geometric):
        return r > 0 or (r == 0 and d > 0)
    beta = point.beta
    lower = point.variant is Variant.LOWER
    if beta is INFINITY:
        if lower:
            return r < 0 or (r == 0 and d > 0)
        return r < 0 or (r == 0 and d < 0)
    if point.genus >= 1:
        if beta.is_rational:
            lhs, rhs = beta.a.denominator * d, beta.a.numerator * r
            if lower:
                return lhs > rhs or (r > 0 and lhs == rhs)
            return lhs > rhs or (r < 0 and lhs == rhs)
        return (beta * r - d).sign() < 0
    # genus 0: the tilt walls sit at the adjacent integers
    fl = beta.floor()
    if lower:
        m_t = fl if beta == fl else fl + 1  # least integer >= beta
    else:
        m_t = fl + 1  # least integer > beta
    m_f = m_t - 1
    if r >= 0:
        return d >= r * m_t and (r > 0 or d > 0)
    return d >= r * m_f


def _presentation_shift(c: NumClass) -> int:
    # which side of the tilt a charge-zero class enters the heart from
    return 0 if c.r > 0 or (c.r == 0 and c.d > 0) else 1


def _phase_label(point: StabilityPoint, c: NumClass):
    """Label in (0, 1]: float for geometric points, exact for walls."""
    if isinstance(point, Geometric):
        if c.r == 0:
            return 1.0
        mu = float(Fraction(c.d, c.r))
        return math.atan2(point.tau.imag, point.tau.real - mu) / math.pi
    if point.beta is INFINITY:
        zero = c.r == 0
    else:
        zero = (point.beta * c.r - c.d).sign() == 0
    if not zero:
        return Fraction(1)
    if point.t is None:
        raise MissingPhaseLabelError(
            f"class {c} has charge zero at this wall and the point "
            "carries no t-label"
        )
    return point.t + _presentation_shift(c)


def _charge_size_key(point: StabilityPoint, c: NumClass):
    if isinstance(point, Geometric):
        return abs(central_charge(point, c))
    if point.beta is INFINITY:
        return abs(c.r)
    return abs(point.beta * c.r - c.d)


def _class_key(point: StabilityPoint, c: NumClass):
    return (_presentation_shift(c), _charge_size_key(point, c), c.r, c.d)


def enumerate_ses(point: StabilityPoint, rank_bound: int, deg_bound: int) -> list[NumericalSES]:
    """Every numerical SES of heart classes within the given box.

    Bounds constrain all three classes: |rank| <= rank_bound and
    |degree| <= deg_bound for sub, quot, and total alike.
    """
    rb, db = int(rank_bound), int(deg_bound)
    admissible = [
        NumClass(r, d)
        for r in range(-rb, rb + 1)
        for d in range(-db, db + 1)
        if heart_admissible(point, NumClass(r, d))
    ]
    out = []
    for sub in admissible:
        for quot in admissible:
            total = sub + quot
            if abs(total.r) > rb or abs(total.d) > db:
                continue
            if not heart_admissible(point, total):
                continue
            out.append(NumericalSES(sub, total, quot))
    out.sort(key=lambda s: (_class_key(point, s.sub), _class_key(point, s.quot)))
    return out


def check_clsy(point: StabilityPoint, corpus: list[NumericalSES]) -> AxiomVerdict:
    """The see-saw comparison: labels run monotonely along each SES."""
    for ses in corpus:
        l1 = _phase_label(point, ses.sub)
        l0 = _phase_label(point, ses.total)
        l2 = _phase_label(point, ses.quot)
        if not (l1 >= l0 >= l2 or l1 <= l0 <= l2):
            return AxiomVerdict(False, ses, Rule.CLSY)
    return AxiomVerdict(True, None, None)


def check_strict_weak(point: StabilityPoint, corpus: list[NumericalSES], *, _charge=central_charge) -> AxiomVerdict:
    """Strict trichotomy: each SES compares all-<, all->, or all-=.

    Requires a nontrivial central charge first; a zero map trivially
    satisfies the comparisons and must be rejected rather than passed.
    """
    if all(
        _charge(point, c) == 0 for c in (NumClass(1, 0), NumClass(0, 1))
    ):
        return AxiomVerdict(False, None, Rule.NONTRIVIAL_Z)
    for ses in corpus:
        l1 = _phase_label(point, ses.sub)
        l0 = _phase_label(point, ses.total)
        l2 = _phase_label(point, ses.quot)
        if not (l1 > l0 > l2 or l1 < l0 < l2 or l1 == l0 == l2):
            return AxiomVerdict(False, ses, Rule.STRICT_TRICHOTOMY)
    return AxiomVerdict(True, None, None)


def check_regular(point: StabilityPoint, *, _admissible=heart_admissible) -> AxiomVerdict:
    """Regularity: the zero class is not presented by the heart."""
    if _admissible(point, NumClass(0, 0)):
        return AxiomVerdict(False, None, Rule.REGULARITY)
    return AxiomVerdict(True, None, None)
