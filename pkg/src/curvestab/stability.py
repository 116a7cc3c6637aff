"""Stability points on a curve and their numerical invariants.

Two kinds of points are modeled.  A *geometric* point is determined by a
scalar parameter ``lam`` (complex) and a point ``tau`` of the upper half
plane; its central charge is ``exp(-i*pi*lam) * (-d + tau*r)``.  A
*boundary* point is determined by a slope threshold ``beta`` (an exact
quadratic scalar, or infinity) together with a torsion-pair variant and
an optional label ``t`` in [0, 1]:

* the lower variant tilts at {slope >= beta} / {slope < beta},
* the upper variant tilts at {slope > beta} / {slope <= beta},
* ``t`` assigns a phase to the charge-zero classes (slope exactly beta)
  when such semistable classes exist; ``t = 1`` is only compatible with
  the lower variant and ``t = 0`` only with the upper variant.

Phases of boundary points are exact integers (or ``k + t``), decided by
exact comparisons; only geometric phases pass through ``atan2``.  With a
rational finite threshold and no label, a charge-zero class has no
well-defined phase and the query is refused rather than guessed.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DegenerateClassError,
    InvalidClassError,
    MixedGenusError,
)
from .exact import INFINITY, ExactReal
from .numclass import CurveContext, NumClass, is_semistable_class
from .objects import FormalObject


class Variant(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"


@dataclass(frozen=True)
class Geometric:
    lam: complex
    tau: complex
    ctx: CurveContext

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "tau", complex(self.tau))
        if not self.tau.imag > 0:
            raise ValueError(f"tau must lie in the upper half plane, got {self.tau}")

    @property
    def genus(self) -> int:
        return self.ctx.genus


@dataclass(frozen=True)
class Boundary:
    beta: object  # ExactReal or INFINITY
    variant: Variant
    t: Fraction | None
    lam: complex
    ctx: CurveContext

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        if self.beta is not INFINITY and not isinstance(self.beta, ExactReal):
            object.__setattr__(self, "beta", ExactReal(self.beta))
        if self.t is not None:
            t = Fraction(self.t)
            if not 0 <= t <= 1:
                raise ValueError("t must lie in [0, 1]")
            if t == 0 and self.variant is not Variant.UPPER:
                raise ValueError("t = 0 labels the upper-variant tilt")
            if t > 0 and self.variant is not Variant.LOWER:
                raise ValueError("t > 0 labels the lower-variant tilt")
            if not _has_charge_zero_classes(self.genus, self.beta):
                raise ValueError(
                    "t-label given but no semistable class has charge zero here"
                )
            object.__setattr__(self, "t", t)

    @property
    def genus(self) -> int:
        return self.ctx.genus


StabilityPoint = Geometric | Boundary


def _has_charge_zero_classes(genus: int, beta) -> bool:
    if beta is INFINITY:
        return True  # torsion classes are killed by the rank charge
    if genus >= 1:
        return beta.is_rational
    return beta.is_integer


# -- constructors ---------------------------------------------------------------


def geometric(lam, tau, genus: int) -> Geometric:
    return Geometric(lam, tau, CurveContext(genus))


def boundary_lower(beta, genus: int, t=None, lam=0.0) -> Boundary:
    if t is not None:
        t = Fraction(t)
    return Boundary(beta, Variant.LOWER, t, lam, CurveContext(genus))


def boundary_upper(beta, genus: int, t=None, lam=0.0) -> Boundary:
    if t is not None:
        t = Fraction(t)
    return Boundary(beta, Variant.UPPER, t, lam, CurveContext(genus))


def boundary_with_label(beta, t, genus: int, lam=0.0) -> Boundary:
    """The labeled family: lower tilt for t > 0, upper tilt for t = 0."""
    t = Fraction(t)
    variant = Variant.UPPER if t == 0 else Variant.LOWER
    return Boundary(beta, variant, t, lam, CurveContext(genus))


# -- phases and charges ----------------------------------------------------------


@dataclass(frozen=True)
class PhaseValue:
    """A phase; ``exact_integer`` is set when the value is exactly integral."""

    value: float
    exact_integer: int | None = None


def central_charge(point: StabilityPoint, c: NumClass) -> complex:
    """Charge of a class.  Exact zeros stay exactly zero."""
    scale = cmath.exp(-1j * math.pi * point.lam)
    if isinstance(point, Geometric):
        return scale * (-c.d + point.tau * c.r)
    if point.beta is INFINITY:
        if c.r == 0:
            return 0j
        return scale * c.r
    w = point.beta * c.r - c.d
    if w.sign() == 0:
        return 0j
    return scale * float(w)


def _boundary_offset(point: Boundary, c: NumClass, slicing_level: bool) -> Fraction:
    """Phase of the class at shift 0, as an exact number in [0, 1].

    ``slicing_level`` answers from the slicing alone (used by distances,
    where the torsion pair always decides); phase queries on charge-zero
    classes without a label are refused instead.
    """
    if point.beta is INFINITY:
        if c.r > 0:
            return Fraction(0)
        if point.t is not None:
            return point.t
        return Fraction(1) if point.variant is Variant.LOWER else Fraction(0)
    if c.r == 0:
        return Fraction(1)
    diff = point.beta * c.r - c.d  # positive when slope < beta
    s = diff.sign()
    if s < 0:
        return Fraction(1)
    if s > 0:
        return Fraction(0)
    if point.t is not None:
        return point.t
    if slicing_level:
        return Fraction(1) if point.variant is Variant.LOWER else Fraction(0)
    raise DegenerateClassError(
        f"class {c} has charge zero at threshold {point.beta}; "
        "this point carries no t-label, so its phase is not defined"
    )


def phase(point: StabilityPoint, k: int, c: NumClass) -> PhaseValue:
    """Phase of the class c placed at shift k."""
    if not is_semistable_class(point.genus, c):
        raise InvalidClassError(f"{c} is not a semistable class at genus {point.genus}")
    re_lam = point.lam.real
    if isinstance(point, Geometric):
        if c.r == 0:
            return _exact_phase(Fraction(k + 1), re_lam)
        mu = Fraction(c.d, c.r)
        phi0 = math.atan2(point.tau.imag, point.tau.real - mu) / math.pi
        return PhaseValue(k + phi0 - re_lam, None)
    offset = _boundary_offset(point, c, slicing_level=False)
    return _exact_phase(k + offset, re_lam)


def _exact_phase(q: Fraction, re_lam: float) -> PhaseValue:
    """Phase q - re_lam, detecting exact integrality through the binary
    expansion of re_lam rather than through float arithmetic."""
    qq = q - Fraction(re_lam)
    if qq.denominator == 1:
        return PhaseValue(float(qq), int(qq))
    return PhaseValue(float(q) - re_lam, None)


# -- Harder-Narasimhan data -------------------------------------------------------


@dataclass(frozen=True)
class HNFactor:
    phase: PhaseValue
    cls: NumClass
    shift: int


@dataclass(frozen=True)
class HNResult:
    factors: tuple[HNFactor, ...]


def _geometric_sort_key(k: int, c: NumClass):
    # exact phase order: shift, then slope with torsion on top
    if c.r == 0:
        return (k, 1, Fraction(0))
    return (k, 0, Fraction(c.d, c.r))


def hn(point: StabilityPoint, obj: FormalObject) -> HNResult:
    """Phases of the semistable pieces, merged and strictly ordered.

    Factors that land on a common phase are merged by adding classes; a
    merged factor records the largest contributing shift.  For geometric
    points distinct canonical factors always have distinct phases, so the
    result mirrors the canonical form.
    """
    if point.genus != obj.genus:
        raise MixedGenusError("object and stability point live on different curves")
    if isinstance(point, Geometric):
        ordered = sorted(
            obj.factors, key=lambda kc: _geometric_sort_key(*kc), reverse=True
        )
        factors = tuple(
            HNFactor(phase(point, k, c), c, k) for k, c in ordered
        )
        return HNResult(factors)
    groups: dict[Fraction, tuple[int, NumClass]] = {}
    for k, c in obj.factors:
        key = k + _boundary_offset(point, c, slicing_level=False)
        if key in groups:
            k0, c0 = groups[key]
            groups[key] = (max(k0, k), c0 + c)
        else:
            groups[key] = (k, c)
    re_lam = point.lam.real
    factors = []
    for key in sorted(groups, reverse=True):
        k, c = groups[key]
        factors.append(HNFactor(_exact_phase(key, re_lam), c, k))
    return HNResult(tuple(factors))


def mass(point: StabilityPoint, obj: FormalObject) -> float:
    """Sum of charge magnitudes over the filtration pieces.

    Pieces merged at a common phase have aligned charges, so the sum over
    the object's own factors computes the same number; charge-zero
    factors contribute exactly zero.
    """
    hn(point, obj)  # validates, and surfaces undefined-phase errors
    return sum(abs(central_charge(point, c)) for _, c in obj.factors)


# -- classification ----------------------------------------------------------------


class Classification(enum.Enum):
    STABILITY_LOCALLY_FINITE = "stability_locally_finite"
    STABILITY_NOT_LOCALLY_FINITE = "stability_not_locally_finite"
    WEAK_ONLY = "weak_only"


def classify(genus: int, beta) -> Classification:
    """What the plain pair at a boundary threshold is.

    Positive genus: an irrational threshold gives a stability condition
    that fails local finiteness; otherwise charge-zero classes exist and
    the pair is only a weak (pre-)stability condition.  Genus zero: every
    non-integer finite threshold gives an honest locally-finite stability
    condition, integer and infinite thresholds are weak only.
    """
    if beta is not INFINITY and not isinstance(beta, ExactReal):
        beta = ExactReal(beta)
    if genus >= 1:
        if beta is INFINITY or beta.is_rational:
            return Classification.WEAK_ONLY
        return Classification.STABILITY_NOT_LOCALLY_FINITE
    if beta is INFINITY or beta.is_integer:
        return Classification.WEAK_ONLY
    return Classification.STABILITY_LOCALLY_FINITE
