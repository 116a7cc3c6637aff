"""Slicing pseudometric, projective mass embedding, global dimension.

The distance between two points is the sup over slicing directions of
the phase discrepancy.  Directions are slopes in Q union {infinity}
(integers union {infinity} in genus zero); the sup is evaluated on a
finite candidate set that provably contains the extremes: critical
slopes of the phase gap for geometric pairs, the slopes at and on
either side of each wall for boundary points, and the torsion
direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenusZeroError, MixedGenusError, MixedRadicalError
from .exact import FLOAT_TOLERANCE, INFINITY, ExactReal
from .numclass import NumClass
from .objects import canonicalize
from .stability import (
    Boundary,
    Geometric,
    StabilityPoint,
    Variant,
    _boundary_offset,
    mass,
)


@dataclass(frozen=True)
class DirectionSet:
    """Slicing directions realized by semistable classes at a genus."""

    genus: int

    def is_realizable(self, mu) -> bool:
        if mu is INFINITY:
            return True
        if self.genus >= 1:
            return True
        return Fraction(mu).denominator == 1

    def witness_class(self, mu) -> NumClass:
        if mu is INFINITY:
            return NumClass(0, 1)
        mu = Fraction(mu)
        if self.genus == 0:
            if mu.denominator != 1:
                raise ValueError(f"slope {mu} has no semistable class at genus 0")
            return NumClass(1, mu.numerator)
        return NumClass(mu.denominator, mu.numerator)


@dataclass(frozen=True)
class DistanceResult:
    value: float
    direction: object  # Fraction | INFINITY | float: the extremal direction
    witness: NumClass | None

    def __float__(self) -> float:
        return self.value


def _arg_part(tau: complex, mu: float) -> float:
    """Phase in (0,1) of a slope-mu class at tau, shift and lambda stripped."""
    return math.atan2(tau.imag, tau.real - mu) / math.pi


def _pick(cands: list[tuple[object, float]]) -> tuple[object, float]:
    best = None
    for direction, gap in cands:
        if best is None or abs(gap) > abs(best[1]):
            best = (direction, gap)
    return best


def _dist_gg(p1: Geometric, p2: Geometric, genus: int) -> DistanceResult:
    b1, a1 = p1.tau.real, p1.tau.imag
    b2, a2 = p2.tau.real, p2.tau.imag
    dl = p1.lam.real - p2.lam.real

    def gap(mu: float) -> float:
        return _arg_part(p1.tau, mu) - _arg_part(p2.tau, mu) - dl

    cands: list[tuple[object, float]] = [(INFINITY, -dl)]
    # critical slopes of the gap: alpha1((mu-b2)^2+a2^2) = alpha2((mu-b1)^2+a1^2)
    qa = a1 - a2
    qb = -2.0 * (a1 * b2 - a2 * b1)
    qc = a1 * (b2 * b2 + a2 * a2) - a2 * (b1 * b1 + a1 * a1)
    roots: list[float] = []
    if qa != 0.0:
        disc = max(qb * qb - 4.0 * qa * qc, 0.0)
        sq = math.sqrt(disc)
        roots = [(-qb - sq) / (2.0 * qa), (-qb + sq) / (2.0 * qa)]
    elif qb != 0.0:
        roots = [-qc / qb]
    for root in roots:
        if genus >= 1:
            cands.append((root, gap(root)))
        else:
            for m in {math.floor(root), math.ceil(root)}:
                cands.append((Fraction(m), gap(float(m))))
    direction, value = _pick(cands)
    ds = DirectionSet(genus)
    witness = None
    if direction is INFINITY or isinstance(direction, Fraction):
        witness = ds.witness_class(direction)
    return DistanceResult(abs(value), direction, witness)


def _torsion_offset(bd: Boundary) -> Fraction:
    return _boundary_offset(bd, NumClass(0, 1), slicing_level=True)


def _dist_gb(geo: Geometric, bd: Boundary, genus: int) -> DistanceResult:
    dl = geo.lam.real - bd.lam.real
    ds = DirectionSet(genus)
    if bd.beta is INFINITY:
        te = float(_torsion_offset(bd))
        cands = [
            (INFINITY, abs(1.0 - te - dl)),  # torsion against torsion
            (INFINITY, abs(dl)),             # slope -> -infinity limit
            (INFINITY, abs(1.0 - dl)),       # slope -> +infinity limit
        ]
        direction, value = _pick(cands)
        return DistanceResult(value, direction, NumClass(0, 1))
    bf = float(bd.beta)
    x = _arg_part(geo.tau, bf)
    if genus >= 1:
        # below beta the wall side contributes 0, above it 1; the sup is
        # approached from one side or the other of the wall
        value = max(x - dl, 1.0 - x + dl)
        return DistanceResult(value, bf, None)
    # genus 0: integer directions around the wall, plus torsion
    fl = bd.beta.floor()
    below = fl - 1 if bd.beta == fl else fl
    above = fl + 1
    cands = [
        (Fraction(below), _arg_part(geo.tau, float(below)) - dl),
        (Fraction(above), _arg_part(geo.tau, float(above)) - dl - 1.0),
        (INFINITY, -dl),
    ]
    if bd.beta == fl:
        te = float(_boundary_offset(bd, NumClass(1, fl), slicing_level=True))
        cands.append((Fraction(fl), _arg_part(geo.tau, float(fl)) - dl - te))
    direction, value = _pick(cands)
    return DistanceResult(abs(value), direction, ds.witness_class(direction))


def _rational_between(lo: ExactReal, hi: ExactReal) -> Fraction:
    """Some rational strictly between lo and hi, by denominator doubling."""
    n = 1
    while ((hi - lo) * n - 1).sign() <= 0:
        n *= 2
    q = Fraction((lo * n).floor() + 1, n)
    return q


def _dist_bb(p1: Boundary, p2: Boundary, genus: int) -> DistanceResult:
    dl = p1.lam.real - p2.lam.real
    ds = DirectionSet(genus)

    def gap_at(mu) -> float:
        cls = ds.witness_class(mu)
        s1 = _boundary_offset(p1, cls, slicing_level=True)
        s2 = _boundary_offset(p2, cls, slicing_level=True)
        return float(s1 - s2) - dl

    dirs: list[object] = [INFINITY]
    finite = [p.beta for p in (p1, p2) if p.beta is not INFINITY]
    if len(finite) == 2 and finite[0].n and finite[1].n and finite[0].n != finite[1].n:
        raise MixedRadicalError(
            f"cannot separate walls over distinct radicands "
            f"{finite[0].n} and {finite[1].n}"
        )
    for bd in (p1, p2):
        if bd.beta is INFINITY:
            continue
        if genus >= 1 and bd.beta.is_rational:
            dirs.append(bd.beta.a)
        elif genus == 0 and bd.beta.is_integer:
            dirs.append(Fraction(bd.beta.floor()))
    if finite:
        lo = min(finite)
        hi = max(finite)
        dirs.append(Fraction(lo.floor() - 1))
        dirs.append(Fraction(hi.floor() + 2))
        if lo != hi:
            if genus >= 1:
                dirs.append(_rational_between(lo, hi))
            else:
                m = lo.floor() + 1
                if hi > m:
                    dirs.append(Fraction(m))
    else:
        dirs.append(Fraction(0))
    seen = set()
    cands = []
    for mu in dirs:
        key = "inf" if mu is INFINITY else mu
        if key in seen:
            continue
        seen.add(key)
        cands.append((mu, gap_at(mu)))
    direction, value = _pick(cands)
    return DistanceResult(abs(value), direction, ds.witness_class(direction))


def slicing_distance(p1: StabilityPoint, p2: StabilityPoint) -> DistanceResult:
    """Sup over slicing directions of the phase discrepancy.

    A pseudometric: scalar shifts by purely imaginary lambda move
    nothing, everything else separates points.
    """
    if p1.genus != p2.genus:
        raise MixedGenusError("points live on curves of different genus")
    genus = p1.genus
    if isinstance(p1, Geometric) and isinstance(p2, Geometric):
        return _dist_gg(p1, p2, genus)
    if isinstance(p1, Geometric):
        return _dist_gb(p1, p2, genus)
    if isinstance(p2, Geometric):
        return _dist_gb(p2, p1, genus)
    return _dist_bb(p1, p2, genus)


@dataclass(frozen=True)
class ProjectiveMassPoint:
    """A point of the mass cone, scaled so its first nonzero entry is 1."""

    coords: tuple[float, ...]

    def __post_init__(self):
        coords = tuple(float(c) for c in self.coords)
        pivot = next((c for c in coords if c != 0.0), None)
        if pivot is None:
            raise ValueError("all mass coordinates vanish")
        object.__setattr__(self, "coords", tuple(c / pivot for c in coords))

    def projectively_equal(self, other: "ProjectiveMassPoint", tol: float = FLOAT_TOLERANCE) -> bool:
        return len(self.coords) == len(other.coords) and all(
            abs(a - b) <= tol for a, b in zip(self.coords, other.coords)
        )


def _pm_classes(genus: int) -> tuple[NumClass, NumClass, NumClass]:
    # skyscraper, structure sheaf, structure sheaf twisted down once
    return NumClass(0, 1), NumClass(1, 1 - genus), NumClass(1, -genus)


def pm_embed(point: StabilityPoint) -> ProjectiveMassPoint:
    """Masses of the three probe classes, projectivized."""
    genus = point.genus
    coords = tuple(
        mass(point, canonicalize([(0, c)], genus)) for c in _pm_classes(genus)
    )
    return ProjectiveMassPoint(coords)


def pm_boundary_limit(beta: ExactReal, genus: int = 1) -> ProjectiveMassPoint:
    """Closed-form mass coordinates on the wall, genus one only."""
    if genus != 1:
        raise ValueError("closed-form wall masses are specific to genus 1")
    if beta is INFINITY:
        return ProjectiveMassPoint((0.0, 1.0, 1.0))
    bf = float(beta)
    return ProjectiveMassPoint((1.0, abs(bf), abs(bf + 1.0)))


@dataclass(frozen=True)
class GldimResult:
    lower: float
    upper: float

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> float:
        if not self.exact:
            raise ValueError("global dimension is only bracketed at this point")
        return self.lower


def gldim(point: StabilityPoint) -> GldimResult:
    """Global dimension: exactly 1 at genus 1, exactly 2 on higher-genus
    walls, and a bracket in (1, 2] at higher-genus geometric points."""
    g = point.genus
    if g == 0:
        raise GenusZeroError("global dimension collapses below 1 at genus 0")
    if g == 1:
        return GldimResult(1.0, 1.0)
    if isinstance(point, Boundary):
        return GldimResult(2.0, 2.0)
    x_low = _arg_part(point.tau, float(1 - g))
    x_high = _arg_part(point.tau, float(g - 1))
    return GldimResult(max(1.0, 1.0 + (x_high - x_low)), 2.0)
