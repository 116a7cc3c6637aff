"""The universal cover of GL+(2,R) and its actions on stability points.

A lifted element is a pair (M, n): a matrix with det M > 0 plus an
integer winding.  The lift is the increasing function f with
f(phi + 1) = f(phi) + 1 whose value at 0 is theta(M) + 2n, where
theta(M) in (-1, 1] is arg(M e^{i pi 0}) / pi.  Windings are discrete
data: every operation that produces one checks that the float residue
is within 1e-9 of an even integer, escalates to 60-digit arithmetic on
the exact lifts of the stored floats if not, and refuses to guess
beyond that.

Central charges are stored as matrices whose ROWS are
(Re Z(1,0), Im Z(1,0)) and (Re Z(0,1), Im Z(0,1)); under this layout
the slope-stability charge at tau = beta + alpha*i is
[[beta, alpha], [-1, 0]] and the right action of a group element sends
M_Z to M_Z M^{-T}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BoundaryActionError,
    ChartDomainError,
    MixedGenusError,
    WindingAmbiguityError,
)
from .exact import INFINITY
from .numclass import CurveContext, NumClass
from .objects import FormalObject, canonicalize
from .stability import Boundary, Geometric, StabilityPoint, central_charge

Matrix = tuple[tuple[float, float], tuple[float, float]]

_WINDING_TOL = 1e-9


def _mat(rows) -> Matrix:
    (a, b), (c, d) = rows
    # +0.0 folds away negative zeros produced by adjugates
    return (
        (float(a) + 0.0, float(b) + 0.0),
        (float(c) + 0.0, float(d) + 0.0),
    )


def _det(m: Matrix) -> float:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _mul(m1: Matrix, m2: Matrix) -> Matrix:
    return _mat(
        (
            (
                m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0],
                m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1],
            ),
            (
                m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0],
                m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1],
            ),
        )
    )


def _inv(m: Matrix) -> Matrix:
    det = _det(m)
    if det == 0:
        raise ChartDomainError("matrix is singular")
    return _mat(
        (
            (m[1][1] / det, -m[0][1] / det),
            (-m[1][0] / det, m[0][0] / det),
        )
    )


def _transpose(m: Matrix) -> Matrix:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def _solve_mat(a: Matrix, b: Matrix) -> Matrix:
    """a^{-1} b, with products taken before the division.

    Term order matters: when b is a itself the numerators reproduce
    det(a) bit for bit, so the result is exactly the identity.
    """
    det = a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if det == 0:
        raise ChartDomainError("matrix is singular")
    return _mat(
        (
            (
                (a[1][1] * b[0][0] - a[0][1] * b[1][0]) / det,
                (a[1][1] * b[0][1] - a[0][1] * b[1][1]) / det,
            ),
            (
                (a[0][0] * b[1][0] - a[1][0] * b[0][0]) / det,
                (a[0][0] * b[1][1] - a[1][0] * b[0][1]) / det,
            ),
        )
    )


def _theta(m: Matrix) -> float:
    # image of the direction 0, i.e. of the first basis vector
    return math.atan2(m[1][0], m[0][0]) / math.pi


@dataclass(frozen=True)
class GroupElement:
    m: Matrix
    winding: int = 0

    def __post_init__(self):
        object.__setattr__(self, "m", _mat(self.m))
        object.__setattr__(self, "winding", int(self.winding))
        if not _det(self.m) > 0:
            raise ValueError(f"matrix must have positive determinant, got {self.m}")

    @property
    def theta(self) -> float:
        return _theta(self.m)

    @property
    def f0(self) -> float:
        return self.theta + 2 * self.winding


def identity() -> GroupElement:
    return GroupElement(((1.0, 0.0), (0.0, 1.0)), 0)


def f_eval(g: GroupElement, phi: float) -> float:
    """The lift f of g evaluated at phi.

    phi is reduced by its integer part (f commutes with +1), the image
    direction is read off with atan2, and the unique representative of
    that angle in [f(floor), f(floor)+1) is selected.  The half-unit gap
    between window length and angle period makes the branch selection
    insensitive to rounding.
    """
    phi = float(phi)
    pr = math.remainder(phi, 2.0)  # same direction, exactly
    c, s = math.cos(math.pi * pr), math.sin(math.pi * pr)
    x = g.m[0][0] * c + g.m[0][1] * s
    y = g.m[1][0] * c + g.m[1][1] * s
    psi = math.atan2(y, x) / math.pi
    lower = g.f0 + math.floor(phi)
    k = math.ceil((lower - psi) / 2 - _WINDING_TOL)
    return psi + 2 * k


def _mp_f_eval(m: Matrix, f0: Fraction, phi: Fraction):
    """f_eval on the exact rational lifts, at 60 significant digits."""
    import mpmath as mp

    x1 = mp.mpf(phi.numerator) / phi.denominator
    c, s = mp.cospi(x1), mp.sinpi(x1)
    x = c * m[0][0] + s * m[0][1]
    y = c * m[1][0] + s * m[1][1]
    psi = mp.atan2(y, x) / mp.pi
    lower = mp.mpf(f0.numerator) / f0.denominator + math.floor(phi)
    k = mp.ceil((lower - psi) / 2 - mp.mpf("1e-40"))
    return psi + 2 * k


def _settle_winding(r_float: float, escalate) -> int:
    """Round a half-residue to the winding integer, escalating if unsure."""
    n = round(r_float)
    if abs(r_float - n) <= _WINDING_TOL:
        return n
    import mpmath as mp

    with mp.workdps(60):
        r = escalate(mp)
        n = int(mp.nint(r))
        if abs(r - n) <= _WINDING_TOL:
            return n
    raise WindingAmbiguityError(
        "winding ambiguous at current precision: the lifted angle sits "
        f"{float(abs(r - n)):.3e} away from an even-integer offset"
    )


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    """Group law: matrices multiply, lifts compose as f1 after f2."""
    m = _mul(g1.m, g2.m)
    th = _theta(m)

    def escalate(mp):
        f0 = Fraction(g1.theta) + 2 * g1.winding
        phi = Fraction(g2.theta) + 2 * g2.winding
        y = _mp_f_eval(g1.m, f0, phi)
        return (y - mp.mpf(Fraction(th).numerator) / Fraction(th).denominator) / 2

    n = _settle_winding((f_eval(g1, g2.f0) - th) / 2, escalate)
    return GroupElement(m, n)


def invert(g: GroupElement) -> GroupElement:
    mi = _inv(g.m)
    thi = _theta(mi)

    def escalate(mp):
        f0 = Fraction(g.theta) + 2 * g.winding
        return -_mp_f_eval(g.m, f0, Fraction(thi)) / 2

    n = _settle_winding(-f_eval(g, thi) / 2, escalate)
    return GroupElement(mi, n)


def _unit_pi(x: float) -> tuple[float, float]:
    """(cos pi x, sin pi x), exact at half-integer x."""
    two = 2.0 * x
    if two == int(two):
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[int(two) & 3]
    return math.cos(math.pi * x), math.sin(math.pi * x)


def embed_c(lam: complex) -> GroupElement:
    """The scalar lam as a lifted element: f(phi) = phi + Re lam."""
    lam = complex(lam)
    scale = math.exp(-math.pi * lam.imag)
    u0, v0 = _unit_pi(lam.real)
    u, v = scale * u0, scale * v0
    g0 = GroupElement(((u, -v), (v, u)), 0)
    return GroupElement(g0.m, round((lam.real - g0.theta) / 2))


def charge_matrix(point: Geometric) -> Matrix:
    if not isinstance(point, Geometric):
        raise BoundaryActionError(
            "boundary central charges are rank one and carry no chart matrix"
        )
    z1 = central_charge(point, NumClass(1, 0))
    z2 = central_charge(point, NumClass(0, 1))
    return _mat(((z1.real, z1.imag), (z2.real, z2.imag)))


def from_central_charge(z1: complex, z2: complex, sky_phase: float, genus: int) -> Geometric:
    """Recover the geometric point with Z(1,0) = z1, Z(0,1) = z2.

    The modulus and the mod-2 residue of lambda are forced by
    e^{-i pi lambda} = -z2; the integer branch comes from the requested
    skyscraper phase 1 - Re lambda, and is cross-checked against z2.
    """
    z1, z2 = complex(z1), complex(z2)
    det = z1.real * z2.imag - z1.imag * z2.real
    if not det > 0:
        raise ChartDomainError("charge rows must be positively oriented")
    re_lam = 1.0 - float(sky_phase)
    im_lam = math.log(abs(z2)) / math.pi
    lam = complex(re_lam, im_lam)
    u0, v0 = _unit_pi(-re_lam)
    scale = math.exp(math.pi * im_lam)
    expected = complex(scale * u0, scale * v0)  # e^{-i pi lam}
    if abs(expected + z2) > 1e-9 * (1.0 + abs(z2)):
        raise ChartDomainError(
            "skyscraper phase is inconsistent with the degree-row charge"
        )
    tau = -z1 / z2
    return Geometric(lam, tau, CurveContext(genus))


def act(point: StabilityPoint, g: GroupElement) -> Geometric:
    """Right action on a geometric point.

    Boundary points are rigid under the full group (their orbit is the
    scalar orbit), so they are refused here; use act_c.
    """
    if isinstance(point, Boundary):
        raise BoundaryActionError(
            "boundary points carry only the scalar action; use act_c"
        )
    mz = _mul(charge_matrix(point), _transpose(_inv(g.m)))
    z1 = complex(mz[0][0], mz[0][1])
    z2 = complex(mz[1][0], mz[1][1])
    sky = f_eval(invert(g), 1.0 - point.lam.real)
    return from_central_charge(z1, z2, sky, point.genus)


def act_c(point: StabilityPoint, lam: complex) -> StabilityPoint:
    """The scalar action: lambda shifts, slicing data untouched."""
    lam = complex(lam)
    if isinstance(point, Geometric):
        return Geometric(point.lam + lam, point.tau, point.ctx)
    return Boundary(point.beta, point.variant, point.t, point.lam + lam, point.ctx)


def act_tensor(x, e: int):
    """Tensoring by a line bundle of classical degree e.

    Classes move by (r, d) -> (r, d + e r); points move their slope
    parameter, tau -> tau + e and beta -> beta + e.
    """
    e = int(e)
    if isinstance(x, NumClass):
        return NumClass(x.r, x.d + e * x.r)
    if isinstance(x, FormalObject):
        return canonicalize(
            [(k, NumClass(c.r, c.d + e * c.r)) for k, c in x.factors], x.genus
        )
    if isinstance(x, Geometric):
        return Geometric(x.lam, x.tau + e, x.ctx)
    if isinstance(x, Boundary):
        beta = x.beta if x.beta is INFINITY else x.beta + e
        return Boundary(beta, x.variant, x.t, x.lam, x.ctx)
    raise TypeError(f"cannot tensor {type(x).__name__}")


def chart_fwd(m) -> tuple[complex, complex]:
    """The chart GL+(2,R) -> C* x H.

    [[x1, x2], [x3, x4]]  ->  (1/(x4 + x3 i), (x1 - x2 i)/(x3 - x4 i)).
    """
    if isinstance(m, GroupElement):
        m = m.m
    m = _mat(m)
    if not _det(m) > 0:
        raise ChartDomainError("chart is defined on positive-determinant matrices")
    (x1, x2), (x3, x4) = m
    c = 1.0 / complex(x4, x3)
    w = complex(x1, -x2) / complex(x3, -x4)
    return c, w


def chart_inv(c: complex, w: complex) -> Matrix:
    c, w = complex(c), complex(w)
    if c == 0:
        raise ChartDomainError("first chart coordinate must be nonzero")
    if not w.imag > 0:
        raise ChartDomainError("second chart coordinate must lie in the upper half plane")
    u = 1.0 / c
    x4, x3 = u.real, u.imag
    v = w * complex(x3, -x4)
    return _mat(((v.real, -v.imag), (x3, x4)))


def solve_transitive(p1: Geometric, p2: Geometric) -> GroupElement:
    """The unique lifted element carrying p1 to p2.

    Solving a point against itself returns the exact identity: the fused
    a^{-1}b solve reproduces det(a)/det(a) = 1 entrywise.
    """
    if not (isinstance(p1, Geometric) and isinstance(p2, Geometric)):
        raise BoundaryActionError("transitivity holds on geometric points only")
    if p1.genus != p2.genus:
        raise MixedGenusError("points live on curves of different genus")
    m = _transpose(_inv(_solve_mat(charge_matrix(p1), charge_matrix(p2))))
    sky1 = 1.0 - p1.lam.real
    sky2 = 1.0 - p2.lam.real
    g0 = GroupElement(m, 0)

    def escalate(mp):
        y = _mp_f_eval(m, Fraction(g0.theta), Fraction(sky2))
        return (mp.mpf(Fraction(sky1).numerator) / Fraction(sky1).denominator - y) / 2

    n = _settle_winding((sky1 - f_eval(g0, sky2)) / 2, escalate)
    return GroupElement(m, n)
