"""Exact scalars of the form a + b*sqrt(n) with rational a, b.

All sign, order, and branch decisions in the package are made on these
values exactly; conversion to binary64 happens only at the last step of
a numeric computation (``FLOAT_TOLERANCE`` is the package-wide tolerance
for anything that had to pass through a transcendental function).

A single computation lives inside one quadratic extension: combining two
scalars whose radicands are distinct nonzero integers raises
:class:`MixedRadicalError` instead of silently approximating.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

from .errors import MixedRadicalError

#: Global tolerance for values that passed through binary64 transcendentals.
FLOAT_TOLERANCE = 1e-12

_PRIMES_CACHE: list[int] = [2, 3, 5, 7, 11, 13]


def _square_part(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s*s*m and m squarefree."""
    if n in (0, 1):
        return 1, n
    s, m = 1, n
    p = 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            s *= p
        p += 1 if p == 2 else 2
    return s, m


def _sign_fraction(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class ExactReal:
    """a + b*sqrt(n) with a, b rational and n a squarefree integer >= 0.

    The representation is canonical: n == 0 whenever b == 0, perfect-square
    radicands are folded into the rational part, and square factors of n are
    pulled into b.  Comparisons are exact (no floating point is involved).
    """

    __slots__ = ("a", "b", "n")

    def __init__(self, a=0, b=0, n: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if n < 0:
            raise ValueError("radicand must be nonnegative")
        if b == 0:
            n = 0
        else:
            s, m = _square_part(int(n))
            if m in (0, 1):
                a += b * s * m  # sqrt(0) = 0, sqrt(s^2) = s
                b = Fraction(0)
                n = 0
            else:
                b *= s
                n = m
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", int(n))

    def __setattr__(self, key, value):  # immutable
        raise AttributeError("ExactReal is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def sqrt(cls, n: int) -> "ExactReal":
        return cls(0, 1, n)

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, ExactReal):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other)
        return None

    def _join(self, other: "ExactReal") -> int:
        """Common radicand for an exact operation, or raise."""
        if self.n == 0:
            return other.n
        if other.n == 0 or other.n == self.n:
            return self.n
        raise MixedRadicalError(
            f"cannot combine sqrt({self.n}) with sqrt({other.n}) exactly"
        )

    # -- predicates ------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def sign(self) -> int:
        """Exact sign in {-1, 0, 1}."""
        if self.b == 0:
            return _sign_fraction(self.a)
        if self.a == 0:
            return _sign_fraction(self.b)
        sa, sb = _sign_fraction(self.a), _sign_fraction(self.b)
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 * n
        lhs, rhs = self.a * self.a, self.b * self.b * self.n
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def floor(self) -> int:
        """Exact floor.  Terminates because sqrt(n) is irrational for b != 0."""
        if self.b == 0:
            return math.floor(self.a)
        bits = 32
        while True:
            root = math.isqrt(self.n << (2 * bits))
            lo = Fraction(root, 1 << bits)
            hi = Fraction(root + 1, 1 << bits)
            if self.b > 0:
                low, high = self.a + self.b * lo, self.a + self.b * hi
            else:
                low, high = self.a + self.b * hi, self.a + self.b * lo
            fl, fh = math.floor(low), math.floor(high)
            if fl == fh:
                return fl
            bits *= 2

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self._join(other)
        return ExactReal(self.a + other.a, self.b + other.b, n)

    __radd__ = __add__

    def __neg__(self):
        return ExactReal(-self.a, -self.b, self.n)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self._join(other)
        a = self.a * other.a + self.b * other.b * n
        b = self.a * other.b + self.b * other.a
        return ExactReal(a, b, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self._join(other)
        denom = other.a * other.a - other.b * other.b * n
        if denom == 0:
            if other.a == 0 and other.b == 0:
                raise ZeroDivisionError("division by zero ExactReal")
            # a^2 == b^2 n with n squarefree and b != 0 forces a = b = 0
            raise ZeroDivisionError("division by zero ExactReal")
        num = self * ExactReal(other.a, -other.b, n)
        return ExactReal(num.a / denom, num.b / denom, n)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        try:
            return (self - other).sign() == 0
        except MixedRadicalError:
            # sqrt(m) != q + r sqrt(n) for distinct squarefree m, n
            return False

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    # -- conversion ------------------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.n)

    def __repr__(self) -> str:
        if self.b == 0:
            return f"ExactReal({self.a})"
        return f"ExactReal({self.a} + {self.b}*sqrt({self.n}))"


class _Infinity:
    """The single point at infinity of the compactified slope line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("curvestab-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITY = _Infinity()


def parse_exact(text: str):
    """Parse the command-line scalar grammar.

    Accepted forms: ``p/q``, ``p/q+r/s*sqrt:n`` (also with ``-``),
    ``r/s*sqrt:n``, ``sqrt:n``, and ``inf``.  Returns an
    :class:`ExactReal` or :data:`INFINITY`.
    """
    s = text.strip().replace(" ", "")
    if s in ("inf", "+inf", "oo"):
        return INFINITY
    if not s:
        raise ValueError("empty exact scalar")
    if "sqrt:" not in s:
        return ExactReal(Fraction(s))
    head, _, radicand = s.partition("sqrt:")
    try:
        n = int(radicand)
    except ValueError as exc:
        raise ValueError(f"bad radicand in {text!r}") from exc
    if head.endswith("*"):
        head = head[:-1]
        # split off the coefficient of the radical: last top-level '+'/'-'
        cut = -1
        for i in range(len(head) - 1, 0, -1):
            if head[i] in "+-" and head[i - 1] not in "+-*/":
                cut = i
                break
        if cut == -1:
            a_text, b_text = "0", head
        else:
            a_text, b_text = head[:cut], head[cut:]
        if not b_text or b_text in "+-":
            b_text += "1"
        return ExactReal(Fraction(a_text), Fraction(b_text), n)
    if head in ("", "+"):
        return ExactReal(0, 1, n)
    if head == "-":
        return ExactReal(0, -1, n)
    if head.endswith("+"):
        return ExactReal(Fraction(head[:-1]), 1, n)
    if head.endswith("-"):
        return ExactReal(Fraction(head[:-1]), -1, n)
    raise ValueError(f"cannot parse exact scalar {text!r}")


def format_exact(value) -> str:
    """Inverse of :func:`parse_exact` (canonical spelling)."""
    if value is INFINITY:
        return "inf"
    if value.b == 0:
        return str(value.a)
    b = value.b
    tail = f"sqrt:{value.n}" if abs(b) == 1 else f"{abs(b)}*sqrt:{value.n}"
    sign = "-" if b < 0 else ("" if value.a == 0 else "+")
    head = "" if value.a == 0 else str(value.a)
    return f"{head}{sign}{tail}"
