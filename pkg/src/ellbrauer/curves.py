"""Weierstrass curves, Legendre parameters and the S3 action on them.

Coefficients may be Fractions (or ints), PAdicValues, or elements of a prime
field F_p created with ``sympy.GF(p)``; every formula uses only ring
operations, plus division where the caller asks for j or for a change of
coordinates that divides by 2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith.padic import PAdicValue, valuation
from .hilbert.quadratic import hilbert_two


class SingularCurveError(ArithmeticError):
    """The discriminant is not invertible."""


def _is_zero(x) -> bool:
    if isinstance(x, PAdicValue):
        return x.is_zero()
    return x == 0


def _normalize(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


def two_is_invertible(x) -> bool:
    """Whether 2 is a unit in the domain of the sample element x."""
    if isinstance(x, (Fraction, int, PAdicValue)):
        return True
    return not _is_zero(x * 0 + 2)


class Invariants(NamedTuple):
    b2: object
    b4: object
    b6: object
    b8: object
    c4: object
    c6: object
    disc: object
    j: object


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    @classmethod
    def from_ainvs(cls, ainvs, domain=None):
        """Build from the list [a1, a2, a3, a4, a6]; ``domain`` maps each entry."""
        ainvs = list(ainvs)
        if len(ainvs) != 5:
            raise ValueError("ainvs must have exactly five entries")
        conv = domain or _normalize
        return cls(*(conv(a) for a in ainvs))

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6
        return c4, c6

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def is_elliptic(self) -> bool:
        return not _is_zero(self.discriminant())

    def j_invariant(self):
        d = self.discriminant()
        if _is_zero(d):
            raise SingularCurveError("j-invariant of a singular curve")
        c4, _ = self.c_invariants()
        return c4 * c4 * c4 / d

    def invariants(self) -> Invariants:
        b2, b4, b6, b8 = self.b_invariants()
        c4, c6 = self.c_invariants()
        d = self.discriminant()
        j = None if _is_zero(d) else c4 * c4 * c4 / d
        return Invariants(b2, b4, b6, b8, c4, c6, d, j)

    def complete_square(self) -> "WeierstrassCurve":
        """Change y -> y - (a1 x + a3)/2, giving y^2 = x^3 + b2/4 x^2 + b4/2 x + b6/4."""
        if not two_is_invertible(self.a1):
            raise ValueError("completing the square needs 2 to be invertible")
        b2, b4, b6, _ = self.b_invariants()
        zero = self.a1 * 0
        return WeierstrassCurve(zero, b2 / 4, zero, b4 / 2, b6 / 4)


def invariants(curve: WeierstrassCurve) -> Invariants:
    return curve.invariants()


# -- Legendre curves ---------------------------------------------------------


@dataclass(frozen=True)
class LegendreParameter:
    """t with t, t - 1 and 2 invertible; the curve y^2 = x(x-1)(x-t)."""

    t: object

    def __post_init__(self):
        t = _normalize(self.t)
        object.__setattr__(self, "t", t)
        if _is_zero(t) or _is_zero(t - 1):
            raise ValueError("Legendre parameter must avoid 0 and 1")
        if not two_is_invertible(t):
            raise ValueError("level 2 structures need 2 to be invertible")

    def curve(self) -> WeierstrassCurve:
        t = self.t
        zero = t * 0
        return WeierstrassCurve(zero, -(1 + t), zero, t, zero)

    def j(self):
        t = self.t
        num = 256 * (t * t - t + 1) ** 3
        return num / (t * t * (t - 1) * (t - 1))


def legendre_discriminant(t) -> object:
    """16 t^2 (t-1)^2, checked against the discriminant of the expanded cubic."""
    if not isinstance(t, LegendreParameter):
        t = LegendreParameter(t)
    v = t.t
    d = 16 * v * v * (v - 1) * (v - 1)
    oracle = t.curve().discriminant()
    if not _is_zero(d - oracle):
        raise ArithmeticError("Legendre discriminant disagrees with the Weierstrass formula")
    return d


def legendre_from_roots(e1, e2, e3) -> LegendreParameter:
    """t = (e3 - e1)/(e2 - e1) for the curve y^2 = (x-e1)(x-e2)(x-e3)."""
    e1, e2, e3 = (_normalize(e) for e in (e1, e2, e3))
    if _is_zero(e1 - e2) or _is_zero(e1 - e3) or _is_zero(e2 - e3):
        raise ValueError("roots must be distinct")
    return LegendreParameter((e3 - e1) / (e2 - e1))


# -- S3 action on the Legendre parameter ---------------------------------------


def sigma(t):
    return (t - 1) / t


def tau(t):
    return 1 / t


# each group element as a word, applied right to left
S3_WORDS = {
    "id": (),
    "sigma": (sigma,),
    "sigma^2": (sigma, sigma),
    "tau": (tau,),
    "sigma*tau": (sigma, tau),
    "tau*sigma": (tau, sigma),
}


def act(label: str, t):
    for f in reversed(S3_WORDS[label]):
        t = f(t)
    return t


class OrbitPoint(NamedTuple):
    label: str
    value: object


class S3Orbit(NamedTuple):
    points: list
    degenerate: bool

    def values(self):
        return [p.value for p in self.points]


def s3_orbit(t) -> S3Orbit:
    """The six images of t under S3, labelled by group element.

    Orbits with fewer than six distinct values (t in {-1, 2, 1/2} or a root of
    t^2 - t + 1) keep all six entries and are flagged degenerate.
    """
    if not isinstance(t, LegendreParameter):
        t = LegendreParameter(t)
    v = t.t
    points = [OrbitPoint(lbl, act(lbl, v)) for lbl in S3_WORDS]
    if not _is_zero(sigma(sigma(sigma(v))) - v) or not _is_zero(tau(tau(v)) - v):
        raise ArithmeticError("S3 relations fail")
    if not _is_zero(act("tau*sigma", v) - act("sigma^2", tau(v))):
        raise ArithmeticError("tau sigma != sigma^2 tau")
    j0 = t.j()
    for p in points:
        if not _is_zero(LegendreParameter(p.value).j() - j0):
            raise ArithmeticError("j is not constant on the orbit")
    distinct = []
    for p in points:
        if not any(_is_zero(p.value - q) for q in distinct):
            distinct.append(p.value)
    return S3Orbit(points, len(distinct) < 6)


# -- local symbols at a 2-adic point ---------------------------------------------


def point_symbol_pair(curve: WeierstrassCurve) -> tuple[int, int]:
    """((-1, D)_2, (2, D)_2) for a curve over Q whose discriminant D is a 2-adic unit."""
    d = Fraction(curve.discriminant())
    if d == 0:
        raise SingularCurveError("curve is singular")
    if valuation(d, 2) != 0:
        raise ValueError("discriminant is not a 2-adic unit")
    return hilbert_two(-1, d), hilbert_two(2, d)
