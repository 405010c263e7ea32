"""The local field Q_3(zeta_3) in the basis 1, zeta.

An element is a + b*zeta with 3-adic coefficients.  Since zeta^2 = -1 - zeta,
products and norms are two-term formulas, and the valuation with respect to
pi = 1 - zeta is the 3-adic valuation of the norm (the extension is totally
ramified of degree 2).
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .padic import InsufficientPrecisionError, PAdicValue

P = 3


@dataclass(frozen=True)
class ZetaThreeLocal:
    a: PAdicValue
    b: PAdicValue

    @classmethod
    def from_rationals(cls, a, b=0, prec: int = 6) -> "ZetaThreeLocal":
        """a + b*zeta with each coefficient known to ``prec`` 3-adic digits."""
        return cls(PAdicValue.from_rational(a, P, prec), PAdicValue.from_rational(b, P, prec))

    @classmethod
    def one(cls, prec: int = 6):
        return cls.from_rationals(1, 0, prec)

    @classmethod
    def zeta(cls, prec: int = 6):
        return cls.from_rationals(0, 1, prec)

    @classmethod
    def pi(cls, prec: int = 6):
        return cls.from_rationals(1, -1, prec)

    def _coerce(self, other):
        if isinstance(other, ZetaThreeLocal):
            return other
        if isinstance(other, PAdicValue):
            return ZetaThreeLocal(other, PAdicValue.zero(P, other.absprec))
        if isinstance(other, (int, Rational)):
            n = self.coeff_absprec() + 2
            return ZetaThreeLocal.from_rationals(Fraction(other), 0, max(n, 1))
        return NotImplemented

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ZetaThreeLocal(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return ZetaThreeLocal(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.a, self.b, o.a, o.b
        bd = b * d
        return ZetaThreeLocal(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conj(self):
        # zeta -> zeta^2 = -1 - zeta
        return ZetaThreeLocal(self.a - self.b, -self.b)

    def norm(self) -> PAdicValue:
        a, b = self.a, self.b
        return a * a - a * b + b * b

    def trace(self) -> PAdicValue:
        return 2 * self.a - self.b

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, PAdicValue)):
            return ZetaThreeLocal(self.a / other, self.b / other)
        o = self._coerce(other)
        n = o.norm()
        if n.is_zero():
            raise ZeroDivisionError("division by a value indistinguishable from zero")
        num = self * o.conj()
        return ZetaThreeLocal(num.a / n, num.b / n)

    def __pow__(self, k: int):
        if k < 0:
            return ZetaThreeLocal.one(self.coeff_absprec() + 2) / self ** (-k)
        result = ZetaThreeLocal.one(max(self.coeff_absprec(), 1) + 2)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- valuation and precision --------------------------------------

    def coeff_absprec(self) -> int:
        return min(self.a.absprec, self.b.absprec)

    def absprec(self) -> int:
        """Absolute precision measured in powers of pi."""
        return 2 * self.coeff_absprec()

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def valuation(self) -> int:
        """v_pi, read off as the 3-adic valuation of the norm."""
        n = self.norm()
        if n.is_zero():
            raise InsufficientPrecisionError("value is zero at the available precision")
        return n.valuation()

    def with_absprec(self, n: int):
        """Truncate to absolute pi-adic precision at most ``n``."""
        c = (n + 1) // 2
        return ZetaThreeLocal(self.a.with_absprec(c), self.b.with_absprec(c))

    def equals(self, other) -> bool:
        return (self - other).is_zero()

    def integral_coefficients(self, n: int) -> tuple[int, int]:
        """Integer residues of (a, b) modulo 3**n."""
        return self.a.residue(n), self.b.residue(n)

    def __repr__(self):
        return f"({self.a!r}) + ({self.b!r})*zeta"
