"""Finite-precision p-adic numbers.

A nonzero value is stored as ``p**val * unit`` where ``unit`` is a residue
coprime to ``p`` known modulo ``p**prec``.  A value that cannot be told apart
from zero at the available precision is stored with ``val=None`` and ``prec``
holding its absolute precision.

Precision is a property of each value.  Binary operations never return more
digits than both inputs justify; cancellation in a subtraction shows up as a
drop in relative precision.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class InsufficientPrecisionError(ArithmeticError):
    """Raised when a computation needs more digits than are available."""


def valuation(x, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class PAdicValue:
    p: int
    val: int | None
    unit: int
    prec: int

    def __post_init__(self):
        if self.val is not None:
            if self.prec < 1:
                raise ValueError("relative precision of a nonzero value must be positive")
            if self.unit % self.p == 0:
                raise ValueError("unit part must be coprime to p")
            mod = self.p ** self.prec
            if not 0 <= self.unit < mod:
                object.__setattr__(self, "unit", self.unit % mod)

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, p: int, absprec: int) -> "PAdicValue":
        return cls(p, None, 0, absprec)

    @classmethod
    def from_rational(cls, x, p: int, prec: int) -> "PAdicValue":
        """The value of ``x`` with ``prec`` significant digits."""
        x = Fraction(x)
        if x == 0:
            return cls.zero(p, prec)
        v = valuation(x, p)
        y = x / Fraction(p) ** v
        mod = p ** prec
        u = y.numerator * pow(y.denominator, -1, mod) % mod
        return cls(p, v, u, prec)

    def _coerce(self, other, rel: int) -> "PAdicValue":
        if isinstance(other, PAdicValue):
            if other.p != self.p:
                raise ValueError("mixing different primes")
            return other
        if isinstance(other, (int, Rational)):
            return PAdicValue.from_rational(other, self.p, max(rel, 1))
        return NotImplemented

    # -- basic properties --------------------------------------------

    def is_zero(self) -> bool:
        """True if the value is indistinguishable from zero."""
        return self.val is None

    @property
    def absprec(self) -> int:
        if self.val is None:
            return self.prec
        return self.val + self.prec

    def valuation(self) -> int:
        if self.val is None:
            raise InsufficientPrecisionError("value is zero at the available precision")
        return self.val

    def to_fraction(self) -> Fraction:
        """The canonical rational representative p**val * unit."""
        if self.val is None:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.val

    def residue(self, n: int) -> int:
        """The integer in [0, p**n) congruent to this value (must be integral)."""
        if n > self.absprec:
            raise InsufficientPrecisionError(f"need {n} digits, have {self.absprec}")
        if self.val is None:
            return 0
        if self.val < 0:
            raise ValueError("value is not integral")
        return self.unit * self.p ** self.val % self.p ** n

    def with_absprec(self, n: int) -> "PAdicValue":
        """Forget digits beyond absolute precision ``n``; never adds digits."""
        if n >= self.absprec:
            return self
        if self.val is None or n <= self.val:
            return PAdicValue.zero(self.p, n)
        return PAdicValue(self.p, self.val, self.unit, n - self.val)

    # -- arithmetic ---------------------------------------------------

    def __neg__(self):
        if self.val is None:
            return self
        return PAdicValue(self.p, self.val, -self.unit, self.prec)

    def __add__(self, other):
        other = self._coerce(other, self.absprec - _val_hint(other, self.p))
        if other is NotImplemented:
            return other
        p = self.p
        prec = min(self.absprec, other.absprec)
        if self.val is None and other.val is None:
            return PAdicValue.zero(p, prec)
        vals = [x.val for x in (self, other) if x.val is not None]
        m = min(vals)
        if prec <= m:
            return PAdicValue.zero(p, prec)
        mod = p ** (prec - m)
        s = 0
        for x in (self, other):
            if x.val is not None:
                s += x.unit * p ** (x.val - m)
        s %= mod
        if s == 0:
            return PAdicValue.zero(p, prec)
        k = 0
        while s % p == 0:
            s //= p
            k += 1
        return PAdicValue(p, m + k, s, prec - m - k)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            return self + (-Fraction(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other, self.prec)
        if other is NotImplemented:
            return other
        p = self.p
        if self.val is None or other.val is None:
            if self.val is None and other.val is None:
                return PAdicValue.zero(p, self.prec + other.prec)
            z, x = (self, other) if self.val is None else (other, self)
            return PAdicValue.zero(p, z.prec + x.val)
        prec = min(self.prec, other.prec)
        return PAdicValue(p, self.val + other.val, self.unit * other.unit, prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other, self.prec)
        if other is NotImplemented:
            return other
        if other.val is None:
            raise ZeroDivisionError("division by a value indistinguishable from zero")
        p = self.p
        if self.val is None:
            return PAdicValue.zero(p, self.prec - other.val)
        prec = min(self.prec, other.prec)
        mod = p ** prec
        u = self.unit * pow(other.unit, -1, mod)
        return PAdicValue(p, self.val - other.val, u, prec)

    def __rtruediv__(self, other):
        return self._coerce(other, self.prec) / self

    def __pow__(self, k: int):
        if k < 0:
            return 1 / (self ** (-k))
        result = PAdicValue.from_rational(1, self.p, self.prec if self.val is not None else 1)
        if self.val is None:
            return PAdicValue.zero(self.p, self.prec * k) if k else result
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def equals(self, other) -> bool:
        """Equality up to the common precision of the two values."""
        d = self - other
        return d.is_zero()

    def __repr__(self):
        if self.val is None:
            return f"O({self.p}^{self.prec})"
        return f"{self.p}^{self.val}*{self.unit} + O({self.p}^{self.absprec})"


def _val_hint(x, p):
    if isinstance(x, PAdicValue):
        return x.val or 0
    x = Fraction(x)
    return 0 if x == 0 else valuation(x, p)


def rational_to_padic(x, p: int, N: int) -> PAdicValue:
    """Convert an exact rational to a p-adic value with N significant digits."""
    if N < 1:
        raise ValueError("precision must be at least 1")
    return PAdicValue.from_rational(x, p, N)
