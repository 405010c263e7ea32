"""Quadratic Hilbert symbols over Q_2, Q_p (p odd) and R.

Symbols are returned as +1 or -1.
"""

from fractions import Fraction

from ..arith.padic import valuation


def _check(*args):
    out = []
    for a in args:
        a = Fraction(a)
        if a == 0:
            raise ValueError("Hilbert symbol arguments must be nonzero")
        out.append(a)
    return out


def split_unit(a, p: int) -> tuple[int, Fraction]:
    """Write a = p^alpha * u with u a p-adic unit; returns (alpha, u)."""
    a = Fraction(a)
    alpha = valuation(a, p)
    return alpha, a / Fraction(p) ** alpha


def _odd_residue(u: Fraction, m: int) -> int:
    """Residue mod m of a rational whose denominator is prime to m."""
    return u.numerator * pow(u.denominator, -1, m) % m


def epsilon(u: int) -> int:
    """(u - 1)/2 mod 2 for odd u."""
    return ((u - 1) // 2) % 2


def omega(u: int) -> int:
    """(u^2 - 1)/8 mod 2 for odd u."""
    return ((u * u - 1) // 8) % 2


def hilbert_two(a, b) -> int:
    """(a, b)_2 by the formula (-1)^(eps(u)eps(v) + alpha*omega(v) + beta*omega(u))."""
    a, b = _check(a, b)
    alpha, u = split_unit(a, 2)
    beta, v = split_unit(b, 2)
    u8, v8 = _odd_residue(u, 8), _odd_residue(v, 8)
    e = epsilon(u8) * epsilon(v8) + alpha * omega(v8) + beta * omega(u8)
    return -1 if e % 2 else 1


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for a prime to the odd prime p, by Euler's criterion."""
    a %= p
    if a == 0:
        raise ValueError("argument divisible by p")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def hilbert_odd(p: int, a, b) -> int:
    """(a, b)_p for p an odd prime (the tame symbol)."""
    if p == 2 or p < 2:
        raise ValueError("p must be an odd prime")
    a, b = _check(a, b)
    alpha, u = split_unit(a, p)
    beta, v = split_unit(b, p)
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= legendre(_odd_residue(u, p), p)
    if alpha % 2:
        s *= legendre(_odd_residue(v, p), p)
    return s


def hilbert_real(a, b) -> int:
    a, b = _check(a, b)
    return -1 if (a < 0 and b < 0) else 1


def hilbert_symbol(a, b, place) -> int:
    """Dispatch on the place: a prime number or 'inf'."""
    if place in ("inf", "oo", "infinity", None):
        return hilbert_real(a, b)
    place = int(place)
    if place == 2:
        return hilbert_two(a, b)
    return hilbert_odd(place, a, b)
