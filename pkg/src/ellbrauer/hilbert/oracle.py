"""Brute-force oracle for the quadratic Hilbert symbol.

(a, b)_p = 1 exactly when z^2 = a x^2 + b y^2 has a nonzero solution in Q_p.
The search below looks for a primitive solution modulo p^n, one level at a
time, and accepts a residue solution only when Hensel's lemma guarantees that
it lifts: some partial derivative has valuation k with n >= 2k + 1.
"""

from fractions import Fraction

from .quadratic import split_unit


def _normalize(a, p):
    """Strip even powers of p; returns (a p^-2k, its valuation 0 or 1)."""
    alpha, u = split_unit(a, p)
    return Fraction(u) * p ** (alpha % 2), alpha % 2


def hensel_threshold(a, b, p: int) -> int:
    _, va = _normalize(a, p)
    _, vb = _normalize(b, p)
    return 2 * (1 if p == 2 else 0) + va + vb + 3


def _vp(n: int, p: int, cap: int) -> int:
    if n % p ** cap == 0:
        return cap
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def norm_oracle_quadratic(a, b, p: int, N: int | None = None) -> bool:
    """Decide whether z^2 = a x^2 + b y^2 is solvable nontrivially in Q_p."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("arguments must be nonzero")
    a1, _ = _normalize(a, p)
    b1, _ = _normalize(b, p)
    need = hensel_threshold(a, b, p)
    if N is None:
        N = need
    elif N < need:
        raise ValueError(f"search precision {N} below the Hensel bound {need}")
    top = p ** N
    A = a1.numerator * pow(a1.denominator, -1, top) % top
    B = b1.numerator * pow(b1.denominator, -1, top) % top

    def F(x, y, z):
        return z * z - A * x * x - B * y * y

    def certified(x, y, z, n):
        m = p ** n
        k = min(_vp(2 * z % m, p, n), _vp(2 * A * x % m, p, n), _vp(2 * B * y % m, p, n))
        return 2 * k + 1 <= n

    # one coordinate of a primitive solution is a unit; scale it to 1
    for fixed in range(3):
        level = [(0, 0)]
        n = 0
        while n < N:
            n += 1
            m = p ** n
            step = p ** (n - 1)
            nxt = []
            for s, t in level:
                for i in range(p):
                    for j in range(p):
                        u, w = s + i * step, t + j * step
                        triple = [u, w]
                        triple.insert(fixed, 1)
                        x, y, z = triple
                        if F(x, y, z) % m == 0:
                            if certified(x, y, z, n):
                                return True
                            nxt.append((u, w))
            level = nxt
            if not level:
                break
    return False
