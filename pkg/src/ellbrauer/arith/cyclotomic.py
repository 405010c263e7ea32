"""Exact arithmetic in cyclotomic fields Q(zeta_n) and Gaussian periods."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd

from sympy import Poly, cyclotomic_poly, symbols

_x = symbols("x")


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, _x), _x).all_coeffs()))


def _reduce(coeffs: list, n: int) -> tuple:
    phi = cyclotomic_coeffs(n)
    d = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, d - 1, -1):
        lead = c[i]
        if lead:
            for j in range(d + 1):
                c[i - d + j] -= lead * phi[j]
    c = c[:d] + [0] * (d - len(c))
    return tuple(Fraction(v) for v in c)


@dataclass(frozen=True)
class CyclotomicElement:
    """sum c_i zeta_n^i with i < phi(n), reduced modulo Phi_n."""

    n: int
    coeffs: tuple

    @classmethod
    def from_exponents(cls, n: int, exps, weights=None):
        c = [0] * n
        for k, e in enumerate(exps):
            c[e % n] += 1 if weights is None else weights[k]
        return cls(n, _reduce(c, n))

    @classmethod
    def rational(cls, n: int, q):
        return cls(n, _reduce([q], n))

    @classmethod
    def zeta(cls, n: int):
        return cls.from_exponents(n, [1])

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        prod = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicElement(self.n, _reduce(prod, self.n))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = CyclotomicElement.rational(self.n, 1)
        for _ in range(k):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.n != self.n:
                raise ValueError("conductors differ")
            return other
        return CyclotomicElement.rational(self.n, Fraction(other))

    def galois(self, k: int):
        """Image under zeta -> zeta^k, k coprime to n."""
        if gcd(k, self.n) != 1:
            raise ValueError("k must be a unit mod n")
        exps = [i * k for i in range(len(self.coeffs))]
        return CyclotomicElement.from_exponents(self.n, exps, list(self.coeffs))

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def trace(self) -> Fraction:
        """Trace to Q: the sum of all Galois conjugates."""
        total = CyclotomicElement.rational(self.n, 0)
        for k in units(self.n):
            total = total + self.galois(k)
        return total.to_rational()


def units(n: int) -> list[int]:
    return [k for k in range(1, n) if gcd(k, n) == 1]


# -- traces of powers of pi = 1 - zeta_3 -------------------------------------


def trace_pi_power_closed_form(m: int) -> int:
    """Closed form for Tr(pi^m), pi = 1 - zeta_3, using pi^6 = -27."""
    if m < 0:
        raise ValueError("m must be non-negative")
    k, l = divmod(m, 6)
    s = (-1) ** (3 * k)
    return {
        0: s * 3 ** (3 * k) * 2,
        1: s * 3 ** (3 * k + 1),
        2: s * 3 ** (3 * k + 1),
        3: 0,
        4: -s * 3 ** (3 * k + 2),
        5: -s * 3 ** (3 * k + 3),
    }[l]


def trace_pi_power_oracle(m: int) -> int:
    """Tr(pi^m) by expanding (1 - zeta)^m in Z[zeta] and using Tr(a + b*zeta) = 2a - b."""
    a, b = 1, 0
    for _ in range(m):
        # (a + b z)(1 - z) = a + (b - a) z - b z^2, and z^2 = -1 - z
        a, b = a + b, 2 * b - a
    return 2 * a - b


def trace_pi_power(m: int) -> int:
    """Tr over Q of (1 - zeta_3)^m; closed form checked against direct expansion."""
    closed = trace_pi_power_closed_form(m)
    oracle = trace_pi_power_oracle(m)
    if closed != oracle:
        raise ArithmeticError(f"trace mismatch at m={m}: {closed} != {oracle}")
    return closed


# -- Gaussian periods --------------------------------------------------------


def _closure(gens, n):
    H = {1}
    frontier = [1]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                y = h * g % n
                if y not in H:
                    H.add(y)
                    new.append(y)
        frontier = new
    return frozenset(H)


def _order_mod(g, H, n):
    k, y = 1, g % n
    while y not in H:
        y = y * g % n
        k += 1
    return k


def period_subgroup(n: int, d: int) -> frozenset:
    """A subgroup H of (Z/n)^x of index d with cyclic quotient.

    Subgroups containing -1 (real periods) are preferred; ties are broken by
    the sorted element list so the choice is deterministic.
    """
    U = units(n)
    if len(U) % d:
        raise ValueError(f"{d} does not divide phi({n}) = {len(U)}")
    subgroups = {_closure(gens, n) for r in (1, 2) for gens in combinations(U, r)}
    subgroups.add(frozenset({1}))
    good = [
        H for H in subgroups
        if len(H) * d == len(U) and any(_order_mod(g, H, n) == d for g in U)
    ]
    if not good:
        raise ValueError(f"no subfield of Q(zeta_{n}) is cyclic of degree {d}")
    good.sort(key=lambda H: ((n - 1) not in H, sorted(H)))
    return good[0]


def gaussian_periods(n: int, d: int) -> list[CyclotomicElement]:
    """The d conjugate periods sum_{h in cH} zeta^h, one per coset of H."""
    H = period_subgroup(n, d)
    g = next(g for g in units(n) if _order_mod(g, H, n) == d)
    return [CyclotomicElement.from_exponents(n, [pow(g, i, n) * h for h in H]) for i in range(d)]


def newton_to_polynomial(power_sums: list[Fraction]) -> list[Fraction]:
    """Monic polynomial (leading coefficient first) with the given power sums."""
    d = len(power_sums)
    e = [Fraction(1)]
    for k in range(1, d + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * power_sums[i - 1] for i in range(1, k + 1))
        e.append(s / k)
    return [(-1) ** k * e[k] for k in range(d + 1)]


def coset_periods(n: int, H) -> list[CyclotomicElement]:
    """Periods sum_{h in H} zeta_n^(c h), one per coset cH of H in (Z/n)^x."""
    H = frozenset(H)
    seen, out = set(), []
    for c in units(n):
        if c in seen:
            continue
        coset = {c * h % n for h in H}
        seen |= coset
        out.append(CyclotomicElement.from_exponents(n, sorted(coset)))
    return out


def characteristic_polynomial(elements: list[CyclotomicElement]) -> list[int]:
    """prod (X - e) as integer coefficients, leading first, via Newton's identities."""
    n = elements[0].n
    sums = []
    for k in range(1, len(elements) + 1):
        s = sum((e ** k for e in elements), CyclotomicElement.rational(n, 0))
        sums.append(s.to_rational())
    poly = newton_to_polynomial(sums)
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("period polynomial is not integral")
    return [int(c) for c in poly]


def period_minimal_polynomial(n: int, d: int) -> list[int]:
    """Minimal polynomial over Q of a degree-d Gaussian period in Q(zeta_n).

    Returned as integer coefficients, leading first.  The coefficients are the
    elementary symmetric functions of the d conjugate periods, obtained from
    their power sums by Newton's identities.
    """
    return characteristic_polynomial(gaussian_periods(n, d))
