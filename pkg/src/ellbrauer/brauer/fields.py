"""Cyclic number fields used to write down Brauer classes.

Cubic fields come from characters of (Z/m)^x via Kronecker-Weber, quartic
ones from Gaussian periods, and residues of cyclic algebras at unramified
primes from factoring the defining polynomial over F_p.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm

from sympy import factorint, isprime

from ..arith.cyclotomic import (
    characteristic_polynomial,
    coset_periods,
    gaussian_periods,
    period_minimal_polynomial,
    units,
)
from ..arith.polys import discriminant, factor_degrees_mod_p, is_irreducible_over_q


class RamifiedPrimeError(ValueError):
    pass


def residue_character_order(f, p: int, n: int | None = None) -> int:
    """Order of the residue at p of the character cut out by f.

    This is the degree of the residue field extension, i.e. the lcm of the
    degrees of the irreducible factors of f mod p.
    """
    f = [int(c) for c in f]
    n = n or len(f) - 1
    if not is_irreducible_over_q(f):
        raise ValueError("f is reducible over Q")
    if (discriminant(f) * n) % p == 0:
        raise RamifiedPrimeError(f"{p} divides disc(f) * n")
    return lcm(*factor_degrees_mod_p(f, p))


# -- cyclic cubic fields ramified only in P -------------------------------------------

# Cubic characters of Z_2^x are trivial (it is pro-2 up to sign), and those of
# Z_3^x = {+-1} x (1 + 3Z_3) factor through (1 + 3Z_3)/(1 + 9Z_3); so every
# cyclic cubic field unramified outside {2, 3} has conductor dividing 8 * 9.
_EXPONENT_BOUND = {2: 3, 3: 2}


@dataclass(frozen=True)
class CubicField:
    polynomial: tuple
    conductor: int
    discriminant: int


def _closure(elems, m):
    H = {1}
    frontier = [1]
    while frontier:
        new = []
        for h in frontier:
            for g in elems:
                y = h * g % m
                if y not in H:
                    H.add(y)
                    new.append(y)
        frontier = new
    return H


def _cubic_kernels(m: int) -> list:
    """Kernels of the order-3 characters of (Z/m)^x (one per pair chi, chi^2)."""
    U = units(m)
    cubes = {pow(x, 3, m) for x in U}
    basis, span = [], set(cubes)
    for x in U:
        if x not in span:
            basis.append(x)
            span = _closure(list(cubes) + basis, m)
    # coordinates of every unit in U / U^3 = (Z/3)^k
    coords = {}
    for a in product(range(3), repeat=len(basis)):
        r = 1
        for b, e in zip(basis, a):
            r = r * pow(b, e, m) % m
        for c in cubes:
            coords[r * c % m] = a
    kernels = set()
    for chi in product(range(3), repeat=len(basis)):
        if not any(chi):
            continue
        ker = frozenset(x for x in U if sum(c * a for c, a in zip(chi, coords[x])) % 3 == 0)
        kernels.add(ker)
    return sorted(kernels, key=sorted)


def _conductor(m: int, H) -> int:
    divisors = sorted(d for d in range(1, m + 1) if m % d == 0)
    for d in divisors:
        if all(x in H for x in units(m) if x % d == 1 % d):
            return d
    return m


def cubic_fields_ramified_in(P) -> list:
    """Defining polynomials of the cyclic cubic fields unramified outside P (P within {2, 3})."""
    return [list(c.polynomial) for c in cubic_field_data(P)]


def cubic_field_data(P) -> list:
    P = set(int(p) for p in P)
    if not P <= {2, 3}:
        raise NotImplementedError("only subsets of {2, 3} are supported")
    m = 1
    for p in P:
        m *= p ** _EXPONENT_BOUND[p]
    if m == 1:
        return []
    out = {}
    for H in _cubic_kernels(m):
        f = _conductor(m, H)
        Hf = {x % f for x in H}
        poly = characteristic_polynomial(coset_periods(f, Hf))
        if not is_irreducible_over_q(poly):
            raise ArithmeticError("period polynomial is reducible")
        disc = discriminant(poly)
        if disc != f * f:
            raise ArithmeticError(f"discriminant {disc} != conductor^2 = {f * f}")
        ramified = set(factorint(disc))
        if not ramified <= P:
            continue
        out[tuple(poly)] = CubicField(tuple(poly), f, disc)
    return sorted(out.values(), key=lambda c: (c.conductor, c.polynomial))


# -- cyclic quartic fields --------------------------------------------------------------


@dataclass(frozen=True)
class QuarticCharacterData:
    p: int
    polynomial: tuple
    conductor: int
    resolvent_square: Fraction  # square of an element of the quadratic subfield not in Q
    quadratic_subfield: int  # squarefree d with the quadratic subfield Q(sqrt d)


def _squarefree_part(q: Fraction) -> int:
    num = q.numerator * q.denominator
    sign = -1 if num < 0 else 1
    d = 1
    for p, e in factorint(abs(num)).items():
        if e % 2:
            d *= p
    return sign * d


def quartic_character_data(p: int) -> QuarticCharacterData:
    """The C4-field of conductor 16 (p = 2) or the quartic subfield of Q(zeta_p)."""
    if p == 2:
        n = 16
    elif p % 4 == 1 and isprime(p):
        n = p
    else:
        raise ValueError(f"{p} is not 2 or a prime congruent to 1 mod 4")
    poly = period_minimal_polynomial(n, 4)
    eta = gaussian_periods(n, 4)
    # eta0 + eta2 - eta1 - eta3 is fixed by sigma^2 and negated by sigma; it
    # vanishes for conductor 16 (eta2 = -eta0), where the products are used
    s = eta[0] + eta[2] - eta[1] - eta[3]
    if not any(s.coeffs):
        s = eta[0] * eta[2] - eta[1] * eta[3]
    sq = s * s
    if not sq.is_rational():
        raise ArithmeticError("resolvent is not rational")
    r = sq.to_rational()
    d = _squarefree_part(r)
    if d != p:
        raise ArithmeticError(f"quadratic subfield is Q(sqrt {d}), expected Q(sqrt {p})")
    return QuarticCharacterData(p, tuple(poly), n, r, d)
