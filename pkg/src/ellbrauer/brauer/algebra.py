"""Cyclic algebras (K/Q, g, u) given by explicit structure constants.

K = Q[x]/f is a cyclic extension of degree n whose generator acts by
x -> g(x).  The algebra has basis y^j x^i (0 <= i, j < n), stored at index
j*n + i, with relations f(x) = 0, y^n = u and x y = y g(x).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

import numpy as np
from sympy import Matrix, Rational, symbols
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from ..hilbert.invariants import InvariantVector, quaternion_invariants
from ..arith.polys import is_irreducible_over_q

RANK_PRIME = 2_147_483_629  # a prime below 2^31; products stay inside int64


class NotCyclicError(ValueError):
    pass


# -- arithmetic in K = Q[x]/f (coefficient lists, lowest degree first) -------------


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pmod(a, f):
    """Remainder mod the monic polynomial f (lowest degree first)."""
    a = list(a)
    n = len(f) - 1
    for k in range(len(a) - 1, n - 1, -1):
        c = a[k]
        if c:
            for t in range(n + 1):
                a[k - n + t] -= c * f[t]
    a = a[:n] + [Fraction(0)] * max(0, n - len(a))
    return a


def _compose(p, g, f):
    """p(g(x)) mod f by Horner's rule."""
    acc = []
    for c in reversed(p):
        acc = _pmod(_pmul(acc, g), f) if acc else []
        acc = list(acc) + [Fraction(0)] * max(0, 1 - len(acc))
        acc[0] += c
    return _pmod(acc, f)


@dataclass(frozen=True)
class CyclicAlgebraTable:
    n: int
    f: tuple  # integer coefficients, leading first (monic)
    u: Fraction
    g: tuple  # coefficients of g(x), lowest degree first
    table: tuple  # table[a][b] = coordinates of e_a * e_b

    @property
    def dimension(self) -> int:
        return self.n * self.n

    def multiply(self, v, w) -> list:
        d = self.dimension
        out = [Fraction(0)] * d
        for a, x in enumerate(v):
            if not x:
                continue
            for b, y in enumerate(w):
                if not y:
                    continue
                xy = x * y
                for c, t in enumerate(self.table[a][b]):
                    if t:
                        out[c] += xy * t
        return out

    def basis_vector(self, i: int, j: int) -> list:
        """y^j x^i."""
        v = [Fraction(0)] * self.dimension
        v[j * self.n + i] = Fraction(1)
        return v

    def check_associative(self) -> bool:
        d = self.dimension
        e = [[Fraction(int(a == b)) for b in range(d)] for a in range(d)]
        for a, b, c in product(range(d), repeat=3):
            if self.multiply(self.table[a][b], e[c]) != self.multiply(e[a], self.table[b][c]):
                return False
        return True

    def center_dimension(self) -> int:
        """dim of {z : z e = e z for every basis element e}, by rational linear algebra."""
        d = self.dimension
        rows = []
        for b in range(d):
            # (z e_b - e_b z) as a linear function of z
            for c in range(d):
                rows.append([Rational(self.table[a][b][c] - self.table[b][a][c]) for a in range(d)])
        return d - Matrix(rows).rank()

    def left_matrix(self, v):
        """Matrix of w -> v w."""
        d = self.dimension
        cols = [self.multiply(v, [Fraction(int(t == b)) for t in range(d)]) for b in range(d)]
        return [[cols[b][r] for b in range(d)] for r in range(d)]

    @cached_property
    def is_central_simple(self) -> bool:
        """A (x) A^op -> End(A), a (x) b -> L_a R_b, is an isomorphism iff A is central simple.

        Rank is computed modulo a large prime, which can only underestimate it,
        so full rank mod the prime certifies full rank over Q.
        """
        d = self.dimension
        P = RANK_PRIME
        cols = []
        for a in range(d):
            for b in range(d):
                # L_a R_b (e_c) = e_a e_c e_b
                col = []
                for c in range(d):
                    col += self.multiply(self.table[a][c], [Fraction(int(t == b)) for t in range(d)])
                cols.append(col)
        M = np.array([[_mod_p(x, P) for x in col] for col in cols], dtype=np.int64)
        return _rank_mod_p(M, P) == d * d

    def quaternion_invariants(self) -> InvariantVector:
        if self.n != 2:
            raise ValueError("only defined for n = 2")
        a1, a0 = self.f[1], self.f[2]
        return quaternion_invariants(a1 * a1 - 4 * a0, self.u)

    def zero_divisor(self):
        """For n = 2, a nonzero w with L_w singular, or None when the algebra is a division algebra.

        With delta = 2x + a1 (so delta^2 = d = disc f) the norm form is
        X^2 - d Y^2 - u Z^2; a rational zero (X, Y, Z) yields w = X + Y delta + Z y
        up to signs.  Existence of the zero is decided by sympy's ternary
        quadratic solver.
        """
        if self.n != 2:
            raise ValueError("only implemented for n = 2")
        a1, a0 = self.f[1], self.f[2]
        d = a1 * a1 - 4 * a0
        X, Y, Z = symbols("X Y Z", integer=True)
        u = Rational(self.u.numerator, self.u.denominator)
        eq = (X ** 2 - d * Y ** 2 - u * Z ** 2) * self.u.denominator
        sol = diop_ternary_quadratic(eq.expand())
        if sol is None or sol == (None, None, None) or all(s == 0 for s in sol):
            return None
        x0, y0, z0 = (int(s) for s in sol)
        for sy, sz in product((1, -1), repeat=2):
            w = [Fraction(0)] * 4
            # X + Y*(2x + a1) + Z*y
            w[0] = Fraction(x0 + sy * y0 * a1)
            w[1] = Fraction(2 * sy * y0)
            w[2] = Fraction(sz * z0)
            if Matrix([[Rational(c.numerator, c.denominator) for c in r] for r in self.left_matrix(w)]).rank() < 4:
                return w
        raise ArithmeticError("norm form has a zero but no zero divisor was found")

    def is_split(self) -> bool:
        return self.zero_divisor() is not None


def _mod_p(x: Fraction, P: int) -> int:
    if x.denominator % P == 0:
        raise ArithmeticError("denominator divisible by the rank prime")
    return x.numerator * pow(x.denominator, -1, P) % P


def _rank_mod_p(M, P: int) -> int:
    M = M.copy() % P
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, P)
        M[r] = (M[r] * inv) % P
        others = np.nonzero(M[:, c])[0]
        for i in others:
            if i != r:
                M[i] = (M[i] - M[i, c] * M[r]) % P
        r += 1
        if r == rows:
            break
    return r


def default_generator(f) -> list:
    """For quadratic f = x^2 + a1 x + a0 the conjugation x -> -x - a1."""
    if len(f) != 3:
        raise ValueError("a generator must be supplied for degree > 2")
    return [-f[1], -1]


def cyclic_algebra(f, u, n: int | None = None, g=None) -> CyclicAlgebraTable:
    """Structure constants of (K/Q, g, u) with K = Q[x]/f.

    f: integer coefficients, leading first, monic and irreducible.
    g: the generator x -> g(x) as coefficients, lowest degree first.
    """
    f = [int(c) for c in f]
    n = n or len(f) - 1
    if n not in (2, 3, 4) or len(f) - 1 != n:
        raise ValueError("need a monic polynomial of degree n in {2, 3, 4}")
    if f[0] != 1:
        raise ValueError("f must be monic")
    if not is_irreducible_over_q(f):
        raise NotCyclicError("f is reducible")
    u = Fraction(u)
    if u == 0:
        raise ValueError("u must be nonzero")
    g = [Fraction(c) for c in (g if g is not None else default_generator(f))]
    flow = [Fraction(c) for c in reversed(f)]
    # g must send the root x to another root and generate a group of order n
    if any(_compose(flow, g, flow)):
        raise NotCyclicError("g(x) is not a root of f")
    powers = [[Fraction(0), Fraction(1)] + [Fraction(0)] * (n - 2)]  # sigma^0(x) = x
    for _ in range(n):
        powers.append(_compose(powers[-1], g, flow))
    ident = _pmod([Fraction(0), Fraction(1)], flow)
    if powers[n] != ident or any(powers[k] == ident for k in range(1, n)):
        raise NotCyclicError("g does not have order n")

    def sigma_pow(b, poly):
        """sigma^b applied to an element of K (sigma^b(x) = powers[b])."""
        return _compose(poly, powers[b], flow) if b else _pmod(poly, flow)

    d = n * n
    table = []
    for a in range(d):
        ja, ia = divmod(a, n)
        row = []
        for b in range(d):
            jb, ib = divmod(b, n)
            xi = [Fraction(0)] * ia + [Fraction(1)]
            # (y^ja x^ia)(y^jb x^ib) = y^(ja+jb) sigma^jb(x^ia) x^ib
            coeff = _pmod(_pmul(sigma_pow(jb, xi), [Fraction(0)] * ib + [Fraction(1)]), flow)
            j = ja + jb
            scale = Fraction(1)
            if j >= n:
                j -= n
                scale = u
            vec = [Fraction(0)] * d
            for i, c in enumerate(coeff):
                vec[j * n + i] = c * scale
            row.append(tuple(vec))
        table.append(tuple(row))
    return CyclicAlgebraTable(n, tuple(f), u, tuple(g), tuple(table))
