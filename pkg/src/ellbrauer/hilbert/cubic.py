"""The cubic Hilbert symbol (zeta, a) over Q_3(zeta_3).

The symbol is computed from the Artin-Hasse formula
(zeta, a) = zeta^(Tr(log a)/3) for principal units a, and returned as the
exponent in Z/3.  A brute-force oracle decides the same question directly:
the symbol is trivial exactly when a is a norm from the Kummer extension
obtained by adjoining a cube root of zeta.
"""

from fractions import Fraction
from typing import NamedTuple

from ..arith.log import DEFAULT_PREC, trace_log_over_three
from ..arith.padic import InsufficientPrecisionError, PAdicValue
from ..arith.zeta3 import ZetaThreeLocal


class UnsupportedArgumentError(ValueError):
    """Symbol arguments with a pi-power part are not handled."""


def _as_local(a, N):
    if isinstance(a, ZetaThreeLocal):
        return a
    if isinstance(a, tuple):
        return ZetaThreeLocal.from_rationals(a[0], a[1], (N + 1) // 2)
    return ZetaThreeLocal.from_rationals(Fraction(a), 0, (N + 1) // 2)


def cubic_symbol_one_unit(a, N: int = DEFAULT_PREC) -> int:
    """Exponent e with (zeta, a)_pi = zeta^e for a in 1 + pi*O."""
    a = _as_local(a, N)
    d = a - 1
    if not d.is_zero() and d.valuation() < 1:
        raise ValueError("argument is not a principal unit")
    return trace_log_over_three(a, N)


def cubic_symbol(a, N: int = DEFAULT_PREC) -> int:
    """(zeta, a)_pi for a unit a, using (zeta, -1) = 1 when a = -1 mod pi."""
    a = _as_local(a, N)
    if a.valuation() != 0:
        raise UnsupportedArgumentError("argument has a pi-power part")
    if (a - 1).valuation() >= 1:
        return cubic_symbol_one_unit(a, N)
    return cubic_symbol_one_unit(-a, N)


class CubicSymbolValue(NamedTuple):
    closed_form: int
    artin_hasse: int

    @property
    def exponent(self) -> int:
        return self.closed_form


def legendre_parameter(b, N: int = DEFAULT_PREC) -> ZetaThreeLocal:
    """t = 2 + b*pi as an element of Q_3(zeta_3)."""
    if isinstance(b, PAdicValue):
        bb = ZetaThreeLocal(b, PAdicValue.zero(3, b.absprec))
    else:
        bb = ZetaThreeLocal.from_rationals(Fraction(b), 0, (N + 1) // 2)
    return 2 + bb * ZetaThreeLocal.pi((N + 1) // 2 + 1)


def cubic_symbol_legendre(b, N: int = DEFAULT_PREC) -> CubicSymbolValue:
    """(zeta, t(t-1))_pi for t = 2 + b*pi, b in Z_3, in two independent ways.

    The closed form is 1 - b^2 mod 3.  The Artin-Hasse value factors
    t(t-1) = (-1)(-t)(t-1) with -t and t-1 principal units.
    """
    if isinstance(b, PAdicValue):
        if b.absprec < 2:
            raise InsufficientPrecisionError("b must be known to at least 2 digits")
        b_mod3 = b.residue(1)
    else:
        b = Fraction(b)
        if b.denominator % 3 == 0:
            raise ValueError("b must be 3-integral")
        b_mod3 = b.numerator * pow(b.denominator, -1, 3) % 3
    closed = (1 - b_mod3 * b_mod3) % 3
    t = legendre_parameter(b, N)
    ah = (cubic_symbol_one_unit(t - 1, N) + cubic_symbol_one_unit(-t, N)) % 3
    if ah != closed:
        raise ArithmeticError(f"Artin-Hasse value {ah} disagrees with closed form {closed}")
    return CubicSymbolValue(closed, ah)


# -- norm oracle ----------------------------------------------------------------
#
# Elements of Z[zeta_3] are integer pairs (a, b) meaning a + b*zeta.


def _zmul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c - b * d)


def _zadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _reduce_mod_pi(x, N):
    """Canonical representative of a + b*zeta modulo pi^N."""
    a, b = x
    k, odd = divmod(N, 2)
    if not odd:
        m = 3 ** k
        return (a % m, b % m)
    # the ideal pi^(2k+1) has basis 3^k*(1, -1) and 3^(k+1)*(1, 0)
    m = 3 ** k
    q, b1 = divmod(b, m)
    a1 = (a + q * m) % (3 * m)
    return (a1, b1)


def _kummer_mul(x, y, u):
    """Multiply in O_K[theta]/(theta^3 - u); elements are triples over Z[zeta]."""
    out = [(0, 0)] * 5
    for i in range(3):
        for j in range(3):
            out[i + j] = _zadd(out[i + j], _zmul(x[i], y[j]))
    # theta^3 = u, theta^4 = u*theta
    return (
        _zadd(out[0], _zmul(u, out[3])),
        _zadd(out[1], _zmul(u, out[4])),
        out[2],
    )


def _kummer_norm(x, u):
    """x0^3 + u x1^3 + u^2 x2^3 - 3u x0 x1 x2 for x = x0 + x1 theta + x2 theta^2."""
    x0, x1, x2 = x
    cube = lambda z: _zmul(z, _zmul(z, z))
    u2 = _zmul(u, u)
    t = _zmul(_zmul(x0, x1), x2)
    n = _zadd(cube(x0), _zmul(u, cube(x1)))
    n = _zadd(n, _zmul(u2, cube(x2)))
    n = _zadd(n, _zmul((-3, 0), _zmul(u, t)))
    return n


def _group_closure(gens, N):
    one = _reduce_mod_pi((1, 0), N)
    H = {one}
    frontier = [one]
    gens = [_reduce_mod_pi(g, N) for g in gens]
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                y = _reduce_mod_pi(_zmul(h, g), N)
                if y not in H:
                    H.add(y)
                    new.append(y)
        frontier = new
    return H


def _exact_unit(u):
    if isinstance(u, ZetaThreeLocal):
        if u.a.val is not None and u.a.val < 0 or u.b.val is not None and u.b.val < 0:
            raise ValueError("u must be integral")
        n = u.coeff_absprec()
        return u.integral_coefficients(n)
    return (int(u[0]), int(u[1]))


def _sign_for_uniformizer(u):
    """s in {1, -1} with v_pi(u - s) = 1, so theta - s is a uniformizer upstairs."""
    a, b = u
    for s in (1, -1):
        na, nb = a - s, b
        norm = na * na - na * nb + nb * nb
        if norm % 3 == 0 and norm % 9:
            return s
    raise ValueError("need a unit u with v_pi(u - 1) = 1 or v_pi(u + 1) = 1")


def unit_norm_group(u=(0, 1), N: int = 6) -> frozenset:
    """Image of the unit norms from K(u^(1/3)) in (O_K/pi^N)^x.

    The units of the extension are generated by -1 and the principal units
    1 + Pi^k, Pi = theta - s a uniformizer, and 1 + Pi^k lies in 1 + pi^N for
    k >= 3N, so finitely many norms generate the image.
    """
    u = _exact_unit(u)
    s = _sign_for_uniformizer(u)
    Pi = ((-s, 0), (1, 0), (0, 0))
    one = ((1, 0), (0, 0), (0, 0))
    gens = [(-1, 0)]
    power = one
    for _ in range(1, 3 * N):
        power = _kummer_mul(power, Pi, u)
        elt = (_zadd(one[0], power[0]), power[1], power[2])
        gens.append(_kummer_norm(elt, u))
    return frozenset(_group_closure(gens, N))


def unit_group_order(N: int) -> int:
    return 2 * 3 ** (N - 1)


def unit_norm_group_exhaustive(u=(0, 1), N: int = 3) -> frozenset:
    """Same image as unit_norm_group, by evaluating the norm form on every triple."""
    u = _exact_unit(u)
    k = (N + 1) // 2
    reps = sorted({_reduce_mod_pi((a, b), N) for a in range(3 ** k) for b in range(3 ** k)})
    out = set()
    for x0 in reps:
        for x1 in reps:
            for x2 in reps:
                n = _reduce_mod_pi(_kummer_norm((x0, x1, x2), u), N)
                if (n[0] * n[0] - n[0] * n[1] + n[1] * n[1]) % 3:
                    out.add(n)
    return frozenset(out)


def norm_oracle_cubic(a, u=(0, 1), N: int = 6) -> bool:
    """Is the unit a a norm from K(u^(1/3))?  Decided modulo pi^N.

    The answer is certified only when the unit norms have index 3 in
    (O_K/pi^N)^x, which forces 1 + pi^N to consist of norms.
    """
    H = unit_norm_group(u, N)
    index, rem = divmod(unit_group_order(N), len(H))
    if rem or index != 3:
        raise InsufficientPrecisionError(f"norm group has index {unit_group_order(N) / len(H)} mod pi^{N}")
    k = (N + 1) // 2
    if isinstance(a, ZetaThreeLocal):
        if a.valuation() != 0:
            raise ValueError("a must be a unit")
        x = a.integral_coefficients(k + 1 if N % 2 else k)
    elif isinstance(a, tuple):
        x = (int(a[0]), int(a[1]))
    else:
        q = Fraction(a)
        m = 3 ** (k + 1)
        x = (q.numerator * pow(q.denominator, -1, m) % m, 0)
    return _reduce_mod_pi(x, N) in H
