"""The p-adic logarithm on principal units."""

import math

from .padic import InsufficientPrecisionError, PAdicValue
from .zeta3 import ZetaThreeLocal

DEFAULT_PREC = 12


def _local_data(x):
    """(p, ramification index, valuation, absolute precision) of an element."""
    if isinstance(x, PAdicValue):
        return x.p, 1, x.valuation(), x.absprec
    if isinstance(x, ZetaThreeLocal):
        return 3, 2, x.valuation(), x.absprec()
    raise TypeError(f"unsupported type {type(x).__name__}")


def padic_log(x, N: int = DEFAULT_PREC):
    """log(x) for x in 1 + m, to absolute precision at most N uniformizer digits.

    The series sum (-1)^(i+1) y^i / i with y = x - 1 is cut off once every
    remaining term has valuation at least N.
    """
    y = x - 1
    if y.is_zero():
        if isinstance(x, PAdicValue):
            return PAdicValue.zero(x.p, min(N, y.absprec))
        return y.with_absprec(N)
    p, e, v, _ = _local_data(y)
    if v <= 0:
        raise ValueError("logarithm series diverges: x - 1 is not in the maximal ideal")
    # term i has valuation >= i*v - e*v_p(i) >= i*v - e*log_p(i); past the
    # turning point i0 the lower bound increases, so stop when it reaches N
    i0 = max(1, math.ceil(e / (v * math.log(p))))
    total = None
    power = y
    i = 1
    while True:
        term = power / i
        if i % 2 == 0:
            term = -term
        total = term if total is None else total + term
        i += 1
        if i >= i0 and i * v - e * math.log(i, p) >= N:
            break
        power = power * y
    return total.with_absprec(N)


def trace_log_over_three(a: ZetaThreeLocal, N: int = DEFAULT_PREC) -> int:
    """Tr(log a)/3 modulo 3 for a principal unit of Q_3(zeta_3)."""
    t = padic_log(a, N).trace()
    if t.absprec < 2:
        raise InsufficientPrecisionError("Tr(log a) not known modulo 9; raise N")
    if t.is_zero():
        return 0
    q = t / 3
    if q.valuation() < 0:
        raise ArithmeticError("Tr(log a)/3 is not integral")
    return q.residue(1)
