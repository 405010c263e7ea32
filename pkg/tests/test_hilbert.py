import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ellbrauer.arith import PAdicValue, ZetaThreeLocal
from ellbrauer.hilbert.cubic import (
    UnsupportedArgumentError,
    cubic_symbol,
    cubic_symbol_legendre,
    cubic_symbol_one_unit,
    norm_oracle_cubic,
    unit_norm_group,
    unit_norm_group_exhaustive,
)
from ellbrauer.hilbert.invariants import INF, ProductFormulaError, InvariantVector, quaternion_invariants
from ellbrauer.hilbert.oracle import norm_oracle_quadratic
from ellbrauer.hilbert.quadratic import hilbert_odd, hilbert_real, hilbert_symbol, hilbert_two

PLACES = [2, 3, 5, 7, 11, INF]

nonzero = st.builds(
    lambda s, n, d: Fraction(s * n, d),
    st.sampled_from([1, -1]), st.integers(1, 10 ** 6), st.integers(1, 200),
)


# -- worked values ----------------------------------------------------------------------


@pytest.mark.parametrize("a, b, expected", [
    (-11, 2, -1), (-11, -1, 1), (-15, 2, 1), (-15, -1, 1), (-53, 2, -1), (-53, -1, -1),
])
def test_two_adic_table(a, b, expected):
    assert hilbert_two(a, b) == expected


def test_two_adic_square_argument():
    for a in (3, -7, Fraction(5, 8), 2):
        assert hilbert_two(a, 1) == 1


def test_odd_examples():
    assert hilbert_odd(3, -1, -1) == 1
    for q in (3, 7, 11, 19):
        assert hilbert_odd(q, -1, q) == -1
    for q in (5, 13, 17):
        assert hilbert_odd(q, -1, q) == 1
    assert hilbert_odd(7, 3, 5) == 1


def test_real_examples():
    assert hilbert_real(-1, -1) == -1
    assert hilbert_real(1, -1) == 1
    assert hilbert_real(-11, 2) == 1


def test_zero_argument_rejected():
    with pytest.raises(ValueError):
        hilbert_two(0, 3)
    with pytest.raises(ValueError):
        hilbert_symbol(3, 0, 5)


# -- structural properties, 200 random cases per place -------------------------------


@pytest.mark.parametrize("place", PLACES)
@settings(max_examples=200)
@given(a=nonzero, b1=nonzero, b2=nonzero)
def test_bimultiplicative(place, a, b1, b2):
    assert hilbert_symbol(a, b1 * b2, place) == hilbert_symbol(a, b1, place) * hilbert_symbol(a, b2, place)


@pytest.mark.parametrize("place", PLACES)
@settings(max_examples=200)
@given(a=nonzero, b=nonzero)
def test_symmetric(place, a, b):
    assert hilbert_symbol(a, b, place) == hilbert_symbol(b, a, place)


@pytest.mark.parametrize("place", PLACES)
@settings(max_examples=200)
@given(a=nonzero)
def test_steinberg(place, a):
    assert hilbert_symbol(a, -a, place) == 1
    if a != 1:
        assert hilbert_symbol(a, 1 - a, place) == 1


@settings(max_examples=200)
@given(a=nonzero, b=nonzero)
def test_product_formula(a, b):
    inv = quaternion_invariants(a, b)
    assert inv.total() == 0
    assert len(inv.support()) % 2 == 0


def test_invariant_examples():
    assert quaternion_invariants(-1, -1).support() == [2, INF]
    assert quaternion_invariants(1, 7).is_zero()
    s = quaternion_invariants(-11, 2).support()
    assert 2 in s and len(s) % 2 == 0


def test_product_formula_violation_aborts():
    with pytest.raises(ProductFormulaError):
        InvariantVector.from_dict(2, {2: 1}).check_product_formula()


# -- brute-force oracle ----------------------------------------------------------------


def _corpus():
    rng = random.Random(20240601)
    pairs = [(-11, 2), (-15, 2), (1, 5), (-1, -1), (2, 3), (3, 5)]
    while len(pairs) < 50:
        a = rng.choice([-1, 1]) * rng.randint(1, 60)
        b = rng.choice([-1, 1]) * rng.randint(1, 60)
        pairs.append((a, b))
    return pairs


@pytest.mark.parametrize("p", [2, 3, 5])
def test_oracle_agrees_with_formula(p):
    for a, b in _corpus():
        assert norm_oracle_quadratic(a, b, p) == (hilbert_symbol(a, b, p) == 1), (a, b, p)


def test_oracle_examples():
    assert norm_oracle_quadratic(-11, 2, 2) is False
    assert norm_oracle_quadratic(-15, 2, 2) is True
    for p in (2, 3, 7):
        assert norm_oracle_quadratic(1, 6, p) is True


def test_oracle_rejects_low_precision():
    with pytest.raises(ValueError):
        norm_oracle_quadratic(-11, 2, 2, N=2)


# -- cubic symbol --------------------------------------------------------------------


def test_one_unit_examples():
    assert cubic_symbol_one_unit(ZetaThreeLocal.one(8)) == 0
    pi = ZetaThreeLocal.pi(8)
    assert cubic_symbol_one_unit(ZetaThreeLocal.one(8) + pi) == 2
    t = ZetaThreeLocal.from_rationals(2, 0, 8)
    assert cubic_symbol_one_unit(-t) == 1


def test_symbol_of_minus_one_is_trivial():
    assert cubic_symbol(-1) == 0
    assert norm_oracle_cubic(-1)


def test_pi_power_argument_unsupported():
    with pytest.raises(UnsupportedArgumentError):
        cubic_symbol(ZetaThreeLocal.pi(8))


@pytest.mark.parametrize("b", range(9))
def test_legendre_symbol_closed_form(b):
    v = cubic_symbol_legendre(b)
    assert v.artin_hasse == v.closed_form == (1 - b * b) % 3


@settings(max_examples=5)
@given(st.integers(0, 3 ** 12 - 1))
def test_legendre_symbol_random_3adic(n):
    b = PAdicValue.from_rational(n, 3, 12) if n else PAdicValue.zero(3, 12)
    v = cubic_symbol_legendre(b, 12)
    assert v.artin_hasse == (1 - n * n) % 3


def test_legendre_symbol_needs_two_digits():
    from ellbrauer.arith import InsufficientPrecisionError
    with pytest.raises(InsufficientPrecisionError):
        cubic_symbol_legendre(PAdicValue.from_rational(1, 3, 1))


def _t_times_t_minus_one(b):
    t = ZetaThreeLocal.from_rationals(2 + b, -b, 8)
    return t * (t - 1)


@pytest.mark.parametrize("b", [0, 1, 2, 3, 4, 7])
def test_norm_oracle_matches_symbol(b):
    a = _t_times_t_minus_one(b)
    assert norm_oracle_cubic(a, N=6) == (cubic_symbol_legendre(b).exponent == 0)


def test_norm_group_generators_match_exhaustive_search():
    assert unit_norm_group(N=3) == unit_norm_group_exhaustive(N=3)
