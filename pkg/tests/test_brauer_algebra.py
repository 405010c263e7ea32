import random
from fractions import Fraction

import pytest

from ellbrauer.brauer.algebra import NotCyclicError, cyclic_algebra
from ellbrauer.hilbert.invariants import INF


def test_hamilton_quaternions():
    A = cyclic_algebra([1, 0, 1], -1, 2)
    assert A.dimension == 4
    assert A.check_associative()
    assert A.center_dimension() == 1
    assert A.is_central_simple
    assert A.quaternion_invariants().support() == [2, INF]
    assert not A.is_split()


def test_trivial_unit_splits():
    A = cyclic_algebra([1, 0, -2], 1, 2)
    assert A.is_split()
    w = A.zero_divisor()
    assert any(w)


def test_norm_from_gaussian_field_splits():
    A = cyclic_algebra([1, 0, 1], 2, 2)
    assert A.quaternion_invariants().is_zero()
    assert A.is_split()


def test_cubic_cyclic_algebra():
    # Q(zeta_9)^+ with generator x -> x^2 - 2
    A = cyclic_algebra([1, 0, -3, 1], 2, 3, g=[-2, 0, 1])
    assert A.dimension == 9
    assert A.check_associative()
    assert A.center_dimension() == 1
    assert A.is_central_simple


def test_quartic_cyclic_algebra():
    # Q(zeta_16)^+ with generator zeta -> zeta^3, i.e. x -> x^3 - 3x
    A = cyclic_algebra([1, 0, -4, 0, 2], 3, 4, g=[0, -3, 0, 1])
    assert A.dimension == 16
    assert A.check_associative()
    assert A.center_dimension() == 1
    assert A.is_central_simple


def test_non_galois_rejected():
    with pytest.raises(NotCyclicError):
        cyclic_algebra([1, 0, 0, -2], 3, 3, g=[0, 0, 1])
    with pytest.raises(NotCyclicError):
        cyclic_algebra([1, 0, -1], 3, 2)  # reducible


def test_wrong_generator_order_rejected():
    with pytest.raises(NotCyclicError):
        cyclic_algebra([1, 0, -4, 0, 2], 3, 4, g=[0, -1])  # x -> -x has order 2


def _random_pairs(k=20, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < k:
        d = rng.choice([-1, 1]) * rng.randint(2, 30)
        if int(abs(d) ** 0.5) ** 2 == abs(d) and d > 0:
            continue
        u = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 5))
        out.append((d, u))
    return out


@pytest.mark.parametrize("d, u", _random_pairs())
def test_split_iff_invariants_vanish(d, u):
    A = cyclic_algebra([1, 0, -d], u, 2)
    assert A.is_split() == A.quaternion_invariants().is_zero()
