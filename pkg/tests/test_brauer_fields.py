import pytest
from sympy import Poly, Symbol, discriminant as sym_disc, sqrt_mod

from ellbrauer.brauer.fields import (
    RamifiedPrimeError,
    cubic_field_data,
    cubic_fields_ramified_in,
    quartic_character_data,
    residue_character_order,
)


def test_residue_order_examples():
    # x^3 - 3x + 1 reduces to w^3 + w + 1 mod 2, which is irreducible
    assert residue_character_order([1, 0, -3, 1], 2) == 3
    assert residue_character_order([1, 0, 1, 1], 2) == 3
    assert residue_character_order([1, 0, 1], 5) == 1
    assert residue_character_order([1, 0, 1], 3) == 2


def test_residue_order_matches_frobenius_on_periods():
    # in Q(zeta_9)^+ the Frobenius at p acts as p modulo (Z/9)^x / {+-1}, of order 1 or 3
    f = [1, 0, -3, 1]
    for p in (2, 5, 7, 11, 13, 17, 19, 37):
        order = next(k for k in range(1, 7) if pow(p, k, 9) in (1, 8))
        assert residue_character_order(f, p) == order


def test_residue_order_rejects_ramified():
    with pytest.raises(RamifiedPrimeError):
        residue_character_order([1, 0, -3, 1], 3)
    with pytest.raises(RamifiedPrimeError):
        residue_character_order([1, 0, 1], 2)


def test_cubic_fields():
    assert cubic_fields_ramified_in({2, 3}) == [[1, 0, -3, 1]]
    assert cubic_fields_ramified_in({3}) == [[1, 0, -3, 1]]
    assert cubic_fields_ramified_in({2}) == []
    assert cubic_fields_ramified_in(set()) == []
    (K,) = cubic_field_data({3})
    assert K.conductor == 9 and K.discriminant == 81
    x = Symbol("x")
    assert sym_disc(Poly(K.polynomial, x)) == 81


def test_cubic_fields_outside_scope():
    with pytest.raises(NotImplementedError):
        cubic_fields_ramified_in({2, 7})


@pytest.mark.parametrize("p, poly", [(2, [1, 0, -4, 0, 2]), (5, [1, 1, 1, 1, 1])])
def test_quartic_polynomials(p, poly):
    assert list(quartic_character_data(p).polynomial) == poly


@pytest.mark.parametrize("p", [2, 5, 13, 17, 29])
def test_quartic_quadratic_subfield(p):
    data = quartic_character_data(p)
    assert data.quadratic_subfield == p
    x = Symbol("x")
    f = Poly(list(data.polynomial), x)
    assert f.is_irreducible
    # the discriminant of a cyclic quartic is a square times p^3
    D = int(sym_disc(f))
    assert D % p ** 3 == 0
    r = D // p ** 3
    assert r > 0 and int(r ** 0.5) ** 2 == r


def test_quartic_rejects_three_mod_four():
    for p in (3, 7, 11):
        with pytest.raises(ValueError):
            quartic_character_data(p)
