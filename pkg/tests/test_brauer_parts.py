from itertools import combinations

import pytest

from ellbrauer.brauer.parts import (
    HypothesisError,
    UnsupportedProfileError,
    brauer_of_moduli,
    find_section,
    localized_two_part_closed_form,
    p_part_large,
    resolve_two_extension,
    rho_tilde_invariants,
    three_part,
    two_part,
)
from ellbrauer.brauer.profiles import (
    algebraically_closed,
    finite_field,
    g_subgroup,
    gaussian_localized,
    localized_integers,
    profile_by_name,
)
from ellbrauer.cohomology.modules import FgAbelianGroup

PRIMES = (2, 3, 5, 7, 11, 13)


def fg(*t):
    return FgAbelianGroup.from_diagonal(list(t) or [1])


# -- profiles and G ---------------------------------------------------------------------


def test_profile_names():
    assert profile_by_name("F_9").q == 9
    assert profile_by_name("Z[1/6]").primes == (2, 3)
    assert profile_by_name("Z_{2,5}").primes == (2, 5)
    assert profile_by_name("Z").primes == ()
    with pytest.raises(ValueError):
        profile_by_name("Q_p")


def _subsets_with_two():
    rest = PRIMES[1:]
    for k in range(len(rest) + 1):
        for sub in combinations(rest, k):
            yield (2,) + sub


@pytest.mark.parametrize("P", list(_subsets_with_two()))
def test_g_basis_is_primes_not_three_mod_four(P):
    S = localized_integers(P)
    G = g_subgroup(S)
    assert sorted(G.labels) == sorted(str(p) for p in P if p % 4 != 3)


# -- the 2-part -------------------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27, 49])
def test_finite_field_extension_is_cyclic_of_order_four(q):
    ext = resolve_two_extension(finite_field(q))
    assert ext.group == fg(4)


def test_z_half_extension_and_generators():
    ext = resolve_two_extension(localized_integers((2,)))
    assert ext.group == fg(2, 4)
    orders = dict(ext.generators)
    assert orders["(-1, Delta)_2"] == 2
    assert orders["(chi_2, Delta)_4"] == 4


@pytest.mark.parametrize("P", list(_subsets_with_two()))
def test_closed_form(P):
    assert resolve_two_extension(localized_integers(P)).group == localized_two_part_closed_form(P)


def test_gaussian_and_closed():
    assert resolve_two_extension(gaussian_localized()).group == fg(4, 4)
    assert resolve_two_extension(algebraically_closed()).group == fg()


def test_two_part_includes_base():
    assert str(two_part(localized_integers((2,))).group) == "Z/2 + Z/2 + Z/4"


def test_two_not_inverted_rejected():
    with pytest.raises(UnsupportedProfileError):
        resolve_two_extension(localized_integers((3,)))


# -- the 3-part -------------------------------------------------------------------------


def test_rho_tilde_invariants_stabilize():
    assert rho_tilde_invariants(3) == fg(3)
    assert rho_tilde_invariants(5) == fg()
    assert rho_tilde_invariants(2) == fg()


def test_three_parts():
    assert str(three_part(finite_field(7)).group) == "Z/3"
    assert str(three_part(localized_integers((2, 3))).group) == "Z/3 + Q3/Z3"
    assert three_part(localized_integers((2,))).group.is_zero()
    assert three_part(algebraically_closed()).group.is_zero()


def test_three_part_unsupported():
    with pytest.raises(UnsupportedProfileError):
        three_part(localized_integers((2, 7)))


# -- p >= 5 -------------------------------------------------------------------------


def test_large_primes():
    assert p_part_large(localized_integers((2,)), 5).group.is_zero()
    assert p_part_large(finite_field(7), 5).group.is_zero()
    assert str(p_part_large(localized_integers((2, 5)), 5).group) == "Q5/Z5"


def test_large_prime_hypotheses():
    with pytest.raises(HypothesisError):
        p_part_large(localized_integers((2,)), 5, dense=False)
    # no curve with discriminant a power of 5 is known to the section finder
    assert find_section(localized_integers((5,))) is None
    with pytest.raises(HypothesisError):
        p_part_large(localized_integers((5,)), 7)
    with pytest.raises(ValueError):
        p_part_large(localized_integers((2,)), 3)


def test_sections():
    assert find_section(localized_integers((2,)))[1] == 64
    assert find_section(localized_integers((3,)))[1] == -27


# -- assembly -------------------------------------------------------------------------


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25])
def test_finite_fields_give_z12(q):
    assert str(brauer_of_moduli(finite_field(q)).group) == "Z/12"


def test_z_half_assembly():
    res = brauer_of_moduli(localized_integers((2,)))
    assert str(res.base) == "Z/2"
    assert str(res.group) == "Z/2 + Z/2 + Z/4"
    d = res.to_dict()
    assert d["group"] == "Z/2 + Z/2 + Z/4" and set(d["parts"]) == {"2", "3", "large"}


def test_closed_assembly():
    assert brauer_of_moduli(algebraically_closed()).group.is_zero()
