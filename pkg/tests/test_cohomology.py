from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ellbrauer.cohomology.cohomology import (
    cochain_differential_squares_to_zero,
    cohomology_data,
    group_cohomology,
)
from ellbrauer.cohomology.linalg import matmul, smith_normal_form, snf
from ellbrauer.cohomology.maps import (
    ShortExactSequence,
    connecting_map,
    invariants_generator,
    transfer_composition_check,
)
from ellbrauer.cohomology.modules import (
    FgAbelianGroup,
    GroupModule,
    rho,
    rho_inclusion,
    rho_tilde,
    trivial_module,
    with_coefficients,
)
from ellbrauer.cohomology.resolution import bar_resolution, resolution_for, standard_group

S3 = standard_group("S3")
COEFFS = [0, 2, 3, 4, 12]


def fg(*torsion, rank=0):
    return FgAbelianGroup.from_diagonal([0] * rank + list(torsion) or [1])


def torsion_of(n, k):
    """M[k] for M = Z (n = 0) or Z/n."""
    return fg() if n == 0 else fg(gcd(n, k))


def quotient_of(n, k):
    """M/k for M = Z or Z/n."""
    return fg(k) if n == 0 else fg(gcd(n, k))


# -- Smith normal form -------------------------------------------------------------------


def _det(M):
    from sympy import Matrix
    return Matrix(M).det()


def test_snf_examples():
    D, U, V = smith_normal_form([[1, 0], [0, 1]])
    assert D == [[1, 0], [0, 1]]
    D, U, V = smith_normal_form([[2, 0], [0, 3]])
    assert D == [[1, 0], [0, 6]]
    D, U, V = smith_normal_form([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]]


@settings(max_examples=60)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_snf_is_a_unimodular_diagonalization(m, n, data):
    A = [[data.draw(st.integers(-30, 30)) for _ in range(n)] for _ in range(m)]
    D, U, V = smith_normal_form(A, n)
    assert matmul(matmul(U, A), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = snf(A, n).diag
    assert all(d > 0 for d in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))


# -- the trivial module table ---------------------------------------------------------


@pytest.mark.parametrize("n", COEFFS)
def test_trivial_table(n):
    M = trivial_module(S3, n)
    expected = [
        fg(rank=1) if n == 0 else fg(n),
        torsion_of(n, 2),
        quotient_of(n, 2),
        torsion_of(n, 6),
        quotient_of(n, 6),
    ]
    assert [group_cohomology(M, i) for i in range(5)] == expected


@pytest.mark.parametrize("n", COEFFS)
def test_rho_tilde_table(n):
    M = with_coefficients(rho_tilde(S3), n)
    expected = [torsion_of(n, 3), quotient_of(n, 3), fg(), fg()]
    assert [group_cohomology(M, i) for i in range(4)] == expected


def _tate_h0(M):
    """M^G / N M by enumerating a finite module."""
    from itertools import product
    n = M.exponent_if_homogeneous()
    elems = {M.canonical(v) for v in product(range(n), repeat=M.k)}
    fixed = {v for v in elems if all(M.canonical([sum(a * b for a, b in zip(row, v)) for row in M.matrix(g)]) == v
                                     for g in range(M.group.order))}
    norms = set()
    for v in elems:
        s = [0] * M.k
        for g in range(M.group.order):
            gv = [sum(a * b for a, b in zip(row, v)) for row in M.matrix(g)]
            s = [x + y for x, y in zip(s, gv)]
        norms.add(M.canonical(s))
    return len(fixed) // len(norms)


@pytest.mark.parametrize("n", [2, 3, 4, 12])
def test_degree_four_matches_tate_periodicity(n):
    # S3 has periodic cohomology of period 4, so H^4 is the Tate group M^G / N M
    for M in (trivial_module(S3, n), with_coefficients(rho_tilde(S3), n)):
        assert group_cohomology(M, 4).order() == _tate_h0(M)


def test_degree_four_integral():
    assert group_cohomology(trivial_module(S3, 0), 4) == fg(6)
    assert group_cohomology(rho_tilde(S3), 4) == fg()


@pytest.mark.parametrize("M, i", [
    (trivial_module(S3, 0), 1), (trivial_module(S3, 0), 2), (trivial_module(S3, 4), 2),
    (rho_tilde(S3), 1), (with_coefficients(rho_tilde(S3), 3), 2),
])
def test_greedy_agrees_with_bar(M, i):
    assert group_cohomology(M, i, kind="greedy") == group_cohomology(M, i, kind="bar")


def test_degree_above_four_rejected():
    with pytest.raises(ValueError):
        group_cohomology(trivial_module(S3, 0), 5)


def test_cyclic_groups():
    for n in (2, 3, 4):
        G = standard_group(f"C{n}")
        M = trivial_module(G, 0)
        assert [group_cohomology(M, i) for i in range(5)] == [fg(rank=1), fg(), fg(n), fg(), fg(n)]


def test_sign_module_over_c4():
    G = standard_group("C4")
    M = GroupModule.from_generators(G, {"g": [[-1]]}, 1)
    # H^odd(C4, Z^-) = Z/2, H^even>0 = 0
    assert [group_cohomology(M, i) for i in range(4)] == [fg(), fg(2), fg(), fg(2)]


# -- invariants, connecting maps, transfer, Shapiro --------------------------------------


def test_invariants_generators():
    g = invariants_generator(with_coefficients(rho_tilde(S3), 3))
    assert g.orders == (3,) and g.labels == ("[t]+[t-1]",)
    assert invariants_generator(with_coefficients(rho_tilde(S3), 2)).orders == ()
    g = invariants_generator(trivial_module(S3, 5))
    assert g.orders == (5,)


def _augmentation_sequence():
    X = rho_inclusion(S3)
    return ShortExactSequence(rho_tilde(S3), rho(S3), trivial_module(S3, 0),
                              tuple(map(tuple, X)), ((1, 1, 1),))


def test_connecting_map_of_augmentation_sequence():
    v = connecting_map(_augmentation_sequence(), [1])
    assert v.orders == (3,)
    assert v.order == 3  # generates H^1(S3, rho~) = Z/3


def test_connecting_map_split_sequence_is_zero():
    Z = trivial_module(S3, 0)
    ZZ = Z.direct_sum(Z)
    ses = ShortExactSequence(Z, ZZ, Z, ((1,), (0,)), ((0, 1),))
    assert connecting_map(ses, [1]).is_zero


def test_connecting_map_times_two():
    Z = trivial_module(S3, 0)
    ses = ShortExactSequence(Z, Z, trivial_module(S3, 2), ((2,),), ((1,),))
    assert connecting_map(ses, [1]).is_zero


def test_non_exact_sequence_rejected():
    Z = trivial_module(S3, 0)
    ses = ShortExactSequence(Z, Z, trivial_module(S3, 2), ((4,),), ((1,),))
    with pytest.raises(ValueError):
        connecting_map(ses, [1])


@pytest.mark.parametrize("M, i", [
    (trivial_module(S3, 0), 2), (trivial_module(S3, 12), 1), (rho_tilde(S3), 1),
    (trivial_module(S3, 12), 3), (with_coefficients(rho_tilde(S3), 12), 3), (trivial_module(S3, 3), 0),
])
def test_transfer_after_restriction_is_multiplication_by_three(M, i):
    assert transfer_composition_check(M, i)


@pytest.mark.parametrize("n", [0, 4])
def test_shapiro(n):
    C2 = standard_group("C2")
    for i in range(4):
        assert group_cohomology(with_coefficients(rho(S3), n), i) == group_cohomology(trivial_module(C2, n), i)


# -- d o d = 0 on random modules ---------------------------------------------------------


def _random_module(kind, n):
    if kind == "trivial":
        return trivial_module(S3, n)
    if kind == "rho~":
        return with_coefficients(rho_tilde(S3), n)
    if kind == "rho":
        return with_coefficients(rho(S3), n)
    return with_coefficients(rho_tilde(S3).direct_sum(trivial_module(S3, 0)), n)


@settings(max_examples=25)
@given(st.sampled_from(["trivial", "rho~", "rho", "sum"]), st.sampled_from([0, 2, 3, 5, 6, 12]),
       st.integers(0, 3), st.sampled_from(["greedy", "bar"]))
def test_cochain_differentials_square_to_zero(kind, n, i, res_kind):
    if res_kind == "bar":
        i = min(i, 1)
        res = bar_resolution(S3, i + 2)
    else:
        res = resolution_for("S3")
    assert cochain_differential_squares_to_zero(res, _random_module(kind, n), i)


def test_resolutions_are_exact():
    assert resolution_for("S3").check()
    assert resolution_for("C4").check()
    assert bar_resolution(S3, 2).check()
