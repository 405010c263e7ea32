import pytest
from hypothesis import given, settings, strategies as st

from ellbrauer.brauer.ledger import FIGURES, Differential, LedgerError, descent_ledger
from ellbrauer.brauer.profiles import profile_by_name

PROFILES = ["F_3", "F_7", "F_9", "Z", "Z[1/2]", "Z[1/6]", "Z[1/2,i]", "closed"]


def _ledger(profile, figure, n=2):
    try:
        return descent_ledger(profile_by_name(profile), figure, n)
    except (LedgerError, NotImplementedError):
        return None


def test_leray_splits():
    for name in ("F_7", "Z[1/2]", "Z[1/2,i]"):
        L = descent_ledger(profile_by_name(name), "BCn-Leray", 2)
        assert not L.extension_ambiguous(2)
        assert all(d.status == "zero" for d in L.differentials)


def test_two_local_over_finite_field():
    L = descent_ledger(profile_by_name("F_7"), "M-two-local", 2)
    assert L.diagonal_order(2, 2) == 8
    assert L.diagonal_order(2) == 4
    assert L.extension_ambiguous(2)


def test_c4_comparison_over_gaussian():
    L = descent_ledger(profile_by_name("Z[1/2,i]"), "C4-comparison", 2)
    g, _ = L.abutment[2]
    assert str(g) == "Z/4 + Z/4" and g.order() == 16


def test_c4_needs_fourth_roots():
    with pytest.raises(LedgerError):
        descent_ledger(profile_by_name("F_7"), "C4-comparison", 2)


def test_two_local_needs_two_inverted():
    with pytest.raises(LedgerError):
        descent_ledger(profile_by_name("Z"), "M-two-local", 2)


def test_differential_bidegree_checked():
    with pytest.raises(LedgerError):
        Differential(2, (0, 1), (1, 1), "zero")


def test_json_shape():
    d = descent_ledger(profile_by_name("Z[1/2]"), "M-two-local", 2).to_dict()
    assert d["diagonal_order_E2"] == 32 and d["diagonal_order_Einf"] == 16
    assert {"pages", "differentials", "audit", "abutment"} <= set(d)


@settings(max_examples=40)
@given(st.sampled_from(PROFILES), st.sampled_from(FIGURES), st.sampled_from([2, 3, 4]))
def test_page_turns_preserve_divisibility(profile, figure, n):
    L = _ledger(profile, figure, n)
    if L is None:
        return
    assert L.check_invariants()
    e2, einf = L.diagonal_order(2, 2), L.diagonal_order(2)
    if e2 is not None and einf is not None:
        assert e2 % einf == 0
    lo, hi = L.diagonal_bounds(2) or (None, None)
    if lo is not None and hi is not None and e2 is not None:
        assert lo <= hi and e2 % hi == 0
