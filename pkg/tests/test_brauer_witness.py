import pytest

from ellbrauer.brauer.witness import (
    THREE_ADIC_CLASSES,
    TWO_ADIC_CLASSES,
    Witness,
    combination_label,
    three_adic_witness,
    two_adic_witness,
    witness_obstruction_check,
)
from ellbrauer.curves import WeierstrassCurve
from ellbrauer.lmfdb import fetch_curve


def _two_adic(labels):
    return [two_adic_witness(lab, fetch_curve(lab, offline=True).curve()) for lab in labels]


def test_two_adic_rows():
    rows = {w.name: w.row for w in _two_adic(("11a3", "15a8", "53a1"))}
    assert rows == {"11a3": (1, 0, 1), "15a8": (1, 0, 0), "53a1": (1, 1, 1)}


def test_three_witnesses_obstruct_everything():
    assert witness_obstruction_check(TWO_ADIC_CLASSES, _two_adic(("11a3", "15a8", "53a1")), 2) == set()


def test_without_53a1_beta_survives():
    surv = witness_obstruction_check(TWO_ADIC_CLASSES, _two_adic(("11a3", "15a8")), 2)
    assert surv == {(0, 1, 0)}
    assert combination_label(TWO_ADIC_CLASSES, (0, 1, 0)) == "beta"


def test_brute_force_survivors():
    # a combination survives iff its dot product with every row vanishes mod 2
    from itertools import product
    ws = _two_adic(("11a3", "15a8"))
    expected = {v for v in product(range(2), repeat=3) if any(v)
                and all(sum(a * b for a, b in zip(v, w.row)) % 2 == 0 for w in ws)}
    assert witness_obstruction_check(TWO_ADIC_CLASSES, ws, 2) == expected


def test_no_witnesses():
    assert len(witness_obstruction_check(TWO_ADIC_CLASSES, [], 2)) == 7
    assert len(witness_obstruction_check(THREE_ADIC_CLASSES, [], 3)) == 8


def test_three_adic():
    w0, w1 = three_adic_witness(0), three_adic_witness(1)
    assert w0.row == (1, 1) and w1.row == (1, 0)
    assert witness_obstruction_check(THREE_ADIC_CLASSES, [w0, w1], 3) == set()
    assert witness_obstruction_check(THREE_ADIC_CLASSES, [w0], 3) == {(1, 2), (2, 1)}


def test_row_length_checked():
    with pytest.raises(ValueError):
        witness_obstruction_check(TWO_ADIC_CLASSES, [Witness("bad", (1, 0))], 2)


def test_witness_needs_odd_discriminant():
    with pytest.raises(ValueError):
        two_adic_witness("y^2=x^3-x", WeierstrassCurve.from_ainvs([0, 0, 0, -1, 0]))


def test_labels():
    assert combination_label(THREE_ADIC_CLASSES, (1, 2)) == "sigma+2*theta"
    assert combination_label(TWO_ADIC_CLASSES, (0, 0, 0)) == "0"
