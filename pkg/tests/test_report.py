import pytest

from ellbrauer.report import SCOPES, format_table, reproduce_report


@pytest.mark.parametrize("scope", SCOPES)
def test_scopes_pass(scope):
    rep = reproduce_report(scope)
    assert rep["passed"], [r for r in rep["rows"] if r["status"] != "PASS"]


def test_p2_table_has_six_symbols():
    rows = reproduce_report("p2")["rows"]
    assert sum(r["item"].endswith(")_2") for r in rows) == 6
    assert rows[-1] == {"item": "Br(M)", "expected": "0", "computed": "0", "status": "PASS"}


def test_table_format():
    text = format_table(reproduce_report("p3"))
    assert text.splitlines()[0].startswith("item")
    assert text.endswith("passed")


def test_bad_scope():
    with pytest.raises(ValueError):
        reproduce_report("p5")
