import json

import pytest

from ellbrauer.brauer.verdict import final_verdict


def test_full_verdict():
    rep = final_verdict("full")
    assert rep["result"] == "0"
    assert rep["parts"] == {"p2": "0", "p3": "0", "pLarge": "0"}
    primes = [w["prime"] for w in rep["witnesses"]]
    assert primes.count(2) == 3 and primes.count(3) == 2
    assert any("unit k = 1" in a for a in rep["audit"])
    json.dumps(rep)


def test_without_53a1():
    rep = final_verdict("without-53a1")
    assert rep["result"] == "undetermined: beta unobstructed"


def test_finite_field_mode():
    assert final_verdict("fq", q=7)["result"] == "Z/12"
    assert final_verdict("fq", q=25)["result"] == "Z/12"


def test_bad_mode():
    with pytest.raises(ValueError):
        final_verdict("partial")
