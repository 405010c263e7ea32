import json
import urllib.error

import pytest

from ellbrauer import lmfdb
from ellbrauer.lmfdb import (
    DataIntegrityError,
    OfflineError,
    fetch_curve,
    fetch_curves,
    fixture_labels,
    validate_label,
    write_cache,
)

RECORD_37A1 = {"label": "37a1", "ainvs": [0, 0, 1, -1, 0], "disc": 37, "conductor": 37}


def fake_fetcher(payload, calls=None):
    def fetch(url, timeout):
        if calls is not None:
            calls.append(url)
        return json.dumps(payload).encode()
    return fetch


@pytest.mark.parametrize("label, ainvs, disc", [
    ("11a3", (0, -1, 1, 0, 0), -11),
    ("15a8", (1, -2, 0, 1, 0), -15),
    ("53a1", (1, -1, 1, 0, 0), -53),
])
def test_fixtures(label, ainvs, disc):
    rec = fetch_curve(label, offline=True)
    assert rec.ainvs == ainvs and rec.discriminant == disc and rec.source == "fixture"
    assert rec.curve().invariants().disc == disc


def test_fixture_set():
    assert fixture_labels() == ["11a3", "15a8", "53a1"]


def test_label_syntax():
    assert validate_label(" 389a1 ") == "389a1"
    for bad in ("11", "a1", "11A1", "11a", "11a3; rm -rf"):
        with pytest.raises(ValueError):
            validate_label(bad)


def test_network_then_cache_round_trip(isolated_cache):
    calls = []
    first = fetch_curve("37a1", fetcher=fake_fetcher({"data": [RECORD_37A1]}, calls))
    assert first.source == "network" and len(calls) == 1
    assert (isolated_cache / "37a1.json").is_file()
    second = fetch_curve("37a1", offline=True)
    assert second.source == "cache"
    assert second == first
    assert not list(isolated_cache.glob("*.tmp"))


def test_api_sign_and_absolute_discriminant(isolated_cache):
    payload = {"data": [{"Clabel": "37a1", "ainvs": [0, 0, 1, -1, 0], "signD": 1, "absD": 37, "conductor": 37}]}
    assert fetch_curve("37a1", fetcher=fake_fetcher(payload)).discriminant == 37


def test_offline_without_cache():
    with pytest.raises(OfflineError):
        fetch_curve("37a1", offline=True)


def test_network_failure_is_reported(monkeypatch):
    monkeypatch.setattr(lmfdb, "RETRY_DELAY", 0.0)
    calls = []

    def down(url, timeout):
        calls.append(url)
        raise urllib.error.URLError("unreachable")
    with pytest.raises(OfflineError):
        fetch_curve("37a1", fetcher=down)
    assert len(calls) == 2  # one retry


@pytest.mark.parametrize("bad", [
    {"label": "37a1", "ainvs": [0, 0, 1, -1, 0], "disc": 38},
    {"label": "37a1", "ainvs": [0, 0, 1, -1]},
    {"label": "37a1", "ainvs": [0, 0, 1, -1, 0.5]},
    {"label": "37a2", "ainvs": [0, 0, 1, -1, 0], "disc": 37},
])
def test_integrity_errors(bad, isolated_cache):
    with pytest.raises(DataIntegrityError):
        fetch_curve("37a1", fetcher=fake_fetcher({"data": [bad]}))
    assert not (isolated_cache / "37a1.json").exists()


def test_empty_response():
    with pytest.raises(DataIntegrityError):
        fetch_curve("37a1", fetcher=fake_fetcher({"data": []}))


def test_corrupted_cache_is_rejected(isolated_cache):
    rec = fetch_curve("37a1", fetcher=fake_fetcher({"data": [RECORD_37A1]}))
    path = isolated_cache / "37a1.json"
    data = json.loads(path.read_text())
    assert data["discriminant"] == rec.discriminant
    path.write_text(json.dumps({**data, "discriminant": -37}))
    with pytest.raises(DataIntegrityError):
        fetch_curve("37a1", offline=True)


def test_concurrent_fetches(isolated_cache):
    recs = fetch_curves(["11a3", "37a1", "15a8"], fetcher=fake_fetcher({"data": [RECORD_37A1]}))
    assert [r.label for r in recs] == ["11a3", "37a1", "15a8"]


def test_write_cache_explicit_dir(tmp_path):
    rec = fetch_curve("11a3", offline=True)
    path = write_cache(rec, tmp_path / "c")
    assert json.loads(path.read_text())["discriminant"] == -11
    assert fetch_curve("11a3", cache=tmp_path / "c").source == "fixture"
