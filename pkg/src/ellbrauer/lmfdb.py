"""Elliptic curve records from bundled fixtures, a local cache or the LMFDB API.

Lookups go fixture -> cache -> network.  Every record is checked against the
discriminant recomputed from its a-invariants before it is returned or cached.
"""

import json
import os
import re
import tempfile
import time
import urllib.error
import urllib.parse
import urllib.request
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path

from .curves import WeierstrassCurve

API_URL = "https://www.lmfdb.org/api/ec_curvedata/"
TIMEOUT = 10.0
RETRY_DELAY = 1.0
CACHE_ENV = "ELLBRAUER_CACHE_DIR"
URL_ENV = "ELLBRAUER_LMFDB_URL"

_LABEL = re.compile(r"^[1-9][0-9]*[a-z]+[1-9][0-9]*$")


class OfflineError(RuntimeError):
    pass


class DataIntegrityError(ValueError):
    pass


@dataclass(frozen=True)
class CurveRecord:
    label: str
    ainvs: tuple
    discriminant: int
    conductor: int | None
    source: str = field(compare=False)  # fixture, cache or network; not part of equality

    def curve(self) -> WeierstrassCurve:
        return WeierstrassCurve.from_ainvs(self.ainvs)

    def to_json(self) -> dict:
        d = asdict(self)
        d["ainvs"] = list(self.ainvs)
        del d["source"]
        return d


def validate_label(label: str) -> str:
    label = label.strip()
    if not _LABEL.match(label):
        raise ValueError(f"{label!r} is not a Cremona label")
    return label


def _record(data: dict, source: str, label: str | None = None) -> CurveRecord:
    ainvs = data.get("ainvs")
    if not isinstance(ainvs, (list, tuple)) or len(ainvs) != 5:
        raise DataIntegrityError("ainvs must be a list of five integers")
    if not all(isinstance(a, int) and not isinstance(a, bool) for a in ainvs):
        raise DataIntegrityError("ainvs must be integers")
    disc = int(WeierstrassCurve.from_ainvs(ainvs).discriminant())
    stored = data.get("disc", data.get("discriminant"))
    if stored is None and "absD" in data and "signD" in data:
        stored = int(data["signD"]) * int(data["absD"])
    if stored is not None and int(stored) != disc:
        raise DataIntegrityError(f"stored discriminant {stored} != recomputed {disc}")
    lab = data.get("label") or data.get("Clabel") or label
    if label is not None and lab != label:
        raise DataIntegrityError(f"record label {lab!r} does not match {label!r}")
    cond = data.get("conductor")
    return CurveRecord(lab, tuple(ainvs), disc, int(cond) if cond is not None else None, source)


# -- fixtures and cache ---------------------------------------------------------------


def fixture_labels() -> list:
    root = resources.files("ellbrauer.data").joinpath("fixtures")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def _fixture(label: str):
    f = resources.files("ellbrauer.data").joinpath("fixtures", f"{label}.json")
    if not f.is_file():
        return None
    return _record(json.loads(f.read_text()), "fixture", label)


def cache_dir(path=None) -> Path:
    if path is not None:
        return Path(path)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ellbrauer"


def _cached(label: str, directory: Path):
    f = directory / f"{label}.json"
    if not f.is_file():
        return None
    return _record(json.loads(f.read_text()), "cache", label)


def write_cache(rec: CurveRecord, directory: Path) -> Path:
    """One JSON file per label, written to a temporary file and renamed into place."""
    directory.mkdir(parents=True, exist_ok=True)
    target = directory / f"{rec.label}.json"
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".{rec.label}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(rec.to_json(), fh, sort_keys=True)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return target


# -- network --------------------------------------------------------------------------


def _http_get(url: str, timeout: float) -> bytes:
    req = urllib.request.Request(url, headers={"Accept": "application/json"})
    with urllib.request.urlopen(req, timeout=timeout) as resp:
        return resp.read()


def _query_url(label: str, base: str | None = None) -> str:
    base = base or os.environ.get(URL_ENV) or API_URL
    return base + "?" + urllib.parse.urlencode({"Clabel": label, "_format": "json"})


def _from_network(label: str, fetcher, timeout: float) -> CurveRecord:
    url = _query_url(label)
    last = None
    for attempt in range(2):
        try:
            payload = json.loads(fetcher(url, timeout))
            break
        except (urllib.error.URLError, OSError, TimeoutError) as exc:
            last = exc
            if attempt == 0:
                time.sleep(RETRY_DELAY)
    else:
        raise OfflineError(f"could not reach {url}: {last}")
    rows = payload.get("data") if isinstance(payload, dict) else payload
    if not rows:
        raise DataIntegrityError(f"no record for {label}")
    return _record(rows[0], "network", label)


def fetch_curve(label: str, offline: bool = False, cache=None, fetcher=None,
                timeout: float = TIMEOUT) -> CurveRecord:
    """Resolve a Cremona label: bundled fixture, then on-disk cache, then the API."""
    label = validate_label(label)
    rec = _fixture(label)
    if rec is not None:
        return rec
    directory = cache_dir(cache)
    rec = _cached(label, directory)
    if rec is not None:
        return rec
    if offline:
        raise OfflineError(f"{label} is neither bundled nor cached and the network is disabled")
    rec = _from_network(label, fetcher or _http_get, timeout)
    write_cache(rec, directory)
    return rec


def fetch_curves(labels, **kwargs) -> list:
    with ThreadPoolExecutor(max_workers=4) as pool:
        return list(pool.map(lambda lab: fetch_curve(lab, **kwargs), labels))
