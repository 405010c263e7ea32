"""Reproduction tables: each published value next to the recomputed one."""

from dataclasses import dataclass

from .arith.cyclotomic import trace_pi_power
from .brauer.localized import br_localized_integers
from .brauer.parts import brauer_of_moduli, localized_two_part_closed_form, resolve_two_extension, three_part
from .brauer.profiles import algebraically_closed, finite_field, localized_integers
from .brauer.verdict import WITNESS_CURVES, final_verdict
from .brauer.witness import TWO_ADIC_CLASSES, two_adic_witness, witness_obstruction_check
from .hilbert.cubic import cubic_symbol_legendre
from .hilbert.quadratic import hilbert_symbol
from .lmfdb import fetch_curve

SCOPES = ("all", "p2", "p3", "fq", "zp")

# (curve label, second argument, expected symbol at 2)
QUADRATIC_TABLE = (
    ("11a3", 2, -1), ("11a3", -1, 1),
    ("15a8", 2, 1), ("15a8", -1, 1),
    ("53a1", 2, -1), ("53a1", -1, -1),
)


@dataclass(frozen=True)
class Row:
    item: str
    expected: str
    computed: str

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def _safe(fn):
    try:
        return str(fn())
    except Exception as exc:  # a failing computation is reported, not raised
        return f"error: {type(exc).__name__}: {exc}"


def _p2_rows(offline, cache):
    rows = []
    for label, b, expected in QUADRATIC_TABLE:
        def sym(label=label, b=b):
            D = fetch_curve(label, offline=offline, cache=cache).curve().invariants().disc
            return hilbert_symbol(int(D), b, 2)
        rows.append(Row(f"({label} disc, {b})_2", str(expected), _safe(sym)))

    def obstructed():
        ws = [two_adic_witness(lab, fetch_curve(lab, offline=offline, cache=cache).curve())
              for lab in WITNESS_CURVES]
        return 7 - len(witness_obstruction_check(TWO_ADIC_CLASSES, ws, 2))
    rows.append(Row(f"obstructed combinations of alpha, beta, gamma ({', '.join(WITNESS_CURVES)})",
                    "7", _safe(obstructed)))
    rows.append(Row("Br(M)", "0", _safe(lambda: final_verdict("full", offline=offline, cache=cache)["result"])))
    return rows


def _p3_rows():
    rows = []
    for b, expected in ((0, "zeta^1"), (1, "zeta^0")):
        rows.append(Row(f"(zeta, t(t-1))_pi at t = 2 + {b}*pi", expected,
                        _safe(lambda b=b: f"zeta^{cubic_symbol_legendre(b).exponent}")))
    rows.append(Row("3Br(M_Z[1/2])", "0", _safe(lambda: three_part(localized_integers((2,))).group)))
    rows.append(Row("3Br'(M_Z[1/6])", "Z/3 + Q3/Z3", _safe(lambda: three_part(localized_integers((2, 3))).group)))
    for m, expected in ((0, 2), (3, 0), (5, -27)):
        rows.append(Row(f"Tr(pi^{m})", str(expected), _safe(lambda m=m: trace_pi_power(m))))
    return rows


def _fq_rows(qs=(3, 5, 7, 9, 25)):
    rows = [Row(f"Br(M_F_{q})", "Z/12", _safe(lambda q=q: brauer_of_moduli(finite_field(q)).group)) for q in qs]
    rows.append(Row("Br(M_k), k algebraically closed", "0",
                    _safe(lambda: brauer_of_moduli(algebraically_closed()).group)))
    return rows


def _zp_rows():
    rows = []
    for P, expected in (((), "0"), ((2,), "Z/2"), ((3,), "Z/2"), ((5,), "Z/2"), ((2, 3), "Z/2 + Q/Z")):
        rows.append(Row(f"Br(Z_P), P = {set(P) or '{}'}", expected, _safe(lambda P=P: br_localized_integers(P))))
    rows.append(Row("Br(Z[1/6]) 12-torsion", "Z/2 + Z/12",
                    _safe(lambda: br_localized_integers((2, 3)).truncation(12))))
    rows.append(Row("Br(M_Z[1/2])", "Z/2 + Z/2 + Z/4", _safe(lambda: brauer_of_moduli(localized_integers((2,))).group)))
    for P in ((2,), (2, 3), (2, 5), (2, 3, 5, 7, 11, 13)):
        rows.append(Row(f"2-extension over Z_P, P = {set(P)}", str(localized_two_part_closed_form(P)),
                        _safe(lambda P=P: resolve_two_extension(localized_integers(P)).group)))
    return rows


def reproduce_report(scope: str = "all", offline: bool = True, cache=None) -> dict:
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    rows = []
    if scope in ("all", "p2"):
        rows += _p2_rows(offline, cache)
    if scope in ("all", "p3"):
        rows += _p3_rows()
    if scope in ("all", "fq"):
        rows += _fq_rows()
    if scope in ("all", "zp"):
        rows += _zp_rows()
    return {
        "scope": scope,
        "rows": [{"item": r.item, "expected": r.expected, "computed": r.computed,
                  "status": "PASS" if r.ok else "FAIL"} for r in rows],
        "passed": all(r.ok for r in rows),
    }


def format_table(report: dict) -> str:
    rows = report["rows"]
    w1 = max(len(r["item"]) for r in rows)
    w2 = max(len(r["expected"]) for r in rows)
    w3 = max(len(r["computed"]) for r in rows)
    lines = [f"{'item':<{w1}}  {'expected':<{w2}}  {'computed':<{w3}}  status"]
    lines.append("-" * len(lines[0]))
    for r in rows:
        lines.append(f"{r['item']:<{w1}}  {r['expected']:<{w2}}  {r['computed']:<{w3}}  {r['status']}")
    n_ok = sum(r["status"] == "PASS" for r in rows)
    lines.append(f"{n_ok}/{len(rows)} passed")
    return "\n".join(lines)
