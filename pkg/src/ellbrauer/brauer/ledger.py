"""Bookkeeping for the low-degree part of descent and Leray spectral sequences.

The E_2 entries come from a BaseProfile.  Differentials are never computed
from cochains; each is settled by a named rule (it vanishes, it is an
isomorphism, or it is forced by comparing the E_2 diagonal with a known
abutment).  A differential no rule settles stays unknown and the ledger
reports an interval for the diagonal order instead of a guess.

Layouts:

    BCn-descent    H^p(C_n, H^q(S, Gm)) => H^{p+q}(B C_n, Gm)
    BCn-Leray      H^p(S, R^q c_* Gm)   => H^{p+q}(B C_n, Gm)
    M-two-local    2-local descent for the S3-cover M(2)_S -> M_S
    C4-comparison  descent for B C_2 -> B C_4 over a base containing i
"""

from dataclasses import dataclass, field
from math import gcd

from ..cohomology.modules import FgAbelianGroup
from .profiles import BaseProfile, g_subgroup
from .shapes import GroupShape

FIGURES = ("BCn-descent", "BCn-Leray", "M-two-local", "C4-comparison")

# rule names attached to every settled differential
RULES = {
    "edge-split": "edge maps from the base are split injections because pi^* c^* = id",
    "edge-onto": "the edge map onto the q-axis is surjective, so these classes are permanent cycles",
    "leray-order": "the abutment computed from the Leray sequence has the order of the E2 diagonal",
    "pic-surjects": "Pic(M_S) surjects onto E2^{0,1}; -1 in mu_2 is realized by lambda^6",
    "geometric-point": "Br'(S) splits off, and at a geometric point G vanishes while mu_2 does not",
    "c4-naturality": "over Z[1/2,i] the abutment Br'(B C_4) = units/4 + ... has order 16, "
                     "forcing d2^{1,1} to be an isomorphism; naturality transports this to any S over Z[1/2]",
    "target-dead": "the target is already zero on this page",
    "order-forcing": "the E2 diagonal exceeds the known abutment by exactly the order of this differential",
}


class LedgerError(ValueError):
    pass


@dataclass
class Entry:
    group: GroupShape | None
    label: str
    bounds: tuple | None = None  # (lo, hi) order bounds once the group is undetermined

    def order(self):
        return self.group.order() if self.group is not None else None

    def order_bounds(self):
        if self.group is not None:
            o = self.group.order()
            return (o, o) if o is not None else None
        return self.bounds


@dataclass
class Differential:
    page: int
    source: tuple
    target: tuple
    status: str  # zero, iso, forced, unknown
    rule: str = ""

    def __post_init__(self):
        p, q = self.source
        if self.target != (p + self.page, q - self.page + 1):
            raise LedgerError(f"d_{self.page} from {self.source} cannot land in {self.target}")


@dataclass
class SpectralLedger:
    figure: str
    profile: str
    n: int
    pages: dict  # page -> {(p, q): Entry}
    differentials: list
    abutment: dict = field(default_factory=dict)  # degree -> (GroupShape, label)
    audit: list = field(default_factory=list)

    @property
    def final_page(self) -> int:
        return max(self.pages)

    def entry(self, p: int, q: int, page=None) -> Entry:
        return self.pages[page or self.final_page].get((p, q), Entry(GroupShape(), "0"))

    def diagonal(self, degree: int, page=None) -> list:
        ents = self.pages[page or self.final_page]
        return [((p, q), e) for (p, q), e in sorted(ents.items()) if p + q == degree]

    def diagonal_order(self, degree: int = 2, page=None):
        """Exact order of the diagonal, or None if infinite or undetermined."""
        lo, hi = self.diagonal_bounds(degree, page) or (None, None)
        return lo if lo is not None and lo == hi else None

    def diagonal_bounds(self, degree: int = 2, page=None):
        lo = hi = 1
        for _, e in self.diagonal(degree, page):
            b = e.order_bounds()
            if b is None:
                return None
            lo *= b[0]
            hi *= b[1]
        return lo, hi

    def extension_ambiguous(self, degree: int = 2) -> bool:
        nonzero = [e for _, e in self.diagonal(degree) if e.group is None or not e.group.is_zero()]
        split = degree in self.abutment and self.abutment[degree][1].startswith("split")
        return len(nonzero) > 1 and not split

    def check_invariants(self):
        """Consecutive nonzero differentials never compose, and orders only shrink."""
        for d in self.differentials:
            for e in self.differentials:
                if d.page == e.page and d.target == e.source and d.status == e.status == "iso":
                    raise LedgerError(f"d o d != 0 at {d.source} -> {d.target} -> {e.target}")
        pages = sorted(self.pages)
        for deg in (0, 1, 2):
            first = self.diagonal_order(deg, pages[0])
            last = self.diagonal_bounds(deg, pages[-1])
            if first is not None and last is not None and first % last[1] != 0:
                raise LedgerError(f"E_inf diagonal {deg} does not divide E_2 diagonal")
        return True

    def to_dict(self) -> dict:
        def ent(e):
            return {"label": e.label, "group": None if e.group is None else str(e.group),
                    "bounds": list(e.order_bounds()) if e.order_bounds() else None}

        return {
            "figure": self.figure,
            "profile": self.profile,
            "n": self.n,
            "pages": {str(k): {f"{p},{q}": ent(e) for (p, q), e in sorted(v.items())}
                      for k, v in sorted(self.pages.items())},
            "differentials": [
                {"page": d.page, "source": list(d.source), "target": list(d.target),
                 "status": d.status, "rule": d.rule} for d in self.differentials
            ],
            "diagonal_order_E2": self.diagonal_order(2, 2),
            "diagonal_order_Einf": self.diagonal_order(2),
            "diagonal_bounds_Einf": list(self.diagonal_bounds(2) or []) or None,
            "extension_ambiguous": self.extension_ambiguous(2),
            "abutment": {str(k): [str(g), lab] for k, (g, lab) in self.abutment.items()},
            "audit": list(self.audit),
        }


# -- E2 pages --------------------------------------------------------------------


def _fg(g: FgAbelianGroup) -> GroupShape:
    return GroupShape.of(g)


def _require_fields(profile: BaseProfile):
    for name in ("units", "pic", "brauer"):
        if getattr(profile, name, None) is None:
            raise LedgerError(f"profile {profile.name} is missing {name}")


def _bcn_descent(S: BaseProfile, n: int):
    mu = _fg(S.mu(n))
    E = {
        (0, 0): Entry(S.units, "Gm(S)"),
        (1, 0): Entry(mu, f"mu_{n}(S)"),
        (2, 0): Entry(_fg(S.units_mod(n)), f"Gm(S)/{n}"),
        (3, 0): Entry(mu, f"mu_{n}(S)"),
        (0, 1): Entry(S.pic, "Pic(S)"),
        (1, 1): Entry(_fg(S.pic_torsion(n)), f"Pic(S)[{n}]"),
        (2, 1): Entry(_fg(S.pic_mod(n)), f"Pic(S)/{n}"),
        (0, 2): Entry(S.brauer, "H^2(S,Gm) (torsion part Br'(S))"),
    }
    diffs = [
        Differential(2, (0, 1), (2, 0), "forced", "leray-order"),
        Differential(2, (1, 1), (3, 0), "forced", "leray-order"),
        Differential(2, (0, 2), (2, 1), "zero", "edge-onto"),
        Differential(3, (0, 2), (3, 0), "zero", "edge-onto"),
    ]
    h1 = _fg(S.h1_mu(n))
    abut = {
        1: (S.pic + _fg(S.mu(n)), f"extension of mu_{n}(S) by Pic(S)"),
        2: (S.brauer + h1, f"split: Br'(S) + H^1(S, mu_{n})"),
    }
    return E, diffs, abut


def _bcn_leray(S: BaseProfile, n: int):
    E = {
        (0, 0): Entry(S.units, "Gm(S)"),
        (1, 0): Entry(S.pic, "Pic(S)"),
        (2, 0): Entry(S.brauer, "H^2(S,Gm) (torsion part Br'(S))"),
        (3, 0): Entry(None, "H^3(S,Gm)"),
        (0, 1): Entry(_fg(S.mu(n)), f"mu_{n}(S)"),
        (1, 1): Entry(_fg(S.h1_mu(n)), f"H^1(S, mu_{n})"),
        (0, 2): Entry(GroupShape(), "0"),
    }
    diffs = [
        Differential(2, (0, 1), (2, 0), "zero", "edge-split"),
        Differential(2, (1, 1), (3, 0), "zero", "edge-split"),
    ]
    abut = {2: (S.brauer + _fg(S.h1_mu(n)), f"split: Br'(S) + H^1(S, mu_{n})")}
    return E, diffs, abut


def _two_invertible(S: BaseProfile):
    if S.kind == "localized_integers" and 2 not in S.primes:
        raise LedgerError(f"2 is not invertible on {S.name}")
    if S.characteristic == 2:
        raise LedgerError("characteristic 2 is not supported")


def _m_two_local(S: BaseProfile, n: int):
    _two_invertible(S)
    mu2 = _fg(S.mu(2))
    G = g_subgroup(S)
    gshape = _fg(FgAbelianGroup.from_diagonal([2] * G.dim or [1]))
    pic0 = S.pic.is_zero()
    E = {
        (0, 0): Entry(S.units.localized(2), "Gm(S)_(2)"),
        (1, 0): Entry(mu2, "mu_2(S)"),
        (2, 0): Entry(_fg(S.units_mod(2)), "Gm(S)/2"),
        (3, 0): Entry(mu2, "mu_2(S)"),
        (0, 1): Entry(S.pic.localized(2) + mu2, "Pic(S)_(2) + mu_2(S)"),
        (1, 1): Entry(_fg(S.pic_torsion(2)) + mu2, "Pic(S)[2] + mu_2(S)"),
        (2, 1): Entry(_fg(S.pic_mod(2)) + mu2, "Pic(S)/2 + mu_2(S)"),
        (0, 2): Entry(S.brauer.p_part(2) + _fg(S.pic_torsion(2)) + gshape, "2Br'(S) + Pic(S)[2] + G"),
    }
    diffs = [
        Differential(2, (0, 1), (2, 0), "zero", "pic-surjects"),
        Differential(2, (0, 2), (2, 1), "zero" if pic0 else "unknown", "geometric-point" if pic0 else ""),
        Differential(2, (1, 1), (3, 0), "iso" if pic0 else "unknown", "c4-naturality" if pic0 else ""),
        Differential(3, (0, 2), (3, 0), "zero" if pic0 else "unknown", "target-dead" if pic0 else ""),
    ]
    return E, diffs, {}


def _c4_comparison(S: BaseProfile, n: int):
    _two_invertible(S)
    if S.roots_of_unity is not None and S.roots_of_unity % 4:
        raise LedgerError(f"{S.name} does not contain a primitive 4th root of unity")
    if not S.pic.is_zero():
        raise LedgerError("the comparison is only set up for Pic(S) = 0")
    mu2 = _fg(S.mu(2))
    E = {
        (0, 0): Entry(S.units, "Gm(S)"),
        (1, 0): Entry(mu2, "mu_2(S)"),
        (2, 0): Entry(_fg(S.units_mod(2)), "Gm(S)/2"),
        (3, 0): Entry(mu2, "mu_2(S)"),
        (0, 1): Entry(S.pic + mu2, "Pic(S) + mu_2(S)"),
        (1, 1): Entry(_fg(S.pic_torsion(2)) + mu2, "Pic(S)[2] + mu_2(S)"),
        (2, 1): Entry(_fg(S.pic_mod(2)) + mu2, "Pic(S)/2 + mu_2(S)"),
        (0, 2): Entry(S.brauer + _fg(S.pic_torsion(2)) + _fg(S.units_mod(2)),
                      "Br'(S) + Pic(S)[2] + Gm(S)/2"),
    }
    diffs = [
        Differential(2, (0, 1), (2, 0), "zero", "edge-onto"),
        Differential(2, (0, 2), (2, 1), "zero", "edge-onto"),
        Differential(2, (1, 1), (3, 0), "forced", "order-forcing"),
        Differential(3, (0, 2), (3, 0), "zero", "edge-onto"),
    ]
    # abutment from the Leray layout with n = 4
    abut = {2: (S.brauer + _fg(S.h1_mu(4)), "Br'(B C_4) = Br'(S) + H^1(S, mu_4)")}
    return E, diffs, abut


_BUILDERS = {
    "BCn-descent": _bcn_descent,
    "BCn-Leray": _bcn_leray,
    "M-two-local": _m_two_local,
    "C4-comparison": _c4_comparison,
}


# -- page turning -----------------------------------------------------------------


def _copy(page):
    return {k: Entry(e.group, e.label, e.bounds) for k, e in page.items()}


def _resolve_forced(E2, diffs, abut, audit):
    """Settle 'forced' differentials by comparing the E2 diagonal with the abutment."""
    forced = [d for d in diffs if d.status == "forced"]
    if not forced:
        return
    for deg in sorted({d.source[0] + d.source[1] for d in forced} | {d.target[0] + d.target[1] for d in forced}):
        touching = [d for d in forced if deg in (sum(d.source), sum(d.target))]
        if not touching or deg not in abut:
            continue
        diag = [e.group for (p, q), e in E2.items() if p + q == deg]
        if any(g is None for g in diag):
            continue
        total = GroupShape()
        for g in diag:
            total = total + g
        known = abut[deg][0]
        # infinite summands must match exactly; the comparison is on the finite parts
        if (total.free, total.qz, total.qpzp) != (known.free, known.qz, known.qpzp):
            continue
        e2, target = total.finite.order(), known.finite.order()
        if e2 % target:
            raise LedgerError(f"abutment of order {target} cannot be a subquotient of order {e2}")
        ratio = e2 // target
        if ratio == 1:
            for d in touching:
                d.status = "zero"
            audit.append(f"degree {deg}: E2 diagonal {e2} equals abutment, touching differentials vanish")
        elif len(touching) == 1:
            d = touching[0]
            so, to = E2[d.source].order(), E2[d.target].order()
            if so == to == ratio:
                d.status = "iso"
                audit.append(f"degree {deg}: E2 diagonal {e2}, abutment {target}; d_{d.page} "
                              f"{d.source}->{d.target} must be an isomorphism")
    for d in forced:
        if d.status == "forced":
            d.status = "unknown"


def _turn(page, diffs, r):
    nxt = _copy(page)
    for d in diffs:
        if d.page != r:
            continue
        src, tgt = nxt.get(d.source), nxt.get(d.target)
        if src is None or tgt is None or d.status == "zero":
            continue
        if d.status == "iso":
            if src.group is None or tgt.group is None or src.group != tgt.group:
                raise LedgerError(f"d_{r} {d.source}->{d.target} cannot be an isomorphism")
            nxt[d.source] = Entry(GroupShape(), f"ker d_{r}")
            nxt[d.target] = Entry(GroupShape(), f"coker d_{r}")
        elif d.status == "unknown":
            bs, bt = src.order_bounds(), tgt.order_bounds()
            if bs is None or bt is None:
                nxt[d.source] = Entry(None, f"ker d_{r} on {src.label}")
                nxt[d.target] = Entry(None, f"coker d_{r} on {tgt.label}")
                continue
            m = gcd(bs[1], bt[1])
            nxt[d.source] = Entry(None, f"ker d_{r} on {src.label}", (max(1, bs[0] // m), bs[1]))
            nxt[d.target] = Entry(None, f"coker d_{r} on {tgt.label}", (max(1, bt[0] // m), bt[1]))
    return nxt


def _c4_certificate() -> str:
    """Run the comparison ledger over Z[1/2,i] and confirm it forces the isomorphism."""
    from .profiles import gaussian_localized

    led = descent_ledger(gaussian_localized(), "C4-comparison")
    d = next(d for d in led.differentials if d.source == (1, 1))
    if d.status != "iso":
        raise LedgerError("the comparison over Z[1/2,i] does not force d2^{1,1}")
    return (f"c4-naturality checked: over Z[1/2,i] the E2 diagonal {led.diagonal_order(2, 2)} "
            f"meets the abutment {led.abutment[2][0]} only if d2^{{1,1}} is an isomorphism")


def descent_ledger(profile: BaseProfile, figure: str, n: int = 2) -> SpectralLedger:
    """E_2 through E_inf for one of the four layouts in total degrees <= 2."""
    if figure not in _BUILDERS:
        raise ValueError(f"unknown figure {figure!r}; choose from {FIGURES}")
    _require_fields(profile)
    E2, diffs, abut = _BUILDERS[figure](profile, n)
    audit = []
    _resolve_forced(E2, diffs, abut, audit)
    if any(d.rule == "c4-naturality" for d in diffs):
        audit.append(_c4_certificate())
    for d in diffs:
        if d.status in ("zero", "iso") and d.rule:
            audit.append(f"d_{d.page}^{{{d.source[0]},{d.source[1]}}} {d.status}: {d.rule} ({RULES[d.rule]})")
        elif d.status == "unknown":
            audit.append(f"d_{d.page}^{{{d.source[0]},{d.source[1]}}} unknown: bounds only")
    E3 = _turn(E2, diffs, 2)
    Einf = _turn(E3, diffs, 3)  # no later differential touches total degree <= 2; stored as page 4
    led = SpectralLedger(figure, profile.name, n, {2: E2, 3: E3, 4: Einf}, diffs, abut, audit)
    led.check_invariants()
    return led
