"""The p-primary parts of Br'(M_S) and their assembly.

Over a base S with 2 invertible,

    2-part:  Br'(S)_2 + Brbar, with 0 -> Gm(S)/2 -> Brbar -> G -> 0,
    3-part:  3Br'(S) + H^1(S, C_3) when 6 is invertible,
    p >= 5:  pBr'(S) when M_S -> S has a section and S[1/2p] is dense.

The extension for Brbar is settled by comparing with S[i], where it becomes
Gm(S[i])/4, or by exhibiting C_4-characters whose doubles are known.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime
from sympy.solvers.diophantine.diophantine import sum_of_squares

from ..cohomology.cohomology import group_cohomology
from ..cohomology.linalg import columns_to_matrix, snf
from ..cohomology.modules import FgAbelianGroup, rho_tilde, with_coefficients
from ..curves import WeierstrassCurve
from . import gf
from .fields import cubic_field_data, quartic_character_data
from .profiles import BaseProfile, g_subgroup, localized_integers
from .shapes import GroupShape
from .witness import THREE_ADIC_CLASSES, three_adic_witness, witness_obstruction_check


class UnsupportedProfileError(NotImplementedError):
    pass


class HypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class Part:
    prime: object  # 2, 3 or a prime >= 5
    group: GroupShape
    audit: tuple = ()

    def __str__(self):
        return str(self.group)


# -- the extension 0 -> Gm(S)/2 -> Brbar -> G -> 0 -----------------------------------------


@dataclass(frozen=True)
class TwoExtension:
    profile: str
    group: FgAbelianGroup | None  # None when no mechanism settles the extension
    units_mod_2: tuple  # labels of the F_2-basis of Gm(S)/2
    g_labels: tuple  # labels of the F_2-basis of G
    lift_orders: tuple  # order of a lift of each basis element of G (None if unknown)
    generators: tuple  # (description, order)
    candidates: tuple  # possible groups when unresolved
    audit: tuple

    @property
    def resolved(self) -> bool:
        return self.group is not None


def _extension_group(m: int, G_basis, doubled) -> FgAbelianGroup:
    """Group on b_1..b_m (2b = 0) and lifts l_g with 2 l_g = iota(g) if doubled else 0."""
    k = len(G_basis)
    cols = []
    for j in range(m):
        cols.append([2 * int(i == j) for i in range(m + k)])
    for t, (g, d) in enumerate(zip(G_basis, doubled)):
        col = [(-x if d else 0) for x in g] + [2 * int(i == t) for i in range(k)]
        cols.append(col)
    s = snf(columns_to_matrix(cols, m + k), len(cols))
    return FgAbelianGroup.from_diagonal(list(s.diag) + [0] * (m + k - s.rank))


# Gaussian integers as pairs (a, b) = a + b i

def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gdivmod_exact(x, y):
    """x / y if y divides x in Z[i], else None."""
    n = y[0] * y[0] + y[1] * y[1]
    num = _gmul(x, (y[0], -y[1]))
    if num[0] % n or num[1] % n:
        return None
    return (num[0] // n, num[1] // n)


_UNITS = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}


def _gaussian_primes(primes):
    """Labelled prime elements of Z[i] above the given rational primes."""
    out = []
    for p in primes:
        if p == 2:
            out.append(("1+i", (1, 1)))
        elif p % 4 == 1:
            a, b = next(sum_of_squares(p, 2))
            out += [(f"{a}+{b}i", (a, b)), (f"{a}-{b}i", (a, -b))]
        else:
            out.append((str(p), (p, 0)))
    return out


def _gaussian_coordinates(n: int, gprimes) -> list:
    """Exponents of n = i^e * prod pi^v in Z[i]: [e mod 4] + [v for each prime]."""
    x = (n, 0)
    vals = []
    for _, g in gprimes:
        v = 0
        while True:
            y = _gdivmod_exact(x, g)
            if y is None:
                break
            x, v = y, v + 1
        vals.append(v)
    if x not in _UNITS:
        raise ArithmeticError(f"{n} does not factor over the given Gaussian primes")
    return [_UNITS[x]] + vals


def _gaussian_comparison(S: BaseProfile, G) -> tuple:
    """Is G -> Gm(S[i])/2 injective?  Returns (answer or None, audit line)."""
    if S.kind == "gaussian":
        return True, "S contains i, so G -> Gm(S[i])/2 is the inclusion"
    if S.kind == "finite_field":
        q = S.q
        qi = q if q % 4 == 1 else q * q
        # the generator g of F_q^x is a square in F_qi iff g^((qi-1)/2) = 1
        nonzero = ((qi - 1) // 2) % (q - 1) != 0
        return nonzero, f"S[i] = F_{qi}: the generator of F_{q}^x is {'not ' if nonzero else ''}a square there"
    if S.kind == "localized_integers":
        gp = _gaussian_primes(S.primes)
        images = []
        for v in G.basis:
            c = [0] * (len(gp) + 1)
            for coef, u in zip(v, S.unit_values):
                if coef % 2:
                    c = [a + b for a, b in zip(c, _gaussian_coordinates(u, gp))]
            images.append([x % 2 for x in c])
        inj = gf.rank(images, 2) == G.dim
        labels = ", ".join(lab for lab, _ in gp)
        return inj, f"images of G in Gm(S[i])/2 on (i, {labels}) have rank {gf.rank(images, 2)} of {G.dim}"
    return None, f"no comparison with S[i] for {S.name}"


def _c4_lifts(S: BaseProfile, G) -> tuple:
    """For each basis element g of G, a C_4-character whose double is the quadratic character of g.

    Then 2[(chi, Delta)_4] = [(g, Delta)_2], so the lift has order 4 and doubles to iota(g).
    Returns (list of descriptions or None per element, audit lines).
    """
    out, audit = [], []
    for v, lab in zip(G.basis, G.labels):
        if S.kind == "finite_field":
            out.append(f"(chi_4, Delta)_4 with chi_4 the character of F_{S.q ** 4}/F_{S.q}")
            audit.append(f"{lab}: F_{S.q ** 4}/F_{S.q} is cyclic of degree 4 with quadratic subfield F_{S.q ** 2} = F_{S.q}(sqrt g)")
            continue
        if S.kind != "localized_integers":
            out.append(None)
            continue
        parts = [u for coef, u in zip(v, S.unit_values) if coef % 2]
        if any(u < 0 or not (u == 2 or u % 4 == 1) for u in parts):
            out.append(None)
            audit.append(f"{lab}: no C_4-character available (factor -1 or a prime 3 mod 4)")
            continue
        fields = [quartic_character_data(u) for u in parts]
        desc = "*".join(f"chi_{d.p}" for d in fields)
        out.append(f"({desc}, Delta)_4")
        for d in fields:
            audit.append(f"{lab}: chi_{d.p} cut out by {_poly_str(d.polynomial)}, conductor {d.conductor}, "
                         f"quadratic subfield Q(sqrt {d.quadratic_subfield})")
    return out, audit


def _poly_str(coeffs, var="x") -> str:
    n = len(coeffs) - 1
    terms = []
    for i, c in enumerate(coeffs):
        e = n - i
        if c == 0:
            continue
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        if mono:
            coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
            terms.append(f"{coef}{mono}")
        else:
            terms.append(str(c))
    return " + ".join(terms).replace("+ -", "- ")


def resolve_two_extension(profile: BaseProfile) -> TwoExtension:
    """The group Brbar'(M_S)_2 = coker(Br'(S) -> Br'(M_S))_2 for Pic(S) = 0."""
    S = profile
    if not S.pic.is_zero():
        raise UnsupportedProfileError("only profiles with Pic(S) = 0 are supported")
    if S.kind == "localized_integers" and 2 not in S.primes:
        raise UnsupportedProfileError(f"2 is not invertible on {S.name}")
    units = S.mod2_labels()
    m = len(units)
    G = g_subgroup(S)
    k = G.dim
    audit = [f"Gm(S)/2 has basis ({', '.join(units)})" if m else "Gm(S)/2 = 0",
             f"G has basis ({', '.join(G.labels)})" if k else "G = 0"]
    base_gens = tuple((f"({u}, Delta)_2", 2) for u in units)
    if k == 0:
        grp = FgAbelianGroup.from_diagonal([2] * m or [1])
        audit.append("G = 0: nothing to resolve")
        return TwoExtension(S.name, grp, units, (), (), base_gens, (grp,), tuple(audit))

    split = _extension_group(m, G.basis, [False] * k)
    nonsplit = _extension_group(m, G.basis, [True] * k)
    inj, line = _gaussian_comparison(S, G)
    audit.append(line)
    lifts, lift_audit = _c4_lifts(S, G)
    audit += lift_audit

    if all(lifts):
        audit.append("every basis element of G lifts to an order 4 class doubling to (g, Delta)_2")
        grp = nonsplit
    elif inj:
        audit.append("G -> Gm(S[i])/2 is injective, so no nonzero lift of G is 2-torsion")
        grp = nonsplit
    else:
        audit.append("neither mechanism applies; the extension is left open")
        return TwoExtension(S.name, None, units, G.labels, (None,) * k, base_gens,
                            (split, nonsplit), tuple(audit))

    gens = []
    for desc, lab in zip(lifts, G.labels):
        gens.append((desc or f"lift of {lab}", 4))
    # classes (u, Delta)_2 outside iota(G) complete the generating set
    span = [list(v) for v in G.basis]
    for j, u in enumerate(units):
        e = [int(i == j) for i in range(m)]
        if not gf.in_span(span, e, 2):
            span.append(e)
            gens.append((f"({u}, Delta)_2", 2))
    return TwoExtension(S.name, grp, units, G.labels, (4,) * k, tuple(gens), (grp,), tuple(audit))


def localized_two_part_closed_form(P) -> FgAbelianGroup:
    """Z/4 for each p in P with p != 3 mod 4, Z/2 for each p = 3 mod 4 and for -1."""
    diag = [2]
    for p in sorted(set(P)):
        diag.append(2 if p % 4 == 3 else 4)
    return FgAbelianGroup.from_diagonal(diag)


def two_part(profile: BaseProfile) -> Part:
    ext = resolve_two_extension(profile)
    if not ext.resolved:
        raise UnsupportedProfileError(f"the 2-extension over {profile.name} is unresolved")
    return Part(2, profile.brauer.p_part(2) + GroupShape.of(ext.group), ext.audit)


# -- the 3-part ---------------------------------------------------------------------


def rho_tilde_invariants(ell: int, max_k: int = 2) -> FgAbelianGroup:
    """The ell-part of (rho~ (x) Q/Z)^{S_3}, from H^0(S_3, rho~ (x) Z/ell^k) stabilizing.

    If the ell^k- and ell^(k+1)-torsion agree then the ell-primary part is finite
    and equal to both.
    """
    prev = None
    for k in range(1, max_k + 1):
        cur = group_cohomology(with_coefficients(rho_tilde(), ell ** k), 0)
        if prev is not None and cur == prev:
            return cur
        prev = cur
    raise ArithmeticError(f"H^0(S_3, rho~ (x) Z/{ell}^k) did not stabilize by k = {max_k}")


def h1_c3(profile: BaseProfile) -> tuple:
    """H^1(S, C_3) = Hom(pi_1(S), Z/3) with an audit line."""
    S = profile
    if S.kind == "finite_field":
        return FgAbelianGroup.cyclic(3), "H^1(F_q, C_3) = Hom(Z^, Z/3) = Z/3"
    if S.kind == "algebraically_closed":
        return FgAbelianGroup(), "H^1(k, C_3) = 0"
    if S.kind == "localized_integers":
        fields = cubic_field_data(S.primes)
        polys = ", ".join(f"{_poly_str(f.polynomial)} (disc {f.discriminant})" for f in fields) or "none"
        return (FgAbelianGroup.from_diagonal([3] * len(fields) or [1]),
                f"cyclic cubic fields unramified outside {set(S.primes) or '{}'}: {polys}")
    raise UnsupportedProfileError(f"H^1(S, C_3) is not available for {S.name}")


def three_part(profile: BaseProfile) -> Part:
    S = profile
    if S.kind == "finite_field":
        inv = rho_tilde_invariants(3)
        h1, line = h1_c3(S)
        if inv != h1:
            raise ArithmeticError("(rho~ (x) Q/Z)^{S_3} and H^1(F_q, C_3) disagree")
        return Part(3, GroupShape.of(inv), (
            "3Br(M_Fq) = (3Br(X_Fq))^{S_3} with Br(X_Fq) = rho~ (x) Q/Z",
            f"H^0(S_3, rho~ (x) Z/3^k) stabilizes at {inv}", line))
    if S.kind == "algebraically_closed":
        return Part(3, GroupShape(), ("Br(X_k) = 0 by Tsen's theorem",))
    if S.kind == "localized_integers" and {2, 3} <= set(S.primes):
        h1, line = h1_c3(S)
        return Part(3, S.brauer.p_part(3) + GroupShape.of(h1),
                    (f"3Br'(M_S) = 3Br'(S) + H^1(S, C_3) (split)", line))
    if S.kind == "localized_integers" and set(S.primes) == {2}:
        return _three_part_z_half()
    raise UnsupportedProfileError(f"the 3-part over {S.name} is not supported")


def _three_part_z_half() -> Part:
    """3Br(M_Z[1/2]) is the part of 3Br(M_Z[1/6]) that extends over 3; two witnesses kill it."""
    audit = []
    big = three_part(localized_integers((2, 3)))
    audit.append(f"3Br(M_Z[1/6]) = {big.group}; extending classes are 3-torsion combinations of sigma, theta")
    ws = [three_adic_witness(0), three_adic_witness(1)]
    for w in ws:
        audit.append(f"witness {w.name}: {w.detail}, row {list(w.row)}")
    survivors = witness_obstruction_check(THREE_ADIC_CLASSES, ws, 3)
    if survivors:
        raise ArithmeticError(f"unobstructed 3-torsion classes remain: {sorted(survivors)}")
    audit.append("no nonzero combination of sigma, theta survives")
    return Part(3, GroupShape(), tuple(audit))


# -- primes >= 5 --------------------------------------------------------------------

# curves whose discriminant has few prime factors, used to exhibit a section of M_S -> S
_SECTION_CURVES = (
    ((0, 0, 0, -1, 0), "y^2 = x^3 - x"),  # Delta = 64
    ((0, 0, 1, 0, 0), "y^2 + y = x^3"),  # Delta = -27
    ((0, -1, 1, 0, 0), "11a3"),
    ((1, -2, 0, 1, 0), "15a8"),
)


def find_section(profile: BaseProfile):
    """A curve over S with unit discriminant, i.e. an S-point of M, or None."""
    S = profile
    for ainvs, name in _SECTION_CURVES:
        D = Fraction(WeierstrassCurve.from_ainvs(ainvs).discriminant())
        if S.kind == "finite_field":
            if D.numerator % S.characteristic:
                return name, D
        elif S.kind in ("algebraically_closed", "gaussian"):
            if D and S.characteristic == 0:
                return name, D
        elif S.kind == "localized_integers":
            n = abs(D.numerator)
            for p in S.primes:
                while n % p == 0:
                    n //= p
            if n == 1:
                return name, D
    return None


def p_part_large(profile: BaseProfile, p: int, dense: bool | None = None, section: bool | None = None) -> Part:
    """pBr'(M_S) for a prime p >= 5."""
    if p < 5 or not isprime(p):
        raise ValueError("p must be a prime >= 5")
    S = profile
    if S.kind == "finite_field":
        inv = rho_tilde_invariants(p)
        return Part(p, S.brauer.p_part(p) + GroupShape.of(inv), (
            f"pBr(M_Fq) = (pBr(X_Fq))^{{S_3}}; H^0(S_3, rho~ (x) Z/{p}^k) stabilizes at {inv}",))
    if S.kind == "algebraically_closed":
        return Part(p, GroupShape(), ("Br(X_k) = 0 by Tsen's theorem",))
    audit = []
    if dense is None:
        dense = S.kind in ("localized_integers", "gaussian")  # integral, so nonempty opens are dense
        audit.append(f"S is integral, so S[1/{2 * p}] is dense" if dense else "")
    if section is None:
        found = find_section(S)
        section = found is not None
        if found:
            audit.append(f"section: {found[0]} has discriminant {found[1]}, a unit on {S.name}")
    if not dense or not section:
        raise HypothesisError(f"density or section hypothesis not established for {S.name}")
    audit.append(f"{p}Br'(M_S) = {p}Br'(S)")
    return Part(p, S.brauer.p_part(p), tuple(a for a in audit if a))


def large_part(profile: BaseProfile, bound: int = 50) -> Part:
    """All p >= 5 at once: the p >= 5 part of Br'(S) plus whatever the finite-field route adds."""
    S = profile
    audit = []
    extra = GroupShape()
    for p in range(5, bound + 1):
        if not isprime(p):
            continue
        part = p_part_large(S, p)
        base = S.brauer.p_part(p)
        if part.group != base:
            extra = extra + part.group
        audit.append(f"p = {p}: {part.group}")
    audit.append(f"primes beyond {bound} contribute only through Br'(S)")
    return Part("large", extra, tuple(audit))


# -- assembly -------------------------------------------------------------------------


@dataclass(frozen=True)
class BrauerOfModuli:
    profile: str
    base: GroupShape
    parts: dict = field(default_factory=dict)  # 2, 3, "large" -> Part (contributions beyond Br'(S))
    group: GroupShape = GroupShape()

    def to_dict(self) -> dict:
        return {
            "profile": self.profile,
            "base": str(self.base),
            "group": str(self.group),
            "parts": {str(k): {"group": str(v.group), "audit": list(v.audit)} for k, v in self.parts.items()},
        }


def brauer_of_moduli(profile: BaseProfile) -> BrauerOfModuli:
    """Br'(M_S) = Br'(S) + Brbar_2 + Brbar_3 (+ nothing from p >= 5)."""
    S = profile
    ext = resolve_two_extension(S)
    if not ext.resolved:
        raise UnsupportedProfileError(f"the 2-extension over {S.name} is unresolved")
    p2 = Part(2, GroupShape.of(ext.group), ext.audit)
    three = three_part(S)
    base3 = S.brauer.p_part(3)
    if S.kind == "localized_integers" and set(S.primes) == {2}:
        bar3 = GroupShape()  # 3Br(Z[1/2]) = 0 and 3Br(M) = 0
    else:
        fin = three.group.finite
        fb = base3.finite
        if (three.group.free, three.group.qz, three.group.qpzp) != (base3.free, base3.qz, base3.qpzp):
            raise ArithmeticError("unexpected divisible part in the 3-part")
        bar3 = GroupShape.of(_quotient(fin, fb))
    p3 = Part(3, bar3, three.audit)
    large = large_part(S)
    total = S.brauer + p2.group + p3.group + large.group
    return BrauerOfModuli(S.name, S.brauer, {2: p2, 3: p3, "large": large}, total)


def _quotient(big: FgAbelianGroup, small: FgAbelianGroup) -> FgAbelianGroup:
    """big / small for a split summand small (elementary divisors removed one by one)."""
    rest = list(big.elementary_divisors())
    for d in small.elementary_divisors():
        if d not in rest:
            raise ArithmeticError(f"{small} is not a summand of {big}")
        rest.remove(d)
    return FgAbelianGroup.from_diagonal(rest or [1])
