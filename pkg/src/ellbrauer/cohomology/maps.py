"""Maps between cohomology groups: invariants, connecting maps, restriction, transfer."""

from dataclasses import dataclass
from math import gcd

from .cohomology import CohomologyGroup, cohomology_data, compute_cohomology
from .linalg import columns_to_matrix, hstack, in_lattice, kernel_basis, lattice_basis, matvec, solve
from .modules import GroupModule
from .resolution import resolution_for, restrict_resolution, s3_subgroup


# -- invariants ------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantsGenerator:
    orders: tuple
    vectors: tuple  # one canonical generator per cyclic summand
    labels: tuple  # human-readable form using the module basis names


def _format(M: GroupModule, v) -> str:
    names = M.basis or tuple(f"e{i}" for i in range(M.k))
    terms = []
    for c, nm in zip(v, names):
        if c == 0:
            continue
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        terms.append(f"{coef}{nm}")
    if not terms:
        return "0"
    return "+".join(terms).replace("+-", "-")


def invariants_generator(M: GroupModule) -> InvariantsGenerator:
    """Generators of H^0(G, M) = M^G, normalized within each cyclic summand.

    Among the generators u*v (u a unit modulo the summand order) the one with
    the lexicographically smallest reduced coordinate vector is reported.
    """
    H0 = cohomology_data(M, 0)
    out_orders, out_vecs = [], []
    for d, v in zip(H0.orders(), H0.generators()):
        cands = []
        units = [u for u in range(1, d)] if d else [1, -1]
        for u in units:
            if d and gcd(u, d) != 1:
                continue
            cands.append(M.canonical([u * x for x in v]))
        best = min(cands)
        out_orders.append(d)
        out_vecs.append(best)
    labels = tuple(_format(M, v) for v in out_vecs)
    return InvariantsGenerator(tuple(out_orders), tuple(out_vecs), labels)


# -- connecting maps ------------------------------------------------------------


@dataclass(frozen=True)
class ShortExactSequence:
    """0 -> A --i--> B --j--> C -> 0 with i, j integer matrices on generators."""

    A: GroupModule
    B: GroupModule
    C: GroupModule
    i: tuple
    j: tuple

    def validate(self):
        A, B, C = self.A, self.B, self.C
        i = [list(r) for r in self.i]
        j = [list(r) for r in self.j]
        if not (A.group == B.group == C.group):
            raise ValueError("modules over different groups")
        LA, LB, LC = A.relation_basis(), B.relation_basis(), C.relation_basis()
        for g in range(A.group.order):
            for f, X, Y, L, dom in ((i, A, B, LB, A.k), (j, B, C, LC, B.k)):
                for e in range(dom):
                    x = [int(t == e) for t in range(dom)]
                    lhs = matvec(Y.matrix(g), matvec(f, x))
                    rhs = matvec(f, matvec(X.matrix(g), x))
                    if not in_lattice(L, [a - b for a, b in zip(lhs, rhs)]):
                        raise ValueError("maps are not equivariant")
        for rel, f, L in ((LA, i, LB), (LB, j, LC)):
            for r in rel:
                if not in_lattice(L, matvec(f, r)):
                    raise ValueError("map does not respect the relations")
        # j o i = 0
        for e in range(A.k):
            x = [int(t == e) for t in range(A.k)]
            if not in_lattice(LC, matvec(j, matvec(i, x))):
                raise ValueError("j o i != 0")
        # j surjective
        jl = [list(c) for c in zip(*j)] if j and j[0] else []
        span = lattice_basis(jl + LC, C.k)
        for e in range(C.k):
            if not in_lattice(span, [int(t == e) for t in range(C.k)]):
                raise ValueError("j is not surjective")
        # ker j inside im i
        kerj = _preimage_of_relations(j, B.k, LC)
        il = [list(c) for c in zip(*i)] if i and i[0] else []
        imi = lattice_basis(il + LB, B.k)
        if not all(in_lattice(imi, v) for v in kerj):
            raise ValueError("sequence is not exact in the middle")
        # i injective
        keri = _preimage_of_relations(i, A.k, LB)
        if not all(in_lattice(LA, v) for v in keri):
            raise ValueError("i is not injective")
        return True


def _preimage_of_relations(f, dom, L):
    """{x in Z^dom : f x in L}."""
    if L:
        big = hstack(f, columns_to_matrix(L, len(f)))
        ncols = dom + len(L)
    else:
        big, ncols = f, dom
    if not big:
        return [[int(a == b) for a in range(dom)] for b in range(dom)]
    return [v[:dom] for v in kernel_basis(big, ncols)]


def _solve_mod(f, L, target, dom):
    """x with f x = target modulo the lattice L."""
    if L:
        big = hstack([list(r) for r in f], columns_to_matrix(L, len(f)))
        sol = solve(big, target, dom + len(L))
    else:
        sol = solve([list(r) for r in f], target, dom)
    return None if sol is None else sol[:dom]


@dataclass(frozen=True)
class ConnectingValue:
    crossed_hom: tuple  # f(g) in A for every group element g
    coordinates: tuple  # class in H^1(G, A)
    orders: tuple

    @property
    def is_zero(self) -> bool:
        return all(c % d == 0 if d else c == 0 for c, d in zip(self.coordinates, self.orders))

    @property
    def order(self) -> int:
        o = 1
        for c, d in zip(self.coordinates, self.orders):
            if d == 0:
                if c:
                    return 0
                continue
            o = o * (d // gcd(c, d)) // gcd(o, d // gcd(c, d))
        return o


def connecting_map(ses: ShortExactSequence, c) -> ConnectingValue:
    """The image of an invariant c in C under H^0(G, C) -> H^1(G, A)."""
    ses.validate()
    A, B, C = ses.A, ses.B, ses.C
    G = A.group
    LB, LC = B.relation_basis(), C.relation_basis()
    c = list(c)
    for g in range(G.order):
        diff = [a - b for a, b in zip(matvec(C.matrix(g), c), c)]
        if not in_lattice(LC, diff):
            raise ValueError("c is not invariant")
    b = _solve_mod(ses.j, LC, c, B.k)
    if b is None:
        raise ArithmeticError("could not lift c")
    f = []
    for g in range(G.order):
        delta = [x - y for x, y in zip(matvec(B.matrix(g), b), b)]
        a = _solve_mod(ses.i, LB, delta, A.k)
        if a is None:
            raise ArithmeticError("g*b - b does not come from A")
        f.append(tuple(a))
    H1 = cohomology_data(A, 1)
    cochain = crossed_hom_to_cochain(H1.resolution, A, f)
    coords = H1.classify(cochain)
    return ConnectingValue(tuple(f), coords, tuple(H1.orders()))


def crossed_hom_to_cochain(res, A: GroupModule, f):
    """Transport a crossed homomorphism g -> f(g) to a 1-cochain on the resolution.

    The generator e_j of F_1 maps to the element v_j of the augmentation ideal;
    the G-map I_G -> A with g - 1 -> f(g) sends v_j to sum_g v_j[g] f(g).
    """
    k = A.k
    out = []
    for coeffs in res.boundaries[1]:
        a = coeffs[0]
        val = [0] * k
        for g, cnt in enumerate(a):
            if cnt:
                for t in range(k):
                    val[t] += cnt * f[g][t]
        out += val
    return out


# -- restriction and transfer ---------------------------------------------------


def _blocks(v, k):
    return [v[i:i + k] for i in range(0, len(v), k)]


def restriction_cochain(M: GroupModule, f, reps, rank):
    """res(f)(g_c e_j) = g_c . f(e_j); H-generators are ordered as j*#cosets + c."""
    k, nc = M.k, len(reps)
    fb = _blocks(f, k)
    out = []
    for j in range(rank):
        for c in range(nc):
            out += matvec(M.matrix(reps[c]), fb[j])
    return out


def transfer_cochain(M: GroupModule, phi, reps, rank):
    """tr(phi)(e_j) = sum_c g_c^-1 . phi(g_c e_j)."""
    G = M.group
    k, nc = M.k, len(reps)
    pb = _blocks(phi, k)
    out = []
    for j in range(rank):
        acc = [0] * k
        for c in range(nc):
            img = matvec(M.matrix(G.inv(reps[c])), pb[j * nc + c])
            acc = [x + y for x, y in zip(acc, img)]
        out += acc
    return out


@dataclass(frozen=True)
class RestrictionTransfer:
    degree: int
    group_cohomology: CohomologyGroup
    subgroup_cohomology: CohomologyGroup
    reps: tuple
    module: GroupModule


def restriction_transfer_data(M: GroupModule, i: int, sub: str = "C2") -> RestrictionTransfer:
    resG = resolution_for(M.group.name)
    H, emb = s3_subgroup(sub)
    resH, reps = restrict_resolution(resG, H, emb)
    HG = compute_cohomology(resG, M, i)
    HH = compute_cohomology(resH, M.restrict(H, emb), i)
    return RestrictionTransfer(i, HG, HH, tuple(reps), M)


def transfer_composition_check(M: GroupModule, i: int, sub: str = "C2") -> bool:
    """tr o res equals multiplication by the index on H^i(S3, M).

    Each generator x is restricted, replaced by the canonical representative of
    its class in H^i(H, M), transferred back, and compared with [G:H] x.
    """
    data = restriction_transfer_data(M, i, sub)
    HG, HH, reps = data.group_cohomology, data.subgroup_cohomology, data.reps
    rank = HG.resolution.ranks[i]
    index = len(reps)
    for x in HG.generators():
        r = restriction_cochain(M, x, reps, rank)
        canon = HH.representative(HH.classify(r))
        t = transfer_cochain(M, canon, reps, rank)
        lhs = HG.classify(t)
        rhs = HG.classify([index * v for v in x])
        if lhs != rhs:
            return False
    return True
