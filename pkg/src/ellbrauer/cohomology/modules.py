"""Finitely generated abelian groups and presented G-modules."""

from dataclasses import dataclass, field
from .groups import FiniteGroup, symmetric_group_3
from .linalg import columns_to_matrix, identity, in_lattice, lattice_basis, matmul, zeros


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... and each di >= 2."""

    rank: int = 0
    torsion: tuple = field(default=())

    @classmethod
    def from_diagonal(cls, entries) -> "FgAbelianGroup":
        """Group Z^n / diag(entries); a 0 entry contributes a free summand."""
        rank = sum(1 for d in entries if d == 0)
        tors = [abs(d) for d in entries if abs(d) > 1]
        return cls(rank, tuple(_normalize_torsion(tors)))

    @classmethod
    def cyclic(cls, n: int) -> "FgAbelianGroup":
        return cls(1, ()) if n == 0 else cls.from_diagonal([n])

    def order(self):
        """Order as an int, or None for an infinite group."""
        if self.rank:
            return None
        o = 1
        for d in self.torsion:
            o *= d
        return o

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __add__(self, other):
        return FgAbelianGroup(self.rank + other.rank, tuple(_normalize_torsion(list(self.torsion) + list(other.torsion))))

    def elementary_divisors(self) -> list:
        """Prime-power cyclic factors, sorted."""
        out = []
        for d in self.torsion:
            n, p = d, 2
            while n > 1:
                if n % p == 0:
                    q = 1
                    while n % p == 0:
                        n //= p
                        q *= p
                    out.append(q)
                p += 1
        return sorted(out)

    def p_part(self, p: int) -> "FgAbelianGroup":
        tors = []
        for d in self.torsion:
            q = 1
            while d % p == 0:
                d //= p
                q *= p
            if q > 1:
                tors.append(q)
        return FgAbelianGroup(0, tuple(_normalize_torsion(tors)))

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _normalize_torsion(tors):
    """Invariant factors of a direct sum of cyclic groups."""
    tors = [t for t in tors if t > 1]
    if not tors:
        return []
    diag = zeros(len(tors), len(tors))
    for i, t in enumerate(tors):
        diag[i][i] = t
    from .linalg import snf

    return [d for d in snf(diag).diag if d > 1]


@dataclass(frozen=True)
class GroupModule:
    """Z^k modulo the lattice spanned by ``relations`` (columns), with a G-action.

    ``action[g]`` is the k x k integer matrix of g for every element g of G.
    """

    group: FiniteGroup
    k: int
    relations: tuple  # tuple of column vectors
    action: tuple  # action[g] as a tuple of row tuples
    name: str = ""
    basis: tuple = ()  # optional names of the generators of Z^k

    @classmethod
    def from_generators(cls, group, gen_matrices: dict, k: int, relations=(), name="", basis=()):
        """Extend generator matrices to all of G and validate the relations."""
        mats = {0: identity(k)}
        frontier = [0]
        gens = [(group.gen(n), m) for n, m in gen_matrices.items()]
        while frontier:
            new = []
            for g in frontier:
                for s, S in gens:
                    h = group.mul(g, s)
                    if h not in mats:
                        mats[h] = matmul(mats[g], S)
                        new.append(h)
            frontier = new
        if len(mats) != group.order:
            raise ValueError("generators do not generate the group")
        rel = tuple(tuple(r) for r in relations)
        mats = tuple(tuple(map(tuple, mats[g])) for g in range(group.order))
        mod = cls(group, k, rel, mats, name, tuple(basis))
        mod.validate()
        return mod

    def matrix(self, g: int):
        return [list(r) for r in self.action[g]]

    def relation_basis(self):
        return lattice_basis([list(r) for r in self.relations], self.k)

    def is_zero_element(self, v) -> bool:
        return in_lattice(self.relation_basis(), list(v))

    def validate(self):
        G = self.group
        rels = self.relation_basis()
        for g in range(G.order):
            Ag = self.matrix(g)
            for r in rels:
                img = [sum(a * b for a, b in zip(row, r)) for row in Ag]
                if not in_lattice(rels, img):
                    raise ValueError("action does not preserve the relation lattice")
            for h in range(G.order):
                prod = matmul(Ag, self.matrix(h))
                gh = self.matrix(G.mul(g, h))
                for j in range(self.k):
                    col = [prod[i][j] - gh[i][j] for i in range(self.k)]
                    if not in_lattice(rels, col):
                        raise ValueError("action matrices do not respect the group law")
        return True

    def underlying(self) -> FgAbelianGroup:
        """The abelian group Z^k / relations."""
        from .linalg import snf

        if not self.relations:
            return FgAbelianGroup(self.k, ())
        R = columns_to_matrix([list(r) for r in self.relations], self.k)
        s = snf(R, len(self.relations))
        diag = list(s.diag) + [0] * (self.k - s.rank)
        return FgAbelianGroup.from_diagonal(diag)

    def tensor(self, other: "GroupModule", name="") -> "GroupModule":
        """Tensor product over Z with the diagonal action."""
        if other.group != self.group:
            raise ValueError("modules over different groups")
        k1, k2 = self.k, other.k
        k = k1 * k2
        rels = []
        for r in self.relations:
            for j in range(k2):
                v = [0] * k
                for i in range(k1):
                    v[i * k2 + j] = r[i]
                rels.append(v)
        for r in other.relations:
            for i in range(k1):
                v = [0] * k
                for j in range(k2):
                    v[i * k2 + j] = r[j]
                rels.append(v)
        action = []
        for g in range(self.group.order):
            A, B = self.action[g], other.action[g]
            action.append(tuple(
                tuple(A[i1][j1] * B[i2][j2] for j1 in range(k1) for j2 in range(k2))
                for i1 in range(k1) for i2 in range(k2)
            ))
        basis = self.basis if other.k == 1 else ()
        return GroupModule(self.group, k, tuple(map(tuple, rels)), tuple(action), name, basis)

    def direct_sum(self, other: "GroupModule", name="") -> "GroupModule":
        k1, k = self.k, self.k + other.k
        rels = [list(r) + [0] * other.k for r in self.relations]
        rels += [[0] * k1 + list(r) for r in other.relations]
        action = []
        for g in range(self.group.order):
            A, B = self.action[g], other.action[g]
            rows = [tuple(A[i]) + (0,) * other.k for i in range(k1)]
            rows += [(0,) * k1 + tuple(B[i]) for i in range(other.k)]
            action.append(tuple(rows))
        return GroupModule(self.group, k, tuple(map(tuple, rels)), tuple(action), name)

    def restrict(self, H: FiniteGroup, embedding) -> "GroupModule":
        action = tuple(self.action[g] for g in embedding)
        return GroupModule(H, self.k, self.relations, action, self.name, self.basis)

    def canonical(self, v) -> tuple:
        """Reduce a vector modulo n when the relation lattice is exactly n Z^k."""
        n = self.exponent_if_homogeneous()
        return tuple(x % n for x in v) if n else tuple(v)

    def exponent_if_homogeneous(self):
        if not self.relations:
            return 0
        tors = self.underlying()
        if tors.rank or len(tors.torsion) != self.k or len(set(tors.torsion)) != 1:
            return None
        n = tors.torsion[0]
        rels = self.relation_basis()
        for i in range(self.k):
            if not in_lattice(rels, [n * int(i == j) for j in range(self.k)]):
                return None
        return n


# -- standard modules ----------------------------------------------------------


def trivial_module(group: FiniteGroup, n: int = 0) -> GroupModule:
    """Z (n = 0) or Z/n with trivial action."""
    rel = [[n]] if n else []
    return GroupModule.from_generators(
        group, {g: [[1]] for g, _ in group.generators}, 1, rel, "Z" if not n else f"Z/{n}"
    )


def coefficient_label(n: int) -> str:
    return "Z" if n == 0 else f"Z/{n}"


RHO_TILDE_SIGMA = [[-1, -1], [1, 0]]
RHO_TILDE_TAU = [[-1, -1], [0, 1]]


def rho_tilde(group: FiniteGroup | None = None) -> GroupModule:
    """Reduced permutation module, basis ([t], [t-1]) of units modulo constants."""
    group = group or symmetric_group_3()
    return GroupModule.from_generators(
        group, {"sigma": RHO_TILDE_SIGMA, "tau": RHO_TILDE_TAU}, 2, (), "rho~", ("[t]", "[t-1]")
    )


def rho(group: FiniteGroup | None = None) -> GroupModule:
    """Permutation module Z^3 = Z[S3/C2] on the three roots, matched to rho~.

    The basis is chosen so that the inclusion rho~ -> rho sending [t] and
    [t-1] to differences of basis vectors is equivariant (see rho_inclusion).
    """
    group = group or symmetric_group_3()
    perm_sigma = _perm_matrix((1, 2, 0))
    perm_tau = _perm_matrix((1, 0, 2))
    return GroupModule.from_generators(
        group, {"sigma": perm_sigma, "tau": perm_tau}, 3, (), "rho", ("e0", "e1", "e2")
    )


def _perm_matrix(p):
    n = len(p)
    M = zeros(n, n)
    for i, j in enumerate(p):
        M[j][i] = 1
    return M


def with_coefficients(M: GroupModule, n: int) -> GroupModule:
    """M tensor Z/n (or M itself for n = 0)."""
    if n == 0:
        return M
    name = f"{M.name} (x) Z/{n}" if M.name else f"Z/{n}"
    return M.tensor(trivial_module(M.group, n), name)


def equivariant_maps(A: GroupModule, B: GroupModule) -> list:
    """Z-basis of G-equivariant integer matrices A -> B (both relation-free)."""
    if A.relations or B.relations:
        raise ValueError("only implemented for free underlying groups")
    G = A.group
    ka, kb = A.k, B.k
    nvar = ka * kb
    rows = []
    for name, g in G.generators:
        Ag, Bg = A.matrix(g), B.matrix(g)
        # B_g X - X A_g = 0, X[i][j] -> variable i*ka + j
        for i in range(kb):
            for j in range(ka):
                row = [0] * nvar
                for l in range(kb):
                    row[l * ka + j] += Bg[i][l]
                for l in range(ka):
                    row[i * ka + l] -= Ag[l][j]
                rows.append(row)
    from .linalg import kernel_basis

    out = []
    for v in kernel_basis(rows, nvar):
        out.append([[v[i * ka + j] for j in range(ka)] for i in range(kb)])
    return out


def rho_inclusion(group: FiniteGroup | None = None):
    """An equivariant embedding rho~ -> rho onto the augmentation kernel."""
    from .linalg import snf

    rt, r = rho_tilde(group), rho(group)
    for X in equivariant_maps(rt, r):
        lands_in_kernel = all(sum(X[i][j] for i in range(3)) == 0 for j in range(2))
        if lands_in_kernel and snf(X, 2).diag == [1, 1]:
            return X
    raise ArithmeticError("no equivariant inclusion found")
