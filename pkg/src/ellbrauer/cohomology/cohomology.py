"""Group cohomology H^i(G, M) from a free resolution and Smith normal form.

Cochains Hom_G(F_i, M) are identified with M^(r_i) by evaluating on the free
generators, so a cochain is an integer vector of length k * r_i taken modulo
the relation lattice of M in each block.
"""

from dataclasses import dataclass
from functools import lru_cache

from .linalg import block_diag, columns_to_matrix, hstack, kernel_basis, lattice_basis, matvec, snf, solve, zeros
from .modules import FgAbelianGroup, GroupModule
from .resolution import MAX_DEGREE, FreeResolution, resolution_for


def coboundary_matrix(res: FreeResolution, M: GroupModule, i: int):
    """Matrix of delta^i : M^(r_i) -> M^(r_(i+1)) on the integer lifts."""
    k = M.k
    ri, rn = res.ranks[i], res.ranks[i + 1]
    D = zeros(k * rn, k * ri)
    for kk, coeffs in enumerate(res.boundaries[i + 1]):
        for j, a in enumerate(coeffs):
            for g, c in enumerate(a):
                if not c:
                    continue
                A = M.action[g]
                for r in range(k):
                    row = D[kk * k + r]
                    for s in range(k):
                        if A[r][s]:
                            row[j * k + s] += c * A[r][s]
    return D


def _relation_block(M: GroupModule, copies: int):
    rels = M.relation_basis()
    if not rels:
        return None
    R = columns_to_matrix(rels, M.k)
    return block_diag([R] * copies)


@dataclass
class CohomologyGroup:
    """H^i(G, M) together with the data needed to name classes.

    A cocycle x has coordinates c in ``zbasis``; the class is U c read modulo
    the diagonal ``diag`` (entries 0 give free summands).
    """

    degree: int
    structure: FgAbelianGroup
    zbasis: list
    U: list
    Uinv: list
    diag: list  # one entry per zbasis vector; 0 means free
    module: GroupModule
    resolution: FreeResolution

    def _visible(self):
        return [i for i, d in enumerate(self.diag) if d != 1]

    def classify(self, cocycle) -> tuple:
        """Coordinates of the class of a cocycle: one entry per nontrivial summand."""
        if not self.zbasis:
            return ()
        c = solve(columns_to_matrix(self.zbasis, len(cocycle)), list(cocycle), len(self.zbasis))
        if c is None:
            raise ValueError("not a cocycle")
        y = matvec(self.U, c)
        return tuple(y[i] % self.diag[i] if self.diag[i] else y[i] for i in self._visible())

    def orders(self) -> list:
        return [self.diag[i] for i in self._visible()]

    def generators(self) -> list:
        """Cocycles representing the standard generators of each summand."""
        out = []
        n = len(self.zbasis)
        dim = len(self.zbasis[0]) if self.zbasis else 0
        for i in self._visible():
            col = [self.Uinv[r][i] for r in range(n)]
            v = [sum(self.zbasis[j][t] * col[j] for j in range(n)) for t in range(dim)]
            out.append(v)
        return out

    def representative(self, coords) -> list:
        gens = self.generators()
        dim = len(self.zbasis[0]) if self.zbasis else 0
        v = [0] * dim
        for c, g in zip(coords, gens):
            for t in range(dim):
                v[t] += c * g[t]
        return v

    def is_cocycle(self, x) -> bool:
        if not self.zbasis:
            return not any(x) or _in_relations(self.module, x, self.resolution.ranks[self.degree])
        return solve(columns_to_matrix(self.zbasis, len(x)), list(x), len(self.zbasis)) is not None


def _in_relations(M, x, copies):
    R = _relation_block(M, copies)
    if R is None:
        return not any(x)
    return solve(R, list(x), len(R[0])) is not None


def compute_cohomology(res: FreeResolution, M: GroupModule, i: int) -> CohomologyGroup:
    if M.group != res.group:
        raise ValueError("module and resolution are over different groups")
    if i < 0 or i + 1 > res.length:
        raise ValueError(f"resolution too short for degree {i}")
    k = M.k
    dim = k * res.ranks[i]
    # cocycles: x with delta x in the relation lattice
    D = coboundary_matrix(res, M, i)
    R_next = _relation_block(M, res.ranks[i + 1])
    big = hstack(D, R_next) if R_next is not None else D
    ncols = dim + (len(R_next[0]) if R_next is not None else 0)
    if big:
        ker = kernel_basis(big, ncols)
        zgens = [v[:dim] for v in ker]
    else:
        zgens = [[int(a == b) for a in range(dim)] for b in range(dim)]
    zbasis = lattice_basis(zgens, dim)
    # coboundaries plus relations
    bgens = []
    if i > 0:
        Dprev = coboundary_matrix(res, M, i - 1)
        bgens += [list(c) for c in zip(*Dprev)] if Dprev and Dprev[0] else []
    R_here = _relation_block(M, res.ranks[i])
    if R_here is not None:
        bgens += [list(c) for c in zip(*R_here)]
    n = len(zbasis)
    if n == 0:
        return CohomologyGroup(i, FgAbelianGroup(), [], [], [], [], M, res)
    Z = columns_to_matrix(zbasis, dim)
    coords = []
    for b in bgens:
        if not any(b):
            continue
        c = solve(Z, b, n)
        if c is None:
            raise ArithmeticError("coboundary is not a cocycle; d o d != 0")
        coords.append(c)
    if coords:
        C = columns_to_matrix(coords, n)
        s = snf(C, len(coords))
        diag = list(s.diag) + [0] * (n - s.rank)
        U, Uinv = s.U, s.Uinv
    else:
        diag = [0] * n
        U = [[int(a == b) for b in range(n)] for a in range(n)]
        Uinv = [row[:] for row in U]
    structure = FgAbelianGroup.from_diagonal(diag)
    return CohomologyGroup(i, structure, zbasis, U, Uinv, diag, M, res)


def group_cohomology(M: GroupModule, i: int, kind: str = "greedy") -> FgAbelianGroup:
    """H^i(G, M) for 0 <= i <= 4 as invariant factors."""
    if i > MAX_DEGREE:
        raise ValueError(f"degree {i} > {MAX_DEGREE} is not supported")
    return cohomology_data(M, i, kind).structure


def cohomology_data(M: GroupModule, i: int, kind: str = "greedy") -> CohomologyGroup:
    if i > MAX_DEGREE:
        raise ValueError(f"degree {i} > {MAX_DEGREE} is not supported")
    res = resolution_for(M.group.name, i + 1 if kind == "bar" else MAX_DEGREE + 1, kind)
    if res.group != M.group:
        raise ValueError("module is over a nonstandard group; use compute_cohomology")
    return compute_cohomology(res, M, i)


def cochain_differential_squares_to_zero(res: FreeResolution, M: GroupModule, i: int) -> bool:
    """delta^(i+1) delta^i = 0 on integer lifts."""
    from .linalg import matmul

    P = matmul(coboundary_matrix(res, M, i + 1), coboundary_matrix(res, M, i))
    return not any(any(r) for r in P)
