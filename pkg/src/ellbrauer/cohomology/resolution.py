"""Free resolutions of Z over the group ring ZG.

A resolution is F_n -> ... -> F_1 -> F_0 -> Z with F_i = ZG^(r_i).  The
boundary d_i is stored as coefficients a[k][j] in ZG (a vector indexed by
group elements) with d_i(e_k) = sum_j a[k][j] e_j.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .groups import FiniteGroup, cyclic_group, right_cosets, subgroup, symmetric_group_3
from .linalg import in_lattice, kernel_basis, lattice_basis, matmul, zeros


@dataclass(frozen=True)
class FreeResolution:
    group: FiniteGroup
    ranks: tuple
    boundaries: tuple  # boundaries[i] for i >= 1; boundaries[0] is unused
    augmentation: tuple  # epsilon(e_j) for the generators of F_0
    kind: str = "greedy"

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def z_matrix(self, i: int):
        """Integer matrix of d_i : F_i -> F_(i-1) in the Z-basis g*e_j (index j*|G| + g).

        For i = 0 this is the augmentation F_0 -> Z.
        """
        G = self.group
        n = G.order
        if i == 0:
            return [[self.augmentation[j] for j in range(self.ranks[0]) for _ in range(n)]]
        rows, cols = n * self.ranks[i - 1], n * self.ranks[i]
        M = zeros(rows, cols)
        for k, coeffs in enumerate(self.boundaries[i]):
            for j, a in enumerate(coeffs):
                for g, c in enumerate(a):
                    if c:
                        for h in range(n):
                            M[j * n + G.mul(h, g)][k * n + h] += c
        return M

    def check(self) -> bool:
        """d_(i-1) d_i = 0 and exactness at every interior spot."""
        for i in range(1, self.length + 1):
            prod = matmul(self.z_matrix(i - 1), self.z_matrix(i))
            if any(any(r) for r in prod):
                return False
        for i in range(0, self.length):
            ker = kernel_basis(self.z_matrix(i), self.group.order * self.ranks[i])
            img = _columns(self.z_matrix(i + 1))
            basis = lattice_basis(img, self.group.order * self.ranks[i])
            if not all(in_lattice(basis, v) for v in ker):
                return False
        return True


def _columns(M):
    return [list(c) for c in zip(*M)] if M and M[0] else []


def _act_on_free(G: FiniteGroup, h: int, v, rank: int):
    """Left multiplication by h on a vector of ZG^rank."""
    n = G.order
    out = [0] * len(v)
    for j in range(rank):
        for g in range(n):
            c = v[j * n + g]
            if c:
                out[j * n + G.mul(h, g)] += c
    return out


def _greedy_generators(G, kernel, rank):
    """ZG-module generators of a ZG-submodule given by a Z-basis, chosen greedily."""
    # try short vectors first so the boundary coefficients stay small
    candidates = sorted(kernel, key=lambda v: (sum(abs(x) for x in v), v))
    dim = len(kernel[0]) if kernel else 0
    gens, span = [], []
    for v in candidates:
        if in_lattice(span, v):
            continue
        gens.append(v)
        orbit = [_act_on_free(G, h, w, rank) for w in gens for h in range(G.order)]
        span = lattice_basis(orbit, dim)
    for v in kernel:
        if not in_lattice(span, v):
            raise ArithmeticError("greedy generator selection failed")
    return gens


def _reduce_kernel(kernel):
    """Cheap size reduction of a lattice basis: subtract earlier vectors while it helps."""
    basis = [list(v) for v in kernel]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                for s in (1, -1):
                    w = [a - s * b for a, b in zip(basis[i], basis[j])]
                    if sum(abs(x) for x in w) < sum(abs(x) for x in basis[i]):
                        basis[i] = w
                        changed = True
    return basis


def greedy_resolution(G: FiniteGroup, length: int) -> FreeResolution:
    """A small free resolution built by choosing ZG-generators of each kernel."""
    n = G.order
    ranks = [1]
    boundaries = [()]
    prev = [[1] * n]  # augmentation matrix
    for i in range(1, length + 1):
        ker = _reduce_kernel(kernel_basis(prev, n * ranks[-1]))
        gens = _greedy_generators(G, ker, ranks[-1])
        coeffs = tuple(
            tuple(tuple(v[j * n + g] for g in range(n)) for j in range(ranks[-1])) for v in gens
        )
        boundaries.append(coeffs)
        ranks.append(len(gens))
        res = FreeResolution(G, tuple(ranks), tuple(boundaries), (1,))
        prev = res.z_matrix(i)
    return FreeResolution(G, tuple(ranks), tuple(boundaries), (1,), "greedy")


def bar_resolution(G: FiniteGroup, length: int) -> FreeResolution:
    """The normalized bar resolution: F_n is free on n-tuples of non-identity elements."""
    n = G.order
    nonid = list(range(1, n))
    cells = [[()]]
    for i in range(1, length + 1):
        cells.append(list(product(nonid, repeat=i)))
    index = [{c: k for k, c in enumerate(cs)} for cs in cells]
    boundaries = [()]
    for i in range(1, length + 1):
        rows = []
        for cell in cells[i]:
            coeffs = [[0] * n for _ in cells[i - 1]]
            coeffs[index[i - 1][cell[1:]]][cell[0]] += 1
            for m in range(i - 1):
                prod_ = G.mul(cell[m], cell[m + 1])
                if prod_ != 0:
                    face = cell[:m] + (prod_,) + cell[m + 2:]
                    coeffs[index[i - 1][face]][0] += (-1) ** (m + 1)
            coeffs[index[i - 1][cell[:-1]]][0] += (-1) ** i
            rows.append(tuple(tuple(a) for a in coeffs))
        boundaries.append(tuple(rows))
    ranks = tuple(len(c) for c in cells)
    return FreeResolution(G, ranks, tuple(boundaries), (1,), "bar")


def restrict_resolution(res: FreeResolution, H: FiniteGroup, embedding) -> tuple:
    """View a G-resolution as an H-resolution.

    Basis of F_i over ZH: g_c e_j for right coset representatives g_c.
    Returns (H-resolution, coset representatives as G-indices).
    """
    G = res.group
    reps = right_cosets(G, embedding)
    pos_in_H = {g: i for i, g in enumerate(embedding)}
    # x = h * g_c'  ->  (index of h in H, c')
    decomp = {}
    for c, gc in enumerate(reps):
        for h in embedding:
            decomp[G.mul(h, gc)] = (pos_in_H[h], c)
    nc = len(reps)
    boundaries = [()]
    for i in range(1, res.length + 1):
        rows = []
        for c, gc in enumerate(reps):
            for k, coeffs in enumerate(res.boundaries[i]):
                new = [[0] * H.order for _ in range(nc * res.ranks[i - 1])]
                for j, a in enumerate(coeffs):
                    for g, val in enumerate(a):
                        if val:
                            h, c2 = decomp[G.mul(gc, g)]
                            new[j * nc + c2][h] += val
                rows.append((c, k, new))
        # order the new generators as index k*nc + c to match the target layout
        rows.sort(key=lambda t: t[1] * nc + t[0])
        boundaries.append(tuple(tuple(tuple(a) for a in r[2]) for r in rows))
    ranks = tuple(nc * r for r in res.ranks)
    aug = tuple(res.augmentation[j] for j in range(res.ranks[0]) for _ in range(nc))
    return FreeResolution(H, ranks, tuple(boundaries), aug, res.kind + "|" + H.name), reps


# -- standard groups with cached resolutions -------------------------------------

MAX_DEGREE = 4


@lru_cache(maxsize=None)
def standard_group(name: str) -> FiniteGroup:
    if name == "S3":
        return symmetric_group_3()
    if name.startswith("C") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    raise ValueError(f"unknown group {name!r}")


@lru_cache(maxsize=None)
def resolution_for(name: str, length: int = MAX_DEGREE + 1, kind: str = "greedy") -> FreeResolution:
    G = standard_group(name)
    if kind == "bar":
        return bar_resolution(G, length)
    return greedy_resolution(G, length)


def s3_subgroup(name: str):
    """The subgroups C2 = <tau> and C3 = <sigma> of S3, with embeddings."""
    G = standard_group("S3")
    if name == "C2":
        return subgroup(G, {"g": G.gen("tau")}, "C2")
    if name == "C3":
        return subgroup(G, {"g": G.gen("sigma")}, "C3")
    raise ValueError(name)
