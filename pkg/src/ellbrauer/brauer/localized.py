"""Brauer groups of Z_P = Z[1/p : p in P] from class field theory.

A class is determined by its local invariants at the places of P and the
real place, subject to the sum of the invariants being zero:

    0 -> Br(Z_P) -> Br(R) + sum_{p in P} Q/Z -> Q/Z -> 0,

with Br(R) = (1/2)Z/Z.  Divisible summands are kept symbolic; the N-torsion
of the kernel is computed exactly for any N.
"""

from dataclasses import dataclass
from itertools import combinations

from sympy import isprime

from ..cohomology.linalg import columns_to_matrix, kernel_basis, lattice_basis, snf, solve
from ..cohomology.modules import FgAbelianGroup
from ..hilbert.invariants import INF, InvariantVector, quaternion_invariants
from .shapes import GroupShape

LADDER = (2, 3, 4, 8, 9, 12, 16)


@dataclass(frozen=True)
class LocalizedBrauer:
    primes: tuple
    include_real: bool
    shape: GroupShape | None  # None in the symbolic all-primes mode
    generators: tuple  # human-readable descriptions, one per summand

    def truncation(self, n: int) -> FgAbelianGroup:
        return truncated_kernel(self.primes, self.include_real, n)

    def check_ladder(self, ladder=LADDER) -> bool:
        """The exact n-torsion of the kernel agrees with the symbolic shape."""
        return all(self.truncation(n) == self.shape.torsion(n) for n in ladder)

    def __str__(self):
        return str(self.shape)


def truncated_kernel(primes, include_real: bool, n: int) -> FgAbelianGroup:
    """n-torsion of the kernel of the sum of invariants, by Smith normal form.

    The n-torsion of Q/Z is Z/n (generated by 1/n) and that of Br(R) is Z/2
    when n is even, generated by n/2 in the same units.
    """
    weights = [1] * len(primes)
    orders = [n] * len(primes)
    if include_real and n % 2 == 0:
        weights.append(n // 2)
        orders.append(2)
    m = len(weights)
    if m == 0:
        return FgAbelianGroup()
    # L = {x in Z^m : sum w_i x_i = 0 mod n}
    ker = kernel_basis([weights + [n]], m + 1)
    L = lattice_basis([v[:m] for v in ker], m)
    rels = [[o * int(i == j) for i in range(m)] for j, o in enumerate(orders)]
    Lmat = columns_to_matrix(L, m)
    coords = [solve(Lmat, r, len(L)) for r in rels]
    s = snf(columns_to_matrix(coords, len(L)), len(coords))
    diag = list(s.diag) + [0] * (len(L) - s.rank)
    return FgAbelianGroup.from_diagonal(diag)


def _quaternion_generator(primes):
    """A quaternion algebra (a, b) over P-units with invariants 1/2 at min(P) and oo."""
    target = {min(primes): 1, INF: 1}
    units = []
    for k in range(len(primes) + 1):
        for sub in combinations(primes, k):
            v = 1
            for p in sub:
                v *= p
            units += [v, -v]
    for a in units:
        for b in units:
            if a <= b and quaternion_invariants(a, b).as_dict() == target:
                return a, b
    return None


def br_localized_integers(P, include_real: bool = True) -> LocalizedBrauer:
    """Br(Z_P) as a GroupShape with generator descriptions.

    ``P = "all"`` gives Br(Q), for which only the formula shape is returned.
    """
    if P == "all":
        gens = ("kernel of the sum map on Z/2 + sum over all primes of Q/Z",)
        return LocalizedBrauer((), include_real, None, gens)
    primes = tuple(sorted(set(int(p) for p in P)))
    for p in primes:
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
    places = len(primes) + (1 if include_real else 0)
    if not primes:
        return LocalizedBrauer(primes, include_real, GroupShape(), ())
    gens = []
    finite = FgAbelianGroup()
    if include_real:
        finite = FgAbelianGroup.cyclic(2)
        vec = InvariantVector.from_dict(2, {primes[0]: 1, INF: 1})
        q = _quaternion_generator(primes)
        desc = f"Z/2: invariants {vec.as_dict()}"
        if q:
            desc += f", the quaternion algebra ({q[0]},{q[1]})"
        gens.append(desc)
    for p in primes[1:]:
        gens.append(f"Q/Z: x at {p}, -x at {primes[0]}")
    shape = GroupShape(finite, 0, places - 1 - (1 if include_real else 0))
    return LocalizedBrauer(primes, include_real, shape, tuple(gens))
