"""Linear algebra over the prime field F_l (vectors are lists of ints)."""

from itertools import product


def rref(rows, ell: int):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    M = [[x % ell for x in r] for r in rows]
    pivots = []
    if not M:
        return M, pivots
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, ell)
        M[r] = [x * inv % ell for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(a - f * b) % ell for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows, ell: int) -> int:
    return len(rref(rows, ell)[1])


def nullspace(rows, ncols: int, ell: int) -> list:
    """Basis of {x : A x = 0} in reduced form (one free variable set to 1)."""
    R, pivots = rref(rows, ell)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = -row[f] % ell
        basis.append(v)
    return canonical_basis(basis, ncols, ell)


def canonical_basis(vectors, ncols: int, ell: int) -> list:
    """The reduced echelon basis of the span, so equal spans give equal output."""
    R, _ = rref(vectors, ell) if vectors else ([], [])
    return [r for r in R if any(r)]


def in_span(basis, v, ell: int) -> bool:
    return rank(list(basis) + [list(v)], ell) == rank(basis, ell) if basis else not any(x % ell for x in v)


def nonzero_vectors(n: int, ell: int):
    for v in product(range(ell), repeat=n):
        if any(v):
            yield list(v)
