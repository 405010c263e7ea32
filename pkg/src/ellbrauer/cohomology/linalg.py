"""Integer linear algebra: Smith normal form with transforms, kernels, solving.

Matrices are lists of rows of Python ints.  Everything here is exact.
"""

from typing import NamedTuple


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def shape(A, ncols=None):
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    return m, n


def transpose(A, ncols=0):
    m, n = shape(A, ncols)
    return [[A[i][j] for i in range(m)] for j in range(n)]


def matmul(A, B):
    Bt = list(zip(*B)) if B else []
    if not Bt:
        return [[] for _ in A]
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


def matvec(A, x):
    return [sum(a * b for a, b in zip(row, x) if a) for row in A]


def columns_to_matrix(cols, nrows):
    """Matrix whose columns are the given vectors."""
    return [[c[i] for c in cols] for i in range(nrows)]


def hstack(*mats):
    rows = len(mats[0])
    return [sum((M[i] for M in mats), []) for i in range(rows)]


def block_diag(blocks):
    m = sum(len(B) for B in blocks)
    n = sum(len(B[0]) if B else 0 for B in blocks)
    out = zeros(m, n)
    r = c = 0
    for B in blocks:
        bm, bn = len(B), len(B[0]) if B else 0
        for i in range(bm):
            out[r + i][c:c + bn] = B[i]
        r += bm
        c += bn
    return out


class SNF(NamedTuple):
    """U A V = D with D diagonal; ``diag`` lists the nonzero diagonal entries."""

    diag: list
    U: list
    V: list
    Uinv: list

    @property
    def rank(self):
        return len(self.diag)


def snf(A, ncols: int | None = None) -> SNF:
    """Smith normal form of an m x n integer matrix, with unimodular transforms."""
    m, n = shape(A, ncols)
    A = [list(r) for r in A]
    U = identity(m)
    Uinv = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        for M in (A, U):
            rs, rd = M[src], M[dst]
            for k, v in enumerate(rs):
                if v:
                    rd[k] += q * v
        for row in Uinv:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        if q == 0:
            return
        for M in (A, V):
            for row in M:
                if row[src]:
                    row[dst] += q * row[src]

    diag = []
    t = 0
    while t < min(m, n):
        # smallest nonzero pivot in the remaining block
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -_round_div(A[i][t], p))
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -_round_div(A[t][j], p))
                    if A[t][j]:
                        done = False
            if done:
                # enforce divisibility of the remaining block by the pivot
                bad = next(
                    (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad, 1)
                continue
            # move the smallest entry of row/column t into the pivot position
            cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(i, t)
            if j != t:
                swap_cols(j, t)
        if A[t][t] < 0:
            for M in (A, U):
                M[t] = [-v for v in M[t]]
            for row in Uinv:
                row[t] = -row[t]
        diag.append(A[t][t])
        t += 1
    return SNF(diag, U, V, Uinv)


def _round_div(a, b):
    # nearest-integer quotient keeps entries small
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def smith_normal_form(A, ncols: int | None = None):
    """Return (D, U, V) with U A V = D, D diagonal with d1 | d2 | ..."""
    m, n = shape(A, ncols)
    s = snf(A, ncols)
    D = zeros(m, n)
    for i, d in enumerate(s.diag):
        D[i][i] = d
    return D, s.U, s.V


def invariant_factors(A, ncols: int | None = None) -> list:
    return snf(A, ncols).diag


def kernel_basis(A, ncols: int | None = None) -> list:
    """Z-basis (list of vectors) of {x in Z^n : A x = 0}."""
    m, n = shape(A, ncols)
    s = snf(A, n)
    return [[s.V[i][j] for i in range(n)] for j in range(s.rank, n)]


def lattice_basis(gens: list, dim: int) -> list:
    """Z-basis of the lattice spanned by the given vectors in Z^dim."""
    if not gens:
        return []
    G = columns_to_matrix(gens, dim)
    s = snf(G, len(gens))
    GV = matmul(G, s.V)
    return [[GV[i][j] for i in range(dim)] for j in range(s.rank)]


def solve(A, b, ncols: int | None = None):
    """An integer solution x of A x = b, or None if there is none."""
    m, n = shape(A, ncols)
    s = snf(A, n)
    c = matvec(s.U, b)
    y = [0] * n
    for i, d in enumerate(s.diag):
        if c[i] % d:
            return None
        y[i] = c[i] // d
    if any(c[i] for i in range(s.rank, m)):
        return None
    return matvec(s.V, y)


def in_lattice(basis: list, v: list) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return solve(columns_to_matrix(basis, len(v)), v, len(basis)) is not None
