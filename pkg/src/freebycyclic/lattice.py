"""Integer lattice utilities: Smith and Hermite normal forms with transforms.

Matrices are lists of lists of Python ints so entries never overflow.
"""

from __future__ import annotations

from typing import Sequence

IntMat = list[list[int]]


def _identity(n: int) -> IntMat:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _as_lists(A) -> IntMat:
    return [[int(x) for x in row] for row in A]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMat:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def smith_normal_form(A) -> tuple[IntMat, IntMat, IntMat]:
    """Return ``(D, U, V)`` with ``U @ A @ V == D`` diagonal, U and V unimodular.

    Diagonal entries are nonnegative and each divides the next.
    """
    D = _as_lists(A)
    m = len(D)
    n = len(D[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for s in range(min(m, n)):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(s, m) for j in range(s, n) if D[i][j]]
            if not nz:
                return D, U, V
            _, i, j = min(nz)
            swap_rows(s, i)
            swap_cols(s, j)
            done = True
            for i in range(s + 1, m):
                q = D[i][s] // D[s][s]
                if q:
                    add_row(s, i, -q)
                if D[i][s]:
                    done = False
            for j in range(s + 1, n):
                q = D[s][j] // D[s][s]
                if q:
                    add_col(s, j, -q)
                if D[s][j]:
                    done = False
            if not done:
                continue
            # divisibility: fold any non-multiple into row s and repeat
            bad = next(
                ((i, j) for i in range(s + 1, m) for j in range(s + 1, n) if D[i][j] % D[s][s]), None
            )
            if bad is None:
                break
            add_row(bad[0], s, 1)
        if D[s][s] < 0:
            D[s] = [-x for x in D[s]]
            U[s] = [-x for x in U[s]]
    return D, U, V


def rank_of(D: IntMat) -> int:
    return sum(1 for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i])


def hermite_rows(B: Sequence[Sequence[int]]) -> IntMat:
    """Row-style Hermite normal form of the row lattice (zero rows dropped)."""
    H = _as_lists(B)
    m = len(H)
    n = len(H[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[p] = H[p], H[r]
            clean = True
            for i in range(r + 1, m):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                if H[i][c]:
                    clean = False
            if clean:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
            r += 1
    return [row for row in H if any(row)]


def left_kernel(N) -> IntMat:
    """Basis (rows, Hermite form) of the saturated lattice {y : y N = 0}."""
    N = _as_lists(N)
    m = len(N)
    if m == 0:
        return []
    if not N[0]:
        return _identity(m)
    D, U, _ = smith_normal_form(N)
    r = rank_of(D)
    return hermite_rows(U[r:])


def lattice_index(vectors: Sequence[Sequence[int]], dim: int) -> int:
    """Index of the span of ``vectors`` in Z^dim (0 if not of full rank)."""
    if not vectors:
        return 1 if dim == 0 else 0
    D, _, _ = smith_normal_form([list(v) for v in vectors])
    diag = [D[i][i] for i in range(min(len(D), dim))]
    if sum(1 for d in diag if d) < dim:
        return 0
    out = 1
    for d in diag:
        out *= d
    return abs(out)
