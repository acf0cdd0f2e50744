"""Exact linear algebra over prime fields F_p on lists of ints."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator, Sequence

Vector = tuple[int, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def primes_from(start: int = 2) -> Iterator[int]:
    p = max(start, 2)
    while True:
        if is_prime(p):
            yield p
        p += 1


def inv_mod(a: int, p: int) -> int:
    return pow(a % p, -1, p)


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form mod p. Returns (nonzero rows, pivot columns)."""
    M = [[x % p for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = inv_mod(M[r][c], p)
        M[r] = [(x * inv) % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                Mi, Mr = M[i], M[r]
                M[i] = [(a - f * b) % p for a, b in zip(Mi, Mr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows: Sequence[Sequence[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : A x = 0} for A given by its rows."""
    R, piv = rref(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fcol in free:
        x = [0] * ncols
        x[fcol] = 1
        for row, pc in zip(R, piv):
            x[pc] = (-row[fcol]) % p
        basis.append(x)
    return basis


def mat_vec(A: Sequence[Sequence[int]], v: Sequence[int], p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % p for row in A]


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) % p for j in range(ncols)] for i in range(len(A))]


def transpose(A: Sequence[Sequence[int]], nrows: int, ncols: int) -> list[list[int]]:
    """Transpose of an nrows x ncols matrix (shape kept explicit for empty matrices)."""
    return [[A[i][j] for i in range(nrows)] for j in range(ncols)]


def reduce_against(v: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int], p: int) -> list[int]:
    """Normal form of v modulo the span of an RREF basis (zero on pivot columns)."""
    w = [x % p for x in v]
    for row, pc in zip(basis, pivots):
        f = w[pc]
        if f:
            w = [(a - f * b) % p for a, b in zip(w, row)]
    return w


def cell_rows(n: int, pivots: Sequence[int], free_vals: Sequence[int]) -> list[list[int]]:
    """RREF rows with the given pivot columns; free entries filled in row-major order."""
    pset = set(pivots)
    rows = []
    it = iter(free_vals)
    for c in pivots:
        row = [0] * n
        row[c] = 1
        for j in range(c + 1, n):
            if j not in pset:
                row[j] = next(it)
        rows.append(row)
    return rows


def free_count(n: int, pivots: Sequence[int]) -> int:
    """Number of free entries in the Schubert cell with these RREF pivots."""
    k = len(pivots)
    return sum(n - 1 - c - (k - 1 - r) for r, c in enumerate(pivots))


def iter_subspaces(n: int, k: int, p: int) -> Iterator[list[list[int]]]:
    """Every k-dimensional subspace of F_p^n exactly once, as its RREF basis.

    Order: pivot patterns lexicographically, then free entries in base-p order.
    """
    if k < 0 or k > n:
        return
    for pivots in combinations(range(n), k):
        nfree = free_count(n, pivots)
        for vals in product(range(p), repeat=nfree):
            yield cell_rows(n, pivots, vals)


def count_subspaces_cells(n: int, k: int, p: int) -> int:
    """Number of k-subspaces of F_p^n, summed cell by cell over pivot patterns."""
    if k < 0 or k > n:
        return 0
    return sum(p ** free_count(n, piv) for piv in combinations(range(n), k))
