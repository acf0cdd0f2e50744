"""Pure-Python submodule counting kernel (fallback for ``_ckernel``).

Both kernels take the same prepared problem (see ``kernel.prepare``):
vertices in processing order, non-sink vertices first in topological order,
then the sinks. Non-sink subspaces are enumerated one by one; the choices at a
sink only depend on its predecessors, so each sink contributes the number of
subspaces containing the image, summed over Schubert cells.
"""

from __future__ import annotations

from .linalg import count_subspaces_cells, iter_subspaces, mat_vec, rref


def count_submodules(p, dims, e, in_arrows, n_nonsink):
    nv = len(dims)
    U: list[list[list[int]]] = [[] for _ in range(nv)]
    cells: dict[tuple[int, int], int] = {}

    def image(k):
        gens = [mat_vec(A, u, p) for src, A in in_arrows[k] for u in U[src]]
        return rref(gens, p) if gens else ([], [])

    def sinks():
        total = 1
        for k in range(n_nonsink, nv):
            W, _ = image(k)
            w = len(W)
            if w > e[k]:
                return 0
            key = (dims[k] - w, e[k] - w)
            if key not in cells:
                cells[key] = count_subspaces_cells(key[0], key[1], p)
            total *= cells[key]
        return total

    def rec(k):
        if k == n_nonsink:
            return sinks()
        W, wpiv = image(k)
        w = len(W)
        if w > e[k]:
            return 0
        m = dims[k]
        comp = [c for c in range(m) if c not in set(wpiv)]
        total = 0
        for rows in iter_subspaces(m - w, e[k] - w, p):
            lifted = []
            for r in rows:
                vec = [0] * m
                for c, x in zip(comp, r):
                    vec[c] = x
                lifted.append(vec)
            U[k] = W + lifted
            total += rec(k + 1)
        U[k] = []
        return total

    if any(x < 0 or x > d for x, d in zip(e, dims)):
        return 0
    return rec(0)
