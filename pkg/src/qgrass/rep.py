"""Quiver representations over Z and F_p, morphism spaces and submodule enumeration.

Matrices act on column vectors: an arrow ``h: i -> j`` carries a
``dims[j] x dims[i]`` matrix stored as a list of rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from . import linalg
from .quiver import DimVector, Quiver, leq, sub

Matrix = tuple[tuple[int, ...], ...]


class RepError(ValueError):
    pass


def _as_matrix(rows, nrows: int, ncols: int, name: str) -> Matrix:
    if nrows == 0:
        if rows and any(len(r) for r in rows):
            raise RepError(f"matrix {name!r} should have 0 rows")
        return ()
    if ncols == 0 and (not rows or rows == [[]]):
        return tuple(() for _ in range(nrows))
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        raise RepError(f"matrix {name!r} must have shape {nrows}x{ncols}")
    return tuple(tuple(int(x) for x in r) for r in rows)


def _zero(nrows: int, ncols: int) -> Matrix:
    return tuple((0,) * ncols for _ in range(nrows))


@dataclass(frozen=True)
class IntRep:
    """A representation with integer matrices; ``p`` is set once reduced mod a prime."""

    quiver: Quiver
    dims: DimVector
    matrices: Mapping[str, Matrix]
    label: str = ""
    p: int | None = None

    def __post_init__(self) -> None:
        Q = self.quiver
        dims = Q.check_dim(self.dims)
        if any(d < 0 for d in dims):
            raise RepError("dimensions must be nonnegative")
        object.__setattr__(self, "dims", dims)
        mats = {}
        for h in Q.arrows:
            rows = self.matrices.get(h.id)
            nr, nc = dims[Q.index[h.tgt]], dims[Q.index[h.src]]
            mats[h.id] = _zero(nr, nc) if rows is None else _as_matrix(rows, nr, nc, h.id)
        extra = set(self.matrices) - set(mats)
        if extra:
            raise RepError(f"matrices given for unknown arrows {sorted(extra)}")
        if self.p is not None:
            mats = {k: tuple(tuple(x % self.p for x in r) for r in m) for k, m in mats.items()}
        object.__setattr__(self, "matrices", mats)

    def dim(self, v: int) -> int:
        return self.dims[self.quiver.index[v]]

    def key(self) -> tuple:
        """Hashable identity of the representation (quiver, dims, matrices, p)."""
        return (
            self.quiver,
            self.dims,
            tuple(sorted(self.matrices.items())),
            self.p,
        )

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    # -- JSON ------------------------------------------------------------------

    def to_dict(self) -> dict:
        Q = self.quiver
        return {
            "quiver": Q.to_dict(),
            "dims": {str(v): self.dim(v) for v in Q.vertices},
            "matrices": {h.id: [list(r) for r in self.matrices[h.id]] for h in Q.arrows},
            **({"label": self.label} if self.label else {}),
        }

    @classmethod
    def from_dict(cls, data: dict, quiver: Quiver | None = None) -> "IntRep":
        if quiver is None:
            if "quiver" not in data:
                raise RepError("representation JSON lacks a quiver")
            quiver = Quiver.from_dict(data["quiver"])
        try:
            dims = tuple(int(data["dims"].get(str(v), 0)) for v in quiver.vertices)
            mats = {str(k): v for k, v in data.get("matrices", {}).items()}
        except (KeyError, AttributeError, TypeError) as exc:
            raise RepError(f"malformed representation JSON: {exc}") from exc
        return cls(quiver, dims, mats, label=str(data.get("label", "")))

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


FqRep = IntRep


# -- constructors -------------------------------------------------------------------


def zero_rep(Q: Quiver) -> IntRep:
    return IntRep(Q, Q.zero(), {}, label="0")


def simple(Q: Quiver, v: int) -> IntRep:
    return IntRep(Q, Q.delta(v), {}, label=f"S{v}")


def thin(Q: Quiver, support: Sequence[int], label: str = "") -> IntRep:
    """Dimension 1 on ``support``, identity on arrows inside it."""
    supp = set(support)
    dims = tuple(1 if v in supp else 0 for v in Q.vertices)
    mats = {h.id: ((1,),) for h in Q.arrows if h.src in supp and h.tgt in supp}
    return IntRep(Q, dims, mats, label=label)


def _paths_from(Q: Quiver, v: int) -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = []

    def walk(at: int, path: tuple[str, ...]) -> None:
        out.append(path)
        for h in Q.arrows_from(at):
            walk(h.tgt, path + (h.id,))

    walk(v, ())
    return out


def projective(Q: Quiver, v: int) -> IntRep:
    """P_v realised on the basis of paths starting at v."""
    paths = _paths_from(Q, v)

    def end(path: tuple[str, ...]) -> int:
        return Q.arrow(path[-1]).tgt if path else v

    basis = {w: sorted(pt for pt in paths if end(pt) == w) for w in Q.vertices}
    pos = {w: {pt: k for k, pt in enumerate(b)} for w, b in basis.items()}
    dims = tuple(len(basis[w]) for w in Q.vertices)
    mats = {}
    for h in Q.arrows:
        m = [[0] * len(basis[h.src]) for _ in basis[h.tgt]]
        for pt, c in pos[h.src].items():
            m[pos[h.tgt][pt + (h.id,)]][c] = 1
        mats[h.id] = m
    return IntRep(Q, dims, mats, label=f"P{v}")


def injective(Q: Quiver, v: int) -> IntRep:
    _, rep = dual_rep(projective(Q.opposite(), v))
    return IntRep(Q, rep.dims, rep.matrices, label=f"I{v}")


# -- operations ---------------------------------------------------------------------


def reduce_mod(M: IntRep, p: int) -> IntRep:
    if not linalg.is_prime(p):
        raise RepError(f"{p} is not prime")
    return IntRep(M.quiver, M.dims, M.matrices, label=M.label, p=p)


def direct_sum(X: IntRep, Y: IntRep) -> IntRep:
    if X.quiver != Y.quiver:
        raise RepError("direct sum of representations of different quivers")
    if X.p != Y.p:
        raise RepError("direct sum of representations over different fields")
    Q = X.quiver
    mats = {}
    for h in Q.arrows:
        xs, ys = X.dim(h.src), Y.dim(h.src)
        rows = [list(r) + [0] * ys for r in X.matrices[h.id]]
        rows += [[0] * xs + list(r) for r in Y.matrices[h.id]]
        mats[h.id] = rows
    label = "+".join(x for x in (X.label, Y.label) if x)
    return IntRep(Q, tuple(a + b for a, b in zip(X.dims, Y.dims)), mats, label=label, p=X.p)


def direct_sum_all(reps: Sequence[IntRep], Q: Quiver | None = None) -> IntRep:
    if not reps:
        if Q is None:
            raise RepError("empty direct sum needs a quiver")
        return zero_rep(Q)
    out = reps[0]
    for r in reps[1:]:
        out = direct_sum(out, r)
    return out


def dual_rep(X: IntRep) -> tuple[Quiver, IntRep]:
    """D X on the opposite quiver: transposed matrices on the reversed arrows."""
    Qop = X.quiver.opposite()
    mats = {}
    for h in X.quiver.arrows:
        mats[h.id] = linalg.transpose(X.matrices[h.id], X.dim(h.tgt), X.dim(h.src))
    label = f"D({X.label})" if X.label else ""
    return Qop, IntRep(Qop, X.dims, mats, label=label, p=X.p)


def _check_pair(X: IntRep, M: IntRep) -> int:
    if X.quiver != M.quiver:
        raise RepError("representations live on different quivers")
    if X.p is None or X.p != M.p:
        raise RepError("both representations must be reduced modulo the same prime")
    return X.p


def hom_dim(X: IntRep, M: IntRep) -> int:
    """dim_{F_p} Hom(X, M), by the rank of the intertwiner system."""
    p = _check_pair(X, M)
    Q = X.quiver
    offset = {}
    n_unknowns = 0
    for v in Q.vertices:
        offset[v] = n_unknowns
        n_unknowns += M.dim(v) * X.dim(v)
    if n_unknowns == 0:
        return 0

    def var(v: int, r: int, c: int) -> int:
        # f_v is dim M_v x dim X_v
        return offset[v] + r * X.dim(v) + c

    rows = []
    for h in Q.arrows:
        s, t = h.src, h.tgt
        Mh, Xh = M.matrices[h.id], X.matrices[h.id]
        for r in range(M.dim(t)):
            for c in range(X.dim(s)):
                row = [0] * n_unknowns
                # (M_h f_s)[r][c] - (f_t X_h)[r][c]
                for k in range(M.dim(s)):
                    if Mh[r][k]:
                        row[var(s, k, c)] += Mh[r][k]
                for k in range(X.dim(t)):
                    if Xh[k][c]:
                        row[var(t, r, k)] -= Xh[k][c]
                if any(x % p for x in row):
                    rows.append(row)
    return n_unknowns - (linalg.rank(rows, p) if rows else 0)


def ext_dim(X: IntRep, M: IntRep) -> int:
    """dim Ext^1(X, M) = dim Hom(X, M) - <dim X, dim M> (kQ is hereditary)."""
    return hom_dim(X, M) - X.quiver.euler_form(X.dims, M.dims)


def is_exceptional(M: IntRep, p: int | None = None) -> bool:
    Mp = M if p is None and M.p is not None else reduce_mod(M, p if p is not None else 2)
    return ext_dim(Mp, Mp) == 0


# -- submodules -------------------------------------------------------------------------


@dataclass(frozen=True)
class Subrep:
    """A subrepresentation U of ``parent``; ``bases[v]`` holds RREF rows spanning U_v."""

    parent: IntRep
    bases: Mapping[int, tuple[tuple[int, ...], ...]]

    @property
    def dims(self) -> DimVector:
        return tuple(len(self.bases[v]) for v in self.parent.quiver.vertices)

    def pivots(self, v: int) -> list[int]:
        return [next(c for c, x in enumerate(row) if x) for row in self.bases[v]]

    def key(self) -> tuple:
        return tuple(self.bases[v] for v in self.parent.quiver.vertices)

    def is_closed(self) -> bool:
        M, p = self.parent, self.parent.p
        for h in M.quiver.arrows:
            tb = self.bases[h.tgt]
            tp = self.pivots(h.tgt)
            for u in self.bases[h.src]:
                img = linalg.mat_vec(M.matrices[h.id], u, p)
                if any(linalg.reduce_against(img, tb, tp, p)):
                    return False
        return True


def _image_span(M: IntRep, v: int, bases: Mapping[int, Sequence[Sequence[int]]]) -> tuple[list[list[int]], list[int]]:
    """RREF of sum over arrows j -> v of M_h(U_j)."""
    p = M.p
    gens = []
    for h in M.quiver.arrows_to(v):
        A = M.matrices[h.id]
        for u in bases[h.src]:
            gens.append(linalg.mat_vec(A, u, p))
    return linalg.rref(gens, p) if gens else ([], [])


def _supersets(m: int, e: int, W: list[list[int]], wpiv: list[int], p: int) -> Iterator[list[list[int]]]:
    """Bases (not canonical) of every e-dim subspace of F_p^m containing span(W)."""
    w = len(W)
    if w > e:
        return
    comp = [c for c in range(m) if c not in set(wpiv)]
    for rows in linalg.iter_subspaces(m - w, e - w, p):
        lifted = []
        for r in rows:
            vec = [0] * m
            for c, x in zip(comp, r):
                vec[c] = x
            lifted.append(vec)
        yield W + lifted


def enumerate_submodules(M: IntRep, e: Sequence[int]) -> Iterator[Subrep]:
    """Every point of Gr_e(M)(F_p) exactly once, with canonical RREF bases.

    Vertices are fixed in topological order; at each vertex only subspaces
    containing the images of the already chosen predecessors are generated.
    """
    if M.p is None:
        raise RepError("enumerate_submodules needs a representation reduced mod p")
    Q = M.quiver
    e = Q.check_dim(e)
    if not leq(e, M.dims) or any(x < 0 for x in e):
        return
    order = list(Q.topo)
    p = M.p
    chosen: dict[int, tuple[tuple[int, ...], ...]] = {}

    def rec(k: int) -> Iterator[Subrep]:
        if k == len(order):
            yield Subrep(M, dict(chosen))
            return
        v = order[k]
        W, wpiv = _image_span(M, v, chosen)
        for basis in _supersets(M.dim(v), e[Q.index[v]], W, wpiv, p):
            R, _ = linalg.rref(basis, p) if basis else ([], [])
            chosen[v] = tuple(tuple(r) for r in R)
            yield from rec(k + 1)
        chosen.pop(v, None)

    yield from rec(0)


def count_submodules(M: IntRep, e: Sequence[int]) -> int:
    """#Gr_e(M)(F_p), through the compiled kernel when available."""
    from .kernel import count_submodules as _count

    if M.p is None:
        raise RepError("count_submodules needs a representation reduced mod p")
    e = M.quiver.check_dim(e)
    return _count(M, e)


def subrep_as_rep(U: Subrep) -> IntRep:
    """U as a representation in the coordinates of its RREF bases."""
    M, p = U.parent, U.parent.p
    Q = M.quiver
    mats = {}
    for h in Q.arrows:
        tp = U.pivots(h.tgt)
        cols = []
        for u in U.bases[h.src]:
            img = linalg.mat_vec(M.matrices[h.id], u, p)
            if any(linalg.reduce_against(img, U.bases[h.tgt], tp, p)):
                raise RepError(f"subspace not closed under arrow {h.id!r}")
            cols.append([img[c] for c in tp])
        mats[h.id] = linalg.transpose(cols, len(U.bases[h.src]), len(tp))
    return IntRep(Q, U.dims, mats, p=p)


def quotient_rep(M: IntRep, U: Subrep) -> IntRep:
    """M/U on the complement spanned by standard vectors at non-pivot positions."""
    p = M.p
    Q = M.quiver
    comp = {v: [c for c in range(M.dim(v)) if c not in set(U.pivots(v))] for v in Q.vertices}
    mats = {}
    for h in Q.arrows:
        tb, tp = U.bases[h.tgt], U.pivots(h.tgt)
        for u in U.bases[h.src]:
            if any(linalg.reduce_against(linalg.mat_vec(M.matrices[h.id], u, p), tb, tp, p)):
                raise RepError(f"subspace not closed under arrow {h.id!r}")
        A = M.matrices[h.id]
        rows = [[0] * len(comp[h.src]) for _ in comp[h.tgt]]
        for b, c in enumerate(comp[h.src]):
            col = [A[r][c] for r in range(M.dim(h.tgt))]
            red = linalg.reduce_against(col, tb, tp, p)
            for a, c2 in enumerate(comp[h.tgt]):
                rows[a][b] = red[c2]
        mats[h.id] = rows
    return IntRep(Q, sub(M.dims, U.dims), mats, p=p)


def annihilator(U: Subrep, dual_parent: IntRep) -> Subrep:
    """The submodule (M/U)^* of DM matching U under duality; dims m - e."""
    p = U.parent.p
    bases = {}
    for v in U.parent.quiver.vertices:
        n = U.parent.dim(v)
        rows = [list(r) for r in U.bases[v]]
        ns = linalg.nullspace(rows, n, p) if rows else [[int(i == j) for j in range(n)] for i in range(n)]
        R, _ = linalg.rref(ns, p) if ns else ([], [])
        bases[v] = tuple(tuple(r) for r in R)
    return Subrep(dual_parent, bases)
