"""Seeds and mutation for skew-symmetric cluster algebras, and the cluster character of a chi table."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .grass import ChiTable
from .laurent import InexactDivision, LaurentPoly
from .quiver import Quiver, box

BMatrix = tuple[tuple[int, ...], ...]


class LaurentPhenomenonError(InexactDivision):
    """An exchange relation did not divide exactly."""


def _as_bmatrix(B: Sequence[Sequence[int]]) -> BMatrix:
    n = len(B)
    out = tuple(tuple(int(x) for x in row) for row in B)
    if any(len(r) != n for r in out):
        raise ValueError("exchange matrix must be square")
    if any(out[i][k] != -out[k][i] for i in range(n) for k in range(n)):
        raise ValueError("exchange matrix must be antisymmetric")
    return out


def mutate_matrix(B: Sequence[Sequence[int]], j: int) -> BMatrix:
    """Matrix mutation at index j (0-based)."""
    B = _as_bmatrix(B)
    n = len(B)
    if not 0 <= j < n:
        raise IndexError(f"mutation index {j} out of range")
    out = []
    for i in range(n):
        row = []
        for k in range(n):
            if i == j or k == j:
                row.append(-B[i][k])
            else:
                twice = abs(B[i][j]) * B[j][k] + B[i][j] * abs(B[j][k])
                row.append(B[i][k] + twice // 2)
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentPoly, ...]
    bmatrix: BMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "bmatrix", _as_bmatrix(self.bmatrix))
        if len(self.cluster) != len(self.bmatrix):
            raise ValueError("cluster size differs from exchange matrix size")

    @classmethod
    def initial(cls, Q: Quiver) -> "Seed":
        n = Q.n
        return cls(tuple(LaurentPoly.var(n, i) for i in range(n)), Q.bmatrix())

    @property
    def n(self) -> int:
        return len(self.cluster)

    def key(self) -> tuple[str, ...]:
        return tuple(sorted(u.canonical() for u in self.cluster))

    def to_dict(self) -> dict:
        return {
            "cluster": [u.canonical() for u in self.cluster],
            "bmatrix": [list(r) for r in self.bmatrix],
        }


def mutate_seed(s: Seed, j: int) -> Seed:
    """Exchange u_j for (prod_{b_ij>0} u_i^b_ij + prod_{b_ij<0} u_i^-b_ij) / u_j."""
    n = s.n
    if not 0 <= j < n:
        raise IndexError(f"mutation index {j} out of range")
    pos = LaurentPoly.const(n)
    neg = LaurentPoly.const(n)
    for i in range(n):
        b = s.bmatrix[i][j]
        if b > 0:
            pos = pos * s.cluster[i] ** b
        elif b < 0:
            neg = neg * s.cluster[i] ** (-b)
    try:
        new = (pos + neg).exact_div(s.cluster[j])
    except InexactDivision as exc:
        raise LaurentPhenomenonError(f"exchange at {j} is not a Laurent polynomial") from exc
    cluster = list(s.cluster)
    cluster[j] = new
    return Seed(tuple(cluster), mutate_matrix(s.bmatrix, j))


def mutate_sequence(s: Seed, seq: Sequence[int]) -> Seed:
    for j in seq:
        s = mutate_seed(s, j)
    return s


@dataclass
class Exploration:
    seeds: dict[tuple[str, ...], Seed] = field(default_factory=dict)
    variables: dict[str, LaurentPoly] = field(default_factory=dict)
    anomalies: list[str] = field(default_factory=list)
    depth_reached: int = 0


def explore(Q: Quiver, max_depth: int) -> Exploration:
    """Breadth-first mutation from the initial seed, seeds identified by their cluster."""
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    start = Seed.initial(Q)
    out = Exploration()
    out.seeds[start.key()] = start
    for u in start.cluster:
        out.variables[u.canonical()] = u
    frontier = deque([(start, 0)])
    while frontier:
        s, d = frontier.popleft()
        out.depth_reached = max(out.depth_reached, d)
        if d == max_depth:
            continue
        for j in range(s.n):
            t = mutate_seed(s, j)
            k = t.key()
            old = out.seeds.get(k)
            if old is not None:
                if _aligned_bmatrix(old, t) is None:
                    out.anomalies.append(f"cluster {k} reached with different exchange matrices")
                continue
            out.seeds[k] = t
            for u in t.cluster:
                out.variables.setdefault(u.canonical(), u)
            frontier.append((t, d + 1))
    return out


def _aligned_bmatrix(a: Seed, b: Seed) -> BMatrix | None:
    """b's matrix permuted into a's cluster order, or None if they disagree."""
    pos = {u.canonical(): i for i, u in enumerate(b.cluster)}
    perm = [pos[u.canonical()] for u in a.cluster]
    Bp = tuple(tuple(b.bmatrix[perm[i]][perm[k]] for k in range(a.n)) for i in range(a.n))
    return Bp if Bp == a.bmatrix else None


def enumerate_cluster_variables(Q: Quiver, max_depth: int) -> set[LaurentPoly]:
    return set(explore(Q, max_depth).variables.values())


def cc_map(Q: Quiver, chi: ChiTable, m: Sequence[int] | None = None) -> LaurentPoly:
    """X_M = prod_i x_i^{-m_i} sum_e chi_e prod_h x_{s(h)}^{m_t - e_t} x_{t(h)}^{e_s}."""
    m = Q.check_dim(chi.dims if m is None else m)
    if m != chi.dims:
        raise ValueError(f"table is for dimension {chi.dims}, not {m}")
    n = Q.n
    idx = Q.index
    terms: dict[tuple[int, ...], int] = {}
    for e in box(m):
        c = chi[e]
        if not c:
            continue
        exp = [-x for x in m]
        for h in Q.arrows:
            s, t = idx[h.src], idx[h.tgt]
            exp[s] += m[t] - e[t]
            exp[t] += e[s]
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly(n, terms)


def denominator_vector(X: LaurentPoly) -> tuple[int, ...]:
    if X.is_zero():
        raise ValueError("zero Laurent polynomial has no denominator vector")
    return X.denominator_vector()
