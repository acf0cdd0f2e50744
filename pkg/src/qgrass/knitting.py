"""Knitting of the preprojective Auslander-Reiten component and the mesh recursion for chi tables."""

from __future__ import annotations

from dataclasses import dataclass, field

from .grass import ChiTable, chi_projective, convolve
from .quiver import DimVector, Quiver, add, box, leq, sub


class KnittingError(RuntimeError):
    pass


@dataclass
class ARVertex:
    """tau_-^m P_i together with its dimension vector.

    ``injective`` is None for vertices in the last knitted layer, whose
    translate was never computed.
    """

    m: int
    i: int
    dims: DimVector
    injective: bool | None = None

    @property
    def label(self) -> str:
        return f"tau-^{self.m} P{self.i}" if self.m else f"P{self.i}"


@dataclass
class Mesh:
    start: int
    middle: list[int]
    end: int


@dataclass
class ARComponent:
    quiver: Quiver
    vertices: list[ARVertex] = field(default_factory=list)
    arrows: list[tuple[int, int]] = field(default_factory=list)
    meshes: list[Mesh] = field(default_factory=list)
    order: list[int] = field(default_factory=list)

    def find(self, m: int, i: int) -> int:
        for k, v in enumerate(self.vertices):
            if v.m == m and v.i == i:
                return k
        raise KeyError(f"no knitted vertex tau-^{m} P{i}")

    def mesh_ending_at(self, k: int) -> Mesh | None:
        return next((ms for ms in self.meshes if ms.end == k), None)

    def check_mesh_additivity(self) -> list[str]:
        bad = []
        for ms in self.meshes:
            total = self.quiver.zero()
            for y in ms.middle:
                total = add(total, self.vertices[y].dims)
            expect = sub(total, self.vertices[ms.start].dims)
            if expect != self.vertices[ms.end].dims:
                bad.append(f"mesh {self.vertices[ms.start].label}: {expect} != {self.vertices[ms.end].dims}")
        return bad

    def to_dict(self) -> dict:
        return {
            "quiver": self.quiver.to_dict(),
            "vertices": [
                {"m": v.m, "i": v.i, "dims": list(v.dims), "injective": v.injective} for v in self.vertices
            ],
            "arrows": [[a, b] for a, b in self.arrows],
            "meshes": [{"start": ms.start, "middle": ms.middle, "end": ms.end} for ms in self.meshes],
        }


def knit(Q: Quiver, max_m: int) -> ARComponent:
    """Build layers 0..max_m of the preprojective component.

    A vertex is processed once every arrow ending in it is known; its
    translate has dimension Phi^{-1}(dim X), and a negative entry there means
    X is injective. The middle term of the mesh is read off the arrows leaving X.
    """
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    comp = ARComponent(Q)
    for i in reversed(Q.topo):
        comp.vertices.append(ARVertex(0, i, Q.dim_projective(i)))
    pos0 = {v.i: k for k, v in enumerate(comp.vertices)}
    for h in Q.arrows:
        # P_j sits inside Rad P_i for every arrow i -> j
        comp.arrows.append((pos0[h.tgt], pos0[h.src]))

    processed: set[int] = set()
    while len(processed) < len(comp.vertices):
        ready = [
            k
            for k in range(len(comp.vertices))
            if k not in processed and all(a in processed for a, b in comp.arrows if b == k)
        ]
        if not ready:
            raise KnittingError("knitting stalled: no vertex has all incoming arrows resolved")
        k = min(ready, key=lambda k: (comp.vertices[k].m, k))
        X = comp.vertices[k]
        processed.add(k)
        comp.order.append(k)
        if X.m >= max_m:
            continue
        d = Q.coxeter_inverse_apply(X.dims)
        if any(x < 0 for x in d):
            X.injective = True
            continue
        X.injective = False
        middle = [b for a, b in comp.arrows if a == k]
        total = Q.zero()
        for y in middle:
            total = add(total, comp.vertices[y].dims)
        if sub(total, X.dims) != d:
            raise KnittingError(f"mesh additivity fails at {X.label}: {sub(total, X.dims)} vs {d}")
        comp.vertices.append(ARVertex(X.m + 1, X.i, d))
        z = len(comp.vertices) - 1
        for y in middle:
            comp.arrows.append((y, z))
        comp.meshes.append(Mesh(k, middle, z))
    return comp


def knit_all(Q: Quiver, limit: int = 64) -> ARComponent:
    """Knit until every vertex is injective (Dynkin case); raise if ``limit`` layers do not suffice."""
    comp = knit(Q, limit)
    if any(v.injective is None for v in comp.vertices):
        raise KnittingError(f"preprojective component not finite within {limit} layers")
    return comp


@dataclass
class MeshIssue:
    vertex: str
    entry: DimVector
    detail: str

    def to_dict(self) -> dict:
        return {"vertex": self.vertex, "e": list(self.entry), "detail": self.detail}


def mesh_recursion(Q: Quiver, tM: ChiTable, tE: ChiTable, dimN: DimVector, label: str = "") -> tuple[ChiTable, list[MeshIssue]]:
    """Solve the almost split sequence relation for chi(Gr(N)), N = tau_- M.

    chi_E(g) = sum_{e+f=g} chi_M(e) chi_N(f), except at g = dim N where the
    pair (0, N) has an empty fibre and the right side loses 1. Entries are
    solved in increasing total dimension; the value at dim N must come out as 1,
    and the relation is rechecked on every g <= dim E.
    """
    issues: list[MeshIssue] = []
    chiN: dict[DimVector, int] = {}
    zero = Q.zero()
    for g in box(dimN):
        s = 0
        for e, a in tM.chi.items():
            if e != zero and a and leq(e, g):
                s += a * chiN.get(sub(g, e), 0)
        val = tE[g] - s
        if g == dimN:
            val += 1
        chiN[g] = val
    if chiN[dimN] != 1:
        issues.append(MeshIssue(label, dimN, f"recursion gives {chiN[dimN]} at dim N, expected 1"))
    chiN[dimN] = 1
    for g in box(tE.dims):
        rhs = sum(a * chiN.get(sub(g, e), 0) for e, a in tM.chi.items() if leq(e, g))
        if g == dimN:
            rhs -= 1
        if rhs != tE[g]:
            issues.append(MeshIssue(label, g, f"mesh relation: chi_E={tE[g]} but convolution gives {rhs}"))
    for g, v in chiN.items():
        if v < 0:
            issues.append(MeshIssue(label, g, f"negative Euler characteristic {v}"))
    return ChiTable(Q, dimN, {g: v for g, v in chiN.items() if v}, label=label), issues


def preprojective_tables(Q: Quiver, comp: ARComponent) -> tuple[dict[int, ChiTable], list[MeshIssue]]:
    """chi tables of every knitted vertex, computed in knitting order."""
    tables: dict[int, ChiTable] = {}
    issues: list[MeshIssue] = []
    for k, v in enumerate(comp.vertices):
        if v.m == 0:
            t = chi_projective(Q, v.i)
            t.label = v.label
            tables[k] = t
    for ms in comp.meshes:
        tE = convolve([tables[y] for y in ms.middle], Q)
        N = comp.vertices[ms.end]
        t, errs = mesh_recursion(Q, tables[ms.start], tE, N.dims, N.label)
        tables[ms.end] = t
        issues.extend(errs)
    return tables, issues


def chi_preprojective(Q: Quiver, m: int, i: int, comp: ARComponent | None = None) -> ChiTable:
    """chi table of tau_-^m P_i via the mesh recursion; raises on any consistency failure."""
    if comp is None or not any(v.m >= m for v in comp.vertices):
        comp = knit(Q, m)
    k = comp.find(m, i)
    tables, issues = preprojective_tables(Q, comp)
    if issues:
        raise KnittingError("; ".join(f"{x.vertex} {x.entry}: {x.detail}" for x in issues))
    return tables[k]


def chi_postinjective(Q: Quiver, m: int, i: int) -> ChiTable:
    """chi table of tau_+^m I_i, by duality with tau_-^m P_i on the opposite quiver."""
    t = chi_preprojective(Q.opposite(), m, i)
    out = t.reindexed_dual(Q)
    out.label = f"tau+^{m} I{i}" if m else f"I{i}"
    return out
