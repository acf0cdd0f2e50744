"""Acyclic quivers, dimension vectors, Euler form and Coxeter data."""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

DimVector = tuple[int, ...]


class QuiverError(ValueError):
    """Raised for malformed quivers (cycles, bad vertices, duplicate arrow ids)."""


@dataclass(frozen=True)
class Arrow:
    id: str
    src: int
    tgt: int


@dataclass(frozen=True)
class Quiver:
    """A finite acyclic quiver with 1-based vertex ids.

    Dimension vectors are tuples ordered like ``vertices`` (ascending id).
    Multiple arrows between the same pair of vertices are allowed.
    """

    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...] = field(default=())

    def __post_init__(self) -> None:
        verts = tuple(sorted(int(v) for v in self.vertices))
        if len(set(verts)) != len(verts):
            raise QuiverError("duplicate vertex ids")
        object.__setattr__(self, "vertices", verts)
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        ids = [a.id for a in arrows]
        if len(set(ids)) != len(ids):
            raise QuiverError("arrow ids must be unique")
        vs = set(verts)
        for a in arrows:
            if a.src not in vs or a.tgt not in vs:
                raise QuiverError(f"arrow {a.id!r} uses an unknown vertex")
        # raises on cycles
        self.topological_order()

    # -- construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Quiver":
        """Quiver on vertices 1..n with arrows named a1, a2, ... in edge order."""
        arrows = tuple(Arrow(f"a{k + 1}", s, t) for k, (s, t) in enumerate(edges))
        return cls(tuple(range(1, n + 1)), arrows)

    @classmethod
    def from_dict(cls, data: dict) -> "Quiver":
        try:
            verts = tuple(int(v) for v in data["vertices"])
            arrows = tuple(
                Arrow(str(a["id"]), int(a["src"]), int(a["tgt"])) for a in data.get("arrows", [])
            )
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"malformed quiver JSON: {exc}") from exc
        return cls(verts, arrows)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in self.arrows],
        }

    @classmethod
    def loads(cls, text: str) -> "Quiver":
        return cls.from_dict(json.loads(text))

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def opposite(self) -> "Quiver":
        """The quiver with every arrow reversed (same ids)."""
        return Quiver(self.vertices, tuple(Arrow(a.id, a.tgt, a.src) for a in self.arrows))

    # -- indexing -------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[int, int]:
        """Vertex id -> position in dimension vectors."""
        return {v: k for k, v in enumerate(self.vertices)}

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def arrows_to(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.tgt == v]

    def delta(self, v: int) -> DimVector:
        d = [0] * self.n
        d[self.index[v]] = 1
        return tuple(d)

    def zero(self) -> DimVector:
        return (0,) * self.n

    def check_dim(self, d: Sequence[int]) -> DimVector:
        d = tuple(int(x) for x in d)
        if len(d) != self.n:
            raise ValueError(f"dimension vector {d} has length {len(d)}, quiver has {self.n} vertices")
        return d

    # -- order ----------------------------------------------------------------

    def topological_order(self) -> list[int]:
        """Vertex ids such that every path goes forward; ties by ascending id."""
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.tgt] += 1
        heap = [v for v, d in indeg.items() if d == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            v = heapq.heappop(heap)
            order.append(v)
            for a in self.arrows:
                if a.src == v:
                    indeg[a.tgt] -= 1
                    if indeg[a.tgt] == 0:
                        heapq.heappush(heap, a.tgt)
        if len(order) != self.n:
            raise QuiverError("quiver has an oriented cycle")
        return order

    @cached_property
    def topo(self) -> tuple[int, ...]:
        return tuple(self.topological_order())

    # -- forms and root data --------------------------------------------------

    def euler_form(self, e: Sequence[int], f: Sequence[int]) -> int:
        """<e, f> = sum_i e_i f_i - sum_h e_s(h) f_t(h)."""
        e, f = self.check_dim(e), self.check_dim(f)
        idx = self.index
        total = sum(a * b for a, b in zip(e, f))
        for h in self.arrows:
            total -= e[idx[h.src]] * f[idx[h.tgt]]
        return total

    @cached_property
    def _proj_dims(self) -> dict[int, DimVector]:
        dims: dict[int, DimVector] = {}
        for v in reversed(self.topo):
            d = list(self.delta(v))
            for h in self.arrows_from(v):
                d = [x + y for x, y in zip(d, dims[h.tgt])]
            dims[v] = tuple(d)
        return dims

    @cached_property
    def _inj_dims(self) -> dict[int, DimVector]:
        dims: dict[int, DimVector] = {}
        for v in self.topo:
            d = list(self.delta(v))
            for h in self.arrows_to(v):
                d = [x + y for x, y in zip(d, dims[h.src])]
            dims[v] = tuple(d)
        return dims

    def dim_projective(self, v: int) -> DimVector:
        return self._proj_dims[v]

    def dim_injective(self, v: int) -> DimVector:
        return self._inj_dims[v]

    @cached_property
    def cartan(self) -> list[list[int]]:
        """C with column k = dim P_{vertices[k]}."""
        cols = [self.dim_projective(v) for v in self.vertices]
        return [[cols[k][j] for k in range(self.n)] for j in range(self.n)]

    def _solve_cartan(self, y: Sequence[int], transpose: bool) -> list[int]:
        # C is unitriangular w.r.t. the topological order, so substitution stays integral.
        C = self.cartan
        idx = self.index
        x = [0] * self.n
        order = [idx[v] for v in self.topo]
        if transpose:
            # C^T x = y: row i of C^T involves x_j with (dim P_i)_j != 0, j after i.
            order = order[::-1]
        for i in order:
            acc = y[i]
            for j in range(self.n):
                if j == i:
                    continue
                c = C[i][j] if not transpose else C[j][i]
                if c:
                    acc -= c * x[j]
            x[i] = acc
        return x

    def _cartan_mul(self, x: Sequence[int], transpose: bool) -> list[int]:
        C = self.cartan
        if transpose:
            return [sum(C[j][i] * x[j] for j in range(self.n)) for i in range(self.n)]
        return [sum(C[i][j] * x[j] for j in range(self.n)) for i in range(self.n)]

    def coxeter_apply(self, d: Sequence[int]) -> DimVector:
        """Phi d with Phi = -C^T C^{-1}; sends dim X to dim tau X on non-projective preprojectives."""
        d = self.check_dim(d)
        y = self._solve_cartan(d, transpose=False)
        return tuple(-v for v in self._cartan_mul(y, transpose=True))

    def coxeter_inverse_apply(self, d: Sequence[int]) -> DimVector:
        """Phi^{-1} d = -C C^{-T} d; equals dim tau_- X for non-injective preprojective X."""
        d = self.check_dim(d)
        y = self._solve_cartan(d, transpose=True)
        return tuple(-v for v in self._cartan_mul(y, transpose=False))

    def bmatrix(self) -> list[list[int]]:
        """Exchange matrix b_ij = #(i -> j) - #(j -> i), indexed like ``vertices``."""
        B = [[0] * self.n for _ in range(self.n)]
        idx = self.index
        for h in self.arrows:
            B[idx[h.src]][idx[h.tgt]] += 1
            B[idx[h.tgt]][idx[h.src]] -= 1
        return B


def topological_order(Q: Quiver) -> list[int]:
    return Q.topological_order()


def euler_form(Q: Quiver, e: Sequence[int], f: Sequence[int]) -> int:
    return Q.euler_form(e, f)


def dim_projective(Q: Quiver, v: int) -> DimVector:
    return Q.dim_projective(v)


def dim_injective(Q: Quiver, v: int) -> DimVector:
    return Q.dim_injective(v)


def coxeter_inverse_apply(Q: Quiver, d: Sequence[int]) -> DimVector:
    return Q.coxeter_inverse_apply(d)


def bmatrix_from_quiver(Q: Quiver) -> list[list[int]]:
    return Q.bmatrix()


# -- dimension vector helpers --------------------------------------------------


def leq(e: Sequence[int], f: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(e, f))


def add(e: Sequence[int], f: Sequence[int]) -> DimVector:
    return tuple(a + b for a, b in zip(e, f))


def sub(e: Sequence[int], f: Sequence[int]) -> DimVector:
    return tuple(a - b for a, b in zip(e, f))


def box(m: Sequence[int]) -> Iterator[DimVector]:
    """All e with 0 <= e <= m, ordered by total dimension then lexicographically."""
    from itertools import product

    pts = list(product(*(range(x + 1) for x in m)))
    pts.sort(key=lambda e: (sum(e), e))
    return iter(pts)


def parse_dim(text: str) -> DimVector:
    """Parse a comma-separated dimension vector such as ``"1,2"``."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


# -- standard quivers --------------------------------------------------------------


def a1() -> Quiver:
    return Quiver((1,))


def a_linear(n: int) -> Quiver:
    """A_n with arrows i -> i+1."""
    return Quiver.from_edges(n, [(i, i + 1) for i in range(1, n)])


def kronecker() -> Quiver:
    """Two vertices, arrows ``a`` (alpha) and ``b`` (beta) from 1 to 2."""
    return Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 1, 2)))


def d4_subspace() -> Quiver:
    """D4 with the three outer vertices 1, 2, 3 pointing into the centre 4."""
    return Quiver.from_edges(4, [(1, 4), (2, 4), (3, 4)])
