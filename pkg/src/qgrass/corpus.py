"""Named test modules: all indecomposables of A2, A3, D4 and the small Kronecker families."""

from __future__ import annotations

from dataclasses import dataclass

from .kronecker import build_DMn, build_Mn, build_Mreg
from .quiver import Quiver, a_linear, d4_subspace, kronecker
from .rep import IntRep, projective, simple, thin


@dataclass(frozen=True)
class Entry:
    family: str
    rep: IntRep
    exceptional: bool
    indecomposable: bool = True

    @property
    def name(self) -> str:
        return f"{self.family}:{self.rep.label}"


def _thin(Q: Quiver, support) -> IntRep:
    support = list(support)
    return thin(Q, support, label="T" + "".join(str(v) for v in support))


def a2_modules() -> list[IntRep]:
    Q = a_linear(2)
    return [simple(Q, 1), simple(Q, 2), projective(Q, 1)]


def a3_modules() -> list[IntRep]:
    Q = a_linear(3)
    return [_thin(Q, range(i, j + 1)) for i in (1, 2, 3) for j in (1, 2, 3) if i <= j]


def d4_modules() -> list[IntRep]:
    """The 11 thin indecomposables (connected supports) and the one with dimension (1,1,1,2)."""
    Q = d4_subspace()
    out = [_thin(Q, [v]) for v in (1, 2, 3)]
    legs = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]
    out += [_thin(Q, [4])] + [_thin(Q, list(s) + [4]) for s in legs]
    big = IntRep(
        Q,
        (1, 1, 1, 2),
        {h.id: col for h, col in zip(sorted(Q.arrows, key=lambda h: h.src), ([[1], [0]], [[0], [1]], [[1], [1]]))},
        label="(1,1,1,2)",
    )
    return out + [big]


def kronecker_modules(max_n: int = 3, max_reg: int = 2) -> list[Entry]:
    out = []
    for n in range(max_n + 1):
        out.append(Entry("kronecker", build_Mn(n), True))
    for n in range(max_n + 1):
        out.append(Entry("kronecker", build_DMn(n), True))
    for lam in (0, 1):
        for n in range(1, max_reg + 1):
            out.append(Entry("kronecker", build_Mreg(n, lam), False))
    return out


def corpus(max_n: int = 3, max_reg: int = 2) -> list[Entry]:
    out = [Entry("A2", M, True) for M in a2_modules()]
    out += [Entry("A3", M, True) for M in a3_modules()]
    out += [Entry("D4", M, True) for M in d4_modules()]
    out += kronecker_modules(max_n, max_reg)
    return out


QUIVERS: dict[str, Quiver] = {
    "A2": a_linear(2),
    "A3": a_linear(3),
    "D4": d4_subspace(),
    "kronecker": kronecker(),
}
