"""Tangent spaces of quiver Grassmannians at F_p-points: T_U = Hom(U, M/U)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .quiver import DimVector, sub
from .rep import IntRep, RepError, Subrep, enumerate_submodules, ext_dim, hom_dim, quotient_rep, subrep_as_rep


class NotExceptional(ValueError):
    def __init__(self, ext: int):
        super().__init__(f"module is not exceptional: dim Ext^1(M, M) = {ext}")
        self.ext = ext


def tangent_dim(M: IntRep, U: Subrep) -> int:
    if U.parent is not M and U.parent.key() != M.key():
        raise RepError("U is not a submodule of M")
    if not any(U.dims):
        return 0
    return hom_dim(subrep_as_rep(U), quotient_rep(M, U))


@dataclass
class TangentReport:
    dims: DimVector
    e: DimVector
    p: int
    euler_form: int
    ext_MM: int
    points: int = 0
    min_tangent: int | None = None
    max_tangent: int | None = None
    violations: list[str] = field(default_factory=list)

    def observe(self, t: int) -> None:
        self.points += 1
        self.min_tangent = t if self.min_tangent is None else min(self.min_tangent, t)
        self.max_tangent = t if self.max_tangent is None else max(self.max_tangent, t)

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "e": list(self.e),
            "prime": self.p,
            "points": self.points,
            "min_tangent": self.min_tangent,
            "max_tangent": self.max_tangent,
            "euler_form": self.euler_form,
            "ext_MM": self.ext_MM,
            "violations": self.violations,
        }


def _scan(M: IntRep, e: Sequence[int], exact: bool) -> TangentReport:
    if M.p is None:
        raise RepError("tangent computations need a representation reduced mod p")
    Q = M.quiver
    e = Q.check_dim(e)
    lo = Q.euler_form(e, sub(M.dims, e))
    ext = ext_dim(M, M)
    rep = TangentReport(M.dims, e, M.p, lo, ext)
    for U in enumerate_submodules(M, e):
        t = tangent_dim(M, U)
        rep.observe(t)
        if exact and t != lo:
            rep.violations.append(f"U={U.key()}: tangent {t} != {lo}")
        elif not lo <= t <= lo + ext:
            rep.violations.append(f"U={U.key()}: tangent {t} outside [{lo}, {lo + ext}]")
    return rep


def check_bounds(M: IntRep, e: Sequence[int]) -> TangentReport:
    """<e, m-e> <= dim T_U <= <e, m-e> + dim Ext^1(M, M) at every enumerated U."""
    return _scan(M, e, exact=False)


def smoothness_scan(M: IntRep, e: Sequence[int]) -> TangentReport:
    """For exceptional M every tangent space has dimension exactly <e, m-e>."""
    ext = ext_dim(M, M) if M.p is not None else None
    if ext is None:
        raise RepError("tangent computations need a representation reduced mod p")
    if ext:
        raise NotExceptional(ext)
    return _scan(M, e, exact=True)
