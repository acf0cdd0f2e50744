"""Indecomposable Kronecker modules and closed formulas for their Euler characteristics.

The Kronecker quiver has vertices 1, 2 and arrows ``a`` (alpha), ``b`` (beta)
from 1 to 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .grass import chi_table_bruteforce
from .quiver import DimVector, box, kronecker
from .rep import IntRep

KINDS = ("M", "DM", "Mreg")


def binom(a: int, b: int) -> int:
    """C(a, b), zero unless 0 <= b <= a (negative a included)."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def build_Mn(n: int) -> IntRep:
    """M^n: alpha(u_i) = v_i, beta(u_i) = v_{i+1}; dims (n, n+1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = [[int(r == c) for c in range(n)] for r in range(n + 1)]
    b = [[int(r == c + 1) for c in range(n)] for r in range(n + 1)]
    return IntRep(kronecker(), (n, n + 1), {"a": a, "b": b}, label=f"M^{n}")


def build_DMn(n: int) -> IntRep:
    """The dual of M^n carried back to the Kronecker quiver; dims (n+1, n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    M = build_Mn(n)
    a = [list(col) for col in zip(*M.matrices["a"])] if n else []
    b = [list(col) for col in zip(*M.matrices["b"])] if n else []
    return IntRep(kronecker(), (n + 1, n), {"a": a, "b": b}, label=f"DM^{n}")


def build_Mreg(n: int, lam: int) -> IntRep:
    """M_reg(lam)^n: alpha = identity, beta = lam * identity + lower shift; dims (n, n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    a = [[int(r == c) for c in range(n)] for r in range(n)]
    b = [[lam * int(r == c) + int(r == c + 1) for c in range(n)] for r in range(n)]
    return IntRep(kronecker(), (n, n), {"a": a, "b": b}, label=f"Mreg({lam})^{n}")


def build(kind: str, n: int, lam: int = 0) -> IntRep:
    if kind == "M":
        return build_Mn(n)
    if kind == "DM":
        return build_DMn(n)
    if kind == "Mreg":
        return build_Mreg(n, lam)
    raise ValueError(f"unknown Kronecker module kind {kind!r}")


def dims_of(kind: str, n: int) -> DimVector:
    return {"M": (n, n + 1), "DM": (n + 1, n), "Mreg": (n, n)}[kind]


# -- closed formulas -------------------------------------------------------------


def _chi_M(n: int, e1: int, e2: int) -> int:
    if e1 == 0:
        return binom(n + 1, e2)
    return sum(
        binom(p, e2 - n - 1 + p) * binom(e1 - 1, n - p - e1) * binom(n + 1 - e1, p) for p in range(n + 2)
    )


def _chi_Mreg(n: int, e1: int, e2: int) -> int:
    return sum(binom(p, e2 - n + p) * binom(e1, n - p - e1) * binom(n - e1, p) for p in range(n + 1))


def chi_closed_form(kind: str, n: int, e: Sequence[int], variant: str = "duality") -> int:
    """Closed-form chi(Gr_e) for M^n, DM^n, M_reg(lam)^n.

    DM^n is reduced to M^n by a reflection of e. ``variant="duality"`` uses
    Gr_(e1,e2)(DM^n) ~ Gr_(n-e2, n+1-e1)(M^n), which follows from U -> (M/U)^*.
    ``variant="swap"`` uses the naive exchange (e1, e2) -> (e2, e1); it is kept
    only so reports can show where it goes wrong.
    """
    e1, e2 = e
    m = dims_of(kind, n)
    if not (0 <= e1 <= m[0] and 0 <= e2 <= m[1]):
        return 0
    if variant not in ("duality", "swap"):
        raise ValueError(f"unknown variant {variant!r}")
    if kind == "M":
        return _chi_M(n, e1, e2)
    if kind == "DM":
        if variant == "swap":
            return _chi_M(n, e2, e1)
        return _chi_M(n, n - e2, n + 1 - e1)
    if kind == "Mreg":
        return _chi_Mreg(n, e1, e2)
    raise ValueError(f"unknown Kronecker module kind {kind!r}")


@dataclass
class KroneckerReport:
    kind: str
    n: int
    lam: int
    primes: tuple[int, ...]
    rows: list[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if not r["match"]]

    @property
    def errata(self) -> list[dict]:
        return [r for r in self.rows if r["swap"] != r["bruteforce"]]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "lambda": self.lam,
            "primes": list(self.primes),
            "entries": self.rows,
            "mismatches": len(self.mismatches),
            "swap_errata": [{"e": r["e"], "swap": r["swap"], "bruteforce": r["bruteforce"]} for r in self.errata],
        }


def kronecker_table(kind: str, n: int, primes: Sequence[int], lam: int = 0, max_n: int = 4) -> KroneckerReport:
    """Compare the closed form (and the swap reflection) with brute-force chi for every e."""
    if n > max_n:
        raise ValueError(f"n={n} exceeds the brute-force guard {max_n}")
    M = build(kind, n, lam)
    table = chi_table_bruteforce(M, primes, extend=True)
    report = KroneckerReport(kind, n, lam, table.primes)
    for e in box(M.dims):
        bf = table[e]
        closed = chi_closed_form(kind, n, e, "duality")
        swap = chi_closed_form(kind, n, e, "swap")
        report.rows.append(
            {"e": list(e), "bruteforce": bf, "closed_form": closed, "swap": swap, "match": closed == bf}
        )
    return report
