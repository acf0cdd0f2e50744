"""Independent submodule counts from Hom-dimension strata of representation spaces.

For a dimension vector m, summing |Hom(X, M)| / |G_m| over all points X of
E_m counts pairs (X, f: X -> M) up to the group action. Sorting the maps by
their image gives a triangular system in the numbers |Gr_{m'}(M)|, m' <= m:

    |Gr_m(M)| = sum_a q^a |E_m^{a,M}| / |G_m|
                - sum_{m' < m} q^{-<m', m-m'>} |Gr_{m'}(M)| |E_{m-m'}| / |G_{m-m'}|

This only touches whole representation spaces, so it shares no code with the
submodule enumerator and serves as a cross-check for tiny instances.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .linalg import is_prime
from .quiver import DimVector, Quiver, box, leq, sub
from .rep import IntRep, RepError, hom_dim


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} points, budget is {budget} (set QGRASS_BUDGET to raise it)")
        self.required = required
        self.budget = budget


class HallIntegralityError(ArithmeticError):
    pass


def default_budget(q: int) -> int:
    env = os.environ.get("QGRASS_BUDGET")
    if env:
        return int(env)
    return q**12


def _arrow_exponent(Q: Quiver, m: Sequence[int]) -> int:
    return sum(m[Q.index[h.src]] * m[Q.index[h.tgt]] for h in Q.arrows)


def card_E(Q: Quiver, m: Sequence[int], q: int) -> int:
    """Number of F_q-points of the representation space E_m."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    return q ** _arrow_exponent(Q, m)


def card_G(m: Sequence[int], q: int) -> int:
    """|G_m| = prod_i |GL_{m_i}(F_q)|."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    out = 1
    for d in m:
        for k in range(d):
            out *= q**d - q**k
    return out


@dataclass
class StratumCensus:
    dims: DimVector
    q: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {"dims": list(self.dims), "q": self.q, "counts": {str(a): c for a, c in sorted(self.counts.items())}}


def iter_points(Q: Quiver, m: Sequence[int], q: int):
    """Every point of E_m(F_q) as a dict arrow id -> matrix."""
    shapes = [(h.id, m[Q.index[h.tgt]], m[Q.index[h.src]]) for h in Q.arrows]
    n_entries = sum(r * c for _, r, c in shapes)
    for flat in product(range(q), repeat=n_entries):
        mats, pos = {}, 0
        for hid, r, c in shapes:
            mats[hid] = [list(flat[pos + i * c : pos + (i + 1) * c]) for i in range(r)]
            pos += r * c
        yield mats


def hom_stratum_census(Q: Quiver, m: Sequence[int], M: IntRep, budget: int | None = None) -> StratumCensus:
    """Tally the points X of E_m(F_q) by dim Hom(X, M), q = M.p."""
    q = M.p
    if q is None:
        raise RepError("the target module must be reduced modulo a prime")
    m = Q.check_dim(m)
    budget = default_budget(q) if budget is None else budget
    required = card_E(Q, m, q)
    if required > budget:
        raise BudgetExceeded(required, budget)
    counts: dict[int, int] = {}
    for mats in iter_points(Q, m, q):
        a = hom_dim(IntRep(Q, m, mats, p=q), M)
        counts[a] = counts.get(a, 0) + 1
    census = StratumCensus(m, q, counts)
    assert census.total == required, "census lost points"
    return census


def gr_count_via_hall(
    Q: Quiver,
    target: Sequence[int],
    M: IntRep,
    budget: int | None = None,
    trace: dict[DimVector, int] | None = None,
) -> int:
    """#Gr_target(M)(F_q) by the stratum recursion; every intermediate value must be a nonnegative integer.

    ``trace``, if given, receives the value found for every m' <= target.
    """
    q = M.p
    if q is None:
        raise RepError("the target module must be reduced modulo a prime")
    if M.quiver != Q:
        raise RepError("module lives on a different quiver")
    target = Q.check_dim(target)
    if not leq(target, M.dims) or any(x < 0 for x in target):
        return 0
    memo: dict[DimVector, int] = {} if trace is None else trace
    for m in box(target):
        if not leq(m, target):
            continue
        census = hom_stratum_census(Q, m, M, budget)
        val = Fraction(sum(q**a * c for a, c in census.counts.items()), card_G(m, q))
        for mp in box(m):
            if mp == m:
                continue
            rest = sub(m, mp)
            val -= (
                Fraction(q) ** (-Q.euler_form(mp, rest))
                * memo[mp]
                * Fraction(card_E(Q, rest, q), card_G(rest, q))
            )
        if val.denominator != 1 or val < 0:
            raise HallIntegralityError(f"value {val} at m'={m} is not a nonnegative integer")
        memo[m] = int(val)
    return memo[target]
