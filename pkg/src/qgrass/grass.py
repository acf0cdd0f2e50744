"""Point-count polynomials of quiver Grassmannians and tables of Euler characteristics."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from typing import Iterable, Mapping, Sequence

from .linalg import primes_from
from .poly import IntPolynomial, lagrange, q_binomial
from .quiver import DimVector, Quiver, add, box, leq, sub
from .rep import IntRep, count_submodules, dual_rep, ext_dim, reduce_mod


class PolynomialityError(RuntimeError):
    """Interpolated counts are not an integral polynomial consistent at every prime."""

    def __init__(self, message: str, witness_prime: int | None = None, entry: DimVector | None = None):
        super().__init__(message)
        self.witness_prime = witness_prime
        self.entry = entry


class NotEnoughPrimes(ValueError):
    def __init__(self, required: int, given: int, entry: DimVector | None = None):
        super().__init__(f"need at least {required} primes for entry {entry}, got {given}")
        self.required = required
        self.entry = entry


@dataclass
class ChiTable:
    """Euler characteristics chi(Gr_e(M)) keyed by dimension vector e.

    Missing entries are zero. ``polys`` optionally holds the counting polynomial
    of each entry.
    """

    quiver: Quiver
    dims: DimVector
    chi: dict[DimVector, int]
    polys: dict[DimVector, IntPolynomial] | None = None
    label: str = ""
    primes: tuple[int, ...] = field(default=())

    def __getitem__(self, e: Sequence[int]) -> int:
        return self.chi.get(tuple(e), 0)

    def nonzero(self) -> dict[DimVector, int]:
        return {e: v for e, v in sorted(self.chi.items()) if v != 0}

    def same_values(self, other: "ChiTable") -> bool:
        return self.dims == other.dims and self.nonzero() == other.nonzero()

    def reindexed_dual(self, Q: Quiver | None = None) -> "ChiTable":
        """The table e -> chi(m - e), i.e. the table of the dual module on Q^opp."""
        m = self.dims
        chi = {sub(m, e): v for e, v in self.chi.items()}
        polys = None if self.polys is None else {sub(m, e): P for e, P in self.polys.items()}
        return ChiTable(Q or self.quiver.opposite(), m, chi, polys, label=f"D({self.label})")

    def to_dict(self) -> dict:
        entries = []
        for e in box(self.dims):
            if e not in self.chi and (self.polys is None or e not in self.polys):
                continue
            item: dict = {"e": list(e)}
            if self.polys is not None and e in self.polys:
                item["poly"] = list(self.polys[e].coeffs)
            item["chi"] = self.chi.get(e, 0)
            entries.append(item)
        return {"module": self.label, "dims": list(self.dims), "entries": entries}

    @classmethod
    def from_dict(cls, data: Mapping, quiver: Quiver) -> "ChiTable":
        chi = {}
        polys = {}
        for item in data["entries"]:
            e = tuple(item["e"])
            chi[e] = int(item["chi"])
            if "poly" in item:
                polys[e] = IntPolynomial(item["poly"])
        return cls(quiver, tuple(data["dims"]), chi, polys or None, label=data.get("module", ""))

    def to_tsv(self) -> str:
        lines = ["e\tchi\tpoly"]
        for item in self.to_dict()["entries"]:
            e = ",".join(str(x) for x in item["e"])
            poly = ",".join(str(c) for c in item.get("poly", []))
            lines.append(f"{e}\t{item['chi']}\t{poly}")
        return "\n".join(lines) + "\n"


# -- brute-force counting ----------------------------------------------------------

_count_cache: dict[tuple, int] = {}


def enumeration_cost(M: IntRep, e: Sequence[int], p: int) -> int:
    """Upper bound on the subspaces the kernel visits: Gr sizes at the non-sink vertices."""
    Q = M.quiver
    cost = 1
    for v in Q.vertices:
        if Q.arrows_from(v):
            k = Q.index[v]
            cost *= q_binomial(M.dims[k], e[k])(p) if 0 <= e[k] <= M.dims[k] else 0
    return cost


def cached_count(M: IntRep, e: DimVector, p: int, *, use_duality: bool = True) -> int:
    """#Gr_e(M)(F_p), memoised on the integer representation.

    U -> (M/U)^* identifies Gr_e(M) with Gr_{m-e}(DM) on the opposite quiver,
    so the count is taken on whichever side has the smaller enumeration.
    """
    key = (M.key(), e, p, use_duality)
    val = _count_cache.get(key)
    if val is None:
        target, f = M, e
        if use_duality and leq(e, M.dims):
            _, DM = dual_rep(M)
            g = sub(M.dims, e)
            if enumeration_cost(DM, g, p) < enumeration_cost(M, e, p):
                target, f = DM, g
        val = count_submodules(reduce_mod(target, p), f)
        _count_cache[key] = val
    return val


def degree_bound(M: IntRep, e: Sequence[int], ext_mm: int) -> int:
    """Upper bound on dim Gr_e(M): max(0, <e, m-e>) + dim Ext^1(M, M)."""
    Q = M.quiver
    return max(0, Q.euler_form(e, sub(M.dims, e))) + ext_mm


def extend_primes(primes: Sequence[int], needed: int) -> list[int]:
    out = list(primes)
    if len(out) >= needed:
        return out
    gen = primes_from(max(out) + 1 if out else 2)
    out.extend(islice(gen, needed - len(out)))
    return out


def interpolate_count_polynomial(
    M: IntRep,
    e: Sequence[int],
    primes: Sequence[int],
    *,
    ext_mm: int | None = None,
    extend: bool = False,
    use_duality: bool = True,
) -> IntPolynomial:
    """Interpolate #Gr_e(M)(F_p) over the first D+1 primes and certify it on the rest.

    D is the dimension bound; at least one held-out prime is required.
    """
    Q = M.quiver
    e = Q.check_dim(e)
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    if not leq(e, M.dims) or any(x < 0 for x in e):
        return IntPolynomial()
    if not any(e):
        return IntPolynomial([1])
    if ext_mm is None:
        p0 = primes[0] if primes else 2
        Mp = reduce_mod(M, p0)
        ext_mm = ext_dim(Mp, Mp)
    D = degree_bound(M, e, ext_mm)
    if len(primes) < D + 2:
        if not extend:
            raise NotEnoughPrimes(D + 2, len(primes), e)
        primes = extend_primes(primes, D + 2)
    counts = [(p, cached_count(M, e, p, use_duality=use_duality)) for p in primes]
    coeffs = lagrange(counts[: D + 1])
    if any(c.denominator != 1 for c in coeffs):
        raise PolynomialityError(
            f"non-integral interpolation for e={e}: {[str(c) for c in coeffs]}",
            witness_prime=counts[D][0],
            entry=e,
        )
    P = IntPolynomial(int(c) for c in coeffs)
    for p, c in counts[D + 1 :]:
        if P(p) != c:
            raise PolynomialityError(
                f"count {c} at p={p} disagrees with interpolated {P} for e={e}",
                witness_prime=p,
                entry=e,
            )
    return P


def chi_table_bruteforce(
    M: IntRep, primes: Sequence[int], *, extend: bool = False, use_duality: bool = True
) -> ChiTable:
    """chi(Gr_e(M)) = P_e(1) for every e <= dim M, from certified counting polynomials."""
    Q = M.quiver
    primes = list(primes)
    p0 = primes[0] if primes else 2
    Mp = reduce_mod(M, p0)
    ext_mm = ext_dim(Mp, Mp)
    chi: dict[DimVector, int] = {}
    polys: dict[DimVector, IntPolynomial] = {}
    used = set(primes)
    for e in box(M.dims):
        try:
            P = interpolate_count_polynomial(M, e, primes, ext_mm=ext_mm, extend=extend, use_duality=use_duality)
        except PolynomialityError as exc:
            raise PolynomialityError(f"entry {e} of {M.label or 'module'}: {exc}", exc.witness_prime, e) from exc
        polys[e] = P
        chi[e] = P(1)
        if extend:
            used.update(extend_primes(primes, degree_bound(M, e, ext_mm) + 2))
    return ChiTable(Q, M.dims, chi, polys, label=M.label, primes=tuple(sorted(used)))


# -- closed formulas --------------------------------------------------------------------


def convolve(tables: Iterable[ChiTable], Q: Quiver) -> ChiTable:
    """Direct-sum convolution chi_g(M + N) = sum_{e+f=g} chi_e(M) chi_f(N)."""
    acc = {Q.zero(): 1}
    dims = Q.zero()
    labels = []
    for t in tables:
        nxt: dict[DimVector, int] = {}
        for e, a in acc.items():
            for f, b in t.chi.items():
                if a and b:
                    g = add(e, f)
                    nxt[g] = nxt.get(g, 0) + a * b
        acc = nxt
        dims = add(dims, t.dims)
        if t.label:
            labels.append(t.label)
    return ChiTable(Q, dims, {g: v for g, v in acc.items() if v}, label="+".join(labels))


def chi_direct_sum(tM: ChiTable, tN: ChiTable) -> ChiTable:
    if tM.quiver != tN.quiver:
        raise ValueError("tables belong to different quivers")
    return convolve([tM, tN], tM.quiver)


def chi_simple(Q: Quiver, v: int) -> ChiTable:
    return ChiTable(Q, Q.delta(v), {Q.zero(): 1, Q.delta(v): 1}, label=f"S{v}")


def chi_projective(Q: Quiver, v: int) -> ChiTable:
    """chi(Gr_e(P_v)) = [e = dim P_v] + (convolution over the arrows v -> j of the P_j tables).

    A proper submodule of P_v lies in Rad P_v, the direct sum of P_j over the
    arrows v -> j (one summand per arrow).
    """
    tables: dict[int, ChiTable] = {}
    for w in reversed(Q.topo):
        rad = convolve([tables[h.tgt] for h in Q.arrows_from(w)], Q)
        chi = dict(rad.chi)
        top = Q.dim_projective(w)
        chi[top] = chi.get(top, 0) + 1
        tables[w] = ChiTable(Q, top, chi, label=f"P{w}")
        if w == v:
            break
    return tables[v]


def chi_injective(Q: Quiver, v: int) -> ChiTable:
    t = chi_projective(Q.opposite(), v)
    out = t.reindexed_dual(Q)
    out.label = f"I{v}"
    return out


# -- positivity -------------------------------------------------------------------------


@dataclass
class Violation:
    entry: DimVector
    reason: str

    def to_dict(self) -> dict:
        return {"e": list(self.entry), "reason": self.reason}


def assert_positive(t: ChiTable) -> list[Violation]:
    """Nonempty entries must have nonnegative coefficients and chi > 0."""
    out = []
    keys = set(t.chi) | set(t.polys or {})
    for e in sorted(keys):
        P = (t.polys or {}).get(e)
        chi = t.chi.get(e, 0)
        if P is not None:
            if P.is_zero():
                if chi != 0:
                    out.append(Violation(e, f"empty Grassmannian with chi={chi}"))
                continue
            if not P.nonnegative():
                out.append(Violation(e, f"negative coefficient in {P}"))
            if P(1) != chi:
                out.append(Violation(e, f"P(1)={P(1)} differs from chi={chi}"))
        if chi < 0 or (P is not None and chi == 0):
            out.append(Violation(e, f"chi={chi} is not positive"))
    return out


def check_table_invariants(t: ChiTable) -> list[Violation]:
    """chi(0) = chi(dim M) = 1 and stored polynomials evaluate to chi at 1."""
    out = []
    zero = tuple(0 for _ in t.dims)
    if t[zero] != 1:
        out.append(Violation(zero, f"chi(0)={t[zero]}"))
    if any(t.dims) and t[t.dims] != 1:
        out.append(Violation(t.dims, f"chi(dim M)={t[t.dims]}"))
    for e, P in (t.polys or {}).items():
        if P(1) != t[e]:
            out.append(Violation(e, "polynomial does not evaluate to chi at 1"))
    return out

