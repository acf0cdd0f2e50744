"""Multivariate Laurent polynomials over Z with exact division."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class InexactDivision(ArithmeticError):
    pass


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Element of Z[x_1^{+-1}, ..., x_n^{+-1}] stored as {exponent: coefficient}, zeros dropped."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], int] | None = None):
        self.n = n
        clean: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for {n} variables")
            c = int(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def const(cls, n: int, c: int = 1) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "LaurentPoly":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, n: int, i: int) -> "LaurentPoly":
        """x_{i+1} (0-based index)."""
        return cls.monomial([int(k == i) for k in range(n)])

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise ValueError("Laurent polynomials in different numbers of variables")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, int):
            return self == LaurentPoly.const(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.n, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise InexactDivision("only monomials have negative powers")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise InexactDivision(f"{c} is not a unit")
            return LaurentPoly.monomial([x * k for x in e], c ** (-k))
        out = LaurentPoly.const(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def min_exponents(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(min(e[i] for e in self.terms) for i in range(self.n))

    def max_exponents(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return tuple(max(e[i] for e in self.terms) for i in range(self.n))

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """The Laurent polynomial q with q * other == self; InexactDivision otherwise.

        Long division on lex-leading terms. An exact quotient has its exponents
        in the box [min(self) - min(other), max(self) - max(other)], so any
        candidate term outside it proves the division is not exact.
        """
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(self.n)
        lo = _sub_exp(self.min_exponents(), other.min_exponents())
        hi = _sub_exp(self.max_exponents(), other.max_exponents())
        lead_b = max(other.terms)
        cb = other.terms[lead_b]
        quot: dict[Exponent, int] = {}
        rem = LaurentPoly(self.n, self.terms)
        while not rem.is_zero():
            lead_r = max(rem.terms)
            cr = rem.terms[lead_r]
            e = _sub_exp(lead_r, lead_b)
            if cr % cb or any(x < a or x > b for x, a, b in zip(e, lo, hi)):
                raise InexactDivision("remainder does not vanish")
            q = LaurentPoly(self.n, {e: cr // cb})
            quot[e] = cr // cb
            rem = rem - q * other
        return LaurentPoly(self.n, quot)

    def nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def denominator_vector(self) -> Exponent:
        return tuple(-x for x in self.min_exponents())

    def evaluate(self, point: Sequence) -> object:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term = term * x**k
            total = total + term
        return total

    # -- serialization ----------------------------------------------------------------

    def to_list(self) -> list[list]:
        return [[list(e), c] for e, c in sorted(self.terms.items())]

    @classmethod
    def from_list(cls, n: int, data: Iterable) -> "LaurentPoly":
        return cls(n, {tuple(e): c for e, c in data})

    def canonical(self) -> str:
        """Numerator over the monomial denominator, e.g. ``(1+x1+x2)/(x1*x2)``."""
        if not self.terms:
            return "0"
        den = tuple(max(0, -x) for x in self.min_exponents())
        num = {_add_exp(e, den): c for e, c in self.terms.items()}
        keys = sorted(num, key=lambda e: (sum(e), tuple(-x for x in e)))
        parts = []
        for e in keys:
            c = num[e]
            mono = _mono(e)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+") + body)
        text = "".join(parts)
        text = text[1:] if text[0] == "+" else text
        if not any(den):
            return text
        if len(keys) > 1:
            text = f"({text})"
        dtext = _mono(den)
        if "*" in dtext:
            dtext = f"({dtext})"
        return f"{text}/{dtext}"

    def __str__(self) -> str:
        return self.canonical()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.canonical()!r})"


def _mono(e: Sequence[int]) -> str:
    return "*".join(f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k)
