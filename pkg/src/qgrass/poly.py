"""Univariate integer polynomials and exact Lagrange interpolation."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class IntPolynomial:
    """Polynomial with integer coefficients in ascending degree, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        s = "".join(f" {sgn} {b}" for sgn, b in terms).strip()
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


def lagrange(points: Sequence[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (ascending) of the unique polynomial of degree < len(points)."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            # multiply basis by (t - xj)
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k in range(len(basis)):
            coeffs[k] += scale * basis[k]
    return coeffs


def chi_from_polynomial(P: IntPolynomial) -> int:
    return P(1)


def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial [n choose k]_t via the q-Pascal rule."""
    if k < 0 or k > n:
        return IntPolynomial()
    rows = [[IntPolynomial([1])]]
    for m in range(1, n + 1):
        prev = rows[-1]
        row = []
        for j in range(m + 1):
            left = prev[j - 1] if j >= 1 else IntPolynomial()
            right = prev[j] if j < m else IntPolynomial()
            # [m, j] = [m-1, j-1] + t^j [m-1, j]
            shifted = IntPolynomial([0] * j + list(right.coeffs)) if right.coeffs else IntPolynomial()
            row.append(left + shifted)
        rows.append(row)
    return rows[n][k]
