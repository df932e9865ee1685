"""Integer Laurent polynomials and the Alexander polynomial of a Seifert matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import SeifertMatrix, det, is_perfect_square


@dataclass(frozen=True)
class LaurentPoly:
    """``sum(coeffs[i] * t**(lowdeg + i))`` with no zero coefficients at either end.

    The zero polynomial is stored as ``coeffs=(), lowdeg=0``.
    """

    coeffs: tuple[int, ...]
    lowdeg: int = 0

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        lo = self.lowdeg
        start = next((i for i, x in enumerate(c) if x), len(c))
        end = next((i for i in range(len(c), 0, -1) if c[i - 1]), 0)
        if start >= end:
            c, lo = (), 0
        else:
            c, lo = c[start:end], lo + start
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "lowdeg", lo)

    @classmethod
    def const(cls, k: int) -> "LaurentPoly":
        return cls((k,))

    @classmethod
    def monomial(cls, k: int, deg: int) -> "LaurentPoly":
        return cls((k,), deg)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def highdeg(self) -> int:
        return self.lowdeg + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Difference between highest and lowest exponent."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no span")
        return len(self.coeffs) - 1

    def coeff(self, deg: int) -> int:
        i = deg - self.lowdeg
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.lowdeg, other.lowdeg)
        hi = max(self.highdeg, other.highdeg)
        return LaurentPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)), lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple(-x for x in self.coeffs), self.lowdeg)

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(tuple(other * x for x in self.coeffs), self.lowdeg)
        if self.is_zero or other.is_zero:
            return LaurentPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return LaurentPoly(tuple(out), self.lowdeg + other.lowdeg)

    __rmul__ = __mul__

    def __call__(self, t: int | Fraction) -> int | Fraction:
        if self.is_zero:
            return 0
        if self.lowdeg >= 0:
            return sum(c * t ** (self.lowdeg + i) for i, c in enumerate(self.coeffs))
        if t == 0:
            raise ZeroDivisionError("negative powers of t at t = 0")
        x = Fraction(t)
        total = sum(c * x ** (self.lowdeg + i) for i, c in enumerate(self.coeffs))
        return int(total) if total.denominator == 1 else total

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        return LaurentPoly(self.coeffs, self.lowdeg + k)

    def inverted(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.highdeg) if self.coeffs else self

    def to_dict(self) -> dict:
        return {"lowdeg": self.lowdeg, "coeffs": list(self.coeffs)}

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            term = f"{abs(c)}*t^{self.lowdeg + i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


T = LaurentPoly((1,), 1)


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """Representative of ``p`` up to units ``±t^k``: lowest degree 0, positive leading coefficient."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no canonical form")
    sign = 1 if p.coeffs[-1] > 0 else -1
    return LaurentPoly(tuple(sign * c for c in p.coeffs), 0)


def unit_equivalent(p: LaurentPoly, q: LaurentPoly) -> bool:
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return canonicalize(p) == canonicalize(q)


def _interpolate(values: Sequence[int]) -> LaurentPoly:
    """Integer polynomial of degree < len(values) through (k, values[k]), k = 0, 1, ..."""
    n = len(values)
    coeffs = [Fraction(0)] * n
    for k, yk in enumerate(values):
        if not yk:
            continue
        # Lagrange basis polynomial for node k, built up coefficient-wise
        basis = [Fraction(1)]
        denom = 1
        for j in range(n):
            if j == k:
                continue
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= j * basis[i + 1]
            denom *= k - j
        for i, b in enumerate(basis):
            coeffs[i] += yk * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated polynomial is not integral")
    return LaurentPoly(tuple(int(c) for c in coeffs))


def alexander(v: SeifertMatrix) -> LaurentPoly:
    """``det(V - t V^T)`` as an exact polynomial, without unit normalization.

    The determinant has degree at most n in t, so it is recovered from
    integer determinants at t = 0..n.
    """
    v = SeifertMatrix.of(v)
    vt = v.T
    values = [det(v - vt.scaled(k)) for k in range(v.rows + 1)]
    return _interpolate(values)


def knot_determinant(v: SeifertMatrix) -> int:
    v = SeifertMatrix.of(v)
    value = abs(alexander(v)(-1))
    assert value == abs(det(v + v.T)), "|Δ(-1)| disagrees with |det(V + V^T)|"
    return value


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def symmetric_product(b: int, c: int) -> LaurentPoly:
    """``(b - c t)(b - c t^{-1})``."""
    f = LaurentPoly((b, -c))
    return f * f.inverted()


def symmetric_linear_factorization(p: LaurentPoly) -> tuple[int, int] | None:
    """Find (b, c) with p ≐ (b - c t)(b - c t^{-1}), or None.

    Only spans up to 2 are handled (genus one).
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    target = canonicalize(p)
    if target.span > 2:
        raise ValueError(f"span {target.span} > 2 is outside the genus-one range")
    lo, hi = target.coeffs[0], target.coeffs[-1]
    if target.span == 0:
        # (b - 0 t)(b - 0/t) = b^2
        r = is_perfect_square(lo)
        return (r, 0) if r is not None else None
    for b in _divisors(lo):
        for c in _divisors(hi):
            for sb, sc in ((b, c), (b, -c), (-b, c), (-b, -c)):
                if canonicalize(symmetric_product(sb, sc)) == target:
                    return (sb, sc)
    return None
