"""Knot families with explicit genus-one Seifert matrices, and the metabolizer normal form.

Negative-clasp Whitehead doubles use ``((1, 0), (1, n))``, the negated
positive-clasp matrix with n kept.  Only the positive-clasp matrix
``((-1, 0), (-1, n))`` is standard; the mirror convention is chosen so
that the negative-clasp statements (obstructed when n > 0 or |n| odd)
come out of the same pipeline.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .exactalg import IntMatrix, SeifertMatrix, congruent_transform, isotropic_lines


class KnotSpecError(ValueError):
    """Raised for knot specifications that cannot be parsed or resolved."""


@dataclass(frozen=True)
class ExplicitMatrix:
    matrix: SeifertMatrix

    def __str__(self):
        m = self.matrix
        return "matrix " + ";".join(",".join(str(x) for x in m.row(i)) for i in range(m.rows))


@dataclass(frozen=True)
class Pretzel:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if any(x % 2 == 0 for x in (self.p, self.q, self.r)):
            raise KnotSpecError(f"pretzel parameters must all be odd, got {(self.p, self.q, self.r)}")

    def __str__(self):
        return f"pretzel {self.p},{self.q},{self.r}"


@dataclass(frozen=True)
class Whitehead:
    clasp: int  # +1 or -1
    n: int

    def __post_init__(self):
        if self.clasp not in (1, -1):
            raise KnotSpecError(f"clasp must be +1 or -1, got {self.clasp}")

    def __str__(self):
        return f"whitehead {'+' if self.clasp > 0 else '-'} {self.n}"


@dataclass(frozen=True)
class Catalog:
    name: str

    def __str__(self):
        return f"catalog {self.name}"


KnotSpec = Union[ExplicitMatrix, Pretzel, Whitehead, Catalog]


def _ints(text: str, sep: str = ",") -> list[int]:
    try:
        return [int(x) for x in text.split(sep)]
    except ValueError:
        raise KnotSpecError(f"expected integers separated by {sep!r}, got {text!r}") from None


def parse_knotspec(text: str) -> KnotSpec:
    """Parse ``matrix a,b;c,d`` | ``pretzel p,q,r`` | ``whitehead +|- n`` | ``catalog NAME``."""
    kind, _, rest = text.strip().partition(" ")
    rest = re.sub(r"\s+", "", rest) if kind != "whitehead" else rest.strip()
    if kind == "matrix":
        rows = [_ints(r) for r in rest.split(";")]
        try:
            return ExplicitMatrix(SeifertMatrix.from_rows(rows))
        except ValueError as exc:
            raise KnotSpecError(str(exc)) from None
    if kind == "pretzel":
        vals = _ints(rest)
        if len(vals) != 3:
            raise KnotSpecError("pretzel needs exactly three parameters")
        return Pretzel(*vals)
    if kind == "whitehead":
        m = re.fullmatch(r"([+-])\s*(-?\d+)", rest)
        if not m:
            raise KnotSpecError(f"expected 'whitehead +|- n', got {text!r}")
        return Whitehead(1 if m.group(1) == "+" else -1, int(m.group(2)))
    if kind == "catalog":
        if not rest:
            raise KnotSpecError("catalog needs a knot name")
        return Catalog(rest)
    raise KnotSpecError(f"unknown knot spec {text!r}")


def pretzel_seifert(p: int, q: int, r: int) -> SeifertMatrix:
    """Half of ((p+q, q+1), (q-1, q+r)) for odd p, q, r."""
    Pretzel(p, q, r)  # parity check
    return SeifertMatrix.from_rows([[(p + q) // 2, (q + 1) // 2], [(q - 1) // 2, (q + r) // 2]])


def pretzel_determinant(p: int, q: int, r: int) -> int:
    Pretzel(p, q, r)
    return abs(p * q + q * r + p * r)


def whitehead_seifert(clasp: int, n: int) -> SeifertMatrix:
    Whitehead(clasp, n)
    if clasp > 0:
        return SeifertMatrix.from_rows([[-1, 0], [-1, n]])
    return SeifertMatrix.from_rows([[1, 0], [1, n]])


def seifert_of(spec: KnotSpec) -> SeifertMatrix:
    """Seifert matrix of a non-catalog spec."""
    if isinstance(spec, ExplicitMatrix):
        return spec.matrix
    if isinstance(spec, Pretzel):
        return pretzel_seifert(spec.p, spec.q, spec.r)
    if isinstance(spec, Whitehead):
        return whitehead_seifert(spec.clasp, spec.n)
    raise KnotSpecError(f"{spec} has to be resolved through the catalog")


@dataclass(frozen=True)
class MetabolizerForm:
    a: int
    b: int
    basis_change: IntMatrix

    @property
    def matrix(self) -> SeifertMatrix:
        return SeifertMatrix.from_rows([[self.a, self.b], [self.b + 1, 0]])

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "basis_change": self.basis_change.to_rows()}


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    """(g, s, t) with s*x + t*y == g == gcd(x, y) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while y:
        q, x, y = x // y, y, x % y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def _candidates(v: SeifertMatrix, line: tuple[int, int]):
    x, y = line
    _, s, t = _xgcd(x, y)
    # first basis vector e with det((e, line)) = 1
    e = (t, -s)
    for sign in (1, -1):
        p = IntMatrix.from_rows([[e[0], e[1]], [sign * x, sign * y]])
        w = congruent_transform(p, v)
        b, c = w[0, 1], w[1, 0]
        if c != b + 1:
            continue
        # e -> e + k * line shifts the corner by k(2b+1) and fixes everything else
        m = 2 * b + 1
        a = w[0, 0]
        r = a % abs(m)
        if 2 * r > abs(m):
            r -= abs(m)
        k = (r - a) // m
        shift = IntMatrix.from_rows([[1, k], [0, 1]])
        p = shift @ p
        w = congruent_transform(p, v)
        yield MetabolizerForm(w[0, 0], w[0, 1], p)


def metabolizer_form(v: IntMatrix) -> MetabolizerForm | None:
    """Basis change bringing a genus-one Seifert matrix to ((a, b), (b+1, 0)).

    None when the form has no isotropic vector (not algebraically slice).
    Among the isotropic lines and orientations, the result minimizes
    (|b|, |a|), with a reduced modulo 2b+1.
    """
    v = SeifertMatrix.of(v)
    if v.shape != (2, 2):
        raise ValueError("metabolizer_form needs a 2x2 Seifert matrix")
    found = [f for line in isotropic_lines(v) for f in _candidates(v, line)]
    if not found:
        return None
    return min(found, key=lambda f: (abs(f.b), abs(f.a), f.b, f.a, f.basis_change.entries))
