"""Exact integer linear algebra.

Everything here works on Python ints, so there is no overflow and no
rounding.  Matrices are small (the knots of interest have genus one, and
certificates pass through 4x4 intermediates), so clarity wins over speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when matrix shapes are incompatible with an operation."""


class InvalidMoveError(ValueError):
    """Raised for a move (congruence, expansion, contraction) that is not legal."""


@dataclass(frozen=True, eq=False)
class IntMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        for x in self.entries:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {type(x).__name__}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def _check_same_shape(self, other: "IntMatrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(x + y for x, y in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(x - y for x, y in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scaled(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.cols)]
        return IntMatrix(
            self.rows, other.cols,
            tuple(sum(a * b for a, b in zip(self.row(i), c)) for i in range(self.rows) for c in cols),
        )

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        # Bracket form with no whitespace; the certificate text format relies on this.
        return "[" + ",".join("[" + ",".join(str(x) for x in self.row(i)) + "]" for i in range(self.rows)) + "]"

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


@dataclass(frozen=True, eq=False)
class SeifertMatrix(IntMatrix):
    """Square integer matrix V with det(V - V^T) = 1."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_square:
            raise DimensionError("a Seifert matrix must be square")
        if det(IntMatrix(self.rows, self.cols, self.entries) - self.T) != 1:
            raise ValueError(f"{self} is not a Seifert matrix: det(V - V^T) != 1")

    @classmethod
    def of(cls, m: IntMatrix | Sequence[Sequence[int]]) -> "SeifertMatrix":
        if isinstance(m, SeifertMatrix):
            return m
        if isinstance(m, IntMatrix):
            return cls(m.rows, m.cols, m.entries)
        return cls.from_rows(m)

    def __repr__(self):
        return f"SeifertMatrix({self.to_rows()!r})"


def is_seifert(m: IntMatrix) -> bool:
    return m.is_square and det(m - m.T) == 1


@dataclass(frozen=True)
class SnfResult:
    """Smith form ``s`` with unimodular ``u``, ``w`` such that ``u @ m @ w == s``."""

    s: IntMatrix
    u: IntMatrix
    w: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.s[i, i] for i in range(min(self.s.shape)))


def det(m: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(p: IntMatrix) -> bool:
    return p.is_square and abs(det(p)) == 1


def congruent_transform(p: IntMatrix, v: IntMatrix) -> IntMatrix:
    """Return ``p @ v @ p.T`` for unimodular ``p``."""
    if not v.is_square or p.shape != v.shape:
        raise InvalidMoveError(f"congruence by {p.shape} matrix on {v.shape} matrix")
    if not is_unimodular(p):
        raise InvalidMoveError(f"{p} is not unimodular")
    return p @ v @ p.T


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Smith normal form with transforming matrices.

    Pivots are always a nonzero entry of least absolute value in the
    active block, which makes the result deterministic.
    """
    nr, nc = m.shape
    a = m.to_rows()
    u = IntMatrix.identity(nr).to_rows()
    w = IntMatrix.identity(nc).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in w:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in a:
            r[dst] += k * r[src]
        for r in w:
            r[dst] += k * r[src]

    for t in range(min(nr, nc)):
        block = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not block:
            break
        _, pi, pj = min(block)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = a[t][t]
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            leftovers = [(abs(a[i][t]), i, t) for i in range(t + 1, nr) if a[i][t]]
            leftovers += [(abs(a[t][j]), t, j) for j in range(t + 1, nc) if a[t][j]]
            if leftovers:
                _, i, j = min(leftovers)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SnfResult(IntMatrix.from_rows(a) if nr else IntMatrix.zeros(0, nc),
                     IntMatrix.from_rows(u) if nr else IntMatrix.zeros(0, 0),
                     IntMatrix.from_rows(w) if nc else IntMatrix.zeros(0, 0))


def is_perfect_square(n: int) -> int | None:
    """Return ``r >= 0`` with ``r*r == n``, or None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def _primitive(vec: Iterable[int]) -> tuple[int, ...]:
    vec = tuple(vec)
    g = math.gcd(*vec)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    vec = tuple(x // g for x in vec)
    first = next(x for x in vec if x)
    return vec if first > 0 else tuple(-x for x in vec)


def _form_coefficients(v: IntMatrix) -> tuple[int, int, int]:
    if v.shape != (2, 2):
        raise DimensionError("expected a 2x2 matrix")
    return v[0, 0], v[0, 1] + v[1, 0], v[1, 1]


def isotropic_lines(v: IntMatrix) -> list[tuple[int, int]]:
    """All primitive (x, y), up to sign, with (x, y) v (x, y)^T == 0.

    Empty when the form does not represent zero nontrivially.  Raises for
    the identically-zero form, where every vector is isotropic.
    """
    a, s, d = _form_coefficients(v)
    if a == s == d == 0:
        raise ValueError("every vector is isotropic for the zero form")
    if d == 0:
        # y * 0 + x (a x + s y) = 0
        lines = [(0, 1)]
        other = _primitive((s, -a)) if (s, a) != (0, 0) else None
        if other is not None and other not in lines:
            lines.append(other)
        return lines
    r = is_perfect_square(s * s - 4 * a * d)
    if r is None:
        return []
    lines = []
    for root in (r, -r):
        line = _primitive((2 * d, -s + root))
        if line not in lines:
            lines.append(line)
    return lines


def isotropic_vector(v: IntMatrix) -> tuple[int, int] | None:
    """A primitive isotropic vector of the 2x2 form ``v``, or None.

    The form ``a x^2 + (b + c) x y + d y^2`` represents zero nontrivially
    exactly when its discriminant is a nonnegative square.
    """
    a, s, d = _form_coefficients(v)
    if d == 0:
        return (0, 1)
    r = is_perfect_square(s * s - 4 * a * d)
    if r is None:
        return None
    return _primitive((2 * d, -s + r))


def signature(m: IntMatrix) -> int:
    """Signature of a symmetric matrix of size at most 4, by exact diagonalization."""
    if not m.is_square:
        raise DimensionError("signature of a non-square matrix")
    if m != m.T:
        raise ValueError("signature requires a symmetric matrix")
    if m.rows > 4:
        raise ValueError("signature is only supported up to 4x4")
    a = [[Fraction(x) for x in r] for r in m.to_rows()]
    active = list(range(m.rows))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal entry 2*a[i][j] != 0
            for k in range(m.rows):
                a[i][k] += a[j][k]
            for k in range(m.rows):
                a[k][i] += a[k][j]
            continue
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for j in active:
            f = a[j][piv] / p
            if f:
                for k in range(m.rows):
                    a[j][k] -= f * a[piv][k]
                for k in range(m.rows):
                    a[k][j] -= f * a[k][piv]
    return pos - neg
