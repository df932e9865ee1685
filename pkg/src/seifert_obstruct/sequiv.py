"""S-equivalence of Seifert matrices: moves, checkable certificates, and congruence tests.

The moves are unimodular congruence ``V -> P V P^T`` and the two kinds of
expansion, together with their inverses (contractions).  With ``n x n``
input ``V`` and a row vector ``u`` of length n, a column expansion is::

    [ V  0  0 ]
    [ u  0  0 ]
    [ 0  1  0 ]

and a row expansion is its transpose-analogue::

    [ V  u^T  0 ]
    [ 0   0   1 ]
    [ 0   0   0 ]

so that W is a row expansion of V exactly when W^T is a column expansion
of V^T.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .exactalg import (
    IntMatrix,
    InvalidMoveError,
    SeifertMatrix,
    congruent_transform,
    det,
    is_seifert,
)


@dataclass(frozen=True)
class Congruence:
    p: IntMatrix
    kind = "congruence"

    @property
    def params(self):
        return self.p.to_rows()


@dataclass(frozen=True)
class ColumnExpansion:
    u: tuple[int, ...]
    kind = "column_expansion"

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(x) for x in self.u))

    @property
    def params(self):
        return list(self.u)


@dataclass(frozen=True)
class RowExpansion:
    u: tuple[int, ...]
    kind = "row_expansion"

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(int(x) for x in self.u))

    @property
    def params(self):
        return list(self.u)


@dataclass(frozen=True)
class ColumnContraction:
    kind = "column_contraction"

    @property
    def params(self):
        return []


@dataclass(frozen=True)
class RowContraction:
    kind = "row_contraction"

    @property
    def params(self):
        return []


SMove = Union[Congruence, ColumnExpansion, RowExpansion, ColumnContraction, RowContraction]


def _column_expand(v: IntMatrix, u: Sequence[int]) -> IntMatrix:
    n = v.rows
    if len(u) != n:
        raise InvalidMoveError(f"expansion vector of length {len(u)} for a {n}x{n} matrix")
    rows = [list(v.row(i)) + [0, 0] for i in range(n)]
    rows.append(list(u) + [0, 0])
    rows.append([0] * n + [1, 0])
    return IntMatrix.from_rows(rows)


def _column_contract(w: IntMatrix) -> IntMatrix:
    """Inverse of :func:`_column_expand`; the vector u is read off the matrix."""
    n = w.rows - 2
    if n < 0 or not w.is_square:
        raise InvalidMoveError(f"cannot contract a {w.shape} matrix")
    tail_cols_zero = all(w[i, j] == 0 for i in range(n + 1) for j in (n, n + 1))
    last_row = w.row(n + 1) == (0,) * n + (1, 0)
    if not (tail_cols_zero and last_row):
        raise InvalidMoveError(f"{w} is not in column-expansion form")
    return IntMatrix.from_rows([list(w.row(i))[:n] for i in range(n)])


def apply_move(m: IntMatrix, mv: SMove) -> SeifertMatrix:
    m = SeifertMatrix.of(m)
    if isinstance(mv, Congruence):
        out = congruent_transform(mv.p, m)
    elif isinstance(mv, ColumnExpansion):
        out = _column_expand(m, mv.u)
    elif isinstance(mv, RowExpansion):
        out = _column_expand(m.T, mv.u).T
    elif isinstance(mv, ColumnContraction):
        out = _column_contract(m)
    elif isinstance(mv, RowContraction):
        out = _column_contract(m.T).T
    else:
        raise InvalidMoveError(f"unknown move {mv!r}")
    return SeifertMatrix.of(out)


@dataclass(frozen=True)
class Step:
    before: IntMatrix
    move: SMove
    after: IntMatrix

    def to_line(self) -> str:
        params = json.dumps(self.move.params, separators=(",", ":"))
        return f"MOVE kind={self.move.kind} params={params} from={self.before} to={self.after}"


@dataclass(frozen=True)
class SEquivCertificate:
    """A chain of S-moves; each step records the matrices on both sides."""

    steps: tuple[Step, ...] = ()

    @property
    def start(self) -> IntMatrix | None:
        return self.steps[0].before if self.steps else None

    @property
    def end(self) -> IntMatrix | None:
        return self.steps[-1].after if self.steps else None

    def __len__(self):
        return len(self.steps)

    def __add__(self, other: "SEquivCertificate") -> "SEquivCertificate":
        return SEquivCertificate(self.steps + other.steps)

    def dumps(self) -> str:
        return "".join(step.to_line() + "\n" for step in self.steps)


class CertificateBuilder:
    """Accumulate moves starting from a matrix, recording each intermediate."""

    def __init__(self, start: IntMatrix):
        self.current = SeifertMatrix.of(start)
        self.steps: list[Step] = []

    def apply(self, mv: SMove) -> "CertificateBuilder":
        after = apply_move(self.current, mv)
        self.steps.append(Step(self.current, mv, after))
        self.current = after
        return self

    def build(self) -> SEquivCertificate:
        return SEquivCertificate(tuple(self.steps))


def first_invalid_step(c: SEquivCertificate) -> int | None:
    """Index of the first step that fails to check, or None if the chain is valid."""
    for i, step in enumerate(c.steps):
        if i and c.steps[i - 1].after != step.before:
            return i
        if not (is_seifert(step.before) and is_seifert(step.after)):
            return i
        try:
            if apply_move(step.before, step.move) != step.after:
                return i
        except (InvalidMoveError, ValueError):
            return i
    return None


def verify_certificate(c: SEquivCertificate) -> bool:
    return first_invalid_step(c) is None


_FIELD = re.compile(r"(\w+)=(\S+)")


def _move_from(kind: str, params) -> SMove:
    if kind == "congruence":
        return Congruence(IntMatrix.from_rows(params))
    if kind == "column_expansion":
        return ColumnExpansion(tuple(params))
    if kind == "row_expansion":
        return RowExpansion(tuple(params))
    if kind == "column_contraction":
        return ColumnContraction()
    if kind == "row_contraction":
        return RowContraction()
    raise ValueError(f"unknown move kind {kind!r}")


def loads_certificate(text: str) -> SEquivCertificate:
    """Parse the line format written by :meth:`SEquivCertificate.dumps`.

    Blank lines and lines starting with ``#`` are ignored.  Matrices are
    parsed as written, so a tampered file parses fine and then fails
    :func:`verify_certificate`.
    """
    steps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith("MOVE "):
            raise ValueError(f"line {lineno}: expected 'MOVE ...'")
        fields = dict(_FIELD.findall(line))
        try:
            move = _move_from(fields["kind"], json.loads(fields["params"]))
            before = IntMatrix.from_rows(json.loads(fields["from"]))
            after = IntMatrix.from_rows(json.loads(fields["to"]))
        except (KeyError, json.JSONDecodeError) as exc:
            raise ValueError(f"line {lineno}: malformed move: {exc}") from exc
        steps.append(Step(before, move, after))
    return SEquivCertificate(tuple(steps))


def metabolizer_matrix(a: int, b: int) -> SeifertMatrix:
    """``((a, b), (b+1, 0))``."""
    return SeifertMatrix.from_rows([[a, b], [b + 1, 0]])


def shift_matrix(n: int) -> IntMatrix:
    """Congruence taking ((a, b), (b+1, 0)) to ((a + n(2b+1), b), (b+1, 0))."""
    return IntMatrix.from_rows([[1, n], [0, 1]])


def congruence_classifier_2x2(a: int, b: int, c: int) -> int | None:
    """n with ``a + n(2b+1) == c`` if it exists, else None.

    Such an n exists exactly when ((a,b),(b+1,0)) and ((c,b),(b+1,0))
    are congruent over the integers; ``shift_matrix(n)`` is a witness.
    """
    m = 2 * b + 1
    return (c - a) // m if (c - a) % m == 0 else None


def _grid(n: int, bound: int, dtype) -> np.ndarray:
    axis = np.arange(-bound, bound + 1, dtype=dtype)
    # lexicographic order, first coordinate slowest
    return np.stack([g.ravel() for g in np.meshgrid(*([axis] * n), indexing="ij")], axis=1)


def brute_force_congruence(v: IntMatrix, w: IntMatrix, bound: int) -> IntMatrix | None:
    """Exhaustive search for unimodular P, entries in [-bound, bound], with P v P^T == w.

    Rows of P are chosen one at a time from the vectors in the box whose
    value under the form matches the corresponding diagonal entry of w,
    keeping only rows compatible with the ones already chosen.  The
    returned witness is the identity when v == w, and otherwise the
    lexicographically least (row-major) one.
    """
    if not (v.is_square and w.shape == v.shape):
        raise ValueError("brute_force_congruence needs two square matrices of equal size")
    n = v.rows
    if v == w:
        return IntMatrix.identity(n)
    scale = max([1, *map(abs, v.entries), *map(abs, w.entries)])
    dtype = np.int64 if scale * n * n * (bound + 1) ** 2 < 2 ** 62 else object
    box = _grid(n, bound, dtype)
    V = np.array(v.to_rows(), dtype=dtype)
    W = w.to_rows()
    vx = box @ V  # row r of box maps to r V
    values = np.einsum("ij,ij->i", vx, box)
    candidates = [np.nonzero(values == W[i][i])[0] for i in range(n)]

    def extend(chosen: list[int]) -> Iterator[list[int]]:
        i = len(chosen)
        if i == n:
            yield chosen
            return
        idx = candidates[i]
        mask = np.ones(len(idx), dtype=bool)
        for j, prev in enumerate(chosen):
            # (r_j V r_i^T, r_i V r_j^T) must match (w_ji, w_ij)
            mask &= box[idx] @ vx[prev] == W[j][i]
            mask &= vx[idx] @ box[prev] == W[i][j]
        for k in idx[mask]:
            yield from extend(chosen + [int(k)])

    for rows in extend([]):
        p = IntMatrix.from_rows([[int(x) for x in box[r]] for r in rows])
        if abs(det(p)) == 1:
            return p
    return None


def lemma_chain_certificate(a: int, b: int) -> SEquivCertificate:
    """Certificate that ((a,b),(b+1,0)) ~ ((ab^2,b),(b+1,0)).

    The route passes through 4x4 matrices: one row expansion, five
    congruences, a clean-up congruence, a column contraction and a final
    basis swap.
    """
    ab = a * b
    e = IntMatrix.identity

    def elementary(n: int, **entries: int) -> IntMatrix:
        rows = e(n).to_rows()
        for key, value in entries.items():
            rows[int(key[1])][int(key[2])] = value
        return IntMatrix.from_rows(rows)

    swap_2_4 = IntMatrix.from_rows([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]])
    swap_1_3 = IntMatrix.from_rows([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]])
    cert = (
        CertificateBuilder(metabolizer_matrix(a, b))
        .apply(RowExpansion((1, 0)))
        .apply(Congruence(elementary(4, e12=-b)))
        .apply(Congruence(swap_2_4))
        .apply(Congruence(elementary(4, e01=1)))
        .apply(Congruence(elementary(4, e10=b, e23=-1)))
        .apply(Congruence(swap_1_3))
        # clear the third column against the last row so the tail is in expansion form
        .apply(Congruence(elementary(4, e13=-ab, e23=-a)))
        .apply(ColumnContraction())
        .apply(Congruence(IntMatrix.from_rows([[0, 1], [1, 0]])))
        .build()
    )
    assert cert.end == metabolizer_matrix(ab * b, b)
    return cert


@dataclass(frozen=True)
class SEquivPair:
    a: int
    b: int
    k: int
    certificate: SEquivCertificate


def construct_sequiv_pair(b: int) -> SEquivPair:
    """An a for which ((a,b),(b+1,0)) and ((a+1,b),(b+1,0)) are S-equivalent.

    a is the least nonnegative solution of a(1 - b^2) = -1 mod (2b+1), and
    k satisfies a + 1 = a b^2 + k(2b+1).  The two matrices are never
    congruent for such b, since 2b+1 does not divide 1.
    """
    if b <= 4 or b % 3 == 1:
        raise ValueError(f"b={b} is out of range: need b > 4 and b = 0 or 2 mod 3")
    m = 2 * b + 1
    if math.gcd(1 - b * b, m) != 1:
        raise ValueError(f"1 - b^2 is not invertible modulo {m}")
    a = (-pow(1 - b * b, -1, m)) % m
    k, rem = divmod(a + 1 - a * b * b, m)
    assert rem == 0
    chain = lemma_chain_certificate(a, b)
    shift = CertificateBuilder(chain.end).apply(Congruence(shift_matrix(k))).build()
    cert = chain + shift
    assert cert.end == metabolizer_matrix(a + 1, b)
    return SEquivPair(a, b, k, cert)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def trotter_rigid(v: IntMatrix) -> bool:
    """True when |det V| is 1 or prime, so S-equivalence to V implies congruence."""
    d = abs(det(SeifertMatrix.of(v)))
    return d == 1 or _is_prime(d)



def shift_sequivalence(a: int, b: int, eps: int = 1) -> tuple[str, SEquivCertificate | None]:
    """Are ((a,b),(b+1,0)) and ((a+eps,b),(b+1,0)) S-equivalent?

    Returns ``("yes", certificate)`` when a congruence or the chain
    through ((ab^2,b),(b+1,0)) followed by a shift connects them,
    ``("no", None)`` when the first matrix is rigid and they are not
    congruent, and ``("unknown", None)`` otherwise.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    m = 2 * b + 1
    n = congruence_classifier_2x2(a, b, a + eps)
    if n is not None:
        return "yes", CertificateBuilder(metabolizer_matrix(a, b)).apply(Congruence(shift_matrix(n))).build()
    k = congruence_classifier_2x2(a * b * b, b, a + eps)
    if k is not None:
        chain = lemma_chain_certificate(a, b)
        return "yes", chain + CertificateBuilder(chain.end).apply(Congruence(shift_matrix(k))).build()
    if trotter_rigid(metabolizer_matrix(a, b)):
        return "no", None
    return "unknown", None

def random_unimodular(rng, n: int, steps: int = 4, coeff: int = 2) -> IntMatrix:
    """Product of random elementary matrices, signed permutations included."""
    p = IntMatrix.identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        rows = IntMatrix.identity(n).to_rows()
        roll = rng.random()
        if roll < 0.6 and n > 1:
            rows[i][j] = rng.choice([k for k in range(-coeff, coeff + 1) if k])
        elif roll < 0.8 and n > 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i][i] = -1
        p = IntMatrix.from_rows(rows) @ p
    return p


def random_certificate(rng, start: IntMatrix, moves: int, u_bound: int = 3) -> SEquivCertificate:
    """A random chain of ``moves`` legal moves from ``start``.

    Contractions are offered whenever the current matrix is in expansion
    form and larger than 2x2, which keeps the sizes small.
    """
    builder = CertificateBuilder(start)
    for _ in range(moves):
        cur = builder.current
        options: list[SMove] = [Congruence(random_unimodular(rng, cur.rows))]
        u = tuple(rng.randint(-u_bound, u_bound) for _ in range(cur.rows))
        options += [ColumnExpansion(u), RowExpansion(u)]
        for contraction in (ColumnContraction(), RowContraction()):
            if cur.rows <= 2:
                break  # never contract down to the empty matrix
            try:
                apply_move(cur, contraction)
            except InvalidMoveError:
                continue
            options.append(contraction)
        builder.apply(rng.choice(options))
    return builder.build()


__all__ = [
    "ColumnContraction", "ColumnExpansion", "Congruence", "RowContraction", "RowExpansion",
    "SEquivCertificate", "SEquivPair", "SMove", "Step", "apply_move", "brute_force_congruence",
    "congruence_classifier_2x2", "construct_sequiv_pair", "first_invalid_step",
    "lemma_chain_certificate", "loads_certificate", "metabolizer_matrix", "random_certificate",
    "random_unimodular", "shift_matrix", "shift_sequivalence", "trotter_rigid", "verify_certificate",
]
