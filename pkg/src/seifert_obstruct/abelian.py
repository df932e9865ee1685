"""Finitely generated abelian groups from presentation matrices.

Convention: relations are rows, generators are columns.  For the double
branched cover the presentation ``V + V^T`` is symmetric, so the choice
does not affect results, but it is fixed here for determinism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactalg import IntMatrix, SeifertMatrix, smith_normal_form


@dataclass(frozen=True)
class AbelianGroup:
    """``Z_{t1} + ... + Z_{tk} + Z^free_rank`` with ``t1 | t2 | ... | tk`` and every ti > 1."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        if any(x <= 1 for x in t):
            raise ValueError(f"torsion coefficients must exceed 1: {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion coefficients must form a divisibility chain: {t}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        object.__setattr__(self, "torsion", t)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return math.prod(self.torsion) if self.is_finite else None

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def __str__(self):
        parts = [f"Z_{n}" for n in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"


TRIVIAL = AbelianGroup()


def from_invariants(factors) -> AbelianGroup:
    """Build a group from a divisibility chain of nonnegative integers; 0 means a free summand."""
    factors = [abs(f) for f in factors]
    return AbelianGroup(tuple(f for f in factors if f > 1), sum(1 for f in factors if f == 0))


def group_from_presentation(m: IntMatrix) -> AbelianGroup:
    """Cokernel of the relation matrix ``m`` (rows are relations)."""
    diag = smith_normal_form(m).diagonal
    group = from_invariants(diag)
    # generators with no pivot at all are free
    extra = m.cols - len(diag)
    return AbelianGroup(group.torsion, group.free_rank + extra)


def h1_double_cover(v: SeifertMatrix) -> AbelianGroup:
    """First homology of the double branched cover, presented by ``V + V^T``."""
    v = SeifertMatrix.of(v)
    return group_from_presentation(v + v.T)


def lemma_abelian_closed_form(x: int, y: int) -> AbelianGroup:
    """Closed form for the group presented by ((2x, 2y+1), (2y+1, 0)).

    Trivial when y is 0 or -1, otherwise ``Z_d + Z_{(2y+1)^2/d}`` with
    ``d = gcd(2x, 2y+1)`` (taken positive, so negative y is covered too).
    """
    if y in (0, -1):
        return TRIVIAL
    m = abs(2 * y + 1)
    d = math.gcd(2 * x, m)
    return from_invariants([d, m * m // d])


def is_cyclic(g: AbelianGroup) -> bool:
    """True when ``g`` is finite cyclic (the trivial group included)."""
    return g.free_rank == 0 and len(g.torsion) <= 1
