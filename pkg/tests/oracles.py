"""Independent reference computations used by the tests.

None of these share code paths with the library beyond the basic
``IntMatrix``/``LaurentPoly`` containers.
"""

import itertools
import math

import numpy as np

from seifert_obstruct.laurent import LaurentPoly


def cofactor_det(rows):
    """Determinant by Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def symbolic_det(rows):
    """Laplace expansion over Laurent polynomials."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = LaurentPoly(())
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * symbolic_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def symbolic_alexander(rows):
    """det(V - t V^T) by symbolic cofactor expansion."""
    n = len(rows)
    t = LaurentPoly((1,), 1)
    entries = [[LaurentPoly.const(rows[i][j]) - t * rows[j][i] for j in range(n)] for i in range(n)]
    return symbolic_det(entries)


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


def has_isotropic_vector(a, s, d, bound):
    """Does a x^2 + s x y + d y^2 vanish at some nonzero (x, y) in the box?"""
    # (x, y) and (-x, -y) give the same value, so x >= 0 suffices
    x, y = np.meshgrid(np.arange(0, bound + 1), np.arange(-bound, bound + 1), indexing="ij")
    q = a * x * x + s * x * y + d * y * y
    q[0, bound] = 1  # exclude the origin
    return bool((q == 0).any())


def primitive(v):
    return math.gcd(*v) == 1


def seifert_2x2(lo, hi):
    """All 2x2 Seifert matrices with entries in [lo, hi]."""
    for a, b, d in itertools.product(range(lo, hi + 1), repeat=3):
        for c in (b - 1, b + 1):
            if lo <= c <= hi:
                yield [[a, b], [c, d]]
