import itertools
import math

import pytest
from hypothesis import given, strategies as st

from oracles import seifert_2x2
from seifert_obstruct.exactalg import IntMatrix, SeifertMatrix, congruent_transform, det, signature
from seifert_obstruct.families import (
    Catalog,
    ExplicitMatrix,
    KnotSpecError,
    Pretzel,
    Whitehead,
    metabolizer_form,
    parse_knotspec,
    pretzel_determinant,
    pretzel_seifert,
    seifert_of,
    whitehead_seifert,
)
from seifert_obstruct.laurent import LaurentPoly, alexander, canonicalize

M = IntMatrix.from_rows
ODD = [x for x in range(-9, 10) if x % 2]


class TestPretzel:
    @pytest.mark.parametrize("pqr, rows", [
        ((3, 3, -3), [[3, 2], [1, 0]]),
        ((-5, 3, -3), [[-1, 2], [1, 0]]),
        ((1, 1, 1), [[1, 1], [0, 1]]),
    ])
    def test_examples(self, pqr, rows):
        assert pretzel_seifert(*pqr) == M(rows)

    def test_even_rejected(self):
        with pytest.raises(KnotSpecError):
            pretzel_seifert(2, 3, 5)
        with pytest.raises(KnotSpecError):
            Pretzel(3, 3, 0)

    def test_determinant_identity(self):
        for p, q, r in itertools.product(ODD, repeat=3):
            v = pretzel_seifert(p, q, r)
            assert pretzel_determinant(p, q, r) == abs(alexander(v)(-1)) == abs(det(v + v.T))


class TestWhitehead:
    @pytest.mark.parametrize("n", range(-10, 11))
    def test_positive_clasp_alexander(self, n):
        t = LaurentPoly((1,), 1)
        expected = canonicalize(LaurentPoly.const(-n) * (t * t + 1) + (1 + 2 * n) * t)
        assert canonicalize(alexander(whitehead_seifert(1, n))) == expected

    @pytest.mark.parametrize("n", range(-10, 11))
    def test_negative_clasp_is_negated(self, n):
        v = whitehead_seifert(-1, n)
        assert v == M([[1, 0], [1, n]])
        assert canonicalize(alexander(v)) == canonicalize(alexander(whitehead_seifert(1, -n)))

    @pytest.mark.parametrize("n", range(-10, 0))
    def test_signature_positive_clasp_negative_twist(self, n):
        v = whitehead_seifert(1, n)
        assert signature(v + v.T) == -2

    def test_bad_clasp(self):
        with pytest.raises(KnotSpecError):
            whitehead_seifert(0, 3)


class TestMetabolizer:
    def test_examples(self):
        f = metabolizer_form(M([[3, 2], [1, 0]]))
        assert (f.a, f.b) == (0, 1)
        assert f.basis_change == M([[0, -1], [-1, 1]])
        f = metabolizer_form(M([[0, 0], [1, 0]]))
        assert (f.a, f.b) == (0, 0) and f.basis_change == IntMatrix.identity(2)
        f = metabolizer_form(M([[-1, 2], [1, 0]]))
        assert (f.a, f.b) == (-1, 1)

    def test_not_slice(self):
        assert metabolizer_form(M([[-1, 1], [0, -1]])) is None

    def test_rejects_non_2x2(self):
        with pytest.raises(ValueError):
            metabolizer_form(M([[-1, 1, 0, 0], [0, -1, 0, 0], [2, 1, 0, 0], [0, 0, 1, 0]]))

    def test_exhaustive_small_entries(self):
        for rows in seifert_2x2(-6, 6):
            v = SeifertMatrix.from_rows(rows)
            a, s, d = rows[0][0], rows[0][1] + rows[1][0], rows[1][1]
            disc = s * s - 4 * a * d
            square = disc >= 0 and math.isqrt(disc) ** 2 == disc
            f = metabolizer_form(v)
            assert (f is not None) == square, rows
            if f is None:
                continue
            assert abs(det(f.basis_change)) == 1
            assert congruent_transform(f.basis_change, v) == f.matrix
            m = abs(2 * f.b + 1)
            assert 2 * abs(f.a) <= m

    @given(st.integers(-30, 30), st.integers(-10, 10))
    def test_already_normal(self, a, b):
        f = metabolizer_form(M([[a, b], [b + 1, 0]]))
        assert abs(f.b) <= abs(b)


class TestParse:
    @pytest.mark.parametrize("text, spec", [
        ("matrix 3,2;1,0", ExplicitMatrix(SeifertMatrix.from_rows([[3, 2], [1, 0]]))),
        ("pretzel -5,3,-3", Pretzel(-5, 3, -3)),
        ("pretzel -5, 3, -3", Pretzel(-5, 3, -3)),
        ("whitehead + 2", Whitehead(1, 2)),
        ("whitehead - -3", Whitehead(-1, -3)),
        ("catalog 9_46", Catalog("9_46")),
    ])
    def test_examples(self, text, spec):
        assert parse_knotspec(text) == spec

    @pytest.mark.parametrize("spec", [
        Pretzel(3, 3, -3), Whitehead(1, -4), Whitehead(-1, 7), Catalog("11n_139"),
        ExplicitMatrix(SeifertMatrix.from_rows([[-1, 2], [1, 0]])),
    ])
    def test_round_trip(self, spec):
        assert parse_knotspec(str(spec)) == spec

    @pytest.mark.parametrize("text", [
        "matrix 1,0;0,1", "matrix 1,x;0,1", "pretzel 3,3", "pretzel 2,3,5",
        "whitehead * 2", "whitehead +", "catalog", "torus 2,3", "",
    ])
    def test_errors(self, text):
        with pytest.raises(KnotSpecError):
            parse_knotspec(text)

    def test_catalog_needs_lookup(self):
        with pytest.raises(KnotSpecError):
            seifert_of(Catalog("9_46"))
