import random

import pytest
from hypothesis import given, strategies as st

from seifert_obstruct.abelian import (
    AbelianGroup,
    TRIVIAL,
    group_from_presentation,
    h1_double_cover,
    is_cyclic,
    lemma_abelian_closed_form,
)
from seifert_obstruct.exactalg import IntMatrix, SeifertMatrix, congruent_transform
from seifert_obstruct.laurent import knot_determinant
from seifert_obstruct.sequiv import random_unimodular

from oracles import seifert_2x2

M = IntMatrix.from_rows


class TestAbelianGroup:
    def test_validation(self):
        with pytest.raises(ValueError):
            AbelianGroup((1, 3))
        with pytest.raises(ValueError):
            AbelianGroup((2, 3))
        with pytest.raises(ValueError):
            AbelianGroup((), -1)

    def test_rendering(self):
        assert str(AbelianGroup((3, 3))) == "Z_3 ⊕ Z_3"
        assert str(AbelianGroup((2,), 2)) == "Z_2 ⊕ Z^2"
        assert str(TRIVIAL) == "0"

    def test_cyclic(self):
        assert is_cyclic(AbelianGroup((9,)))
        assert not is_cyclic(AbelianGroup((3, 3)))
        assert is_cyclic(TRIVIAL)
        assert not is_cyclic(AbelianGroup((), 1))


class TestPresentations:
    @pytest.mark.parametrize("rows, torsion, rank", [
        ([[6, 3], [3, 0]], (3, 3), 0),
        ([[-2, 3], [3, 0]], (9,), 0),
        ([[0]], (), 1),
        ([[2, 0, 0]], (2,), 2),
        ([[1, 0], [0, 1], [0, 0]], (), 0),
    ])
    def test_examples(self, rows, torsion, rank):
        assert group_from_presentation(M(rows)) == AbelianGroup(torsion, rank)

    @pytest.mark.parametrize("rows, group", [
        ([[3, 2], [1, 0]], AbelianGroup((3, 3))),
        ([[-1, 2], [1, 0]], AbelianGroup((9,))),
        ([[-1, 1], [0, -1]], AbelianGroup((3,))),
    ])
    def test_double_cover(self, rows, group):
        assert h1_double_cover(SeifertMatrix.from_rows(rows)) == group

    def test_order_is_knot_determinant(self):
        for rows in seifert_2x2(-6, 6):
            v = SeifertMatrix.from_rows(rows)
            g = h1_double_cover(v)
            # det(V + V^T) is odd for a Seifert matrix, so the group is always finite
            assert g.order == knot_determinant(v)

    def test_congruence_invariance(self):
        rng = random.Random(11)
        for rows in seifert_2x2(-6, 6):
            v = SeifertMatrix.from_rows(rows)
            p = random_unimodular(rng, 2)
            assert h1_double_cover(SeifertMatrix.of(congruent_transform(p, v))) == h1_double_cover(v)


class TestClosedForm:
    def test_examples(self):
        assert lemma_abelian_closed_form(17, 0) == TRIVIAL
        assert lemma_abelian_closed_form(-4, -1) == TRIVIAL
        assert lemma_abelian_closed_form(3, 1) == AbelianGroup((3, 3))
        assert lemma_abelian_closed_form(-1, 1) == AbelianGroup((9,))

    @given(st.integers(-200, 200), st.integers(-200, 200))
    def test_matches_smith_form(self, x, y):
        m = 2 * y + 1
        assert lemma_abelian_closed_form(x, y) == group_from_presentation(M([[2 * x, m], [m, 0]]))
