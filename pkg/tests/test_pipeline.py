import itertools
import json

import pytest

from oracles import seifert_2x2
from seifert_obstruct.abelian import AbelianGroup
from seifert_obstruct.cli import main
from seifert_obstruct.exactalg import SeifertMatrix
from seifert_obstruct.families import Catalog, ExplicitMatrix, KnotSpecError, Pretzel, Whitehead
from seifert_obstruct.laurent import LaurentPoly
from seifert_obstruct.pipeline import (
    INCONCLUSIVE,
    OBSTRUCTED,
    analyze,
    catalog,
    lookup,
    run_table_screen,
)


def tags(report):
    return [r.tag for r in report.reasons]


def fuzz_corpus():
    for rows in seifert_2x2(-6, 6):
        yield ExplicitMatrix(SeifertMatrix.from_rows(rows))
    odd = [x for x in range(-9, 10) if x % 2]
    for p, q, r in itertools.product(odd, repeat=3):
        yield Pretzel(p, q, r)
    for clasp, n in itertools.product((1, -1), range(-10, 11)):
        yield Whitehead(clasp, n)


@pytest.fixture(scope="module")
def corpus_reports():
    return [(spec, analyze(spec)) for spec in fuzz_corpus()]


class TestAnalyze:
    def test_9_46(self):
        rep = analyze(Pretzel(3, 3, -3))
        assert rep.verdict == OBSTRUCTED
        assert rep.h1 == AbelianGroup((3, 3))
        assert "double-cover-not-cyclic" in tags(rep)

    def test_11n139(self):
        rep = analyze(Pretzel(-5, 3, -3))
        assert rep.verdict == OBSTRUCTED
        assert rep.trotter_applicable and rep.congruence_blocked
        assert tags(rep) == ["rigid-no-congruent-shift"]
        assert "|det V| = 2" in rep.reasons[0].detail

    def test_unknot_form(self):
        rep = analyze(ExplicitMatrix(SeifertMatrix.from_rows([[0, 0], [1, 0]])))
        assert rep.verdict == INCONCLUSIVE and rep.reasons == ()
        assert rep.alexander == LaurentPoly.const(1)

    @pytest.mark.parametrize("n", [-3, 3])
    def test_whitehead_not_slice(self, n):
        rep = analyze(Whitehead(1, n))
        assert rep.verdict == OBSTRUCTED
        assert "not-algebraically-slice" in tags(rep)
        assert rep.alg_slice is False

    def test_whitehead_unique_surface(self):
        plain = analyze(Whitehead(1, 2))
        flagged = analyze(Whitehead(1, 2), unique_surface=True)
        assert "unique-surface-nontrivial-alexander" not in tags(plain)
        assert tags(flagged)[-1] == "unique-surface-nontrivial-alexander"
        assert flagged.alexander == LaurentPoly((2, -5, 2))
        assert flagged.verdict == OBSTRUCTED

    def test_catalog_with_realization(self):
        assert analyze(Catalog("9_46")).seifert == SeifertMatrix.from_rows([[3, 2], [1, 0]])

    def test_catalog_determinant_only(self):
        rep = analyze(Catalog("7_4"))
        assert rep.seifert is None and rep.determinant == 15
        assert tags(rep) == ["determinant-not-square"]
        rep = analyze(Catalog("6_1"))
        assert rep.verdict == INCONCLUSIVE and rep.det_square

    def test_unknown_catalog(self):
        with pytest.raises(KnotSpecError):
            analyze(Catalog("13_1"))


class TestCatalog:
    def test_lookup(self):
        e = lookup("9_46")
        assert e.determinant == 9 and e.realization == Pretzel(3, 3, -3)
        e = lookup("7_4")
        assert e.determinant == 15 and e.realization is None
        assert lookup("11N139").name == "11n_139"
        with pytest.raises(KnotSpecError):
            lookup("13_1")

    def test_size_and_known_square(self):
        entries = catalog()
        assert len(entries) == 23
        for e in entries:
            assert e.known_square == (round(e.determinant ** 0.5) ** 2 == e.determinant)

    def test_screen(self):
        screen = run_table_screen()
        assert screen.survivors == ("6_1", "9_46", "10_3", "11n_139")
        status = {r.entry.name: r.status for r in screen.rows}
        assert status["9_46"] == status["11n_139"] == OBSTRUCTED
        assert status["6_1"].startswith("externally settled")
        assert status["10_3"].startswith("externally settled")
        assert status["3_1"] == OBSTRUCTED
        assert "survivors: 6_1, 9_46, 10_3, 11n_139" in screen.to_text()


class TestReportInvariants:
    def test_consistency_over_corpus(self, corpus_reports):
        for spec, rep in corpus_reports:
            assert (rep.verdict == OBSTRUCTED) == bool(rep.reasons), spec
            if not rep.det_square:
                assert rep.alg_slice is False, spec
            if rep.metab is not None and rep.metab.b not in (0, -1):
                assert (rep.gcd_value != 1) == (not rep.h1_cyclic), spec

    def test_monotone_in_unique_surface(self, corpus_reports):
        for spec, rep in corpus_reports[::7]:
            if rep.verdict == OBSTRUCTED:
                assert analyze(spec, unique_surface=True).verdict == OBSTRUCTED

    def test_deterministic_json(self):
        for spec in [Pretzel(3, 3, -3), Whitehead(-1, 4), Catalog("10_3")]:
            assert analyze(spec).to_json() == analyze(spec).to_json()

    def test_json_schema(self):
        data = json.loads(analyze(Pretzel(-5, 3, -3)).to_json())
        assert data["input"] == "pretzel -5,3,-3"
        assert data["seifert"] == [[-1, 2], [1, 0]]
        assert data["alexander"] == {"lowdeg": 0, "coeffs": [2, -5, 2]}
        assert data["h1"] == {"torsion": [9], "free_rank": 0}
        assert data["metab"]["a"] == -1 and data["metab"]["b"] == 1
        assert data["verdict"] == OBSTRUCTED


class TestCli:
    def test_check_json(self, capsys):
        assert main(["check", "pretzel", "3,3,-3", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["verdict"] == OBSTRUCTED

    def test_check_negative_args(self, capsys):
        assert main(["check", "pretzel -5,3,-3"]) == 0
        assert "verdict:            OBSTRUCTED" in capsys.readouterr().out

    def test_unique_surface_flag(self, capsys):
        assert main(["check", "whitehead", "+", "2", "--unique-surface", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["unique_surface_asserted"] is True

    def test_table(self, capsys):
        assert main(["table"]) == 0
        assert "11n_139" in capsys.readouterr().out

    def test_certificate_pair(self, capsys):
        assert main(["certificate", "pair", "5"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("#")
        assert sum(line.startswith("MOVE ") for line in out.splitlines()) == 10

    def test_certificate_chain(self, capsys):
        assert main(["certificate", "chain", "2", "3"]) == 0
        assert "to=[[18,3],[4,0]]" in capsys.readouterr().out

    def test_congruent(self, capsys):
        assert main(["congruent", "0", "1", "3"]) == 0
        assert "1" in capsys.readouterr().out

    @pytest.mark.parametrize("argv", [
        ["check", "pretzel", "2,3,5"],
        ["check", "catalog", "13_1"],
        ["certificate", "pair", "7"],
        ["check", "matrix", "1,0;0,1"],
    ])
    def test_input_errors(self, argv, capsys):
        assert main(argv) == 2
        assert capsys.readouterr().err
