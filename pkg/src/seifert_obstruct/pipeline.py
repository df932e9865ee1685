"""Obstruction pipeline for cosmetic crossings on genus-one knots.

``analyze`` runs every applicable check and collects all reasons; the
verdict is OBSTRUCTED exactly when at least one check fires.  The
checks only ever rule crossings out, so the other verdict is
INCONCLUSIVE rather than anything stronger.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from . import abelian
from .abelian import AbelianGroup
from .exactalg import SeifertMatrix, det, is_perfect_square, isotropic_vector
from .families import (
    Catalog,
    KnotSpec,
    KnotSpecError,
    MetabolizerForm,
    Pretzel,
    metabolizer_form,
    seifert_of,
)
from .laurent import LaurentPoly, alexander, canonicalize, knot_determinant, symmetric_linear_factorization
from .sequiv import congruence_classifier_2x2, trotter_rigid

OBSTRUCTED = "OBSTRUCTED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Reason:
    tag: str
    detail: str

    def to_dict(self) -> dict:
        return {"tag": self.tag, "detail": self.detail}

    def __str__(self):
        return f"[{self.tag}] {self.detail}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    determinant: int
    realization: KnotSpec | None = None
    known_square: bool = False
    external: str | None = None


_TWO_BRIDGE = "2-bridge knot; cosmetic crossings excluded by an external result"

# Genus-one knots with at most 12 crossings and their determinants.
_CATALOG = (
    CatalogEntry("3_1", 3),
    CatalogEntry("4_1", 5),
    CatalogEntry("5_2", 7),
    CatalogEntry("6_1", 9, known_square=True, external=_TWO_BRIDGE),
    CatalogEntry("7_2", 11),
    CatalogEntry("7_4", 15),
    CatalogEntry("8_1", 13),
    CatalogEntry("8_3", 17),
    CatalogEntry("9_2", 15),
    CatalogEntry("9_5", 23),
    CatalogEntry("9_35", 27),
    CatalogEntry("9_46", 9, Pretzel(3, 3, -3), known_square=True),
    CatalogEntry("10_1", 17),
    CatalogEntry("10_3", 25, known_square=True, external=_TWO_BRIDGE),
    CatalogEntry("11a_247", 19),
    CatalogEntry("11a_343", 31),
    CatalogEntry("11a_362", 39),
    CatalogEntry("11a_363", 35),
    CatalogEntry("11n_139", 9, Pretzel(-5, 3, -3), known_square=True),
    CatalogEntry("11n_141", 21),
    CatalogEntry("12a_803", 21),
    CatalogEntry("12a_1287", 37),
    CatalogEntry("12a_1166", 33),
)


def catalog() -> list[CatalogEntry]:
    return list(_CATALOG)


def _key(name: str) -> str:
    return name.strip().lower().replace("_", "")


def lookup(name: str) -> CatalogEntry:
    for entry in _CATALOG:
        if _key(entry.name) == _key(name):
            return entry
    raise KnotSpecError(f"knot {name!r} is not in the catalog")


@dataclass(frozen=True)
class ObstructionReport:
    input: KnotSpec
    seifert: SeifertMatrix | None
    alexander: LaurentPoly | None
    determinant: int
    det_square: bool
    alg_slice: bool | None
    metab: MetabolizerForm | None
    h1: AbelianGroup | None
    h1_cyclic: bool | None
    gcd_value: int | None
    trotter_applicable: bool
    congruence_blocked: bool
    unique_surface_asserted: bool
    verdict: str
    reasons: tuple[Reason, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "input": str(self.input),
            "seifert": self.seifert.to_rows() if self.seifert is not None else None,
            "alexander": self.alexander.to_dict() if self.alexander is not None else None,
            "determinant": self.determinant,
            "det_square": self.det_square,
            "alg_slice": self.alg_slice,
            "metab": self.metab.to_dict() if self.metab is not None else None,
            "h1": self.h1.to_dict() if self.h1 is not None else None,
            "h1_cyclic": self.h1_cyclic,
            "gcd_value": self.gcd_value,
            "trotter_applicable": self.trotter_applicable,
            "congruence_blocked": self.congruence_blocked,
            "unique_surface_asserted": self.unique_surface_asserted,
            "verdict": self.verdict,
            "reasons": [r.to_dict() for r in self.reasons],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        def show(x):
            return "-" if x is None else str(x)

        lines = [
            f"input:              {self.input}",
            f"seifert matrix:     {show(self.seifert)}",
            f"alexander (canon.): {show(self.alexander)}",
            f"determinant:        {self.determinant}{' (square)' if self.det_square else ''}",
            f"algebraically slice: {show(self.alg_slice)}",
            f"metabolizer form:   "
            + (f"a={self.metab.a} b={self.metab.b} via P={self.metab.basis_change}" if self.metab else "-"),
            f"H1(double cover):   {show(self.h1)}"
            + ("" if self.h1_cyclic is None else (" (cyclic)" if self.h1_cyclic else " (not cyclic)")),
            f"gcd(2a, 2b+1):      {show(self.gcd_value)}",
            f"|det V| 1 or prime: {self.trotter_applicable}",
            f"congruence blocked: {self.congruence_blocked}",
            f"unique surface:     {self.unique_surface_asserted}",
            f"verdict:            {self.verdict}",
        ]
        lines += [f"  - {r}" for r in self.reasons]
        return "\n".join(lines)


def _determinant_only(spec: Catalog, entry: CatalogEntry, unique_surface: bool) -> ObstructionReport:
    square = is_perfect_square(entry.determinant) is not None
    reasons = []
    if not square:
        reasons.append(Reason("determinant-not-square", f"det(K) = {entry.determinant} is not a perfect square"))
    return ObstructionReport(
        input=spec, seifert=None, alexander=None, determinant=entry.determinant, det_square=square,
        alg_slice=False if not square else None, metab=None, h1=None, h1_cyclic=None, gcd_value=None,
        trotter_applicable=False, congruence_blocked=False, unique_surface_asserted=unique_surface,
        verdict=OBSTRUCTED if reasons else INCONCLUSIVE, reasons=tuple(reasons),
    )


def analyze(spec: KnotSpec, unique_surface: bool = False) -> ObstructionReport:
    """Run every obstruction applicable to ``spec`` and collect the reasons."""
    if isinstance(spec, Catalog):
        entry = lookup(spec.name)
        if entry.realization is None:
            return _determinant_only(spec, entry, unique_surface)
        v = seifert_of(entry.realization)
    else:
        v = seifert_of(spec)
    if v.shape != (2, 2):
        raise KnotSpecError("only 2x2 (genus one) Seifert matrices are supported")

    reasons: list[Reason] = []
    delta = canonicalize(alexander(v))
    determinant = knot_determinant(v)

    det_square = is_perfect_square(determinant) is not None
    if not det_square:
        reasons.append(Reason("determinant-not-square", f"det(K) = {determinant} is not a perfect square"))

    alg_slice = isotropic_vector(v) is not None
    if not alg_slice:
        disc = -det(v + v.T)
        detail = f"the Seifert form has no isotropic vector (discriminant {disc} is not a square)"
        if symmetric_linear_factorization(delta) is None:
            detail += f"; Δ ≐ {delta} is not f(t)f(1/t) with f linear"
        reasons.append(Reason("not-algebraically-slice", detail))

    metab = metabolizer_form(v) if alg_slice else None
    h1 = abelian.h1_double_cover(v)
    h1_cyclic = abelian.is_cyclic(h1)
    gcd_value = math.gcd(2 * metab.a, 2 * metab.b + 1) if metab else None
    if not h1_cyclic:
        detail = f"H1(Y_K) = {h1} is not finite cyclic"
        if metab and metab.b not in (0, -1) and gcd_value != 1:
            detail += f"; gcd(2a, 2b+1) = {gcd_value} for (a, b) = ({metab.a}, {metab.b})"
        reasons.append(Reason("double-cover-not-cyclic", detail))

    trotter = trotter_rigid(v)
    blocked = False
    if trotter and metab is not None:
        a, b = metab.a, metab.b
        blocked = (
            congruence_classifier_2x2(a, b, a + 1) is None
            and congruence_classifier_2x2(a, b, a - 1) is None
            and abs(2 * b + 1) != 1
        )
        if blocked:
            reasons.append(Reason(
                "rigid-no-congruent-shift",
                f"|det V| = {abs(det(v))} is 1 or prime, so S-equivalence forces congruence, "
                f"and ((a±1, b), (b+1, 0)) is not congruent to ((a, b), (b+1, 0)) "
                f"because 2b+1 = {2 * b + 1} does not divide ±1",
            ))

    if unique_surface and delta != LaurentPoly.const(1):
        reasons.append(Reason(
            "unique-surface-nontrivial-alexander",
            f"unique minimal genus Seifert surface asserted and Δ ≐ {delta} is not 1",
        ))

    return ObstructionReport(
        input=spec, seifert=v, alexander=delta, determinant=determinant, det_square=det_square,
        alg_slice=alg_slice, metab=metab, h1=h1, h1_cyclic=h1_cyclic, gcd_value=gcd_value,
        trotter_applicable=trotter, congruence_blocked=blocked, unique_surface_asserted=unique_surface,
        verdict=OBSTRUCTED if reasons else INCONCLUSIVE, reasons=tuple(reasons),
    )


@dataclass(frozen=True)
class ScreenRow:
    entry: CatalogEntry
    square: bool
    status: str
    report: ObstructionReport


@dataclass(frozen=True)
class TableScreen:
    rows: tuple[ScreenRow, ...]

    @property
    def survivors(self) -> tuple[str, ...]:
        """Entries whose determinant is a perfect square."""
        return tuple(r.entry.name for r in self.rows if r.square)

    def to_text(self) -> str:
        out = [f"{'knot':<10} {'det':>4}  square  status"]
        for r in self.rows:
            out.append(f"{r.entry.name:<10} {r.entry.determinant:>4}  {'yes' if r.square else 'no ':<6}  {r.status}")
        out.append(f"square-determinant survivors: {', '.join(self.survivors)}")
        return "\n".join(out)

    def to_dict(self) -> dict:
        return {
            "rows": [
                {"name": r.entry.name, "determinant": r.entry.determinant, "square": r.square,
                 "status": r.status, "report": r.report.to_dict()}
                for r in self.rows
            ],
            "survivors": list(self.survivors),
        }


def run_table_screen() -> TableScreen:
    rows = []
    for entry in _CATALOG:
        report = analyze(Catalog(entry.name))
        square = is_perfect_square(entry.determinant) is not None
        status = report.verdict
        if entry.external and report.verdict == INCONCLUSIVE:
            status = f"externally settled ({entry.external})"
        rows.append(ScreenRow(entry, square, status, report))
    return TableScreen(tuple(rows))
