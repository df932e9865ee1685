"""Exact Seifert-matrix invariants and cosmetic crossing obstructions for genus-one knots."""

from .abelian import AbelianGroup, group_from_presentation, h1_double_cover, is_cyclic, lemma_abelian_closed_form
from .exactalg import (
    IntMatrix,
    SeifertMatrix,
    SnfResult,
    congruent_transform,
    det,
    is_perfect_square,
    isotropic_vector,
    signature,
    smith_normal_form,
)
from .families import (
    Catalog,
    ExplicitMatrix,
    MetabolizerForm,
    Pretzel,
    Whitehead,
    metabolizer_form,
    parse_knotspec,
    pretzel_determinant,
    pretzel_seifert,
    whitehead_seifert,
)
from .laurent import LaurentPoly, alexander, canonicalize, knot_determinant, symmetric_linear_factorization
from .pipeline import ObstructionReport, analyze, catalog, run_table_screen
from .sequiv import (
    SEquivCertificate,
    apply_move,
    brute_force_congruence,
    congruence_classifier_2x2,
    construct_sequiv_pair,
    lemma_chain_certificate,
    shift_sequivalence,
    trotter_rigid,
    verify_certificate,
)

__version__ = "0.1.0"
