"""Type GL_n Macdonald polynomials in exact arithmetic.

Nonsymmetric E_mu, relative E_mu^z, the KZ basis f_mu and symmetric
P_lambda via the affine Hecke algebra polynomial representation, plus
the combinatorics that counts and enumerates the objects behind their
expansion formulas: nonattacking fillings, queue tableaux, pipe dreams
and alcove walks.
"""

from .affine import (
    AffineRoot,
    MuDecomposition,
    PeriodicPerm,
    box_greedy_word,
    column_greedy_word,
    decompose_mu,
    translation,
    u_element,
    word_eval,
)
from .diagrams import (
    Diagram,
    Filling,
    box_stats,
    count,
    cst_expand,
    enumerate_fillings,
    enumerate_walks,
    filling_weight,
    filling_word,
    pipedream_convert,
    pipedream_invert,
    psi_strip,
    walk_geometry,
)
from .laurent import LaurentPoly, lp_arith, lp_coeff, lp_shift_qn, lp_subst_perm
from .macdonald import (
    EigenData,
    MacdonaldResult,
    closed_column,
    closed_n2,
    closed_single_box,
    closed_three_box,
    compute_E,
    compute_E_rel,
    compute_F,
    compute_P,
    compute_f,
    symmetrization_constant,
    verify_eigen,
    verify_haction,
    verify_kz,
)
from .ratfunc import IntPoly2, RatFunc, rf_arith, rf_eval, rf_normalize

from .hecke import apply_operator_word

__all__ = [
    "AffineRoot",
    "Diagram",
    "EigenData",
    "Filling",
    "IntPoly2",
    "LaurentPoly",
    "MacdonaldResult",
    "MuDecomposition",
    "PeriodicPerm",
    "RatFunc",
    "apply_operator_word",
    "box_greedy_word",
    "box_stats",
    "closed_column",
    "closed_n2",
    "closed_single_box",
    "closed_three_box",
    "column_greedy_word",
    "compute_E",
    "compute_E_rel",
    "compute_F",
    "compute_P",
    "compute_f",
    "count",
    "cst_expand",
    "decompose_mu",
    "enumerate_fillings",
    "enumerate_walks",
    "filling_weight",
    "filling_word",
    "lp_arith",
    "lp_coeff",
    "lp_shift_qn",
    "lp_subst_perm",
    "pipedream_convert",
    "pipedream_invert",
    "symmetrization_constant",
    "psi_strip",
    "rf_arith",
    "rf_eval",
    "rf_normalize",
    "translation",
    "u_element",
    "verify_eigen",
    "verify_haction",
    "verify_kz",
    "walk_geometry",
    "word_eval",
]

__version__ = "0.1.0"
