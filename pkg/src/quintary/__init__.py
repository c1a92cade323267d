"""Evaluation of L, U, their subterms, symmetries and closed forms."""

from .chain import ChainClosedForm, chain_closed_form, eval_chain_closed
from .symmetry import (
    HEXAD_VERTICES,
    KLEIN_GROUP,
    SYMMETRIC_GROUP,
    SymmetryLabel,
    apply_symmetry,
    opposite_vertex,
)
from .terms import (
    L_TERMS,
    U_TERMS,
    TermId,
    eval_distributive_closed,
    eval_L,
    eval_term,
    eval_terms,
    eval_U,
    median,
)

__all__ = [
    "HEXAD_VERTICES",
    "KLEIN_GROUP",
    "L_TERMS",
    "SYMMETRIC_GROUP",
    "U_TERMS",
    "ChainClosedForm",
    "SymmetryLabel",
    "TermId",
    "apply_symmetry",
    "chain_closed_form",
    "eval_L",
    "eval_U",
    "eval_chain_closed",
    "eval_distributive_closed",
    "eval_term",
    "eval_terms",
    "median",
    "opposite_vertex",
]
