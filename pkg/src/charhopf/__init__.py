"""Character Hopf algebras given by Lyndon-word presentations.

Exact scalars, Lyndon words and super letters, the smash product
kX # k[Gamma], presentations (L, N, c, d), a rewriting engine to PBW normal
form, and independent checks (Hopf ideal, dimension oracle).
"""

from .algebra import SmashElement, antipode, coproduct, counit, graded_commutator
from .expr import format_element, parse_expression
from .grading import AbelianGroup, Character, Grading
from .kernels import BACKEND
from .presentation import (Presentation, ValidationReport, compute_C, compute_D, redbr,
                           standard_lifting, validate)
from .presets import load_preset
from .rewrite import confluence_selftest, dimension, enumerate_pbw, is_pbw_normal, normal_form
from .scalars import INFINITE, cyclotomic, rational_function, rationals
from .superletters import SuperElement, expand_superelement, expand_superletter
from .verify import OracleConfig, hopf_axiom_spotcheck, hopf_ideal_check, ideal_membership, oracle_dimension
from .words import enumerate_lyndon, is_lyndon, shirshov

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "BACKEND", "Character", "Grading", "INFINITE", "OracleConfig", "Presentation",
    "SmashElement", "SuperElement", "ValidationReport", "antipode", "compute_C", "compute_D",
    "confluence_selftest", "coproduct", "counit", "cyclotomic", "dimension", "enumerate_lyndon",
    "enumerate_pbw", "expand_superelement", "expand_superletter", "format_element", "graded_commutator",
    "hopf_axiom_spotcheck", "hopf_ideal_check", "ideal_membership", "is_lyndon", "is_pbw_normal",
    "load_preset", "normal_form", "oracle_dimension", "parse_expression", "rational_function", "rationals", "redbr",
    "shirshov", "standard_lifting", "validate",
]
