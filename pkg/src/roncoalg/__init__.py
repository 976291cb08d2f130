"""Exact-arithmetic calculator for free Leibniz algebras, the free algebra
of the square-bracket identities, bracket/product (mu) presentations, and
their low-degree homology.

Everything is computed over the rationals with `fractions.Fraction`; there
is no floating point and no randomness in any library code path, so equal
inputs always produce identical results.
"""

from .errors import (
    DegreeOverflowError,
    NotInVarietyError,
    NotLieElementError,
    RoncoError,
    TermSyntaxError,
    UnknownGeneratorError,
)
from .freelie import (
    DEFAULT_MAX_DEGREE,
    expand_to_tensor,
    format_word,
    is_lyndon,
    left_normed_bracketing,
    lie_bracket,
    lie_generator,
    lyndon_words,
    parse_word,
    rewrite_to_lyndon,
    standard_factorization,
    witt_dim,
)
from .homology import HomologyReport, h1_adjoint, hl1, hl2, hr0
from .leibniz import leib_bracket, leib_generator
from .linalg import (
    SpanBuilder,
    SparseMatrix,
    format_rational,
    parse_rational,
    quotient_dim,
    rank,
    rank_and_kernel,
)
from .lincomb import LinComb, format_lincomb
from .ronco import (
    graded_basis,
    graded_dim,
    graded_kernel_basis,
    project,
    ronco_bracket,
    ronco_generator,
    section,
    truncate_to_structure,
    truncation_basis,
)
from .structure import (
    MuAlgebra,
    StructureAlgebra,
    VerificationReport,
    Violation,
    abelian,
    ann_subspace,
    basis_vector,
    bracket_eval,
    cross_product,
    direct_sum,
    free_nil2,
    lie_quotient,
    mu_bracket_eval,
    mu_product_eval,
    mu_to_ronco,
    ronco_to_mu,
    verify_mu,
    verify_variety,
)
from .terms import format_term, parse_term

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_DEGREE",
    "DegreeOverflowError",
    "HomologyReport",
    "LinComb",
    "MuAlgebra",
    "NotInVarietyError",
    "NotLieElementError",
    "RoncoError",
    "SpanBuilder",
    "SparseMatrix",
    "StructureAlgebra",
    "TermSyntaxError",
    "UnknownGeneratorError",
    "VerificationReport",
    "Violation",
    "abelian",
    "ann_subspace",
    "basis_vector",
    "bracket_eval",
    "cross_product",
    "direct_sum",
    "expand_to_tensor",
    "format_lincomb",
    "format_rational",
    "format_term",
    "format_word",
    "free_nil2",
    "graded_basis",
    "graded_dim",
    "graded_kernel_basis",
    "h1_adjoint",
    "hl1",
    "hl2",
    "hr0",
    "is_lyndon",
    "left_normed_bracketing",
    "leib_bracket",
    "leib_generator",
    "lie_bracket",
    "lie_generator",
    "lie_quotient",
    "lyndon_words",
    "mu_bracket_eval",
    "mu_product_eval",
    "mu_to_ronco",
    "parse_rational",
    "parse_term",
    "parse_word",
    "project",
    "quotient_dim",
    "rank",
    "rank_and_kernel",
    "rewrite_to_lyndon",
    "ronco_bracket",
    "ronco_generator",
    "ronco_to_mu",
    "section",
    "standard_factorization",
    "truncate_to_structure",
    "truncation_basis",
    "verify_mu",
    "verify_variety",
    "witt_dim",
]
