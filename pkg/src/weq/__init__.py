"""Exact-arithmetic toolkit for word equations.

Words, morphisms and systems of word equations; their encoding as
vectors of sparse integer polynomials; binomial factorization of the
pair determinants, which classifies rank-(n-1) common solutions by
hyperplane length constraints; principal decompositions; and a
brute-force search that verifies everything at desk scale.
"""

from .analysis import (
    BoundReport,
    HyperplaneReport,
    PairDeterminant,
    bounds,
    cofactor_3vars,
    minimal_count_bounds,
    pair_report_json,
    solution_hyperplanes,
    system_bounds,
)
from .encode import (
    balanced_residual,
    check_solution_poly,
    delta_k,
    is_balanced,
    p_vector,
    s_poly,
    s_vector,
    s_vector_eval,
    t_det,
)
from .poly import (
    Binomial,
    BinomialFactorization,
    MultiPoly,
    UniPoly,
    binomial_factors,
    divide_by_binomial,
    format_poly,
    minimal_monomials,
    poly_var_names,
    word_poly,
)
from .principal import PrincipalDecomposition, is_trivial, principal_decompose
from .search import (
    BoundCheckReport,
    EncodingFuzzReport,
    SearchConfig,
    SearchSpaceError,
    SolutionCatalog,
    SolutionClass,
    enumerate_solutions,
    search_space_size,
    verify_bounds,
    verify_encoding,
)
from .textio import (
    ParseError,
    parse_equation,
    parse_morphism,
    parse_poly,
    parse_system,
    render_equation,
    render_morphism,
)
from .words import (
    EqSystem,
    Equation,
    LambdaVector,
    Morphism,
    Word,
    as_system,
    canonical_letters,
    compose,
    gamma_matrix,
    gamma_normal,
    is_solution,
    linear_equivalent,
    rank,
    renaming_equivalent,
    theta_alpha,
    unknown_names,
)

__version__ = "0.1.0"
