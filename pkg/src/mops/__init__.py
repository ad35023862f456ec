"""Exact computation with Jack polynomials, multivariate orthogonal
polynomials, hypergeometric functions of matrix argument, and eigenvalue
statistics of the 2/alpha ensembles."""

from .errors import (
    ConvergenceError,
    DomainError,
    MopsError,
    ParseError,
    PoleError,
    UnsupportedModeError,
)
from .rational import ALPHA, G1, G2, GAMMA, N, R, Infinity, RationalFunction, param, rf
from .partitions import (
    arm,
    compare,
    conjugate,
    hook_products,
    is_subpartition,
    leg,
    lower_hook,
    partitions_of,
    rho,
    subpartitions_of,
    upper_hook,
)
from .symfun import (
    GENERIC,
    Leaf,
    Pow,
    Prod,
    Scalar,
    Sum,
    SymExpr,
    alpha_inner_product,
    eval_numeric,
    expand_to_monomials,
    jack2jack,
    m2jack,
    m2m,
    m2p,
    p2m,
)
from .jack import (
    apply_dstar,
    dstar_eigenvalue,
    jack_expand,
    jack_identity_value,
    normalization_factor,
)
from .binom import contiguous, gbinomial, gsfact, mv_gamma, sfact
from .orthopoly import (
    OrthoExpansion,
    eval_at_scalar_identity,
    eval_at_zero,
    family_eigenvalue,
    family_operator,
    hermite,
    hermite2,
    jacobi,
    laguerre,
    laguerre_hermite_limit_check,
)
from .hypergeom import (
    classify,
    ghypergeom,
    largest_eig_cdf,
    level_density,
    level_density_polynomial,
    level_density_scaled,
    level_density_scaled_polynomial,
    smallest_eig_density,
    smallest_eig_density_normalized,
    smallest_eig_mass,
)
from .expect import EnsembleSpec, conjecture_coefficients, expect_jack_c, expect_jack_expr, expect_monomial_expr
from .parser import parse_expression, parse_scalar

__version__ = "0.1.0"
