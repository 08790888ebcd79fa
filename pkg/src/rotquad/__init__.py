"""Frequency-uniform quadrature for integrals of a rapidly rotating phase."""

from .chebyshev import ChebyshevApprox, chebyshev_fit, truncation_error, verify_proposition
from .errors import (
    ConstructionError,
    DegreeTooHigh,
    FrequencyTooLow,
    IndexOutOfRange,
    InvalidOrder,
    InvalidParameter,
    InvalidPointCount,
    NoConvergence,
    OrderTooHigh,
    RotquadError,
)
from .gauss_sum import SummationRule, apply, build_rule, cached_rule, direct_sum
from .gram import (
    GramBasis,
    build_basis,
    equidistant_node,
    evaluate,
    evaluate_with_derivative,
    leading_coefficient,
)
from .inner import Adaptive, FixedGauss, QuadResult, adaptive, fixed_gauss, parse_inner_method
from .oscillatory import (
    Decomposition,
    OscillatoryIntegrand,
    continuum_approx,
    decompose,
    fallback_integrate,
    inner_integral,
    integrate,
    riemann_sum_approx,
)
from .roots import RootConfig, gram_roots, legendre_nodes
from .testbed import (
    TestProblem,
    brute_force_reference,
    constant_problem,
    paper_problem,
    product_phase_problem,
)

__version__ = "0.1.0"
