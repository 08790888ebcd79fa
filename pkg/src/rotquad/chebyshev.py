"""
Chebyshev truncation error and the Gauss-sum error bound.

For continuous ``G`` on [-1, 1] with Chebyshev truncation ``G_n`` and
``d_n = max |G - G_n|``, the order-``n`` summation rule satisfies

    |S(G) - S_n(G)| <= 4 d_{2n-1}.

``d_n`` is estimated numerically here; the estimate is a heuristic leaning
towards overestimation, not a rigorous bound.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as cheb
from scipy.fft import dct

from .gauss_sum import apply, build_rule, direct_sum

__all__ = [
    "ChebyshevApprox",
    "PropositionCheck",
    "chebyshev_fit",
    "truncation_error",
    "verify_proposition",
]

DENSE_SAMPLES = 2048


def _sample(G, x):
    try:
        values = np.asarray(G(x))
    except (TypeError, ValueError):
        # scalar-only callable
        values = None
    if values is None or values.shape != x.shape:
        values = np.array([G(float(t)) for t in x])
    return values


@dataclass(frozen=True)
class ChebyshevApprox:
    """Truncated Chebyshev series ``sum_j a_j T_j(x)``."""

    coefficients: np.ndarray

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, x):
        return cheb.chebval(x, self.coefficients)

    def truncate(self, n):
        return ChebyshevApprox(self.coefficients[: n + 1].copy())


def chebyshev_fit(G, degree):
    """Chebyshev coefficients ``a_0 ... a_degree`` of ``G``.

    The coefficient integrals are discretized with Gauss-Chebyshev
    quadrature at ``K = max(4 degree, 256)`` first-kind Chebyshev points,
    which is a type-II discrete cosine transform.
    """
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    K = max(4 * degree, 256)
    theta = np.pi * (np.arange(K) + 0.5) / K
    values = _sample(G, np.cos(theta))
    a = dct(values, type=2) / K
    a[0] *= 0.5
    return ChebyshevApprox(a[: degree + 1])


def truncation_error(G, n, probe_degree=None):
    """Estimate ``d_n = max_{[-1,1]} |G - G_n|``.

    ``G`` is fitted to ``probe_degree`` (default ``max(n + 32, 64)``); the
    estimate is the dense-sample maximum of the discarded tail plus the
    fit-versus-``G`` residual.
    """
    if probe_degree is None:
        probe_degree = max(n + 32, 64)
    if probe_degree < n + 16:
        raise ValueError(f"probe_degree={probe_degree} must be >= n + 16 = {n + 16}")
    fit = chebyshev_fit(G, probe_degree)
    x = np.linspace(-1.0, 1.0, DENSE_SAMPLES)
    tail = np.zeros_like(fit.coefficients)
    tail[n + 1 :] = fit.coefficients[n + 1 :]
    tail_max = np.max(np.abs(cheb.chebval(x, tail)))
    residual = np.max(np.abs(fit(x) - _sample(G, x)))
    return float(tail_max + residual)


@dataclass(frozen=True)
class PropositionCheck:
    lhs: float
    rhs: float
    satisfied: bool


def verify_proposition(G, point_count, order, rule=None):
    """Numerically check ``|S(G) - S_n(G)| <= 4 d_{2n-1}`` for one ``(N, n)``."""
    if rule is None:
        rule = build_rule(point_count, order)
    lhs = abs(direct_sum(point_count, G) - apply(rule, G))
    rhs = 4.0 * truncation_error(G, 2 * order - 1)
    return PropositionCheck(float(lhs), rhs, bool(lhs <= rhs * (1.0 + 1e-6) + 1e-14))
