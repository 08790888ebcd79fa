"""
Real roots of Gram polynomials by simultaneous (Durand-Kerner) iteration.

Gauss-Legendre nodes, the large-N limit of the Gram roots, seed the
iteration, so the sweep count stays small and essentially independent of N.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooHigh, InvalidParameter, NoConvergence, OrderTooHigh
from .gram import evaluate, evaluate_with_derivative, leading_coefficient

__all__ = [
    "LEGENDRE_ORDER_CAP",
    "RootConfig",
    "RootReport",
    "legendre_nodes",
    "legendre_rule",
    "gram_roots",
    "gram_roots_report",
]

#: Largest order accepted by :func:`legendre_nodes`.
LEGENDRE_ORDER_CAP = 100


@dataclass(frozen=True)
class RootConfig:
    """Stopping rule for the Durand-Kerner sweeps.

    ``tolerance`` bounds the largest node displacement in one sweep.
    """

    tolerance: float = 1e-14
    max_iterations: int = 60

    def __post_init__(self):
        if not self.tolerance > 0:
            raise InvalidParameter(f"tolerance must be > 0, got {self.tolerance}")
        if self.max_iterations < 1:
            raise InvalidParameter(f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass(frozen=True)
class RootReport:
    roots: np.ndarray
    iterations: int
    max_residual: float


def _legendre_newton(order, tol=1e-15, max_iter=100):
    # Chebyshev-angle initial guesses, descending in x
    k = np.arange(1, order + 1)
    x = np.cos(np.pi * (k - 0.25) / (order + 0.5))
    for _ in range(max_iter):
        p_prev = np.ones_like(x)
        p = x.copy()
        for m in range(2, order + 1):
            p_prev, p = p, ((2 * m - 1) * x * p - (m - 1) * p_prev) / m
        dp = order * (x * p - p_prev) / (x * x - 1.0)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) <= tol:
            break
    # one more derivative evaluation at the converged nodes, for the weights
    p_prev = np.ones_like(x)
    p = x.copy()
    for m in range(2, order + 1):
        p_prev, p = p, ((2 * m - 1) * x * p - (m - 1) * p_prev) / m
    dp = order * (x * p - p_prev) / (x * x - 1.0)
    x = x[::-1].copy()
    dp = dp[::-1].copy()
    return x, dp


def _symmetrize(x):
    # exact antisymmetry; the middle node of an odd rule is exactly 0
    x = 0.5 * (x - x[::-1])
    return x


def legendre_rule(order):
    """Gauss-Legendre nodes and weights on [-1, 1], ascending, no order cap."""
    if order < 1:
        raise OrderTooHigh(f"order must be >= 1, got {order}")
    x, dp = _legendre_newton(order)
    x = _symmetrize(x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    w = 0.5 * (w + w[::-1])
    return x, w


def legendre_nodes(order):
    """Gauss-Legendre nodes of the given order on [-1, 1], ascending.

    Newton iteration on the Legendre three-term recurrence, started from
    Chebyshev-angle guesses.

    Raises
    ------
    OrderTooHigh
        If ``order < 1`` or ``order > LEGENDRE_ORDER_CAP``.
    """
    if order > LEGENDRE_ORDER_CAP:
        raise OrderTooHigh(f"order {order} exceeds cap {LEGENDRE_ORDER_CAP}")
    return legendre_rule(order)[0]


def gram_roots_report(basis, degree, config=RootConfig()):
    """Like :func:`gram_roots` but also return the sweep count and residual."""
    if degree < 1 or degree > basis.max_degree or degree >= basis.point_count:
        raise DegreeTooHigh(
            f"degree {degree} outside [1, {min(basis.max_degree, basis.point_count - 1)}]"
        )
    a_n = leading_coefficient(basis, degree)
    s = legendre_rule(degree)[0].copy()
    if degree == 1:
        # p_1 = a_1 x; the Legendre seed is already the exact root
        return RootReport(s, 0, abs(float(evaluate(basis, 1, 0.0))))

    iterations = 0
    converged = False
    for iterations in range(1, config.max_iterations + 1):
        diff = s[:, None] - s[None, :]
        np.fill_diagonal(diff, 1.0)
        step = evaluate(basis, degree, s) / (a_n * np.prod(diff, axis=1))
        s = s - step
        if np.max(np.abs(step)) <= config.tolerance:
            converged = True
            break
    if not converged:
        residual = float(np.max(np.abs(evaluate(basis, degree, s))))
        raise NoConvergence(
            f"Durand-Kerner did not converge for N={basis.point_count}, n={degree} "
            f"in {config.max_iterations} sweeps (worst residual {residual:.3e})",
            residual=residual,
            iterations=config.max_iterations,
        )

    # Newton polish, decoupled from the other iterates
    p, dp = evaluate_with_derivative(basis, degree, s)
    s = s - p / dp
    s = np.sort(s)
    s = _symmetrize(s)
    residual = float(np.max(np.abs(evaluate(basis, degree, s))))
    return RootReport(s, iterations, residual)


def gram_roots(basis, degree, config=RootConfig()):
    """Roots ``s_1 < ... < s_n`` of the degree-``n`` Gram polynomial.

    Parameters
    ----------
    basis : GramBasis
    degree : int
        ``1 <= degree <= basis.max_degree``.
    config : RootConfig

    Raises
    ------
    NoConvergence
        If the node displacement does not fall below ``config.tolerance``
        within ``config.max_iterations`` sweeps.
    """
    return gram_roots_report(basis, degree, config).roots
