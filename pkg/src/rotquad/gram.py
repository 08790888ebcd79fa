"""
Discrete orthonormal Gram polynomials on N equidistant points.

The nodes are ``x_j = -1 + 2 j / (N - 1)``, ``j = 0, ..., N - 1``, and the
polynomials satisfy ``sum_j p_l(x_j) p_m(x_j) = delta_lm``.  They are
evaluated with the symmetric three-term recurrence

    b_{m+1} p_{m+1}(x) = x p_m(x) - b_m p_{m-1}(x),   p_0 = 1/sqrt(N),

with ``b_m = m/(N-1) * sqrt((N^2 - m^2) / (4 m^2 - 1))``.  All leading
coefficients are positive.  Only the ``b_m`` are stored, so ``N`` may be
very large (``1e6`` and beyond) without any O(N) memory.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooHigh, IndexOutOfRange, InvalidPointCount

__all__ = [
    "GramBasis",
    "build_basis",
    "equidistant_node",
    "equidistant_nodes",
    "evaluate",
    "evaluate_with_derivative",
    "leading_coefficient",
    "recurrence_coefficient",
]


def recurrence_coefficient(point_count, m):
    """Off-diagonal recurrence coefficient ``b_m`` for ``N = point_count``.

    This is the reciprocal of the leading-coefficient ratio
    ``a_m / a_{m-1} = (N-1)/m * sqrt((4m^2-1)/(N^2-m^2))``.
    """
    n = float(point_count)
    m = float(m)
    # (N - m)(N + m) instead of N^2 - m^2: no cancellation for large N
    return m / (n - 1.0) * np.sqrt((n - m) * (n + m) / ((2.0 * m - 1.0) * (2.0 * m + 1.0)))


@dataclass(frozen=True)
class GramBasis:
    """Recurrence data for the Gram polynomials ``p_0, ..., p_{max_degree}``.

    Attributes
    ----------
    point_count : int
        Number of summation nodes ``N``.
    max_degree : int
        Highest supported degree, at most ``N - 1``.
    recurrence_coeffs : tuple of float
        ``(b_1, ..., b_max_degree)``, all strictly positive.
    """

    point_count: int
    max_degree: int
    recurrence_coeffs: tuple

    def b(self, m):
        return self.recurrence_coeffs[m - 1]

    @property
    def spacing(self):
        return 2.0 / (self.point_count - 1)

    def node(self, j):
        return equidistant_node(self, j)

    def nodes(self):
        return equidistant_nodes(self.point_count)

    def __call__(self, degree, x):
        return evaluate(self, degree, x)


def build_basis(point_count, max_degree):
    """Build the recurrence data for ``N = point_count`` up to ``max_degree``.

    Raises
    ------
    InvalidPointCount
        If ``point_count < 2``.
    DegreeTooHigh
        If ``max_degree >= point_count``; the recurrence degenerates at ``m = N``.
    """
    if int(point_count) != point_count or point_count < 2:
        raise InvalidPointCount(f"point_count must be an integer >= 2, got {point_count!r}")
    if max_degree >= point_count:
        raise DegreeTooHigh(
            f"max_degree={max_degree} must be <= point_count - 1 = {point_count - 1}"
        )
    if max_degree < 1:
        raise DegreeTooHigh(f"max_degree must be >= 1, got {max_degree}")
    point_count = int(point_count)
    coeffs = tuple(float(recurrence_coefficient(point_count, m)) for m in range(1, max_degree + 1))
    return GramBasis(point_count, int(max_degree), coeffs)


def equidistant_node(basis, j):
    """Return ``x_j = -1 + 2 j/(N - 1)`` for ``0 <= j <= N``.

    ``j = N`` gives the point ``1 + 2/(N-1)`` just past the right end, which
    labels the fractional remainder period.
    """
    n = basis.point_count
    if j < 0 or j > n:
        raise IndexOutOfRange(f"node index {j} outside [0, {n}]")
    return -1.0 + 2.0 * j / (n - 1)


def equidistant_nodes(point_count):
    """All ``N`` summation nodes as an array (O(N) memory, use for moderate N)."""
    j = np.arange(point_count, dtype=float)
    return -1.0 + 2.0 * j / (point_count - 1)


def _check_degree(basis, degree):
    if degree < 0 or degree > basis.max_degree:
        raise DegreeTooHigh(f"degree {degree} outside [0, {basis.max_degree}]")


def evaluate(basis, degree, x):
    """Evaluate ``p_degree`` at ``x`` (scalar or array) by the recurrence."""
    _check_degree(basis, degree)
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.full_like(x, 1.0 / np.sqrt(basis.point_count))
    b_prev = 0.0
    for m in range(degree):
        b_next = basis.recurrence_coeffs[m]
        p_prev, p = p, (x * p - b_prev * p_prev) / b_next
        b_prev = b_next
    return p[()] if p.ndim == 0 else p


def evaluate_with_derivative(basis, degree, x):
    """Return ``(p_degree(x), p_degree'(x))`` from the differentiated recurrence."""
    _check_degree(basis, degree)
    x = np.asarray(x, dtype=float)
    p_prev = np.zeros_like(x)
    p = np.full_like(x, 1.0 / np.sqrt(basis.point_count))
    dp_prev = np.zeros_like(x)
    dp = np.zeros_like(x)
    b_prev = 0.0
    for m in range(degree):
        b_next = basis.recurrence_coeffs[m]
        dp_prev, dp = dp, (p + x * dp - b_prev * dp_prev) / b_next
        p_prev, p = p, (x * p - b_prev * p_prev) / b_next
        b_prev = b_next
    if p.ndim == 0:
        return p[()], dp[()]
    return p, dp


def leading_coefficient(basis, degree):
    """Leading coefficient ``a_degree = a_0 / (b_1 ... b_degree)``, ``a_0 = 1/sqrt(N)``."""
    _check_degree(basis, degree)
    a = 1.0 / np.sqrt(basis.point_count)
    for m in range(degree):
        a /= basis.recurrence_coeffs[m]
    return float(a)
