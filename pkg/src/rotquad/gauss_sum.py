"""
Gauss quadrature for equidistant sums.

The order-``n`` rule reproduces the equidistant average

    S(G) = (2/N) * sum_{j=0}^{N-1} G(x_j)

exactly for polynomials ``G`` of degree ``<= 2n - 1`` using only ``n``
evaluations of ``G``.  Nodes are the roots of the Gram polynomial ``p_n``
and the weights follow from the Christoffel-Darboux formula

    w_k = (a_n / a_{n-1}) * 2 / (N p_n'(s_k) p_{n-1}(s_k)).
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ConstructionError, InvalidOrder, InvalidPointCount
from .gram import build_basis, equidistant_nodes, evaluate, evaluate_with_derivative
from .roots import RootConfig, gram_roots_report

__all__ = ["SummationRule", "build_rule", "cached_rule", "apply", "direct_sum"]


@dataclass(frozen=True)
class SummationRule:
    """Nodes and weights of an order-``n`` Gauss rule for an ``N``-point sum."""

    point_count: int
    order: int
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    iterations: int = field(default=0, compare=False)

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def __call__(self, G):
        return apply(self, G)


def build_rule(point_count, order, config=RootConfig()):
    """Construct the order-``order`` Gauss summation rule for ``N = point_count``.

    Raises
    ------
    InvalidOrder
        If ``order < 1`` or ``order >= point_count``.
    NoConvergence
        Propagated from the root finder.
    ConstructionError
        If a weight comes out non-positive.
    """
    if point_count < 2:
        raise InvalidPointCount(f"point_count must be >= 2, got {point_count}")
    if order < 1 or order >= point_count:
        raise InvalidOrder(
            f"order must satisfy 1 <= order <= N - 1 = {point_count - 1}, got {order}"
        )
    basis = build_basis(point_count, order)
    report = gram_roots_report(basis, order, config)
    s = report.roots
    _, dp = evaluate_with_derivative(basis, order, s)
    p_lower = evaluate(basis, order - 1, s)
    ratio = 1.0 / basis.b(order)
    w = ratio * 2.0 / (point_count * dp * p_lower)
    if not np.all(w > 0):
        raise ConstructionError(f"non-positive weight in rule N={point_count}, n={order}: {w}")
    w = 0.5 * (w + w[::-1])
    return SummationRule(int(point_count), int(order), s, w, report.iterations)


@lru_cache(maxsize=256)
def cached_rule(point_count, order, config=RootConfig()):
    """Memoized :func:`build_rule`; rules are immutable so sharing is safe."""
    return build_rule(point_count, order, config)


def apply(rule, G):
    """Return ``sum_k w_k G(s_k)``, calling ``G`` once per node."""
    total = 0.0
    for s, w in zip(rule.nodes, rule.weights):
        total += w * G(float(s))
    return total


def direct_sum(point_count, G, vectorized=True, chunk=1 << 16):
    """Brute-force ``(2/N) sum_{j=0}^{N-1} G(x_j)``.

    With ``vectorized=True``, ``G`` is called on arrays of nodes; otherwise
    once per node.
    """
    if point_count < 2:
        raise InvalidPointCount(f"point_count must be >= 2, got {point_count}")
    total = 0.0
    if vectorized:
        for start in range(0, point_count, chunk):
            j = np.arange(start, min(start + chunk, point_count), dtype=float)
            values = np.asarray(G(-1.0 + 2.0 * j / (point_count - 1)))
            total = total + np.sum(np.broadcast_to(values, j.shape))
    else:
        for x in equidistant_nodes(point_count):
            total += G(float(x))
    return 2.0 * total / point_count
