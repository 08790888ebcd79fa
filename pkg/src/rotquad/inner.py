"""
Quadrature for the smooth one-period inner integrals.

Two methods: fixed-order Gauss-Legendre, and a globally adaptive
Gauss-Kronrod (15/7) bisection scheme in the spirit of QUADPACK's QAG.
Integrands are called with numpy arrays of abscissae and may return real
or complex values.
"""

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import InvalidParameter, OrderTooHigh
from .roots import LEGENDRE_ORDER_CAP, legendre_rule

__all__ = [
    "QuadResult",
    "FixedGauss",
    "Adaptive",
    "parse_inner_method",
    "fixed_gauss",
    "adaptive",
    "integrate_with",
    "kronrod_constants",
]


@dataclass(frozen=True)
class QuadResult:
    """Outcome of a quadrature.

    ``error_estimate`` is an absolute, heuristic error indicator, not a bound.
    ``evaluations`` counts integrand evaluations (points).
    """

    value: complex
    error_estimate: float
    evaluations: int
    converged: bool = True


@dataclass(frozen=True)
class FixedGauss:
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise InvalidParameter(f"Gauss order must be >= 1, got {self.order}")

    def __str__(self):
        return f"fixed:{self.order}"


@dataclass(frozen=True)
class Adaptive:
    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_subdivisions: int = 200

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InvalidParameter("tolerances must be > 0")
        if self.max_subdivisions < 1:
            raise InvalidParameter("max_subdivisions must be >= 1")

    def __str__(self):
        return f"adaptive:{self.abs_tol:g}:{self.rel_tol:g}"


def parse_inner_method(text):
    """Parse ``adaptive[:abs_tol[:rel_tol]]`` or ``fixed:<order>``."""
    parts = text.strip().split(":")
    kind = parts[0].lower()
    try:
        if kind == "adaptive" and len(parts) <= 3:
            abs_tol = float(parts[1]) if len(parts) > 1 else Adaptive.abs_tol
            rel_tol = float(parts[2]) if len(parts) > 2 else Adaptive.rel_tol
            return Adaptive(abs_tol, rel_tol)
        if kind == "fixed" and len(parts) == 2:
            return FixedGauss(int(parts[1]))
    except ValueError as exc:
        raise InvalidParameter(f"bad inner method {text!r}: {exc}") from None
    raise InvalidParameter(
        f"bad inner method {text!r}; expected adaptive[:abs_tol[:rel_tol]] or fixed:<order>"
    )


@lru_cache(maxsize=None)
def kronrod_constants():
    """Full symmetric GK15 nodes, Kronrod weights and embedded Gauss-7 weights.

    Read from the bundled ``data/gk15.txt`` fixture.
    """
    sections = {}
    current = None
    text = resources.files("rotquad").joinpath("data/gk15.txt").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("["):
            current = sections.setdefault(line.strip("[]"), [])
            continue
        x, w = map(float, line.split())
        current.append((x, w))
    half_k = sorted(sections["kronrod15"])
    half_g = dict(sections["gauss7"])
    # mirror to the full set of 15 nodes in ascending order
    pos = [(x, w) for x, w in half_k if x > 0]
    nodes = [-x for x, _ in reversed(pos)] + [0.0] + [x for x, _ in pos]
    wk = [w for _, w in reversed(pos)] + [dict(half_k)[0.0]] + [w for _, w in pos]
    wg = [half_g.get(abs(x), 0.0) for x in nodes]
    return np.array(nodes), np.array(wk), np.array(wg)


def _values(f, x):
    return np.broadcast_to(np.asarray(f(x), dtype=complex), x.shape)


@lru_cache(maxsize=64)
def _gauss_rule(order):
    return legendre_rule(order)


def _gauss_estimate(f, a, b, order):
    x, w = _gauss_rule(order)
    half = 0.5 * (b - a)
    t = a + half * (x + 1.0)
    return half * np.dot(w, _values(f, t))


def fixed_gauss(f, a, b, order, estimate_error=True):
    """Order-``order`` Gauss-Legendre estimate of the integral of ``f`` on [a, b].

    With ``estimate_error`` the error estimate is the difference against an
    ``order + 1`` point rule, and those extra evaluations are counted.
    """
    if not a < b:
        raise InvalidParameter(f"need a < b, got [{a}, {b}]")
    if order < 1 or order > LEGENDRE_ORDER_CAP:
        raise OrderTooHigh(f"Gauss order {order} outside [1, {LEGENDRE_ORDER_CAP}]")
    value = complex(_gauss_estimate(f, a, b, order))
    if not estimate_error:
        return QuadResult(value, 0.0, order, True)
    companion = complex(_gauss_estimate(f, a, b, order + 1))
    return QuadResult(value, abs(companion - value), 2 * order + 1, True)


def _gk_panel(f, a, b):
    nodes, wk, wg = kronrod_constants()
    half = 0.5 * (b - a)
    fx = _values(f, 0.5 * (a + b) + half * nodes)
    gk = half * np.dot(wk, fx)
    g7 = half * np.dot(wg, fx)
    d = gk - g7
    return complex(gk), max(abs(d.real), abs(d.imag))


def adaptive(f, a, b, abs_tol=1e-13, rel_tol=1e-12, max_subdivisions=200):
    """Globally adaptive GK15 quadrature of ``f`` on [a, b].

    The panel with the largest error indicator ``|GK15 - G7|`` is bisected
    until the summed indicator drops below ``max(abs_tol, rel_tol*|value|)``
    or ``max_subdivisions`` panels exist.  Budget exhaustion is not an
    error; the result is returned with ``converged=False``.
    """
    if not a < b:
        raise InvalidParameter(f"need a < b, got [{a}, {b}]")
    value, err = _gk_panel(f, a, b)
    evaluations = 15
    # heap entries: (-err, a, b, value, err)
    heap = [(-err, a, b, value, err)]
    total_value, total_err = value, err
    converged = False
    while True:
        if total_err <= max(abs_tol, rel_tol * abs(total_value)):
            converged = True
            break
        if len(heap) >= max_subdivisions:
            break
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # panel below floating-point resolution
            heapq.heappush(heap, (0.0, lo, hi, v, 0.0))
            total_err = math.fsum(p[4] for p in heap)
            if heap[0][4] == 0.0:
                break
            continue
        v1, e1 = _gk_panel(f, lo, mid)
        v2, e2 = _gk_panel(f, mid, hi)
        evaluations += 30
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
        total_value += v1 + v2 - v
        total_err += e1 + e2 - e
    # deterministic final reduction in panel order
    panels = sorted(heap, key=lambda item: item[1])
    value = complex(
        math.fsum(p[3].real for p in panels), math.fsum(p[3].imag for p in panels)
    )
    err = math.fsum(p[4] for p in panels)
    return QuadResult(value, err, evaluations, converged)


def integrate_with(method, f, a, b):
    """Dispatch on an inner-method descriptor."""
    if isinstance(method, FixedGauss):
        return fixed_gauss(f, a, b, method.order)
    if isinstance(method, Adaptive):
        return adaptive(f, a, b, method.abs_tol, method.rel_tol, method.max_subdivisions)
    raise InvalidParameter(f"unknown inner method {method!r}")
