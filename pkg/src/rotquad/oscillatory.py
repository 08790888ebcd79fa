"""
Integrals of a rapidly rotating phase,

    I(omega) = int_0^1 F(x, exp(i omega x); omega) dx,

by splitting [0, 1] into ``N`` whole periods ``T = 2 pi / omega`` plus a
fractional remainder ``alpha T``.  With the phase rescaled to
``exp(2 pi i t)`` the integral over slot ``j`` becomes ``T I_1(x_j)`` where

    I_b(y) = int_0^b F(T t + T (N - 1) (y + 1) / 2, exp(2 pi i t)) dt,

and the slowly varying sum over slots is replaced by an ``n``-point Gauss
rule for sums:

    I(omega) ~ (N T / 2) sum_k w_k I_1(s_k) + T I_alpha(x_N).

Cost is ``n + 1`` inner integrals, independent of ``omega``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import FrequencyTooLow, InvalidOrder, InvalidParameter
from .gauss_sum import cached_rule
from .inner import Adaptive, QuadResult, integrate_with
from .roots import RootConfig, legendre_rule

__all__ = [
    "MIN_OMEGA",
    "Decomposition",
    "OscillatoryIntegrand",
    "decompose",
    "inner_integral",
    "integrate",
    "fallback_integrate",
    "riemann_sum_approx",
    "continuum_approx",
]

#: Smallest frequency for which the period decomposition yields N >= 2.
MIN_OMEGA = 4.0 * math.pi
TWO_PI = 2.0 * math.pi

# omega/(2 pi) this close below an integer (relative, capped absolute) is snapped up
_SNAP = 1e-12
_SNAP_CAP = 1e-9


@dataclass(frozen=True)
class Decomposition:
    """Period bookkeeping: ``(whole_periods + remainder_fraction) * period == 1``."""

    omega: float
    period: float
    whole_periods: int
    remainder_fraction: float

    @property
    def remainder_node(self):
        """Slot coordinate ``x_N = 1 + 2/(N - 1)`` of the remainder period."""
        return 1.0 + 2.0 / (self.whole_periods - 1)

    def slot_start(self, y):
        """Left end ``T (N - 1) (y + 1) / 2`` of the period labelled by ``y``."""
        return 0.5 * self.period * (self.whole_periods - 1) * (y + 1.0)


@dataclass(frozen=True)
class OscillatoryIntegrand:
    """An integrand ``F(x, z, omega)`` with ``z = exp(i omega x)`` supplied by the caller.

    ``func`` must accept numpy arrays for ``x`` and ``z`` and must take the
    phase from ``z``; it must never recompute ``exp(i omega x)`` from ``x``.
    """

    func: object
    name: str = "F"

    def __call__(self, x, z, omega):
        return self.func(x, z, omega)


def _as_integrand(F):
    return F if isinstance(F, OscillatoryIntegrand) else OscillatoryIntegrand(F)


def decompose(omega):
    """Split ``[0, 1]`` into whole periods of ``exp(i omega x)`` and a remainder.

    Raises
    ------
    FrequencyTooLow
        If ``omega < 4 pi``; use :func:`fallback_integrate` there.
    """
    omega = float(omega)
    if not omega >= MIN_OMEGA:
        raise FrequencyTooLow(
            f"omega={omega!r} < 4*pi; the integrand is not highly oscillatory, "
            "use fallback_integrate"
        )
    periods = omega / TWO_PI
    n = math.floor(periods)
    alpha = periods - n
    if 1.0 - alpha <= min(_SNAP * periods, _SNAP_CAP):
        n, alpha = n + 1, 0.0
    return Decomposition(omega, TWO_PI / omega, int(n), alpha)


def _phase_integrand(F, d, y):
    x0 = d.slot_start(y)
    T = d.period
    omega = d.omega

    def g(t):
        return F(T * t + x0, np.exp(1j * TWO_PI * t), omega)

    return g


def inner_integral(F, d, y, upper=1.0, method=Adaptive()):
    """Inner integral ``I_upper(y)`` over (a fraction of) one rescaled period."""
    if not 0.0 < upper <= 1.0:
        raise InvalidParameter(f"upper limit must be in (0, 1], got {upper}")
    F = _as_integrand(F)
    return integrate_with(method, _phase_integrand(F, d, y), 0.0, upper)


def _remainder(F, d, method):
    if d.remainder_fraction == 0.0:
        return None
    return inner_integral(F, d, d.remainder_node, d.remainder_fraction, method)


def _combine(slot_results, slot_weights, remainder, T):
    value = 0.0j
    err = 0.0
    evals = 0
    converged = True
    for w, r in zip(slot_weights, slot_results):
        value += w * r.value
        err += abs(w) * r.error_estimate
        evals += r.evaluations
        converged = converged and r.converged
    if remainder is not None:
        value += T * remainder.value
        err += T * remainder.error_estimate
        evals += remainder.evaluations
        converged = converged and remainder.converged
    return QuadResult(value, err, evals, converged)


def integrate(F, omega, order=6, method=Adaptive(), config=RootConfig()):
    """Frequency-uniform quadrature of ``int_0^1 F(x, exp(i omega x); omega) dx``.

    Parameters
    ----------
    F : OscillatoryIntegrand or callable ``(x, z, omega) -> complex``
    omega : float
        Frequency, at least ``4 pi``.
    order : int
        Number of Gauss-summation nodes ``n``; must be below ``N``.
    method : FixedGauss or Adaptive
        Quadrature for the inner one-period integrals.
    config : RootConfig
        Root-finder settings for building the summation rule.

    Returns
    -------
    QuadResult
        ``error_estimate`` propagates the inner errors only; the Gauss-sum
        truncation error is not estimated.

    Raises
    ------
    FrequencyTooLow, InvalidOrder
    """
    F = _as_integrand(F)
    d = decompose(omega)
    N = d.whole_periods
    if order < 1 or order >= N:
        raise InvalidOrder(
            f"order={order} needs 1 <= order <= N - 1 = {N - 1} at omega={omega:g}; "
            "lower the order or use fallback_integrate"
        )
    rule = cached_rule(N, order, config)
    scale = 0.5 * N * d.period
    # slots are independent; evaluated in node order for a reproducible reduction
    slots = [inner_integral(F, d, float(s), 1.0, method) for s in rule.nodes]
    return _combine(slots, scale * rule.weights, _remainder(F, d, method), d.period)


def riemann_sum_approx(F, omega, method=Adaptive()):
    """Exact period decomposition ``T sum_j I_1(x_j) + T I_alpha(x_N)``.

    Evaluates all ``N`` inner integrals, so the cost grows linearly with
    ``omega``; useful as an oracle for :func:`integrate`.
    """
    F = _as_integrand(F)
    d = decompose(omega)
    N = d.whole_periods
    slots = [
        inner_integral(F, d, -1.0 + 2.0 * j / (N - 1), 1.0, method) for j in range(N)
    ]
    return _combine(slots, np.full(N, d.period), _remainder(F, d, method), d.period)


def continuum_approx(F, omega, order=6, method=Adaptive()):
    """Baseline that replaces the slot sum by an integral over the slot coordinate.

    Uses ``2 T sum_j I_1(x_j) ~ int_{-1}^{1} I_1(y) dy`` with the right side
    computed by ``order``-point Gauss-Legendre.  The replacement carries an
    ``O(1/omega)`` error, which :func:`integrate` avoids.
    """
    F = _as_integrand(F)
    d = decompose(omega)
    y, w = legendre_rule(order)
    slots = [inner_integral(F, d, float(s), 1.0, method) for s in y]
    return _combine(slots, 0.5 * w, _remainder(F, d, method), d.period)


def fallback_integrate(F, omega, method=Adaptive()):
    """Direct quadrature of ``x -> F(x, exp(i omega x), omega)`` on [0, 1].

    Intended for ``omega < 4 pi``, where no decomposition is needed.
    """
    if not omega > 0:
        raise InvalidParameter(f"omega must be > 0, got {omega}")
    F = _as_integrand(F)
    omega = float(omega)

    def g(x):
        return F(x, np.exp(1j * omega * x), omega)

    return integrate_with(method, g, 0.0, 1.0)
