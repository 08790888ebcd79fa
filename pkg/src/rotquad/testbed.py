"""
Test problems with closed-form answers.

``paper_problem(a)`` is

    F(x, z; omega, a) = (2 x - omega Im z) / (2 sqrt(a + x^2 + Re z)),

the derivative of ``sqrt(a + x^2 + cos(omega x))`` when ``z = exp(i omega x)``,
so the exact value is ``sqrt(a + 1 + cos omega) - sqrt(a + 1)``.  Its
one-period inner integral also has a closed form.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameter
from .inner import adaptive
from .oscillatory import OscillatoryIntegrand, decompose

__all__ = [
    "TestProblem",
    "paper_problem",
    "product_phase_problem",
    "constant_problem",
    "brute_force_reference",
    "parse_problem",
]


@dataclass(frozen=True)
class TestProblem:
    __test__ = False  # not a pytest class

    integrand: OscillatoryIntegrand
    exact_value: object = None
    inner_closed_form: object = None
    name: str = ""
    parameters: dict = field(default_factory=dict)


def paper_problem(a):
    """The square-root test problem; ``a = 1`` puts a pole next to the contour."""
    if not a >= 1:
        raise InvalidParameter(f"paper problem needs a >= 1, got {a}")
    a = float(a)

    def F(x, z, omega):
        return (2.0 * x - omega * np.imag(z)) / (2.0 * np.sqrt(a + x * x + np.real(z)))

    def exact(omega):
        return math.sqrt(a + 1.0 + math.cos(omega)) - math.sqrt(a + 1.0)

    def inner(y, omega):
        N = decompose(omega).whole_periods
        y = np.asarray(y, dtype=float)
        u = (N - 1) * y
        c = (a + 1.0) * omega * omega
        value = (
            2.0 * math.pi * (u + N)
            / (
                np.sqrt(c + (math.pi * (N - 1) * (y + 1.0)) ** 2)
                + np.sqrt(c + (math.pi * (u + N + 1)) ** 2)
            )
        )
        return value[()] if value.ndim == 0 else value

    return TestProblem(
        OscillatoryIntegrand(F, f"paper:a={a:g}"), exact, inner, f"paper:a={a:g}", {"a": a}
    )


def _poly_phase_moment(coeffs, omega):
    # int_0^1 x^k e^{i omega x} dx = (e^{i omega} - k J_{k-1}) / (i omega); stable for omega >> k
    e = complex(math.cos(omega), math.sin(omega))
    iw = 1j * omega
    J = (e - 1.0) / iw
    total = coeffs[0] * J
    for k in range(1, len(coeffs)):
        J = (e - k * J) / iw
        total += coeffs[k] * J
    return total


def product_phase_problem(poly_coeffs):
    """``F(x, z) = f(x) z`` with ``f(x) = sum_k c_k x^k`` (ascending coefficients)."""
    coeffs = tuple(float(c) for c in poly_coeffs)
    if not coeffs:
        raise InvalidParameter("need at least one polynomial coefficient")
    poly = np.polynomial.Polynomial(coeffs)

    def F(x, z, omega):
        return poly(x) * z

    def exact(omega):
        return _poly_phase_moment(coeffs, float(omega))

    name = "polyphase:" + ",".join(f"{c:g}" for c in coeffs)
    return TestProblem(OscillatoryIntegrand(F, name), exact, None, name, {"coeffs": coeffs})


def constant_problem(value=1.0):
    c = float(value)

    def F(x, z, omega):
        return np.full(np.shape(x), c)

    return TestProblem(
        OscillatoryIntegrand(F, "const"), lambda omega: c, lambda y, omega: c, "const", {"c": c}
    )


def brute_force_reference(F, omega, abs_tol=1e-11):
    """Adaptive quadrature straight over [0, 1], resolving every period.

    The panel budget grows like ``omega``; only practical up to ``omega ~ 1e4``.
    """
    if not abs_tol > 0:
        raise InvalidParameter("abs_tol must be > 0")
    omega = float(omega)
    budget = 64 + 8 * math.ceil(omega / (2.0 * math.pi))

    def g(x):
        return F(x, np.exp(1j * omega * x), omega)

    return adaptive(g, 0.0, 1.0, abs_tol=abs_tol, rel_tol=abs_tol, max_subdivisions=budget)


def parse_problem(text):
    """Parse ``paper:a=<v>``, ``polyphase:<c0,c1,...>`` or ``const``."""
    text = text.strip()
    kind, _, arg = text.partition(":")
    try:
        if kind == "paper":
            key, _, val = arg.partition("=")
            if key.strip() != "a":
                raise ValueError("expected a=<value>")
            return paper_problem(float(val))
        if kind == "polyphase":
            return product_phase_problem([float(c) for c in arg.split(",") if c.strip()])
        if kind == "const" and not arg:
            return constant_problem()
    except ValueError as exc:
        raise InvalidParameter(f"bad problem {text!r}: {exc}") from None
    raise InvalidParameter(f"unknown problem {text!r}; expected paper:a=<v>, polyphase:<c0,...>, const")
