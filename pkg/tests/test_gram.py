import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rotquad.errors import DegreeTooHigh, IndexOutOfRange, InvalidPointCount
from rotquad.gram import (
    build_basis,
    equidistant_node,
    equidistant_nodes,
    evaluate,
    evaluate_with_derivative,
    leading_coefficient,
)


def ratio_closed_form(N, n):
    # a_n / a_{n-1}
    return (N - 1) / n * math.sqrt((4 * n * n - 1) / (N * N - n * n))


def leading_coefficient_factorial(N, n):
    mpmath.mp.dps = 50
    f = mpmath.factorial
    return float(
        mpmath.sqrt((2 * n + 1) * f(N - n - 1) / f(N + n))
        * f(2 * n) * mpmath.mpf(N - 1) ** n / (2**n * f(n) ** 2)
    )


def monic_orthogonal(N, m):
    """Exact monic orthogonal polynomials on the N nodes, by rational Gram-Schmidt."""
    xs = [Fraction(-1) + Fraction(2 * j, N - 1) for j in range(N)]

    def dot(p, q):
        return sum(np.polyval(p, x) * np.polyval(q, x) for x in xs)

    polys = []
    for k in range(m + 1):
        p = [Fraction(1)] + [Fraction(0)] * k
        for q in polys:
            c = dot(p, q) / dot(q, q)
            q_pad = [Fraction(0)] * (len(p) - len(q)) + q
            p = [a - c * b for a, b in zip(p, q_pad)]
        polys.append(p)
    return polys


def test_build_basis_examples():
    b = build_basis(3, 2)
    assert b.recurrence_coeffs[0] == pytest.approx(0.5 * math.sqrt(8 / 3), rel=1e-15)
    assert b.recurrence_coeffs[0] == pytest.approx(0.816497, abs=1e-6)
    assert b.recurrence_coeffs[1] == pytest.approx(math.sqrt(5 / 15), rel=1e-15)
    assert build_basis(2, 1).recurrence_coeffs == pytest.approx((1.0,), rel=1e-15)


def test_build_basis_errors():
    with pytest.raises(DegreeTooHigh):
        build_basis(5, 5)
    with pytest.raises(InvalidPointCount):
        build_basis(1, 1)


def test_equidistant_node():
    b = build_basis(5, 2)
    assert equidistant_node(b, 0) == -1.0
    assert equidistant_node(b, 4) == 1.0
    assert equidistant_node(b, 5) == 1.5
    for j in (-1, 6):
        with pytest.raises(IndexOutOfRange):
            equidistant_node(b, j)


def test_evaluate_examples():
    assert evaluate(build_basis(4, 3), 0, 0.37) == pytest.approx(0.5, rel=1e-15)
    b = build_basis(3, 2)
    for x in (math.sqrt(2 / 3), -math.sqrt(2 / 3)):
        assert abs(evaluate(b, 2, x)) <= 1e-14
    b = build_basis(5, 4)
    x = np.linspace(-1.3, 1.3, 17)
    np.testing.assert_allclose(evaluate(b, 3, x), -evaluate(b, 3, -x), rtol=0, atol=1e-15)
    with pytest.raises(DegreeTooHigh):
        evaluate(b, 5, 0.0)


def test_derivative_examples():
    b = build_basis(3, 2)
    for x in (-0.7, 0.0, 0.4):
        _, d = evaluate_with_derivative(b, 1, x)
        assert d == pytest.approx((1 / math.sqrt(3)) / 0.816496580927726, rel=1e-12)
        assert d == pytest.approx(0.707107, abs=1e-6)
    p, d = evaluate_with_derivative(build_basis(5, 3), 0, 0.9)
    assert p == pytest.approx(1 / math.sqrt(5), rel=1e-15) and d == 0.0

    b = build_basis(7, 4)
    h = 1e-6
    fd = (evaluate(b, 4, 0.3 + h) - evaluate(b, 4, 0.3 - h)) / (2 * h)
    assert evaluate_with_derivative(b, 4, 0.3)[1] == pytest.approx(fd, rel=1e-7)


def test_derivative_finite_differences_random():
    rng = np.random.default_rng(7)
    b = build_basis(40, 12)
    x = rng.uniform(-1, 1, 20)
    h = 1e-6
    for m in range(1, 13):
        _, d = evaluate_with_derivative(b, m, x)
        fd = (evaluate(b, m, x + h) - evaluate(b, m, x - h)) / (2 * h)
        scale = np.max(np.abs(d))
        assert np.max(np.abs(d - fd)) <= 1e-6 * scale


def test_leading_coefficient():
    assert leading_coefficient(build_basis(9, 3), 0) == pytest.approx(1 / 3, rel=1e-15)
    b = build_basis(6, 3)
    ratio = leading_coefficient(b, 2) / leading_coefficient(b, 1)
    assert 1 / ratio == pytest.approx(0.4 * math.sqrt(32 / 15), rel=1e-14)
    b = build_basis(20, 6)
    assert leading_coefficient(b, 5) == pytest.approx(leading_coefficient_factorial(20, 5), rel=1e-10)


@pytest.mark.parametrize("N", [2, 3, 7, 50, 1001, 10**4, 10**6])
def test_ratio_matches_closed_form(N):
    b = build_basis(N, min(N - 1, 16))
    for n in range(1, b.max_degree + 1):
        assert 1 / b.b(n) == pytest.approx(ratio_closed_form(N, n), rel=1e-13)
        assert b.b(n) > 0


@pytest.mark.parametrize("N", [4, 10, 50, 1000])
def test_orthonormality(N):
    m = min(12, N - 1)
    b = build_basis(N, m)
    P = np.array([evaluate(b, k, equidistant_nodes(N)) for k in range(m + 1)])
    assert np.max(np.abs(P @ P.T - np.eye(m + 1))) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(N=st.integers(2, 400), data=st.data())
def test_orthonormality_property(N, data):
    m = data.draw(st.integers(0, min(12, N - 1)))
    l = data.draw(st.integers(0, min(12, N - 1)))
    b = build_basis(N, max(1, min(12, N - 1)))
    x = equidistant_nodes(N)
    s = np.dot(evaluate(b, l, x), evaluate(b, m, x))
    assert abs(s - (l == m)) <= 1e-9


@settings(max_examples=60, deadline=None)
@given(N=st.integers(2, 10**6), x=st.floats(-1, 1), data=st.data())
def test_parity_property(N, x, data):
    b = build_basis(N, min(12, N - 1))
    m = data.draw(st.integers(0, b.max_degree))
    assert evaluate(b, m, -x) == pytest.approx((-1) ** m * evaluate(b, m, x), abs=1e-12)


@pytest.mark.parametrize("N", [3, 6, 9])
def test_degree_exact_against_rational_gram_schmidt(N):
    polys = monic_orthogonal(N, N - 1)
    b = build_basis(N, N - 1)
    x = np.linspace(-1.2, 1.2, 11)
    for m, p in enumerate(polys):
        assert len(p) == m + 1 and p[0] == 1  # degree exactly m
        exact = np.array([float(np.polyval(p, Fraction(t))) for t in x])
        np.testing.assert_allclose(evaluate(b, m, x) / leading_coefficient(b, m), exact, atol=1e-12)
