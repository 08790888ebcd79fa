import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rotquad.chebyshev import truncation_error
from rotquad.errors import InvalidOrder
from rotquad.gauss_sum import apply, build_rule, cached_rule, direct_sum


def test_rule_examples():
    r = build_rule(3, 2)
    np.testing.assert_allclose(r.nodes, [-math.sqrt(2 / 3), math.sqrt(2 / 3)], atol=1e-15)
    np.testing.assert_allclose(r.weights, [1.0, 1.0], atol=1e-15)
    for N in (2, 7, 1000):
        r = build_rule(N, 1)
        assert r.nodes == pytest.approx([0.0]) and r.weights == pytest.approx([2.0], rel=1e-15)


def test_rule_exactness_N10():
    r = build_rule(10, 3)
    assert abs(apply(r, lambda x: x**5)) <= 1e-15
    assert abs(direct_sum(10, lambda x: x**5)) <= 1e-15
    assert apply(r, lambda x: x**4) == pytest.approx(direct_sum(10, lambda x: x**4), abs=1e-13)


def test_invalid_order():
    with pytest.raises(InvalidOrder):
        build_rule(5, 5)
    with pytest.raises(InvalidOrder):
        build_rule(5, 0)


def test_apply_examples():
    r = build_rule(50, 5)
    assert apply(r, lambda x: 3.5 - 1j) == pytest.approx(7.0 - 2j, rel=1e-14)
    assert abs(apply(r, lambda x: x)) <= 1e-13


def test_apply_analytic_function():
    # error is governed by 4 d_11 (pole at -2): ~2e-7, same size as Gauss-Legendre's
    G = lambda x: 1 / (2 + x)
    r = build_rule(100, 6)
    err = abs(apply(r, G) - direct_sum(100, G))
    assert err <= 4 * truncation_error(G, 11)
    assert err <= 5e-7


def test_direct_sum_examples():
    assert direct_sum(17, lambda x: np.ones_like(x)) == pytest.approx(2.0)
    assert direct_sum(2, lambda x: x**2) == pytest.approx(2.0)
    assert direct_sum(5, lambda x: x**2) == pytest.approx(1.0, rel=1e-15)
    assert direct_sum(5, lambda x: x**2, vectorized=False) == pytest.approx(1.0, rel=1e-15)


@pytest.mark.parametrize("N", [5, 17, 64, 1001])
def test_weight_invariants(N):
    for n in range(1, min(10, N - 1) + 1):
        r = build_rule(N, n)
        assert np.all(r.weights > 0)
        assert abs(r.weights.sum() - 2) <= 1e-12
        np.testing.assert_allclose(r.weights, r.weights[::-1], atol=1e-12)


@pytest.mark.parametrize("N", [5, 17, 64, 1001])
def test_not_exact_beyond_degree(N):
    for n in range(1, min(10, N - 1) + 1):
        r = build_rule(N, n)
        P = lambda x: x ** (2 * n)
        assert abs(apply(r, P) - direct_sum(N, P)) > 1e-8


@settings(max_examples=60, deadline=None)
@given(N=st.integers(3, 2000), data=st.data())
def test_exactness_property(N, data):
    n = data.draw(st.integers(1, min(10, N - 1)))
    coeffs = data.draw(st.lists(st.floats(-1, 1), min_size=2 * n, max_size=2 * n))
    P = np.polynomial.Polynomial(coeffs)
    exact = direct_sum(N, P)
    assert abs(apply(cached_rule(N, n), P) - exact) <= 1e-10 * (1 + abs(exact))


def test_rule_is_immutable_and_cached():
    r = cached_rule(40, 4)
    assert cached_rule(40, 4) is r
    with pytest.raises(ValueError):
        r.weights[0] = 0.0
