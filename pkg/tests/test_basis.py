"""Weighted-family polynomials, the lowering operator, and the heat flow."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laguerreflow import (
    AlphaParam,
    Poly,
    XiParam,
    generalized_binomial,
    heat_semigroup,
    laguerre,
    laguerre_transform,
    lambda_apply,
    monic_laguerre,
    scaled_hermite,
)

ALPHAS = [AlphaParam(0), AlphaParam(Fraction(1, 2)), AlphaParam(2), AlphaParam(Fraction(7, 3))]
XIS = [XiParam(Fraction(1, 2)), XiParam(1), XiParam(3)]

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=16)
polys = st.lists(rationals, max_size=6).map(Poly)
steps = st.fractions(min_value=-4, max_value=4, max_denominator=12)


def test_alpha_param_rejects_negative():
    with pytest.raises(ValueError):
        AlphaParam(-1)
    with pytest.raises(ValueError):
        AlphaParam(Fraction(-1, 7))
    assert AlphaParam("1/2").value == Fraction(1, 2)


def test_xi_param_allows_any_rational():
    assert XiParam(-2).value == Fraction(-2)


def test_generalized_binomial():
    assert generalized_binomial(Fraction(4), 2) == 6
    assert generalized_binomial(Fraction(5, 2), 2) == Fraction(15, 8)
    assert generalized_binomial(Fraction(3), 0) == 1


def test_laguerre_pins():
    a0 = AlphaParam(0)
    assert laguerre(0, a0) == Poly.one()
    assert laguerre(1, a0) == Poly([1, -1])
    assert laguerre(2, a0) == Poly([1, -2, Fraction(1, 2)])
    a = Fraction(1, 2)
    assert laguerre(1, AlphaParam(a)) == Poly([a + 1, -1])


def test_laguerre_degree_2_general():
    for alpha in ALPHAS:
        a = alpha.value
        expected = Poly(
            [generalized_binomial(a + 2, 2), -(a + 2), Fraction(1, 2)]
        )
        assert laguerre(2, alpha) == expected


def test_laguerre_three_term_recurrence():
    for alpha in ALPHAS:
        a = alpha.value
        for n in range(1, 13):
            lhs = (n + 1) * laguerre(n + 1, alpha)
            rhs = Poly([2 * n + 1 + a, -1]) * laguerre(n, alpha) - (n + a) * laguerre(
                n - 1, alpha
            )
            assert lhs == rhs


def test_monic_laguerre_pins():
    a0 = AlphaParam(0)
    assert monic_laguerre(2, a0) == Poly([2, -4, 1])
    for alpha in ALPHAS:
        a = alpha.value
        assert monic_laguerre(2, alpha) == Poly([(a + 1) * (a + 2), -2 * (a + 2), 1])
        assert monic_laguerre(7, alpha).leading() == 1


def test_scaled_hermite_pins():
    xi = XiParam(1)
    assert scaled_hermite(0, xi) == Poly.one()
    assert scaled_hermite(1, xi) == Poly.x()
    assert scaled_hermite(2, xi) == Poly([-2, 0, 1])
    assert scaled_hermite(3, xi) == Poly([0, -6, 0, 1])
    assert scaled_hermite(2, XiParam(Fraction(1, 2))) == Poly([-1, 0, 1])


def test_scaled_hermite_recurrence():
    for xi in XIS:
        s = xi.value
        for k in range(1, 13):
            lhs = scaled_hermite(k + 1, xi)
            rhs = Poly.x() * scaled_hermite(k, xi) - 2 * s * k * scaled_hermite(k - 1, xi)
            assert lhs == rhs


def test_scaled_hermite_is_gaussian_flow_of_monomial():
    # H_k arises by flowing x^k under the plain second-derivative heat flow.
    from math import factorial

    for xi in XIS:
        s = xi.value
        for k in range(0, 9):
            expected = Poly.zero()
            for j in range(0, k // 2 + 1):
                c = (-s) ** j * Fraction(factorial(k), factorial(j) * factorial(k - 2 * j))
                expected = expected + Poly.monomial(k - 2 * j, c)
            assert scaled_hermite(k, xi) == expected


def test_lambda_apply_monomials():
    for alpha in ALPHAS:
        a = alpha.value
        assert lambda_apply(Poly.one(), alpha).is_zero
        for k in range(1, 11):
            assert lambda_apply(Poly.monomial(k), alpha) == Poly.monomial(k - 1, k * (k + a))


@given(polys, polys)
def test_lambda_apply_is_linear(f, g):
    alpha = AlphaParam(Fraction(1, 2))
    assert lambda_apply(f + g, alpha) == lambda_apply(f, alpha) + lambda_apply(g, alpha)


def test_heat_semigroup_pins():
    a0 = AlphaParam(0)
    h = Fraction(1, 100)
    assert heat_semigroup(Poly([0, -3, 1]), a0, h) == Poly(
        [Fraction(151, 5000), Fraction(-76, 25), 1]
    )
    t = Fraction(1, 3)
    assert heat_semigroup(Poly([0, 0, 1]), a0, t) == Poly([2 * t * t, -4 * t, 1])


def test_heat_semigroup_identity_at_zero():
    f = Poly([1, 2, 3])
    assert heat_semigroup(f, AlphaParam(1), 0) == f
    assert heat_semigroup(Poly.zero(), AlphaParam(1), 5).is_zero


@settings(max_examples=60)
@given(polys.filter(lambda f: not f.is_zero), steps)
def test_heat_semigroup_preserves_degree_and_lead(f, h):
    alpha = AlphaParam(Fraction(3, 2))
    g = heat_semigroup(f, alpha, h)
    assert g.degree() == f.degree()
    assert g.leading() == f.leading()


@settings(max_examples=60)
@given(polys, polys, steps)
def test_heat_semigroup_is_linear(f, g, h):
    alpha = AlphaParam(2)
    assert heat_semigroup(f + g, alpha, h) == heat_semigroup(f, alpha, h) + heat_semigroup(
        g, alpha, h
    )


def test_flow_of_monomial_is_monic_laguerre():
    for alpha in ALPHAS:
        for n in range(0, 13):
            assert heat_semigroup(Poly.monomial(n), alpha, 1) == monic_laguerre(n, alpha)


def test_transform_pins():
    a0 = AlphaParam(0)
    assert laguerre_transform(Poly.from_roots([(2, 2)]), a0) == Poly([10, -8, 1])
    assert laguerre_transform(Poly.from_roots([(-2, 2)]), a0) == Poly([2, 0, 1])
    assert laguerre_transform(Poly.zero(), a0).is_zero
    assert laguerre_transform(Poly.constant(5), a0) == Poly.constant(5)


def test_transform_degree_one():
    for alpha in ALPHAS:
        a = alpha.value
        for c in [Fraction(0), Fraction(3), Fraction(-7, 2)]:
            assert laguerre_transform(Poly([c, 1]), alpha) == Poly([c - (1 + a), 1])


@settings(max_examples=60)
@given(polys)
def test_transform_agrees_with_unit_time_flow(f):
    alpha = AlphaParam(Fraction(1, 2))
    assert laguerre_transform(f, alpha, verify=True) == heat_semigroup(f, alpha, 1)
