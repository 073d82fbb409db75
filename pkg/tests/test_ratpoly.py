"""Exact polynomial kernel: construction, ring laws, division, serialization."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laguerreflow import Poly, format_rational, parse_poly_literal, poly_literal, to_rational

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=16)
polys = st.lists(rationals, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda f: not f.is_zero)


def test_to_rational_coercion():
    assert to_rational(3) == Fraction(3)
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational("-2") == Fraction(-2)
    assert to_rational(Fraction(1, 7)) == Fraction(1, 7)
    with pytest.raises(TypeError):
        to_rational(0.5)
    with pytest.raises(ValueError):
        to_rational("one half")


def test_format_rational():
    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(-5)) == "-5"
    assert format_rational(Fraction(0)) == "0"


def test_construction_normalizes_trailing_zeros():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]).is_zero
    assert Poly([]).is_zero
    assert not Poly([0, 1]).is_zero


def test_degree_and_leading():
    f = Poly([1, 0, Fraction(1, 2)])
    assert f.degree() == 2
    assert f.leading() == Fraction(1, 2)
    assert f.coeff(0) == 1 and f.coeff(1) == 0 and f.coeff(5) == 0
    with pytest.raises(ValueError):
        Poly.zero().degree()
    with pytest.raises(ValueError):
        Poly.zero().leading()


def test_constructors():
    assert Poly.x() == Poly([0, 1])
    assert Poly.one() == Poly([1])
    assert Poly.monomial(3, 2) == Poly([0, 0, 0, 2])
    assert Poly.constant("5/3") == Poly([Fraction(5, 3)])


def test_from_roots():
    f = Poly.from_roots([(2, 2)])
    assert f == Poly([4, -4, 1])
    g = Poly.from_roots([(1, 1), (-1, 1)], lead=3)
    assert g == Poly([-3, 0, 3])
    assert Poly.from_roots([], lead=7) == Poly.constant(7)
    with pytest.raises(ValueError):
        Poly.from_roots([(1, 0)])
    with pytest.raises(ValueError):
        Poly.from_roots([(1, 1)], lead=0)


def test_arithmetic_pins():
    f = Poly([1, 1])
    assert f * f == Poly([1, 2, 1])
    assert f + Poly([0, -1]) == Poly.one()
    assert f - f == Poly.zero()
    assert 2 * f == Poly([2, 2])
    assert f * Fraction(1, 2) == Poly([Fraction(1, 2), Fraction(1, 2)])
    assert f ** 3 == Poly([1, 3, 3, 1])
    assert f ** 0 == Poly.one()


def test_evaluation():
    f = Poly([2, 0, 1])
    assert f(0) == 2
    assert f(Fraction(1, 2)) == Fraction(9, 4)
    assert Poly.zero()(5) == 0


def test_derivative():
    assert Poly([5, 3, 0, 2]).derivative() == Poly([3, 0, 6])
    assert Poly.constant(4).derivative().is_zero
    assert Poly.zero().derivative().is_zero


def test_shift_and_scale_arg():
    f = Poly([0, 0, 1])
    assert f.shift(1) == Poly([1, 2, 1])
    assert f.scale_arg(2) == Poly([0, 0, 4])
    assert Poly([1, 1]).scale_arg(Fraction(1, 3)) == Poly([1, Fraction(1, 3)])


def test_divmod_exact():
    f = Poly([-2, 0, 1]) * Poly([3, 1]) + Poly([7])
    q, r = divmod(f, Poly([3, 1]))
    assert q * Poly([3, 1]) + r == f
    assert r.degree() == 0
    with pytest.raises(ZeroDivisionError):
        divmod(f, Poly.zero())


def test_gcd():
    f = Poly.from_roots([(1, 1), (2, 1)])
    g = Poly.from_roots([(1, 1), (3, 1)])
    assert f.gcd(g) == Poly([-1, 1])
    assert f.gcd(Poly.zero()) == f.monic()
    assert Poly([2]).gcd(f) == Poly.one()


def test_primitive():
    f = Poly([Fraction(-1, 3), Fraction(1, 2)])
    p = f.primitive()
    assert p == Poly([-2, 3])
    assert Poly([4, -2]).primitive() == Poly([2, -1])
    assert Poly([0, -4, -2]).primitive() == Poly([0, -2, -1])


def test_square_free():
    f = Poly.from_roots([(1, 3), (2, 1)], lead=5)
    assert f.square_free() == Poly.from_roots([(1, 1), (2, 1)])
    assert Poly.constant(9).square_free() == Poly.one()


def test_str():
    assert str(Poly([10, -8, 1])) == "x^2 - 8*x + 10"
    assert str(Poly.zero()) == "0"
    assert str(Poly([Fraction(1, 2)])) == "1/2"


def test_poly_literal_roundtrip():
    f = Poly([Fraction(10), Fraction(-8), Fraction(1)])
    lit = poly_literal(f)
    assert lit == {"coeffs": ["10", "-8", "1"]}
    assert parse_poly_literal(lit) == f
    assert parse_poly_literal(json.dumps(lit)) == f


def test_parse_roots_literal():
    f = parse_poly_literal('{"roots":[["2",2]],"lead":"1"}')
    assert f == Poly([4, -4, 1])
    g = parse_poly_literal({"roots": [["1/2", 1]], "lead": "-2"})
    assert g == Poly([1, -2])


def test_parse_literal_errors():
    with pytest.raises(ValueError):
        parse_poly_literal('{"coeffs":["1"],"roots":[["1",1]]}')
    with pytest.raises(ValueError):
        parse_poly_literal('{"roots":[["1",0]]}')
    with pytest.raises(ValueError):
        parse_poly_literal('{"roots":[["1",1]],"lead":"0"}')
    with pytest.raises(ValueError):
        parse_poly_literal('{"wrong":[]}')
    with pytest.raises(ValueError):
        parse_poly_literal('{"coeffs":["x"]}')


@given(polys, polys)
def test_add_commutes(f, g):
    assert f + g == g + f


@given(polys, polys, polys)
def test_mul_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)


@given(polys, polys, rationals)
def test_eval_is_ring_homomorphism(f, g, c):
    assert (f + g)(c) == f(c) + g(c)
    assert (f * g)(c) == f(c) * g(c)


@given(nonzero_polys, nonzero_polys)
def test_degree_of_product_adds(f, g):
    assert (f * g).degree() == f.degree() + g.degree()


@given(polys, polys)
def test_derivative_product_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(polys, rationals, rationals)
def test_shift_roundtrip_and_eval(f, c, x):
    assert f.shift(c).shift(-c) == f
    assert f.shift(c)(x) == f(x + c)


@given(polys, nonzero_polys)
def test_division_identity(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero or r.degree() < g.degree()


@settings(max_examples=50)
@given(nonzero_polys)
def test_primitive_is_integral_and_coprime(f):
    p = f.primitive()
    assert all(c.denominator == 1 for c in p.coeffs)
    assert math.gcd(*(abs(c.numerator) for c in p.coeffs)) == 1
    scale = f.leading() / p.leading()
    assert scale > 0
    assert p * scale == f


@settings(max_examples=50)
@given(nonzero_polys)
def test_square_free_divides_and_is_square_free(f):
    s = f.square_free()
    assert s.divides(f)
    assert s.gcd(s.derivative()) == Poly.one()


@given(polys)
def test_literal_roundtrip_property(f):
    assert parse_poly_literal(json.dumps(poly_literal(f))) == f
