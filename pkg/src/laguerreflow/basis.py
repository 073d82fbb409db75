"""Laguerre and scaled-Hermite families, the lowering operator, and its heat flow.

The central operator is L = x*d^2/dx^2 + (alpha+1)*d/dx, which sends x^k to
k*(k+alpha)*x^(k-1) and therefore lowers degree by exactly one. On polynomials
its exponential exp(-h*L) is a finite sum, so the flow is computed exactly
over the rationals for any rational time h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ratpoly import Poly, RationalLike, to_rational


@dataclass(frozen=True)
class AlphaParam:
    """The nonnegative rational parameter of the associated Laguerre family."""

    value: Fraction

    def __init__(self, value: RationalLike):
        v = to_rational(value)
        if v < 0:
            raise ValueError(f"alpha must be nonnegative, got {v}")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class XiParam:
    """Rational scale of the Hermite family (and root location in flow windows).

    Any rational is allowed here; operations that need xi > 0 (the Gaussian
    weight, full real-rootedness of the family) check it themselves.
    """

    value: Fraction

    def __init__(self, value: RationalLike):
        object.__setattr__(self, "value", to_rational(value))


def generalized_binomial(top: Fraction, k: int) -> Fraction:
    """Binomial coefficient C(top, k) = top*(top-1)*...*(top-k+1) / k!.

    Computed as an explicit rational product; top may be any rational.
    """
    if k < 0:
        raise ValueError("binomial index must be nonnegative")
    num = Fraction(1)
    for j in range(k):
        num *= top - j
    return num / math.factorial(k)


def laguerre(n: int, alpha: AlphaParam) -> Poly:
    """Associated Laguerre polynomial of degree n with exact coefficients.

    L_n(x) = sum_{i=0}^{n} (-1)^i * C(n+alpha, n-i) * x^i / i!
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a = alpha.value
    coeffs = []
    for i in range(n + 1):
        sign = -1 if i % 2 else 1
        coeffs.append(sign * generalized_binomial(n + a, n - i) / math.factorial(i))
    return Poly(coeffs)


def monic_laguerre(n: int, alpha: AlphaParam) -> Poly:
    """(-1)^n * n! * laguerre(n, alpha): the monic normalization."""
    sign = -1 if n % 2 else 1
    return laguerre(n, alpha) * Fraction(sign * math.factorial(n))


def scaled_hermite(k: int, xi: XiParam) -> Poly:
    """Image of x^k under exp(-xi * d^2/dx^2), a monic degree-k polynomial.

    The exponential series terminates because differentiation is nilpotent:
    H_k(x) = sum_{j=0}^{floor(k/2)} (-xi)^j * k! / (j! (k-2j)!) * x^(k-2j).
    """
    if k < 0:
        raise ValueError("degree must be nonnegative")
    x = xi.value
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k // 2 + 1):
        coeffs[k - 2 * j] = (
            (-x) ** j * Fraction(math.factorial(k), math.factorial(j) * math.factorial(k - 2 * j))
        )
    return Poly(coeffs)


def lambda_apply(f: Poly, alpha: AlphaParam) -> Poly:
    """Apply the lowering operator: x*f'' + (alpha+1)*f'.

    For nonconstant f of degree n the image has degree exactly n-1, since the
    leading coefficient maps c -> c*n*(n+alpha) and n*(n+alpha) > 0.
    """
    d1 = f.derivative()
    d2 = d1.derivative()
    return Poly.x() * d2 + d1 * (alpha.value + 1)


def heat_semigroup(f: Poly, alpha: AlphaParam, h: RationalLike) -> Poly:
    """Exact flow exp(-h*L) f, as the finite series sum_j (-h)^j L^j f / j!.

    The series stops after deg(f)+1 terms because each application of L
    lowers degree by one. Degree and leading coefficient are preserved.
    """
    step = to_rational(h)
    if f.is_zero or step == 0:
        return f
    acc = f
    power = f
    scale = Fraction(1)
    for j in range(1, f.degree() + 1):
        power = lambda_apply(power, alpha)
        if power.is_zero:
            break
        scale *= -step / j
        acc = acc + power * scale
    return acc


def laguerre_transform(f: Poly, alpha: AlphaParam, verify: bool = False) -> Poly:
    """Map sum a_i x^i to sum (-1)^i i! a_i L_i, i.e. x^n -> monic_laguerre(n).

    Computed as the Laguerre basis sum. With ``verify=True`` the result is
    recomputed as heat_semigroup(f, alpha, 1) and the two paths are required
    to agree exactly, as a built-in self-test.
    """
    result = Poly.zero()
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        result = result + laguerre(i, alpha) * (a * (-1 if i % 2 else 1) * math.factorial(i))
    if verify:
        flowed = heat_semigroup(f, alpha, Fraction(1))
        if flowed != result:
            raise ArithmeticError(
                "basis-sum and semigroup paths disagree; exact arithmetic is broken"
            )
    return result
