"""Exact symbolic verification of the orthogonality relations.

Every integral here is (polynomial) x (fixed weight), so linearity plus
closed-form monomial moments give exact answers: no quadrature, no floats.
Values are rational multiples of a single base constant per weight, kept as
an explicit tag so incompatible constants can never be summed by accident.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .basis import AlphaParam, XiParam, laguerre, scaled_hermite
from .ratpoly import Poly, format_rational


class MomentBase(enum.Enum):
    """Base constant a moment value multiplies."""

    GAMMA_ALPHA_PLUS_1 = "gamma_alpha_plus_1"  # Gamma(alpha+1)
    SQRT_PI_XI = "sqrt_pi_xi"  # sqrt(pi*xi)
    UNIT = "unit"


@dataclass(frozen=True)
class MomentValue:
    """Exact value of a weighted integral: ``coeff`` times the base constant.

    Values with different base tags are never added; a zero coefficient
    represents the zero value regardless of tag.
    """

    coeff: Fraction
    base: MomentBase

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __add__(self, other: "MomentValue") -> "MomentValue":
        if not isinstance(other, MomentValue):
            return NotImplemented
        if self.is_zero:
            return MomentValue(other.coeff, other.base if not other.is_zero else self.base)
        if other.is_zero:
            return self
        if self.base is not other.base:
            raise ValueError(f"cannot add values over {self.base.value} and {other.base.value}")
        return MomentValue(self.coeff + other.coeff, self.base)

    def scaled(self, s: Fraction) -> "MomentValue":
        return MomentValue(self.coeff * s, self.base)

    def to_json(self) -> dict:
        return {"coeff": format_rational(self.coeff), "base": self.base.value}


def double_factorial(n: int) -> int:
    """Product n * (n-2) * (n-4) * ...; empty product (n <= 0) is 1."""
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def laguerre_moment(m: int, alpha: AlphaParam) -> MomentValue:
    """Moment of x^m against x^alpha * e^(-x) on (0, inf).

    The value is Gamma(m+alpha+1), expressed via the Gamma recurrence as
    prod_{i=1}^{m} (alpha+i) times Gamma(alpha+1).
    """
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    coeff = Fraction(1)
    for i in range(1, m + 1):
        coeff *= alpha.value + i
    return MomentValue(coeff, MomentBase.GAMMA_ALPHA_PLUS_1)


def hermite_moment(m: int, xi: XiParam) -> MomentValue:
    """Moment of x^m against e^(-x^2/(4*xi)) on the whole line.

    Odd moments vanish by symmetry; for m = 2t the Gaussian with variance
    2*xi gives (2t-1)!! * (2*xi)^t times the total mass 2*sqrt(pi*xi).
    """
    if m < 0:
        raise ValueError("moment order must be nonnegative")
    if xi.value <= 0:
        raise ValueError(f"xi must be positive for an integrable weight, got {xi.value}")
    if m % 2:
        return MomentValue(Fraction(0), MomentBase.SQRT_PI_XI)
    t = m // 2
    coeff = 2 * double_factorial(2 * t - 1) * (2 * xi.value) ** t
    return MomentValue(coeff, MomentBase.SQRT_PI_XI)


def _weighted_integral(product: Poly, moment_of) -> MomentValue:
    value = moment_of(0).scaled(Fraction(0))  # zero with the right tag
    for j, c in enumerate(product.coeffs):
        if c == 0:
            continue
        value = value + moment_of(j).scaled(c)
    return value


def laguerre_inner(n: int, m: int, alpha: AlphaParam) -> MomentValue:
    """Inner product of the degree-n and degree-m Laguerre polynomials.

    Expands the product polynomial and sums exact monomial moments. The exact
    diagonal is prod_{i=1}^{n}(alpha+i) / n! in units of Gamma(alpha+1), and
    off-diagonal entries are exactly zero.
    """
    product = laguerre(n, alpha) * laguerre(m, alpha)
    return _weighted_integral(product, lambda j: laguerre_moment(j, alpha))


def hermite_inner(k: int, l: int, xi: XiParam) -> MomentValue:
    """Inner product of the degree-k and degree-l scaled Hermite polynomials.

    Off-diagonal entries are exactly zero; the computed diagonal is
    2 * k! * (2*xi)^k in units of sqrt(pi*xi).
    """
    if xi.value <= 0:
        raise ValueError(f"xi must be positive for an integrable weight, got {xi.value}")
    product = scaled_hermite(k, xi) * scaled_hermite(l, xi)
    return _weighted_integral(product, lambda j: hermite_moment(j, xi))


def hermite_diagonal_reference(k: int) -> Fraction:
    """Coefficient 2*k! of the nominal diagonal normalization, in units sqrt(pi*xi).

    The exactly computed diagonal is (2*xi)^k times this; the ratio is
    reported rather than patched over.
    """
    return Fraction(2 * math.factorial(k))
