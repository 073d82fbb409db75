"""Exact dense univariate polynomial arithmetic over the rationals.

A polynomial is a tuple of ``fractions.Fraction`` coefficients in ascending
degree order with no trailing zeros; the zero polynomial is the empty tuple.
Every operation is exact: no floating point enters anywhere, so polynomial
identity tests are fully reliable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, "p/q" / integer string, or Fraction to a Fraction.

    Floats are rejected: they would silently smuggle rounding error into a
    kernel whose whole point is exactness.
    """
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted; pass a Fraction or 'p/q' string")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational literal {value!r}") from exc
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q" (or "p" for integers), the CLI wire format."""
    return str(q)


def approx_str(q: Fraction, digits: int = 12) -> str:
    """Decimal approximation of a rational, for display only."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


@dataclass(frozen=True)
class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x^i. Instances are immutable and
    normalized on construction: the leading coefficient is nonzero, and the
    zero polynomial is the empty tuple (its degree is deliberately undefined).
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly((1,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    @staticmethod
    def constant(c: RationalLike) -> "Poly":
        return Poly((to_rational(c),))

    @staticmethod
    def monomial(n: int, c: RationalLike = 1) -> "Poly":
        """c * x^n."""
        if n < 0:
            raise ValueError("monomial degree must be nonnegative")
        return Poly((0,) * n + (to_rational(c),))

    @staticmethod
    def from_roots(roots: Sequence[tuple[RationalLike, int]], lead: RationalLike = 1) -> "Poly":
        """lead * prod (x - r)^m over the given (root, multiplicity) pairs."""
        if to_rational(lead) == 0:
            raise ValueError("leading coefficient must be nonzero")
        result = Poly.constant(lead)
        for root, mult in roots:
            if mult < 1:
                raise ValueError("root multiplicity must be a positive integer")
            factor = Poly((-to_rational(root), 1))
            for _ in range(mult):
                result = result * factor
        return result

    # -- basic structure ----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> int:
        """Degree of a nonzero polynomial; the zero polynomial has none."""
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x^i (zero beyond the degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", RationalLike]) -> "Poly":
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        s = to_rational(other)
        return Poly(tuple(c * s for c in self.coeffs))

    def __rmul__(self, other: RationalLike) -> "Poly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        """Evaluate at a rational point by Horner's rule."""
        point = to_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    # -- calculus and substitutions -----------------------------------

    def derivative(self) -> "Poly":
        """Exact formal derivative."""
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def shift(self, c: RationalLike) -> "Poly":
        """Compose with x -> x + c, i.e. return f(x + c)."""
        offset = to_rational(c)
        if offset == 0 or not self.coeffs:
            return self
        # Horner on f with the shifted indeterminate (x + c).
        result = Poly.zero()
        xc = Poly((offset, 1))
        for coeff in reversed(self.coeffs):
            result = result * xc + Poly.constant(coeff)
        return result

    def scale_arg(self, s: RationalLike) -> "Poly":
        """Return f(s * x)."""
        factor = to_rational(s)
        power = Fraction(1)
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power *= factor
        return Poly(out)

    # -- euclidean structure -------------------------------------------

    def __divmod__(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        """Exact polynomial division: self = q * divisor + r with deg r < deg divisor."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero or len(self.coeffs) < len(divisor.coeffs):
            return Poly.zero(), self
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dn = len(dcs) - 1
        lead = dcs[-1]
        quot = [Fraction(0)] * (len(rem) - dn)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dn] = q
            for j in range(dn + 1):
                rem[i - dn + j] -= q * dcs[j]
        return Poly(quot), Poly(rem)

    def rem(self, divisor: "Poly") -> "Poly":
        return divmod(self, divisor)[1]

    def divides(self, other: "Poly") -> bool:
        """True iff self divides other exactly (zero remainder)."""
        if self.is_zero:
            return other.is_zero
        return divmod(other, self)[1].is_zero

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("the zero polynomial cannot be made monic")
        return self * (1 / self.leading())

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor (Euclid over the rationals)."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.rem(b)
        if a.is_zero:
            return a
        return a.monic()

    def primitive(self) -> "Poly":
        """Scale by a positive rational so coefficients are coprime integers.

        Evaluation signs are unchanged, which is all Sturm counting needs;
        the integer form also keeps remainder-sequence coefficients small.
        """
        if self.is_zero:
            return self
        den_lcm = 1
        for c in self.coeffs:
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        nums = [int(c * den_lcm) for c in self.coeffs]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        return Poly([n // g for n in nums])

    def square_free(self) -> "Poly":
        """Monic f / gcd(f, f'): same distinct roots as f, all simple."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no square-free part")
        d = self.gcd(self.derivative())
        q, r = divmod(self, d)
        assert r.is_zero
        return q.monic()

    # -- display --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else f"{mag}*"
                term = f"{head}x" if i == 1 else f"{head}x^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


# -- JSON polynomial literals ------------------------------------------------
#
# Two accepted shapes, used by the CLI and test fixtures:
#   {"coeffs": ["a0", "a1", ...]}            ascending degree, rationals as strings
#   {"roots": [["r1", m1], ...], "lead": "c"} meaning c * prod (x - r_i)^{m_i}


def parse_poly_literal(literal: Union[str, dict]) -> Poly:
    """Parse a polynomial literal given as a JSON string or decoded object."""
    if isinstance(literal, str):
        try:
            obj = json.loads(literal)
        except json.JSONDecodeError as exc:
            raise ValueError(f"polynomial literal is not valid JSON: {exc}") from exc
    else:
        obj = literal
    if not isinstance(obj, dict):
        raise ValueError("polynomial literal must be a JSON object")
    if "coeffs" in obj and "roots" in obj:
        raise ValueError("polynomial literal must use either 'coeffs' or 'roots', not both")
    if "coeffs" in obj:
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list):
            raise ValueError("'coeffs' must be a list of rational strings")
        return Poly([to_rational(c) for c in coeffs])
    if "roots" in obj:
        roots = obj["roots"]
        if not isinstance(roots, list):
            raise ValueError("'roots' must be a list of [root, multiplicity] pairs")
        pairs = []
        for entry in roots:
            if not (isinstance(entry, (list, tuple)) and len(entry) == 2):
                raise ValueError("each root entry must be a [root, multiplicity] pair")
            root, mult = entry
            if not isinstance(mult, int) or mult < 1:
                raise ValueError("root multiplicity must be a positive integer")
            pairs.append((to_rational(root), mult))
        lead = to_rational(obj.get("lead", 1))
        if lead == 0:
            raise ValueError("leading coefficient must be nonzero")
        return Poly.from_roots(pairs, lead=lead)
    raise ValueError("polynomial literal needs a 'coeffs' or 'roots' key")


def poly_literal(f: Poly) -> dict:
    """Serialize a polynomial to its canonical coefficient-form literal."""
    return {"coeffs": [format_rational(c) for c in f.coeffs]}
