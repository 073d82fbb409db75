"""Exact real-root counting, certification, and isolation via Sturm chains.

Counts are sign-variation differences of the signed Euclidean remainder
sequence of (f, f'), so they are exact over the rationals. Intervals follow
the half-open convention: count_real_roots(f, lo, hi) counts distinct real
roots in (lo, hi]. Chain elements are stored as primitive integer-coefficient
polynomials (a positive rescaling, which preserves every evaluation sign) and
evaluated with pure integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .ratpoly import Poly, RationalLike, approx_str, format_rational, to_rational

DEFAULT_WIDTH = Fraction(1, 2**20)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_at(ints: tuple[int, ...], num: int, den: int) -> int:
    """Sign of the integer polynomial at num/den (den > 0), by scaled Horner."""
    acc = ints[-1]
    dp = 1
    for c in reversed(ints[:-1]):
        dp *= den
        acc = acc * num + c * dp
    return _sign(acc)


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder chain f, f', -rem(f, f'), ... up to positive scaling.

    Consecutive elements have strictly decreasing degrees and the last one is
    a gcd-associate of gcd(f, f'). Only evaluation signs feed the counts, so
    every element is stored as its primitive (integer, coprime) rescaling.
    """

    polys: tuple[Poly, ...]

    @cached_property
    def _ints(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c.numerator for c in p.coeffs) for p in self.polys)

    def variations_at(self, x: RationalLike) -> int:
        point = to_rational(x)
        num, den = point.numerator, point.denominator
        return _variations([_sign_at(ints, num, den) for ints in self._ints])

    def variations_at_infinity(self, positive: bool) -> int:
        signs = []
        for ints in self._ints:
            lead = _sign(ints[-1])
            if not positive and (len(ints) - 1) % 2:
                lead = -lead
            signs.append(lead)
        return _variations(signs)

    def count(self, lo: Optional[RationalLike], hi: Optional[RationalLike]) -> int:
        """Distinct real roots in (lo, hi]; None means the matching infinity."""
        v_lo = self.variations_at(lo) if lo is not None else self.variations_at_infinity(False)
        v_hi = self.variations_at(hi) if hi is not None else self.variations_at_infinity(True)
        return v_lo - v_hi


def sturm_chain(f: Poly) -> SturmChain:
    """Canonical signed-remainder chain of a nonzero polynomial."""
    if f.is_zero:
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    polys = [f.primitive()]
    d = f.derivative()
    if not d.is_zero:
        polys.append(d.primitive())
        while True:
            r = polys[-2].rem(polys[-1])
            if r.is_zero:
                break
            polys.append((-r).primitive())
    return SturmChain(tuple(polys))


def _validated_bounds(
    lo: Optional[RationalLike], hi: Optional[RationalLike]
) -> tuple[Optional[Fraction], Optional[Fraction]]:
    lo_q = to_rational(lo) if lo is not None else None
    hi_q = to_rational(hi) if hi is not None else None
    if lo_q is not None and hi_q is not None and not lo_q < hi_q:
        raise ValueError(f"empty interval: lo={lo_q} must be < hi={hi_q}")
    return lo_q, hi_q


def count_real_roots(
    f: Poly, lo: Optional[RationalLike] = None, hi: Optional[RationalLike] = None
) -> int:
    """Number of distinct real roots of f in (lo, hi]; None for an infinite end.

    Counting runs on the square-free part, so multiplicities never inflate the
    result and endpoints that happen to be multiple roots stay well-defined.
    """
    if f.is_zero:
        raise ValueError("root counting on the zero polynomial is undefined")
    lo_q, hi_q = _validated_bounds(lo, hi)
    return sturm_chain(f.square_free()).count(lo_q, hi_q)


def count_real_roots_open(f: Poly, lo: RationalLike, hi: RationalLike) -> int:
    """Distinct real roots in the open interval (lo, hi), finite endpoints."""
    if f.is_zero:
        raise ValueError("root counting on the zero polynomial is undefined")
    lo_q, hi_q = _validated_bounds(lo, hi)
    g = f.square_free()
    chain = sturm_chain(g)
    n = chain.count(lo_q, hi_q)
    if g(hi_q) == 0:
        n -= 1
    return n


def cauchy_root_bound(f: Poly) -> Fraction:
    """Strict bound M = 1 + max|a_i/a_n|: every root satisfies |root| < M."""
    if f.is_zero or f.degree() == 0:
        raise ValueError("root bound needs a nonconstant polynomial")
    lead = abs(f.leading())
    others = [abs(c) / lead for c in f.coeffs[:-1]]
    return 1 + (max(others) if others else Fraction(0))


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open rational interval (lo, hi] containing exactly one distinct root."""

    lo: Fraction
    hi: Fraction

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def approx(self, digits: int = 12) -> str:
        """Decimal midpoint, display only."""
        return approx_str(self.midpoint(), digits)

    def to_json(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi)]


def _isolate_on_chain(g: Poly, chain: SturmChain, width: Fraction) -> tuple[IsolatingInterval, ...]:
    """Bisection isolation for a square-free g with its prepared chain."""
    g_ints = chain._ints[0]
    total = chain.count(None, None)
    if total == 0:
        return ()
    bound = cauchy_root_bound(g)
    found: list[IsolatingInterval] = []
    stack: list[tuple[Fraction, Fraction, int]] = [(-bound, bound, total)]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 1 and hi - lo <= width:
            found.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        # A bisection point landing exactly on a root is nudged deterministically.
        delta = (hi - lo) / 4
        while _sign_at(g_ints, mid.numerator, mid.denominator) == 0:
            mid += delta
            delta /= 2
        left = chain.count(lo, mid)
        if left:
            stack.append((lo, mid, left))
        if cnt - left:
            stack.append((mid, hi, cnt - left))
    found.sort(key=lambda iv: iv.lo)
    return tuple(found)


def isolate_roots(f: Poly, width: RationalLike = DEFAULT_WIDTH) -> tuple[IsolatingInterval, ...]:
    """Disjoint sorted intervals, one per distinct real root, each at most ``width`` wide."""
    if f.is_zero or f.degree() == 0:
        raise ValueError("root isolation needs a nonconstant polynomial")
    w = to_rational(width)
    if w <= 0:
        raise ValueError("isolation width must be positive")
    g = f.square_free()
    return _isolate_on_chain(g, sturm_chain(g), w)


@dataclass(frozen=True)
class RootCertificate:
    """Exact verdict on the real-root structure of a polynomial.

    ``distinct_real_roots`` counts over the whole line; the polynomial is
    real-rooted iff that count equals the degree of its square-free part, and
    simple iff the square-free part is the whole (normalized) polynomial.
    """

    degree: int
    distinct_real_roots: int
    is_real_rooted: bool
    is_simple: bool
    intervals: tuple[IsolatingInterval, ...]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "distinct_real_roots": self.distinct_real_roots,
            "real_rooted": self.is_real_rooted,
            "simple": self.is_simple,
            "intervals": [iv.to_json() for iv in self.intervals],
        }


def certify(f: Poly, width: RationalLike = DEFAULT_WIDTH) -> RootCertificate:
    """Certify real-rootedness and simplicity, with isolating intervals."""
    if f.is_zero or f.degree() == 0:
        raise ValueError("certification needs a nonconstant polynomial")
    w = to_rational(width)
    if w <= 0:
        raise ValueError("isolation width must be positive")
    g = f.square_free()
    chain = sturm_chain(g)
    distinct = chain.count(None, None)
    return RootCertificate(
        degree=f.degree(),
        distinct_real_roots=distinct,
        is_real_rooted=distinct == g.degree(),
        is_simple=g.degree() == f.degree(),
        intervals=_isolate_on_chain(g, chain, w),
    )


def largest_root_enclosure(
    f: Poly, width: RationalLike = DEFAULT_WIDTH
) -> tuple[Fraction, Fraction]:
    """Rational enclosure [lo, hi], hi - lo <= width, of max |root| over real roots.

    Starts from the Cauchy bound of f and bisects on symmetric root counts.
    Raises if f has no real roots (the radius is undefined there).
    """
    if f.is_zero or f.degree() == 0:
        raise ValueError("largest-root enclosure needs a nonconstant polynomial")
    w = to_rational(width)
    if w <= 0:
        raise ValueError("enclosure width must be positive")
    g = f.square_free()
    chain = sturm_chain(g)
    total = chain.count(None, None)
    if total == 0:
        raise ValueError("polynomial has no real roots: largest-root radius is undefined")

    def inside(r: Fraction) -> int:
        # distinct roots in [-r, r]
        return chain.count(-r, r) + (1 if g(-r) == 0 else 0)

    if g(0) == 0 and total == 1:
        return Fraction(0), Fraction(0)
    lo, hi = Fraction(0), cauchy_root_bound(f)
    while hi - lo > w:
        mid = (lo + hi) / 2
        if inside(mid) == total:
            hi = mid
        else:
            lo = mid
    return lo, hi
