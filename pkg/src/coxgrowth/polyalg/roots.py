"""Certified real-root isolation with Sturm sequences over exact rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import IntPolynomial, poly_gcd, pseudo_remainder, squarefree_part

DEFAULT_WIDTH = Fraction(1, 2**40)


class NoPositiveRootError(ValueError):
    pass


@dataclass(frozen=True)
class RootInterval:
    """An interval (lo, hi) holding exactly one real root of its polynomial.

    ``lo == hi`` is used only when the root is an exactly located rational.
    """

    lo: Fraction
    hi: Fraction
    multiplicity_hint: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def sturm_chain(p: IntPolynomial) -> list:
    """Sturm sequence p, p', -rem, ... using sign-preserving primitive pseudo-remainders."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        r = pseudo_remainder(chain[-2], chain[-1])
        if r.is_zero():
            break
        r = -r
        c = abs(r.content())
        chain.append(IntPolynomial(x // c for x in r.coeffs))
    return [q for q in chain if not q.is_zero()]


def _variations_at(chain, x: Fraction) -> int:
    prev = 0
    count = 0
    for q in chain:
        s = q.sign_at(x)
        if s:
            if prev and s != prev:
                count += 1
            prev = s
    return count


def _variations_at_infinity(chain) -> int:
    prev = 0
    count = 0
    for q in chain:
        s = 1 if q.lc > 0 else -1
        if prev and s != prev:
            count += 1
        prev = s
    return count


def count_roots(chain, a: Fraction, b) -> int:
    """Distinct real roots in (a, b] of the square-free head of ``chain``; b may be None for +inf."""
    va = _variations_at(chain, a)
    vb = _variations_at_infinity(chain) if b is None else _variations_at(chain, b)
    return va - vb


def positive_root_bound(p: IntPolynomial) -> Fraction:
    """A power of two strictly above every positive root (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    bound = 1 + Fraction(m, lc)
    b = Fraction(1)
    while b <= bound:
        b *= 2
    return b


def isolate_smallest_positive_root(q: IntPolynomial, width=DEFAULT_WIDTH) -> RootInterval:
    """Certified enclosure of the smallest positive real root of q.

    The returned interval (lo, hi] contains exactly one root and there is no
    root in (0, lo]; both facts come from Sturm counts at exact rational points.
    """
    if q.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p = squarefree_part(q.strip_t())
    if p.degree < 1 or p.sign_variations() == 0:
        # Descartes: no sign change means no positive root
        raise NoPositiveRootError(f"{q} has no positive real root")
    chain = sturm_chain(p)
    lo = Fraction(0)
    hi = positive_root_bound(p)
    if count_roots(chain, lo, hi) == 0:
        raise NoPositiveRootError(f"{q} has no positive real root")
    # invariant: no root in (0, lo], at least one in (lo, hi]
    while count_roots(chain, lo, hi) > 1:
        mid = (lo + hi) / 2
        if count_roots(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    if p.sign_at(hi) == 0:
        return RootInterval(hi, hi, _multiplicity(q, hi, hi))
    s_lo = p.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return RootInterval(mid, mid, _multiplicity(q, mid, mid))
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    exact = _rational_root_in(p, lo, hi)
    if exact is not None:
        return RootInterval(exact, exact, _multiplicity(q, exact, exact))
    return RootInterval(lo, hi, _multiplicity(q, lo, hi))


def _rational_root_in(p: IntPolynomial, lo: Fraction, hi: Fraction):
    """The rational root of p in [lo, hi], if there is one.

    A rational root b/a of an integer polynomial has a dividing the leading
    coefficient, so its denominator is at most |lc|; once the interval is
    narrower than 1/lc^2 the best approximation with that bound is the only
    candidate.
    """
    lc = abs(p.lc)
    if (hi - lo) * lc * lc >= 1:
        return None
    cand = ((lo + hi) / 2).limit_denominator(lc)
    if lo <= cand <= hi and p.sign_at(cand) == 0:
        return cand
    return None


def refine(q: IntPolynomial, iv: RootInterval, width) -> RootInterval:
    """Shrink an isolating interval of a simple sign change by bisection."""
    if iv.exact:
        return iv
    p = squarefree_part(q.strip_t())
    lo, hi = iv.lo, iv.hi
    s_lo = p.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return RootInterval(mid, mid, iv.multiplicity_hint)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return RootInterval(lo, hi, iv.multiplicity_hint)


def _multiplicity(q: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """How many successive derivatives-gcds still vanish inside [lo, hi]."""
    m = 1
    g = q.strip_t()
    while True:
        g = poly_gcd(g, g.derivative())
        if g.degree < 1:
            return m
        if lo == hi:
            hit = g.sign_at(lo) == 0
        else:
            sf = squarefree_part(g)
            hit = count_roots(sturm_chain(sf), lo, hi) > 0
        if not hit:
            return m
        m += 1
