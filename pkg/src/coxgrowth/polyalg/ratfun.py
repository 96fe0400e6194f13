"""Reduced quotients of integer polynomials."""

from __future__ import annotations

from math import gcd

from .poly import IntPolynomial, exact_divide, poly_gcd


class RationalFunction:
    """num/den in lowest terms.

    Normal form: the gcd of num and den over Q is constant, both are integer
    polynomials, den = q * primitive(den) with q > 0, and num carries the
    remaining integer scalar. Two equal rational functions therefore have
    identical (num, den) pairs, so ``==`` is exact identity testing.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = IntPolynomial([1])
        num = _poly(num)
        den = _poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = IntPolynomial(), IntPolynomial([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            # g is primitive, so the quotients are integral (Gauss's lemma)
            num = exact_divide(num, g)
            den = exact_divide(den, g)
        cn, cd = num.content(), den.content()
        # num/den = (cn/cd) * pn/pd with pn, pd primitive and lc(pd) > 0
        pn, pd = num.primitive(), den.primitive()
        a, b = cn, cd
        if b < 0:
            a, b = -a, -b
        h = gcd(a, b)
        a //= h
        b //= h
        self.num = pn * a
        self.den = pd * b

    @classmethod
    def from_poly(cls, p) -> "RationalFunction":
        return cls(p, IntPolynomial([1]))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den.lc == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntPolynomial)):
            other = RationalFunction(other)
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __add__(self, other):
        other = _rat(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_rat(other))

    def __rsub__(self, other):
        return _rat(other) - self

    def __mul__(self, other):
        other = _rat(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _rat(other).reciprocal()

    def __rtruediv__(self, other):
        return _rat(other) * self.reciprocal()

    def reciprocal(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of the zero rational function")
        return RationalFunction(self.den, self.num)

    def reverse_variable(self) -> "RationalFunction":
        """Substitute t -> 1/t and clear denominators."""
        dn, dd = self.num.degree, self.den.degree
        if self.num.is_zero():
            return self
        num = self.num.reversed()
        den = self.den.reversed()
        # f(1/t) = t^dd * rev(num) / (t^dn * rev(den))
        if dd >= dn:
            num = num.shift(dd - dn)
        else:
            den = den.shift(dn - dd)
        return RationalFunction(num, den)

    def __call__(self, x):
        return self.num(x) / self.den(x)


def _poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return IntPolynomial(x)


def _rat(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(_poly(x))


def ratfun_sum(terms) -> RationalFunction:
    """Sum of (coefficient, denominator polynomial) pairs over a common denominator.

    Cheaper than repeated ``+`` because identical denominators are merged first and
    the common denominator is the lcm, so only one final reduction is needed.
    """
    merged: dict = {}
    for c, d in terms:
        merged[d] = merged.get(d, 0) + c
    items = [(c, d) for d, c in merged.items() if c]
    if not items:
        return RationalFunction(IntPolynomial())
    lcm = IntPolynomial([1])
    scale = 1
    for _, d in items:
        p = d.primitive()
        g = poly_gcd(lcm, p)
        lcm = exact_divide(lcm * p, g) if g.degree > 0 else lcm * p
        c = abs(d.content())
        scale = scale * c // gcd(scale, c)
    num = IntPolynomial()
    for c, d in items:
        # c/d = c * (lcm/prim(d)) * (scale/content(d)) / (lcm*scale)
        num = num + exact_divide(lcm, d.primitive()) * (c * scale // d.content())
    return RationalFunction(num, lcm * scale)
