"""Dense univariate polynomials with arbitrary-precision integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a remainder or a non-integer quotient."""

    def __init__(self, message: str, remainder: "IntPolynomial | None" = None):
        super().__init__(message)
        self.remainder = remainder


class IntPolynomial:
    """Polynomial over the integers, coefficients stored in ascending degree.

    The zero polynomial has an empty coefficient tuple; otherwise the last
    coefficient is nonzero.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def lc(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._c)})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if i == 1 else f"t^{i}")
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations

    def __add__(self, other):
        other = _coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-x for x in self._c])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self._c, other._c
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation at int, Fraction, float, complex or mpmath values."""
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    # structure

    def content(self) -> int:
        """gcd of the coefficients, sign taken from the leading coefficient."""
        if not self._c:
            return 0
        g = abs(reduce(gcd, self._c))
        return g if self._c[-1] > 0 else -g

    def primitive(self) -> "IntPolynomial":
        """Divide by the content; result has positive leading coefficient."""
        if not self._c:
            return self
        g = self.content()
        return IntPolynomial([x // g for x in self._c])

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * a for i, a in enumerate(self._c)][1:])

    def reversed(self) -> "IntPolynomial":
        """t^deg * p(1/t)."""
        return IntPolynomial(reversed(self._c))

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if not self._c:
            return self
        return IntPolynomial([0] * k + list(self._c))

    def trailing_zeros(self) -> int:
        """Multiplicity of t as a factor (0 for the zero polynomial)."""
        for i, a in enumerate(self._c):
            if a:
                return i
        return 0

    def strip_t(self) -> "IntPolynomial":
        return IntPolynomial(self._c[self.trailing_zeros():])

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of p(x) at a rational point, without building a Fraction sum."""
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        n = len(self._c) - 1
        if n < 0:
            return 0
        # homogeneous Horner: sum a_i p^i q^(n-i), same sign as p(x) since q > 0
        acc = 0
        qpow = 1
        for i in range(n, -1, -1):
            acc = acc * p + self._c[i] * qpow
            qpow *= q
        return (acc > 0) - (acc < 0)

    def sign_variations(self) -> int:
        """Descartes sign variations of the coefficient sequence."""
        prev = 0
        count = 0
        for a in self._c:
            if a:
                s = 1 if a > 0 else -1
                if prev and s != prev:
                    count += 1
                prev = s
        return count


def _coerce(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")


ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])
T_MINUS_ONE = IntPolynomial([-1, 1])


def bracket(n: int) -> IntPolynomial:
    """[n] = 1 + t + ... + t^(n-1)."""
    if n < 1:
        raise ValueError(f"bracket requires n >= 1, got {n}")
    return IntPolynomial([1] * n)


def bracket_product(ns: Sequence[int]) -> IntPolynomial:
    """[n1, n2, ...] = [n1][n2]...; the empty product is 1."""
    bad = [n for n in ns if n < 1]
    if bad:
        raise ValueError(f"bracket entries must be >= 1, got {bad}")
    out = ONE
    for n in ns:
        out = out * bracket(n)
    return out


def divmod_rational(a: IntPolynomial, b: IntPolynomial):
    """Long division over Q; returns quotient and remainder as Fraction lists."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in a.coeffs]
    db = b.degree
    lb = b.lc
    if len(r) - 1 < db:
        return [], r
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] / lb
        if c:
            q[i - db] = c
            for j, y in enumerate(b.coeffs):
                r[i - db + j] -= c * y
    r = r[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, r


def exact_divide(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Return q with a = b*q, or raise InexactDivisionError carrying the remainder."""
    q, r = divmod_rational(a, b)
    if r:
        rem = _clear_fraction_list(r) if any(x.denominator != 1 for x in r) else IntPolynomial(r)
        raise InexactDivisionError(f"{b} does not divide {a}; remainder {rem}", rem)
    if any(x.denominator != 1 for x in q):
        raise InexactDivisionError(f"quotient of {a} by {b} has non-integer coefficients")
    return IntPolynomial(int(x) for x in q)


def divides(b: IntPolynomial, a: IntPolynomial) -> bool:
    """True when b divides a over Q."""
    return not divmod_rational(a, b)[1]


def _clear_fraction_list(cs: Sequence[Fraction]) -> IntPolynomial:
    den = 1
    for x in cs:
        den = den * x.denominator // gcd(den, x.denominator)
    return IntPolynomial(int(x * den) for x in cs)


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of |lc(b)|^(deg a - deg b + 1) * a by b; the multiplier is positive."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lc
    mult = abs(lb)
    sgn = 1 if lb > 0 else -1
    bc = b.coeffs
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        r = [x * mult for x in r]
        if c:
            f = c * sgn
            for j, y in enumerate(bc):
                r[i - db + j] -= f * y
        r.pop()
    return IntPolynomial(r)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q[t] with positive leading coefficient (primitive PRS)."""
    a = a.primitive() if not a.is_zero() else a
    b = b.primitive() if not b.is_zero() else b
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, (r.primitive() if not r.is_zero() else r)
    return a.primitive()


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree < 1:
        return p.primitive() if not p.is_zero() else p
    g = poly_gcd(p, p.derivative())
    return exact_divide(p.primitive(), g) if g.degree > 0 else p.primitive()


def squarefree_decomposition(p: IntPolynomial) -> list:
    """List of (factor, multiplicity) with primitive square-free factors (Musser's gcd scheme)."""
    p = p.primitive()
    if p.degree < 1:
        return []
    out = []
    c = poly_gcd(p, p.derivative())
    w = exact_divide(p, c).primitive()
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        factor = exact_divide(w, y).primitive()
        if factor.degree > 0:
            out.append((factor, i))
        c = exact_divide(c, y).primitive()
        w = y
        i += 1
    return out


def exact_divide_rational_primitive(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Quotient a/b over Q, scaled to a primitive integer polynomial (sign kept)."""
    q, r = divmod_rational(a, b)
    if r:
        raise InexactDivisionError(f"{b} does not divide {a}")
    if not q:
        return IntPolynomial()
    p = _clear_fraction_list(q)
    g = abs(reduce(gcd, p.coeffs))
    return IntPolynomial(x // g for x in p.coeffs)
