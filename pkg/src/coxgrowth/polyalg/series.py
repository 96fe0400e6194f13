"""Taylor coefficients of rational functions at t = 0."""

from __future__ import annotations

from fractions import Fraction

from .ratfun import RationalFunction


def series_coefficients(f: RationalFunction, n: int) -> list:
    """First n+1 Taylor coefficients of f, exactly, via the recurrence from den(f).

    Coefficients are integers whenever den(0) = +-1, which holds for growth
    functions; otherwise exact Fractions are returned.
    """
    if n < 0:
        raise ValueError("number of terms must be nonnegative")
    den = f.den.coeffs
    num = f.num.coeffs
    d0 = den[0] if den else 0
    if d0 == 0:
        raise ValueError("denominator vanishes at t = 0; no power series expansion")
    out = []
    for k in range(n + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        if acc % d0 == 0:
            out.append(acc // d0)
        else:
            out.append(Fraction(acc, d0))
    return out
