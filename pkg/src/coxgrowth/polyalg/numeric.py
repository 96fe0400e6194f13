"""Advisory numeric roots: Aberth iteration on square-free factors.

Nothing here is used to certify a result; these values back the modulus
comparisons that cross-check the exact layer.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .poly import IntPolynomial, squarefree_decomposition

DEFAULT_TOL = 1e-12


class NonConvergenceError(ArithmeticError):
    def __init__(self, message, radii=()):
        super().__init__(message)
        self.radii = list(radii)


@dataclass(frozen=True)
class NumericRoot:
    value: complex
    radius: float
    multiplicity: int

    @property
    def modulus(self) -> float:
        return abs(self.value)


def _aberth(coeffs, start, dps: int, max_iter: int):
    """Aberth-Ehrlich iteration in mpmath starting from ``start``."""
    with mpmath.workdps(dps):
        c = [mpmath.mpf(int(x)) for x in coeffs]
        dc = [i * c[i] for i in range(1, len(c))]
        z = [mpmath.mpc(complex(s)) for s in start]
        n = len(z)
        eps = mpmath.mpf(10) ** (-(dps - 10))

        def horner(cs, x):
            acc = mpmath.mpc(0)
            for a in reversed(cs):
                acc = acc * x + a
            return acc

        for _ in range(max_iter):
            biggest = mpmath.mpf(0)
            new = []
            for i in range(n):
                pv = horner(c, z[i])
                dv = horner(dc, z[i])
                if pv == 0:
                    new.append(z[i])
                    continue
                ratio = pv / dv if dv != 0 else mpmath.mpc(1e-3, 1e-3)
                s = mpmath.fsum(1 / (z[i] - z[j]) for j in range(n) if j != i and z[i] != z[j])
                step = ratio / (1 - ratio * s)
                new.append(z[i] - step)
                biggest = max(biggest, abs(step) / max(abs(z[i]), 1))
            z = new
            if biggest < eps:
                break
        out = [complex(zi) for zi in z]
        radii = []
        for zo in out:
            # radius certified for the double-precision value actually returned
            zi = mpmath.mpc(zo)
            pv = horner(c, zi)
            dv = horner(dc, zi)
            # a disk of radius n|p/p'| around zi contains a root of p
            radii.append(float(n * abs(pv) / abs(dv)) if dv != 0 else float("inf"))
        return out, radii


def all_roots_numeric(q: IntPolynomial, tol: float = DEFAULT_TOL, dps: int = 60, max_iter: int = 200):
    """Approximate every root of q (with multiplicity) with inclusion radii <= tol."""
    if q.is_zero() or q.degree < 1:
        raise ValueError("all_roots_numeric needs a polynomial of degree >= 1")
    out = []
    for factor, mult in squarefree_decomposition(q):
        coeffs = factor.coeffs
        if factor.degree == 1:
            z = -coeffs[0] / coeffs[1]
            out.extend([NumericRoot(complex(z), 0.0, mult)] * mult)
            continue
        try:
            start = np.roots(np.array([float(x) for x in reversed(coeffs)]))
            if not np.all(np.isfinite(start)):
                raise ValueError
        except (ValueError, OverflowError, np.linalg.LinAlgError):
            k = factor.degree
            start = [0.9 * np.exp(2j * np.pi * (j + 0.25) / k) for j in range(k)]
        zs, radii = _aberth(coeffs, start, dps, max_iter)
        if max(radii) > tol:
            raise NonConvergenceError(f"roots of {factor} not resolved to {tol}", radii)
        for z, r in zip(zs, radii):
            out.extend([NumericRoot(z, r, mult)] * mult)
    out.sort(key=lambda r: (round(abs(r.value), 12), r.value.imag))
    return out
