"""Growth functions of polyhedra, growth rates, and Perron/Pisot classification."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Optional, Sequence

from .coxeter import CoxeterSystem, classify_finite, solomon_series
from .polyalg import (
    DEFAULT_TOL,
    DEFAULT_WIDTH,
    IntPolynomial,
    NoPositiveRootError,
    NonConvergenceError,
    RationalFunction,
    RootInterval,
    T_MINUS_ONE,
    all_roots_numeric,
    bracket,
    bracket_product,
    divides,
    exact_divide,
    exact_divide_rational_primitive,
    isolate_smallest_positive_root,
    poly_gcd,
    ratfun_sum,
    refine,
    series_coefficients,
)
from .polyhedron import CombinatorialPolyhedron, classify_vertices

GAP_MIN = 1e-6


class DegenerateGrowthError(ValueError):
    """The growth series is a polynomial (finite group), so there is no growth rate."""


@lru_cache(maxsize=None)
def triangle_growth(a1: int, a2: int, a3: int) -> IntPolynomial:
    """Solomon polynomial of the spherical triangle group with angles pi/a1, pi/a2, pi/a3."""
    sys = CoxeterSystem.from_edges(3, [(0, 1, a1), (1, 2, a2), (0, 2, a3)])
    labels = classify_finite(sys)
    if labels is None:
        raise ValueError(f"triangle group ({a1},{a2},{a3}) is infinite")
    return solomon_series(labels)


def pseudo_growth_terms(C: CombinatorialPolyhedron) -> list:
    """(coefficient, polynomial) terms of 1/f_C(1/t): faces, edges, spherical vertices."""
    census = classify_vertices(C)
    terms = [(1, IntPolynomial([1])), (-C.F, bracket(2))]
    for m, n in census.edge_counts.items():
        terms.append((n, bracket_product([2, m])))
    for sig, n in census.vertex_counts.items():
        if len(sig) == 3 and census_kind(sig) == "spherical":
            terms.append((-n, triangle_growth(*sig)))
    return terms


def census_kind(sig) -> str:
    s = sum(Fraction(1, a) for a in sig)
    return "spherical" if s > 1 else "euclidean" if s == 1 else "hyperbolic"


def pseudo_growth(C: CombinatorialPolyhedron) -> RationalFunction:
    """Pseudo growth function: Steinberg's sum restricted to faces, edges and spherical vertices."""
    w = ratfun_sum(pseudo_growth_terms(C))
    return w.reverse_variable().reciprocal()


def natural_denominator(polys: Sequence[IntPolynomial]) -> IntPolynomial:
    """lcm of the finite-subgroup growth polynomials entering a Steinberg-type sum."""
    lcm = IntPolynomial([1])
    for p in polys:
        p = p.primitive()
        g = poly_gcd(lcm, p)
        lcm = exact_divide(lcm * p, g)
    return lcm


def polyhedron_denominator_hints(C: CombinatorialPolyhedron) -> list:
    """Bracket products to try when recovering the displayed normal form of 1/f."""
    census = classify_vertices(C)
    big = [m for m, n in census.edge_counts.items() if m >= 7 for _ in range(n)]
    hints = [natural_denominator([p for _, p in pseudo_growth_terms(C)])]
    hints.append(bracket_product([4, 6, 10] + big))
    return hints


# Kolpakov-Usnich criterion


KU_APPLIES = "applies"
KU_FAILS_NONNEG = "fails_nonneg"
KU_FAILS_GCD = "fails_gcd"
KU_FAILS_DEGREE = "fails_degree"


@dataclass(frozen=True)
class KUResult:
    verdict: str
    reason: str = ""

    @property
    def applies(self) -> bool:
        return self.verdict == KU_APPLIES


def normalize_constant(g: IntPolynomial) -> Optional[IntPolynomial]:
    """Scale g to constant term -1 when an integer scaling does it, else None."""
    c = g[0]
    if c == 0 or any(a % c for a in g.coeffs):
        return None
    return IntPolynomial(-(a // c) for a in g.coeffs)


def ku_criterion(g: IntPolynomial) -> KUResult:
    """Check the hypotheses: g = sum a_k t^k - 1, a_k >= 0 integers, gcd of support = 1, deg >= 2."""
    if g.is_zero():
        return KUResult(KU_FAILS_NONNEG, "zero polynomial")
    h = normalize_constant(g)
    if h is None:
        return KUResult(KU_FAILS_NONNEG, f"constant term {g[0]} cannot be scaled to -1")
    neg = [k for k in range(1, len(h)) if h[k] < 0]
    if neg:
        return KUResult(KU_FAILS_NONNEG, f"negative coefficient at degree {neg[0]}")
    support = [k for k in range(1, len(h)) if h[k] != 0]
    if not support:
        return KUResult(KU_FAILS_NONNEG, "no positive-degree terms")
    d = reduce(gcd, support)
    if d != 1:
        return KUResult(KU_FAILS_GCD, f"gcd of support is {d}")
    if h.degree < 2:
        return KUResult(KU_FAILS_DEGREE, "degree below 2")
    return KUResult(KU_APPLIES)


def denominator_normal_form(f: RationalFunction, hints: Sequence[IntPolynomial] = ()) -> tuple:
    """Return (g, KUResult): den(f) with one factor (t - 1) removed, constant term -1.

    When the reduced form fails the criterion, cancelled bracket factors are
    restored from ``hints``: each hint H divisible by num(f) gives the
    candidate g * H/num(f), i.e. the unreduced form of 1/f with denominator H.
    """
    q = f.den
    g0 = exact_divide(q, T_MINUS_ONE) if divides(T_MINUS_ONE, q) else q
    candidates = [g0]
    for h in hints:
        if divides(f.num, h):
            candidates.append(g0 * exact_divide_rational_primitive(h, f.num))
    first = None
    for c in candidates:
        n = normalize_constant(c)
        if n is None:
            n = c
        res = ku_criterion(n)
        if first is None:
            first = (n, res)
        if res.applies:
            return n, res
    return first


# numeric helpers


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    p = IntPolynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            p = exact_divide(p, cyclotomic(d))
    return p


def strip_cyclotomic(g: IntPolynomial, roots=None, max_order: int = 2000) -> IntPolynomial:
    """Divide out every cyclotomic factor of g that shows up among its unit-modulus roots."""
    if roots is None:
        roots = all_roots_numeric(g)
    orders = set()
    for r in roots:
        if abs(abs(r.value) - 1) > 1e-8:
            continue
        ang = math.atan2(r.value.imag, r.value.real) / (2 * math.pi)
        for n in range(1, max_order + 1):
            if abs(ang * n - round(ang * n)) < 1e-7 * n:
                orders.add(n)
                break
    for n in sorted(orders):
        c = cyclotomic(n)
        while g.degree >= c.degree and divides(c, g):
            g = exact_divide(g, c)
    return g


# the report


@dataclass
class GrowthReport:
    growth_function: RationalFunction
    degenerate: bool = False
    denominator_normal_form: Optional[IntPolynomial] = None
    radius_interval: Optional[RootInterval] = None
    rate_interval: Optional[tuple] = None
    ku_verdict: Optional[str] = None
    ku_reason: str = ""
    perron_verdict: Optional[str] = None
    pisot_advisory: str = "skipped"
    modulus_gap: Optional[float] = None
    numeric_root_count: int = 0
    notes: list = field(default_factory=list)

    @property
    def rate_midpoint(self) -> Optional[Fraction]:
        if self.rate_interval is None:
            return None
        return (self.rate_interval[0] + self.rate_interval[1]) / 2

    @property
    def rate_width(self) -> Optional[Fraction]:
        if self.rate_interval is None:
            return None
        return self.rate_interval[1] - self.rate_interval[0]


def analyze_growth(
    f: RationalFunction,
    width=DEFAULT_WIDTH,
    tol: float = DEFAULT_TOL,
    hints: Sequence[IntPolynomial] = (),
) -> GrowthReport:
    """Certified growth rate of f with Perron verdict and a numeric Pisot advisory.

    The radius of convergence is isolated exactly; both the radius and the
    rate intervals are narrower than ``width``.
    """
    width = Fraction(width)
    rep = GrowthReport(growth_function=f)
    if f.den.degree < 1:
        rep.degenerate = True
        rep.notes.append("constant denominator: finite group, growth rate is degenerate")
        return rep
    q = f.den
    g, ku = denominator_normal_form(f, hints)
    rep.denominator_normal_form = g
    rep.ku_verdict, rep.ku_reason = ku.verdict, ku.reason
    try:
        iv = isolate_smallest_positive_root(q, width)
    except NoPositiveRootError:
        rep.notes.append("denominator has no positive root")
        rep.perron_verdict = "inconclusive"
        return rep
    while not iv.exact and (iv.lo == 0 or (iv.hi - iv.lo) / (iv.lo * iv.hi) > width):
        iv = refine(q, iv, (iv.hi - iv.lo) / 2)
    rep.radius_interval = iv
    rep.rate_interval = (1 / iv.hi, 1 / iv.lo)

    # advisory numerics on the full denominator
    try:
        roots = all_roots_numeric(q, tol)
    except NonConvergenceError as exc:
        rep.notes.append(f"numeric roots did not converge: max radius {max(exc.radii):.3g}")
        roots = None
    r0 = float(iv.midpoint)
    if roots:
        rep.numeric_root_count = len(roots)
        ordered = sorted(roots, key=lambda r: abs(r.value))
        first = ordered[0]
        if abs(first.value - r0) > 1e-6 or first.multiplicity > 1:
            rep.modulus_gap = 0.0
        else:
            rep.modulus_gap = abs(ordered[1].value) - abs(first.value) if len(ordered) > 1 else math.inf
            if rep.modulus_gap < 10 * max(first.radius, ordered[1].radius if len(ordered) > 1 else 0):
                rep.notes.append(f"tie in modulus with {ordered[1].value:.6g}")
    if ku.applies:
        rep.perron_verdict = "perron_certified"
    elif rep.modulus_gap is not None and rep.modulus_gap > 0 and rep.modulus_gap >= 10 * tol:
        rep.perron_verdict = "perron_numeric_only"
    else:
        rep.perron_verdict = "inconclusive"
    rep.pisot_advisory = pisot_advisory(g, r0) if rep.perron_verdict != "inconclusive" else "skipped"
    return rep


def pisot_advisory(g: IntPolynomial, r0: float) -> str:
    """pisot_numeric when every non-cyclotomic root of g other than r0 lies outside the unit disk.

    Roots of g are reciprocals of the conjugates of the growth rate, so
    outside the unit disk here means inside it for the conjugates.
    """
    if g.degree < 1:
        return "skipped"
    try:
        roots = all_roots_numeric(g)
        h = strip_cyclotomic(g, roots)
        roots = all_roots_numeric(h) if h.degree >= 1 else []
    except NonConvergenceError:
        return "skipped"
    others = [r for r in roots if abs(r.value - r0) > 1e-9]
    if len(others) != len(roots) - 1:
        return "not_pisot_numeric"
    return "pisot_numeric" if all(abs(r.value) > 1 + 1e-9 for r in others) else "not_pisot_numeric"


@dataclass(frozen=True)
class SeriesEstimate:
    n: int
    root: float  # a_n^(1/n)
    ratio: Fraction  # a_n / a_(n-1)


def rate_from_series(f: RationalFunction, n: int = 200) -> SeriesEstimate:
    """Advisory growth-rate estimates from the n-th series coefficient."""
    if n < 10:
        raise ValueError("need at least 10 terms")
    a = series_coefficients(f, n)
    for k, x in enumerate(a):
        if x < 0:
            raise ValueError(f"negative series coefficient a_{k} = {x}")
    if f.den.degree < 1 or a[n] == 0:
        raise DegenerateGrowthError("series terminates: finite group")
    return SeriesEstimate(n, math.exp(math.log(a[n]) / n), Fraction(a[n], a[n - 1]))
