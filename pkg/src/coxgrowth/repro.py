"""Mechanical checks of the polynomial identities behind the Perron property.

Each check returns a ``ProofRecord``: a named list of pass/fail lines, each
comparing two independently computed quantities.  Growth functions always
come from ``pseudo_growth`` on an explicit polyhedron, while the closed forms
are rebuilt from bracket polynomials, so an agreement is a genuine
cross-check rather than a restatement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .catalog import PRISM_EDGES, PRISM_VERTICAL_EDGES, opened_bipyramid, opened_octahedron, equality_pyramid, triangular_prism
from .growth import analyze_growth, ku_criterion, pseudo_growth
from .polyalg import (
    IntPolynomial,
    RationalFunction,
    T,
    T_MINUS_ONE,
    bracket,
    bracket_product,
)
from .polyhedron import (
    CombinatorialPolyhedron,
    PolyhedronError,
    canonical_form,
    classify_vertices,
    large_label_slack,
    theorem3_bound,
    vertex_labels,
)

# (1 + t^2)(1 + t^2 + ... + t^8), so that [4,6,10] = [2,2,6] * X
X_POLY = IntPolynomial([1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 1])


class CensusInconsistencyError(ValueError):
    """A census whose half-integer coefficient combinations do not resolve to integers."""


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ProofRecord:
    name: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def geometric_sum(lo: int, hi: int) -> IntPolynomial:
    """t^lo + ... + t^hi (zero when hi < lo)."""
    if hi < lo:
        return IntPolynomial()
    return IntPolynomial([0] * lo + [1] * (hi - lo + 1))


def first_difference(a: RationalFunction, b: RationalFunction) -> Optional[int]:
    """Lowest degree where the cross-multiplied numerators of a and b differ, or None."""
    x = a.num * b.den
    y = b.num * a.den
    n = max(len(x), len(y))
    for i in range(n):
        if x[i] != y[i]:
            return i
    return None


def _compare(rec: ProofRecord, name: str, lhs: RationalFunction, rhs: RationalFunction) -> bool:
    idx = first_difference(lhs, rhs)
    detail = "" if idx is None else f"cross-multiplied numerators differ at coefficient {idx}"
    return rec.add(name, idx is None, detail)


def nonneg_except_constant(q: IntPolynomial) -> Optional[int]:
    """First degree >= 1 with a negative coefficient, or None."""
    for i in range(1, len(q)):
        if q[i] < 0:
            return i
    return None


# the H polynomial for angles in {2, ..., 6}


H_SIGNATURES = (
    (2, 2, 3), (2, 2, 4), (2, 2, 5), (2, 2, 6),
    (2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 3, 6),
    (2, 4, 4), (3, 3, 3),
)


@dataclass(frozen=True)
class Census5:
    """Face count and the vertex counts entering the H polynomial."""

    F: int
    v2222: int = 0
    v: tuple = (0,) * len(H_SIGNATURES)  # aligned with H_SIGNATURES

    def __post_init__(self):
        if len(self.v) != len(H_SIGNATURES):
            raise ValueError(f"expected {len(H_SIGNATURES)} vertex counts")
        if self.F < 0 or self.v2222 < 0 or any(x < 0 for x in self.v):
            raise ValueError("census entries must be nonnegative")

    def count(self, *sig) -> int:
        return self.v[H_SIGNATURES.index(tuple(sorted(sig)))]

    @classmethod
    def from_counts(cls, F: int, v2222: int = 0, **counts) -> "Census5":
        """Keyword form: ``Census5.from_counts(8, v2222=6, v236=1)``."""
        vals = [0] * len(H_SIGNATURES)
        for key, n in counts.items():
            sig = tuple(int(ch) for ch in key[1:])
            vals[H_SIGNATURES.index(sig)] = n
        return cls(F, v2222, tuple(vals))

    @classmethod
    def from_polyhedron(cls, P: CombinatorialPolyhedron) -> "Census5":
        c = classify_vertices(P)
        bad = [m for m in c.edge_counts if not 2 <= m <= 6]
        if bad:
            raise ValueError(f"angles outside pi/2 .. pi/6: {bad}")
        if c.hyperbolic_vertices:
            raise ValueError("hyperbolic vertices present")
        return cls(c.F, c.v(2, 2, 2, 2), tuple(c.v(*s) for s in H_SIGNATURES))


def h_polynomial(c: Census5) -> IntPolynomial:
    """The degree-16 numerator H with 1/f = (t - 1) H / [4,6,10] for angles pi/2 .. pi/6."""
    h = Fraction(1, 2)
    F, w = c.F, c.v2222
    a, b, cc, d = (c.count(2, 2, n) for n in (3, 4, 5, 6))
    e, f, g, hh = (c.count(2, 3, n) for n in (3, 4, 5, 6))
    i, j = c.count(2, 4, 4), c.count(3, 3, 3)
    coeffs = [
        -1,
        F - 4,
        h * a + h * b + h * cc + h * d + e + f + g + hh + i + 3 * h * j + w - 4,
        3 * F - h * a + h * f + h * g + h * hh + i + h * j - 12,
        3 * h * a + b + 3 * h * cc + 3 * h * d + 2 * e + 5 * h * f + 3 * g + 3 * hh + 3 * i + 7 * h * j + 3 * w - 8,
        5 * F - a - h * cc + f + 3 * h * g + 2 * hh + 2 * i + 2 * j - 20,
        2 * a + 3 * h * b + 5 * h * cc + 2 * d + 3 * e + 7 * h * f + 9 * h * g + 5 * hh + 5 * i + 5 * j + 5 * w - 11,
        6 * F - a - cc + f + 2 * g + 3 * hh + 3 * i + 3 * j - 24,
        2 * a + 3 * h * b + 3 * cc + 2 * d + 3 * e + 7 * h * f + 5 * g + 6 * hh + 6 * i + 6 * j + 6 * w - 12,
        6 * F - a - cc + f + 2 * g + 3 * hh + 3 * i + 3 * j - 24,
        2 * a + 3 * h * b + 5 * h * cc + 2 * d + 3 * e + 7 * h * f + 9 * h * g + 6 * hh + 6 * i + 6 * j + 6 * w - 11,
        5 * F - a - h * cc + f + 3 * h * g + 3 * hh + 3 * i + 3 * j - 20,
        3 * h * a + b + 3 * h * cc + 3 * h * d + 2 * e + 5 * h * f + 3 * g + 5 * hh + 5 * i + 9 * h * j + 5 * w - 8,
        3 * F - h * a + h * f + h * g + 5 * h * hh + 2 * i + 5 * h * j - 12,
        h * a + h * b + h * cc + h * d + e + f + g + 3 * hh + 3 * i + 5 * h * j + 3 * w - 4,
        F + hh + i + j - 4,
        hh + i + j + w - 1,
    ]
    bad = [k for k, x in enumerate(coeffs) if Fraction(x).denominator != 1]
    if bad:
        raise CensusInconsistencyError(f"coefficients of t^{bad} are not integers for {c}")
    return IntPolynomial(int(x) for x in coeffs)


def h_identity(P: CombinatorialPolyhedron) -> ProofRecord:
    """1/f = (t - 1) H / [4,6,10] for a polyhedron with angles pi/2 .. pi/6."""
    rec = ProofRecord("h_polynomial identity", {"polyhedron": P.name})
    census = Census5.from_polyhedron(P)
    H = h_polynomial(census)
    rec.add("H has constant term -1", H[0] == -1)
    rec.add("coefficient of t is F - 4", H[1] == census.F - 4, f"{H[1]} vs {census.F - 4}")
    rhs = RationalFunction(T_MINUS_ONE * H, bracket_product([4, 6, 10]))
    _compare(rec, "1/f = (t-1) H / [4,6,10]", pseudo_growth(P).reciprocal(), rhs)
    return rec


# changing a large label to 6


def _check_large_edge(P: CombinatorialPolyhedron, edge) -> tuple:
    e = (min(edge), max(edge))
    if e not in P.edge_faces:
        raise PolyhedronError(f"{edge} is not an edge")
    for x in e:
        others = sorted(vertex_labels(P, x))
        others.remove(P.label(e))
        if others != [2, 2]:
            raise PolyhedronError(f"endpoint {x} of {e} is not of type (2,2,m)")
    return e


def angle_change_identity(P: CombinatorialPolyhedron, edge, m: int, tamper: Optional[int] = None) -> ProofRecord:
    """1/f_m = 1/f_6 + (t - 1)/[2,2,6,m] * (t^6 + ... + t^(m-1)).

    Both growth functions come from the polyhedron with the chosen edge
    relabeled to m and to 6.  ``tamper`` adds t^tamper to the correction
    term, as a negative control.
    """
    if m < 7:
        raise ValueError(f"m must be at least 7, got {m}")
    e = _check_large_edge(P, edge)
    rec = ProofRecord("angle change identity", {"polyhedron": P.name, "edge": list(e), "m": m})
    lhs = pseudo_growth(P.relabeled({e: m})).reciprocal()
    base = pseudo_growth(P.relabeled({e: 6})).reciprocal()
    corr_num = T_MINUS_ONE * geometric_sum(6, m - 1)
    if tamper is not None:
        corr_num = corr_num + IntPolynomial([0] * tamper + [1])
    rhs = base + RationalFunction(corr_num, bracket_product([2, 2, 6, m]))
    _compare(rec, f"1/f_S = 1/f_P' + (t-1)/[2,2,6,{m}] * sum t^n", lhs, rhs)
    return rec


# the Q_k recursion


def large_edges(P: CombinatorialPolyhedron) -> list:
    return sorted(e for e in P.edges if P.label(e) >= 7)


def qk_polynomials(H: IntPolynomial, ms: Sequence[int]) -> list:
    """Q_1, ..., Q_k built from H and the large labels m_1, ..., m_k."""
    out = []
    Q = None
    for idx, m in enumerate(ms):
        tail = X_POLY * geometric_sum(6, m - 1)
        if Q is None:
            Q = bracket(m) * H + tail
        else:
            Q = bracket(m) * Q + bracket_product(ms[:idx]) * tail
        out.append(Q)
    return out


def qk_recursion_check(P: CombinatorialPolyhedron, edges: Optional[Sequence] = None) -> ProofRecord:
    """Rebuild 1/f from H of the fully reduced polyhedron through Q_1, ..., Q_k."""
    edges = [(min(e), max(e)) for e in (edges if edges is not None else large_edges(P))]
    if not edges:
        raise ValueError("no edge with label >= 7")
    for e in edges:
        _check_large_edge(P, e)
    ms = [P.label(e) for e in edges]
    if min(ms) < 7:
        raise ValueError(f"labels {ms} are not all >= 7")
    k = len(ms)
    census = classify_vertices(P)
    slack = large_label_slack(census)
    rec = ProofRecord("Q_k recursion", {"polyhedron": P.name, "labels": ms, "k": k, "large_label_slack": slack})
    rec.add("large-label slack v2222 + e3 + e4 + e5 + e6 + F - 8 >= 0", slack >= 0, f"value {slack}")
    reduced = P.relabeled({e: 6 for e in edges})
    H = h_polynomial(Census5.from_polyhedron(reduced))
    Qs = qk_polynomials(H, ms)
    # every intermediate polyhedron P_j has the first j large labels restored
    for j in range(1, k + 1):
        Pj = P.relabeled({e: 6 for e in edges[j:]})
        rhs = RationalFunction(T_MINUS_ONE * Qs[j - 1], bracket_product([2, 2, 6] + ms[:j]) * X_POLY)
        _compare(rec, f"1/f_(P_{j}) = (t-1) Q_{j} / ([2,2,6,m_1..m_{j}] X)", pseudo_growth(Pj).reciprocal(), rhs)
    F = census.F
    rec.add(f"a_1^({k}) = F - 4 - k", Qs[-1][1] == F - 4 - k, f"{Qs[-1][1]} vs {F - 4 - k}")
    c1 = classify_vertices(P.relabeled({e: 6 for e in edges[1:]}))
    a2 = c1.v(2, 2, 2, 2) + c1.e(3) + c1.e(4) + c1.e(5) + c1.e(6) + F - 8
    rec.add("a_2^(1) = v2222 + e3 + e4 + e5 + e6 + F - 8", Qs[0][2] == a2, f"{Qs[0][2]} vs {a2}")
    prev = H
    for j, Q in enumerate(Qs, 1):
        for i in range(1, 6):
            want = sum(prev[s] for s in range(1, i + 1)) - 1
            rec.add(f"a_{i}^({j}) cascade", Q[i] == want, f"{Q[i]} vs {want}")
        rec.add(f"Q_{j} constant term -1", Q[0] == -1)
        prev = Q
    neg = nonneg_except_constant(Qs[-1])
    if k <= F - 4 and slack >= 0:
        rec.add("non-constant coefficients of Q_k are >= 0", neg is None, "" if neg is None else f"degree {neg}")
        rec.add("KU criterion applies to Q_k", ku_criterion(Qs[-1]).applies, ku_criterion(Qs[-1]).reason)
    return rec


# two large labels on six facets


def prop3_q(m1: int, m2: int) -> IntPolynomial:
    return (2 * T + 1) * bracket_product([m1, m2]) - (T + 1) * (bracket(m1) + bracket(m2))


def prop3_expansion(m1: int, m2: int) -> IntPolynomial:
    """The expanded form: equal labels and unequal labels are displayed separately."""
    if m1 < m2:
        m1, m2 = m2, m1
    if m1 == m2:
        inner = IntPolynomial([-1, 1] + [3] * (m1 - 2) + [2])  # 2t^m + 3t^(m-1) + ... + 3t^2 + t - 1
        return bracket(m1) * inner
    inner = IntPolynomial([0, 1] + [3] * (m2 - 2) + [2])  # 2t^m2 + 3t^(m2-1) + ... + 3t^2 + t
    return bracket(m1) * inner + T * geometric_sum(m2, m1 - 1) - bracket(m2)


def prop3_closed_forms(m1: int, m2: int, with_polyhedron: bool = True) -> ProofRecord:
    if m1 < m2:
        m1, m2 = m2, m1
    if m2 < 7:
        raise ValueError("need m1 >= m2 >= 7")
    rec = ProofRecord("two-label closed forms", {"m1": m1, "m2": m2})
    Q = prop3_q(m1, m2)
    rec.add("Q matches the displayed expansion", Q == prop3_expansion(m1, m2))
    neg = nonneg_except_constant(Q)
    rec.add("non-constant coefficients of Q are >= 0", neg is None, "" if neg is None else f"degree {neg}")
    rec.add("KU criterion applies to Q", ku_criterion(Q).applies, ku_criterion(Q).reason)
    if with_polyhedron:
        P = opened_bipyramid(m1, m2)
        rhs = RationalFunction(T_MINUS_ONE * Q, bracket_product([2, 2, 2, m1, m2]))
        _compare(rec, "1/f = (t-1) Q / [2,2,2,m1,m2] for the six-facet polyhedron", pseudo_growth(P).reciprocal(), rhs)
    return rec


# prisms with one large label


def case1_numerator(m: int) -> IntPolynomial:
    """2t^(m+2) + 3t^(m+1) + 4t^m + ... + 4t^4 + 3t^3 + t^2 - 1."""
    return IntPolynomial([-1, 0, 1, 3] + [4] * (m - 3) + [3, 2])


def case2_numerator(m: int) -> IntPolynomial:
    """2t^(m+4) + 3t^(m+3) + 4t^(m+2) + 5t^(m+1) + 6t^m + ... + 6t^6 + 5t^5 + 3t^4 + 2t^3 + t^2 - 1."""
    return IntPolynomial([-1, 0, 1, 2, 3, 5] + [6] * (m - 5) + [5, 4, 3, 2])


def case_forms(m: int) -> dict:
    """The two closed forms of 1/f, keyed by case name."""
    return {
        "I": RationalFunction(T_MINUS_ONE * case1_numerator(m), bracket_product([2, 2, 4, m])),
        "II": RationalFunction(T_MINUS_ONE * case2_numerator(m), bracket_product([2, 2, 6, m])),
    }


def case2_r_polynomial(m: int) -> IntPolynomial:
    """R(t) of the unsimplified Case II display over [2,2,2,3,6,m]."""
    low = IntPolynomial([1, 1, -1, -4, -6, -7, -8, -7, -4, -1])
    high = IntPolynomial([1, 3, 5, 6, 7, 7, 5, 2]).shift(m + 1)
    return high + low


@dataclass
class PrismSurvivor:
    polyhedron: CombinatorialPolyhedron
    large_edge: tuple
    case: Optional[str]


@dataclass
class OracleResult:
    m: int
    labels: tuple
    enumerated: int
    survivors: list  # PrismSurvivor, canonically sorted
    classes: int  # survivors up to prism symmetry

    @property
    def discrepancies(self) -> list:
        return [s for s in self.survivors if s.case is None]


def prism_search_oracle(m: int, labels: Sequence[int] = (2, 3, 4, 5, 6)) -> OracleResult:
    """All prisms with one pi/m-edge and otherwise labels from ``labels`` with negative large-label slack.

    Vertices must be spherical or euclidean with at least one cusp.  The
    endpoints of the pi/m-edge have two right angles each (any other label
    there makes the vertex hyperbolic), so those four labels are fixed at 2
    and the search runs over the remaining four edges.  The three side faces
    are pairwise adjacent without a common vertex, so their three labels must
    generate an infinite triangle group; otherwise the prism is not realizable
    and its Coxeter group has a finite subgroup no vertex accounts for.
    """
    if m < 7:
        raise ValueError("m must be at least 7")
    labels = tuple(sorted(set(labels)))
    forms = case_forms(m)
    survivors = []
    enumerated = 0
    for big in PRISM_EDGES:
        touching = [e for e in PRISM_EDGES if e != big and set(e) & set(big)]
        free = [e for e in PRISM_EDGES if e != big and e not in touching]
        if 2 not in labels:
            continue
        for combo in product(labels, repeat=len(free)):
            enumerated += 1
            lab = {big: m, **{e: 2 for e in touching}, **dict(zip(free, combo))}
            P = triangular_prism(lab, f"prism m={m} {big} {combo}")
            c = classify_vertices(P)
            if any(t.kind == "hyperbolic" for t in c.kinds.values()) or c.cusps == 0:
                continue
            if sum(Fraction(1, lab[e]) for e in PRISM_VERTICAL_EDGES) >= 1:
                continue
            if large_label_slack(c) >= 0:
                continue
            inv = pseudo_growth(P).reciprocal()
            case = next((name for name, form in forms.items() if inv == form), None)
            survivors.append(PrismSurvivor(P, big, case))
    survivors.sort(key=lambda s: (canonical_form(s.polyhedron), s.large_edge))
    classes = len({canonical_form(s.polyhedron) for s in survivors})
    return OracleResult(m, labels, enumerated, survivors, classes)


def prism_oracle_record(m: int, labels: Sequence[int] = (2, 3, 4, 5, 6)) -> ProofRecord:
    res = prism_search_oracle(m, labels)
    rec = ProofRecord("prism search oracle", {"m": m, "labels": list(res.labels), "enumerated": res.enumerated})
    rec.add("survivors exist", bool(res.survivors), f"{len(res.survivors)} labelings, {res.classes} up to symmetry")
    cases = sorted({s.case for s in res.survivors if s.case})
    rec.add("every survivor matches case I or case II", not res.discrepancies,
            f"cases found: {cases}; unmatched: {len(res.discrepancies)}")
    R = case2_r_polynomial(m)
    lhs = RationalFunction(R, bracket_product([2, 2, 2, 3, 6, m]))
    _compare(rec, "R/[2,2,2,3,6,m] equals the simplified case II form", lhs, case_forms(m)["II"])
    return rec


# the equality case of the bound on large labels


def theorem5_setting_check(m: int, variant: str = "pyramid") -> ProofRecord:
    """Build a polyhedron with k = F - 3 and check its census, Perron and Pisot verdicts.

    ``variant="pyramid"`` is the square pyramid with base labels m, 2, m, 2;
    ``variant="octahedron"`` opens five of the six cusps of the right-angled
    ideal octahedron, which satisfies every Andreev condition.
    """
    if m < 7:
        raise ValueError("m must be at least 7")
    if variant == "pyramid":
        P = equality_pyramid(m)
    elif variant == "octahedron":
        P = opened_octahedron([m] * 5)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rec = ProofRecord("equality case k = F - 3", {"m": m, "variant": variant, "polyhedron": P.name})
    c = classify_vertices(P)
    rep3 = theorem3_bound(P)
    rec.add("k = F - 3", rep3.equality, f"k={rep3.k}, F={rep3.F}")
    rec.add("one (2,2,2,2) cusp, every other vertex (2,2,m)", bool(rep3.equality_census_ok), str(c.vertex_counts))
    rep = analyze_growth(pseudo_growth(P))
    rec.add("growth rate > 1", rep.rate_interval is not None and rep.rate_interval[0] > 1)
    rec.add("Perron certified", rep.perron_verdict == "perron_certified", f"{rep.perron_verdict}: {rep.ku_verdict}")
    rec.add("Pisot advisory", rep.pisot_advisory == "pisot_numeric", rep.pisot_advisory)
    return rec
