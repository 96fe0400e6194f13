import random
from fractions import Fraction

import pytest

from _support import TETRA_FACES, random_valid_polyhedron, with_labels
from coxgrowth.catalog import case1_prism, case2_prism, octahedron, square_pyramid
from coxgrowth.coxeter import INF, CoxeterSystem, steinberg_growth
from coxgrowth.growth import (
    KU_APPLIES,
    KU_FAILS_DEGREE,
    KU_FAILS_GCD,
    KU_FAILS_NONNEG,
    DegenerateGrowthError,
    analyze_growth,
    cyclotomic,
    denominator_normal_form,
    ku_criterion,
    pisot_advisory,
    polyhedron_denominator_hints,
    pseudo_growth,
    rate_from_series,
    strip_cyclotomic,
    triangle_growth,
)
from coxgrowth.polyalg import IntPolynomial, RationalFunction, bracket_product, isolate_smallest_positive_root
from coxgrowth.polyhedron import coxeter_system_of
from coxgrowth.repro import case_forms

P = IntPolynomial
W40 = Fraction(1, 2**40)


@pytest.mark.parametrize(
    "coeffs, verdict",
    [
        ([-1, 1, 1], KU_APPLIES),  # t^2 + t - 1
        ([-1, 0, 1], KU_FAILS_GCD),  # t^2 - 1: support {2}
        ([-1, 0, 1, 0, 1], KU_FAILS_GCD),
        ([-1, 2, -1, 1], KU_FAILS_NONNEG),
        ([1, 1, 1], KU_FAILS_NONNEG),  # scales to -1 - t - t^2
        ([-1, 5], KU_FAILS_DEGREE),
        ([2, 1, 1], KU_FAILS_NONNEG),  # constant 2 does not divide 1
        ([0, 1, 1], KU_FAILS_NONNEG),
    ],
)
def test_ku_criterion(coeffs, verdict):
    assert ku_criterion(P(coeffs)).verdict == verdict


def test_ku_gcd_on_support_of_odd_powers():
    assert ku_criterion(P([-1, 0, 2, 0, 0, 0, 0, 0, 0, 3])).verdict == KU_APPLIES  # gcd(2, 9) = 1
    assert ku_criterion(P([-1, 0, 0, 2, 0, 0, 3])).verdict == KU_FAILS_GCD  # gcd(3, 6) = 3


def test_triangle_growth():
    assert triangle_growth(2, 2, 2) == bracket_product([2, 2, 2])
    assert triangle_growth(2, 2, 7) == bracket_product([2, 2, 7])
    assert triangle_growth(2, 3, 5) == bracket_product([2, 6, 10])
    with pytest.raises(ValueError):
        triangle_growth(2, 3, 7)


def test_pseudo_growth_equals_steinberg_on_random_polyhedra():
    rng = random.Random(3)
    for _ in range(12):
        C = random_valid_polyhedron(rng)
        assert pseudo_growth(C) == steinberg_growth(coxeter_system_of(C))


def test_pseudo_growth_differs_from_steinberg_on_compact_finite_case():
    # the right-angled tetrahedron group is (Z/2)^4: its Steinberg sum has the full set term
    tet = with_labels(TETRA_FACES)
    assert steinberg_growth(coxeter_system_of(tet)) == RationalFunction(bracket_product([2, 2, 2, 2]))
    assert pseudo_growth(tet) != steinberg_growth(coxeter_system_of(tet))


def test_octahedron_exact():
    f = pseudo_growth(octahedron())
    assert f == RationalFunction(P([1, 1]) ** 2, P([1, -1]) * P([1, -5]))
    rep = analyze_growth(f, W40, hints=polyhedron_denominator_hints(octahedron()))
    assert rep.radius_interval.exact and rep.rate_interval == (5, 5)
    assert rep.ku_verdict == KU_APPLIES and rep.perron_verdict == "perron_certified"


def test_normal_form_recovers_cancelled_brackets():
    # prism Case I at m=7: the displayed form has degree m+2 after removing (t-1)
    C = case1_prism(7)
    f = pseudo_growth(C)
    g, ku = denominator_normal_form(f, polyhedron_denominator_hints(C))
    assert ku.applies and g[0] == -1
    assert f.reciprocal() == case_forms(7)["I"]


def test_analyze_degenerate():
    f = steinberg_growth(CoxeterSystem.from_edges(2, [(0, 1, 7)]))
    rep = analyze_growth(f)
    assert rep.degenerate and rep.rate_interval is None
    with pytest.raises(DegenerateGrowthError):
        rate_from_series(f, 50)


def test_free_product_of_three_involutions():
    f = steinberg_growth(CoxeterSystem.from_edges(3, [(0, 1, INF), (0, 2, INF), (1, 2, INF)]))
    rep = analyze_growth(f, W40)
    assert rep.rate_interval == (2, 2)
    assert rep.ku_verdict == KU_FAILS_DEGREE and rep.perron_verdict == "perron_numeric_only"
    s = rate_from_series(f, 200)
    assert s.ratio == 2


@pytest.mark.parametrize("builder", [case1_prism, case2_prism])
@pytest.mark.parametrize("m", [7, 9, 12])
def test_prism_rates_are_certified(builder, m):
    C = builder(m)
    rep = analyze_growth(pseudo_growth(C), W40, hints=polyhedron_denominator_hints(C))
    lo, hi = rep.rate_interval
    assert 1 < lo <= hi and hi - lo <= W40
    assert rep.perron_verdict == "perron_certified"
    assert rep.modulus_gap >= 1e-6
    assert rep.pisot_advisory in ("pisot_numeric", "not_pisot_numeric")


def test_case2_rate_digits():
    rep = analyze_growth(pseudo_growth(case2_prism(7)), W40)
    assert abs(float(rep.rate_midpoint) - 2.00802383526) < 1e-10


def test_cyclotomic():
    assert cyclotomic(1) == P([-1, 1])
    assert cyclotomic(6) == P([1, -1, 1])
    assert cyclotomic(12) == P([1, 0, -1, 0, 1])
    g = P([-1, -1, 1]) * cyclotomic(5) * cyclotomic(3)
    assert strip_cyclotomic(g) == P([-1, -1, 1])


def test_pisot_advisory():
    # t^2 + t - 1: reciprocal of the golden ratio, conjugate outside the disk is -1.618.. -> Pisot
    assert pisot_advisory(P([-1, 1, 1]), (5**0.5 - 1) / 2) == "pisot_numeric"
    # reciprocal of a Salem-like polynomial has roots on the unit circle that are not cyclotomic
    lehmer = P([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    r0 = float(isolate_smallest_positive_root(lehmer, W40).midpoint)
    assert pisot_advisory(lehmer, r0) == "not_pisot_numeric"


def test_right_angled_pyramid_is_euclidean():
    # all right angles on a square pyramid: a virtually abelian group, polynomial growth
    f = pseudo_growth(square_pyramid())
    assert f == RationalFunction(P([1, 1]) ** 3, P([1, -1]) ** 2)
    rep = analyze_growth(f, W40)
    assert rep.rate_interval == (1, 1) and rep.perron_verdict == "inconclusive"


def test_rate_from_series_bounds():
    f = pseudo_growth(case2_prism(8))
    s = rate_from_series(f, 200)
    rep = analyze_growth(f, W40)
    assert abs(float(s.ratio) - float(rep.rate_midpoint)) < 1e-9
    with pytest.raises(ValueError):
        rate_from_series(f, 5)
