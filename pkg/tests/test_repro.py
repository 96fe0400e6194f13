import random
from fractions import Fraction

import pytest

from coxgrowth.catalog import (
    PRISM_EDGES,
    case1_prism,
    case2_prism,
    octahedron,
    opened_octahedron,
    square_antiprism,
    triangular_prism,
)
from coxgrowth.coxeter import steinberg_growth
from coxgrowth.growth import pseudo_growth
from coxgrowth.polyalg import IntPolynomial, RationalFunction, bracket_product
from coxgrowth.polyhedron import PolyhedronError, classify_vertices, coxeter_system_of
from coxgrowth.repro import (
    H_SIGNATURES,
    X_POLY,
    Census5,
    CensusInconsistencyError,
    angle_change_identity,
    case1_numerator,
    case2_numerator,
    case2_r_polynomial,
    case_forms,
    first_difference,
    geometric_sum,
    h_identity,
    h_polynomial,
    nonneg_except_constant,
    prism_oracle_record,
    prism_search_oracle,
    prop3_closed_forms,
    prop3_expansion,
    prop3_q,
    qk_polynomials,
    qk_recursion_check,
    theorem5_setting_check,
)

P = IntPolynomial


def test_x_factorization():
    assert bracket_product([4, 6, 10]) == bracket_product([2, 2, 6]) * X_POLY


def test_geometric_sum():
    assert geometric_sum(2, 4) == P([0, 0, 1, 1, 1])
    assert geometric_sum(3, 2).is_zero()


def test_first_difference_and_nonneg():
    a = RationalFunction(P([1, 2, 3]), P([1]))
    assert first_difference(a, a) is None
    assert first_difference(a, RationalFunction(P([1, 2, 4]), P([1]))) == 2
    assert nonneg_except_constant(P([-1, 0, 3])) is None
    assert nonneg_except_constant(P([-1, 2, -1])) == 2


def test_h_polynomial_of_octahedron():
    c = Census5.from_counts(8, v2222=6)
    H = h_polynomial(c)
    assert H.degree == 16 and H[0] == -1 and H[1] == 4
    f = pseudo_growth(octahedron())
    assert f.reciprocal() == RationalFunction(P([-1, 1]) * H, bracket_product([4, 6, 10]))


def test_h_polynomial_rejects_inconsistent_census():
    with pytest.raises(CensusInconsistencyError):
        h_polynomial(Census5.from_counts(5, v223=1))
    with pytest.raises(ValueError):
        Census5(5, 0, (0,) * 3)
    with pytest.raises(ValueError):
        Census5(-1)


def test_census5_from_polyhedron_rejects_large_labels():
    with pytest.raises(ValueError):
        Census5.from_polyhedron(case1_prism(7))


def test_h_identity_on_random_prisms():
    rng = random.Random(17)
    seen = set()
    done = 0
    while done < 150:
        P_ = triangular_prism({e: rng.randint(2, 6) for e in PRISM_EDGES})
        c = classify_vertices(P_)
        if c.hyperbolic_vertices or c.cusps == 0:
            continue
        rec = h_identity(P_)
        assert rec.passed, rec.failures()
        seen.update(s for s in c.vertex_counts if s in H_SIGNATURES)
        done += 1
    assert len(seen) >= 6


@pytest.mark.parametrize("m", [7, 8, 11])
def test_angle_change_identity(m):
    assert angle_change_identity(case1_prism(7), (0, 3), m).passed
    assert angle_change_identity(case2_prism(9), (0, 3), m).passed


def test_angle_change_tamper_is_caught():
    rec = angle_change_identity(case1_prism(7), (0, 3), 9, tamper=3)
    assert not rec.passed
    assert "coefficient 3" in rec.failures()[0].detail


def test_angle_change_preconditions():
    with pytest.raises(ValueError):
        angle_change_identity(case1_prism(7), (0, 3), 6)
    with pytest.raises(PolyhedronError):
        angle_change_identity(case1_prism(7), (1, 2), 7)


def test_qk_polynomials_k1():
    H = P([-1, 1, 1])
    (Q1,) = qk_polynomials(H, [7])
    assert Q1 == bracket_product([7]) * H + X_POLY * geometric_sum(6, 6)


@pytest.mark.parametrize("ms", [[7], [7, 9], [7, 9, 8], [12, 12, 12]])
def test_qk_recursion_on_opened_octahedra(ms):
    rec = qk_recursion_check(opened_octahedron(ms))
    assert rec.passed, rec.failures()
    assert any("KU" in c.name for c in rec.checks)


def test_qk_recursion_reports_negative_slack():
    rec = qk_recursion_check(case1_prism(7))
    names = {c.name: c.passed for c in rec.checks}
    assert names["large-label slack v2222 + e3 + e4 + e5 + e6 + F - 8 >= 0"] is False
    # the algebra itself still holds
    assert all(p for n, p in names.items() if n.startswith("1/f"))


def test_qk_requires_large_edge():
    with pytest.raises(ValueError):
        qk_recursion_check(octahedron())


@pytest.mark.parametrize("m1, m2", [(7, 7), (9, 7), (15, 8), (15, 15)])
def test_prop3(m1, m2):
    assert prop3_q(m1, m2) == prop3_expansion(m1, m2)
    assert prop3_closed_forms(m1, m2).passed


def test_prop3_domain():
    with pytest.raises(ValueError):
        prop3_closed_forms(7, 6)


def test_case_numerators_at_m7():
    assert case1_numerator(7).coeffs == (-1, 0, 1, 3, 4, 4, 4, 4, 3, 2)
    assert case2_numerator(7).coeffs == (-1, 0, 1, 2, 3, 5, 6, 6, 5, 4, 3, 2)


@pytest.mark.parametrize("m", [7, 10, 13])
def test_case_forms_match_prisms(m):
    forms = case_forms(m)
    assert pseudo_growth(case1_prism(m)).reciprocal() == forms["I"]
    assert pseudo_growth(case2_prism(m)).reciprocal() == forms["II"]
    assert RationalFunction(case2_r_polynomial(m), bracket_product([2, 2, 2, 3, 6, m])) == forms["II"]


@pytest.mark.parametrize("m", [7, 10])
def test_prism_oracle(m):
    res = prism_search_oracle(m)
    assert res.survivors and not res.discrepancies
    assert {s.case for s in res.survivors} == {"I", "II"}
    assert res.enumerated == 9 * 5**4
    for s in res.survivors:
        assert pseudo_growth(s.polyhedron) == steinberg_growth(coxeter_system_of(s.polyhedron))
    assert prism_oracle_record(m).passed


def test_prism_oracle_right_angles_only():
    res = prism_search_oracle(7, labels=(2,))
    assert res.enumerated == 9 and not res.survivors
    assert not prism_oracle_record(7, labels=(2,)).passed


def test_prism_oracle_domain():
    with pytest.raises(ValueError):
        prism_search_oracle(6)


@pytest.mark.parametrize("variant", ["pyramid", "octahedron"])
def test_theorem5_setting(variant):
    rec = theorem5_setting_check(8, variant)
    assert rec.passed, rec.failures()


def test_theorem5_domain():
    with pytest.raises(ValueError):
        theorem5_setting_check(6)
    with pytest.raises(ValueError):
        theorem5_setting_check(7, "cube")


def test_h_identity_on_antiprism():
    assert h_identity(square_antiprism()).passed
    assert Fraction(h_polynomial(Census5.from_polyhedron(square_antiprism()))[1]) == 6
