# # Prisms with one small angle
#
# A triangular prism with one edge of angle pi/m (m >= 7) and a single cusp
# has one of two growth functions.  This walks through both.

# ## Imports

from fractions import Fraction

from coxgrowth.catalog import case1_prism, case2_prism
from coxgrowth.growth import analyze_growth, polyhedron_denominator_hints, pseudo_growth, rate_from_series
from coxgrowth.polyhedron import classify_vertices, is_isomorphic, open_cusp, pinch
from coxgrowth.report import certified_digits

# ## Census

P = case1_prism(9)
c = classify_vertices(P)
print(P)
print("vertex types", c.vertex_counts)
print("edge labels", c.edge_counts, "k =", c.k, "cusps =", c.cusps)

# ## Growth functions and certified rates

for build in (case1_prism, case2_prism):
    P = build(9)
    f = pseudo_growth(P)
    rep = analyze_growth(f, Fraction(1, 2**60), hints=polyhedron_denominator_hints(P))
    lo, hi = rep.rate_interval
    print(P.name)
    print("  1/f denominator normal form:", rep.denominator_normal_form.coeffs)
    print("  rate", certified_digits(lo, hi, 18), rep.perron_verdict, rep.pisot_advisory)
    est = rate_from_series(f, 400)
    print(f"  series check: a_n/a_(n-1) = {float(est.ratio):.15f}, a_n^(1/n) = {est.root:.6f}")

# ## Pinching and opening
#
# Contracting the pi/9 edge leaves a square pyramid with a right-angled apex
# cusp.  Opening that cusp again, with the right pairing of opposite faces,
# gives back the prism.

P = case1_prism(9)
Q = pinch(P, (0, 3))
print(Q, classify_vertices(Q).vertex_counts)
back = [open_cusp(Q, 0, pairing, 9) for pairing in (0, 1)]
print([is_isomorphic(R, P) for R in back])
