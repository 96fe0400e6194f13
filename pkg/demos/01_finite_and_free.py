# # Growth series of Coxeter groups: finite pieces and a free product

# ## Imports

from coxgrowth.coxeter import INF, CoxeterSystem, FiniteTypeLabel, classify_finite, solomon_series, steinberg_growth
from coxgrowth.growth import analyze_growth
from coxgrowth.polyalg import series_coefficients

# ## Finite groups
#
# A finite Coxeter group has a polynomial growth series, the product of
# brackets [d] = 1 + t + ... + t^(d-1) over its degrees.

h3 = FiniteTypeLabel("H3", 3)
print(h3, solomon_series(h3).coeffs, "order", h3.order())

# Steinberg's alternating sum over finite parabolic subgroups gives the same
# polynomial when the whole group is finite.

path = CoxeterSystem.from_edges(3, [(0, 1, 5), (1, 2, 3)])
print(classify_finite(path))
print(steinberg_growth(path))

# ## Three free involutions
#
# With every product of order infinity, only the empty set and the singletons
# are finite, and the series is (1 + t)/(1 - 2t).

free = CoxeterSystem.from_edges(3, [(0, 1, INF), (0, 2, INF), (1, 2, INF)])
f = steinberg_growth(free)
print(f)
print(series_coefficients(f, 10))

# The growth rate is the reciprocal of the smallest positive pole.

rep = analyze_growth(f)
print(rep.rate_interval, rep.perron_verdict, rep.ku_reason)
