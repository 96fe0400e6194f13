# # Identities behind the Perron property
#
# Each check below compares a growth function computed from a polyhedron
# with a closed form built from bracket polynomials.

# ## Imports

from coxgrowth.catalog import opened_octahedron, case2_prism
from coxgrowth.repro import (
    angle_change_identity,
    prism_search_oracle,
    prop3_q,
    qk_recursion_check,
)


def show(rec):
    print(f"{rec.name} {rec.params}: {'pass' if rec.passed else 'FAIL'}")
    for c in rec.checks:
        print(f"    [{'ok' if c.passed else 'FAIL'}] {c.name} {c.detail}")


# ## Changing one label
#
# Relabeling a pi/6 edge to pi/m adds an explicit term to 1/f.

show(angle_change_identity(case2_prism(7), (0, 3), 11))

# A deliberate error in the correction term is caught at the first differing coefficient.

show(angle_change_identity(case2_prism(7), (0, 3), 11, tamper=4))

# ## Several large labels
#
# Opening three cusps of the ideal octahedron gives three pi/m edges; the
# numerator of 1/f is built up one label at a time.

show(qk_recursion_check(opened_octahedron([7, 9, 8])))

# ## Two labels on six faces

print(prop3_q(9, 7).coeffs)

# ## Exhaustive prism search
#
# Every prism with one pi/m edge, other angles pi/2 .. pi/6, a cusp, and too
# few small angles for the general argument, has one of two growth functions.

res = prism_search_oracle(8)
print(res.enumerated, "labelings tried,", len(res.survivors), "survivors,", res.classes, "up to symmetry")
for s in res.survivors[:: max(1, len(res.survivors) // 4)]:
    print("  case", s.case, sorted(s.polyhedron.labels.items()))
