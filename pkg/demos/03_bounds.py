"""
Facet bounds from the volume
============================

Turn a covolume into an upper bound on the number of facets, and compare
with what the search actually finds in the plane.
"""

import mpmath

from vinberg.bounds import (default_registry, facet_breakdown, rank_lower_bound,
                            toy_registry)
from vinberg.diagram import area_gauss_bonnet, coxeter_diagram
from vinberg.engine import run
from vinberg.forms import QuadraticForm
from vinberg.polyhedra import facet_cycle

# toy constants chosen so every step can be checked by hand
toy = toy_registry()
b = facet_breakdown(2, 1, 10, toy)
print("ball volume", mpmath.nstr(b.ball_vol, 15))
print("V1", mpmath.nstr(b.V1, 15), " V2", mpmath.nstr(b.V2, 15), " cap", b.F_bound)

###############################################################################
# Every constant in the shipped registry carries a note on where it comes from.
reg = default_registry(2)
for name, c in sorted(reg.constants.items()):
    print(f"{name:16s} {c.value!s:>22}  {c.provenance[:60]}")

###############################################################################
# Areas of the polygons found for -d x0^2 + x1^2 + x2^2 sit well inside
# the window [lower, upper].
for d in range(1, 12):
    f = QuadraticForm.diagonal([-d, 1, 1])
    v = run(f, (1, 0, 0))
    coeff = area_gauss_bonnet(coxeter_diagram(f, v.roots), facet_cycle(v.cone))
    area = mpmath.pi * coeff.numerator / coeff.denominator
    lo = rank_lower_bound(2, area, reg)
    hi = facet_breakdown(2, 1, area, reg).F_bound
    print(f"d={d:2d}  area={str(coeff):>5s} pi  {lo} <= {len(v.roots)} <= {hi}")
