"""
The classical triangle
======================

Run the reflection search on x1^2 + x2^2 - x0^2 from the point (1, 0, 0)
and look at the polygon it finds.
"""

from vinberg import QuadraticForm, coxeter_diagram, emit_dot
from vinberg.diagram import area_gauss_bonnet
from vinberg.engine import RunConfig, run
from vinberg.polyhedra import facet_cycle

form = QuadraticForm.diagonal([-1, 1, 1])
verdict = run(form, (1, 0, 0), RunConfig(facet_cap=50))
print(verdict.status.value)

# the first roots are orthogonal to u0 and bound the stabilizer chamber;
# the rest were picked in order of distance from x0
for i, r in enumerate(verdict.roots):
    where = "chamber" if i < verdict.chamber_size else "search"
    print(f"{where:8s} e = {r.e}  (e,e) = {r.norm}  (e,u0) = {-r.a}")

###############################################################################
# Angles between sides come straight from the Gram matrix of the roots.
diagram = coxeter_diagram(form, verdict.roots)
print(emit_dot(diagram))

# two proper vertices and one on the circle at infinity
rep = verdict.vertex_report
print("proper", rep.proper_count, "ideal", rep.ideal_count)

area = area_gauss_bonnet(diagram, facet_cycle(verdict.cone))
print("area =", area, "* pi")
