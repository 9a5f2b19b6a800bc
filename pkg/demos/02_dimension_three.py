"""
Polyhedra in hyperbolic 3-space
===============================

The same search one dimension up, then a small family of forms
-d x0^2 + x1^2 + x2^2 + x3^2.
"""

import time

from vinberg import QuadraticForm, coxeter_diagram
from vinberg.forms import inner
from vinberg.engine import RunConfig, run

form = QuadraticForm.diagonal([-1, 1, 1, 1])
v = run(form, (1, 0, 0, 0), RunConfig(facet_cap=50))
print(v.status.value, [r.e for r in v.roots])
print(coxeter_diagram(form, v.roots).to_json())

###############################################################################
# Rays of the final cone: negative norm is a vertex inside, zero is a cusp.
for ray in v.cone.rays:
    print(ray, inner(form, ray, ray))

###############################################################################
# A few more forms.  Larger d means more roots and longer searches.
for d in (1, 2, 3, 5, 6, 7):
    f = QuadraticForm.diagonal([-d, 1, 1, 1])
    t0 = time.perf_counter()
    v = run(f, (1, 0, 0, 0), RunConfig(batch_budget=3000))
    print(f"d={d}: {v.status.value}, {len(v.roots)} facets, "
          f"{v.stats['keys_examined']} keys, {time.perf_counter() - t0:.2f}s")
