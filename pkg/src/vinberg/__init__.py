"""Vinberg's algorithm for integral Lorentzian forms, with effective facet bounds."""

__version__ = "0.1.0"

from vinberg.forms import (  # noqa: E402
    ControlVector, FormError, QuadraticForm, inner, is_admissible, reflect,
    reflection_matrix, signature,
)
from vinberg.roots import (  # noqa: E402
    Root, admissible_norms, enumerate_roots_at, is_crystallographic, normalize,
)
from vinberg.chamber import ChamberSystem, simple_system, stabilizer_roots  # noqa: E402
from vinberg.polyhedra import (  # noqa: E402
    ConeDescription, VertexReport, extreme_rays, facet_cycle, facet_recovery,
    finite_volume_test,
)
from vinberg.diagram import (  # noqa: E402
    CoxeterDiagram, Dashed, area_gauss_bonnet, classify_pair, coxeter_diagram,
    emit_dot, gram_matrix,
)
from vinberg.engine import (  # noqa: E402
    RunConfig, RunVerdict, Status, VinbergState, accept_filter, distance_key,
    initial_state, next_batch, run,
)

__all__ = [
    "ChamberSystem", "ConeDescription", "ControlVector", "CoxeterDiagram", "Dashed",
    "FormError", "QuadraticForm", "Root", "RunConfig", "RunVerdict", "Status",
    "VertexReport", "VinbergState", "accept_filter", "admissible_norms",
    "area_gauss_bonnet", "classify_pair", "coxeter_diagram", "distance_key",
    "emit_dot", "enumerate_roots_at", "extreme_rays", "facet_cycle", "facet_recovery",
    "finite_volume_test", "gram_matrix", "initial_state", "inner", "is_admissible",
    "is_crystallographic", "next_batch", "normalize", "reflect", "reflection_matrix",
    "run", "signature", "simple_system", "stabilizer_roots",
]
