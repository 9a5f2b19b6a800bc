"""Vinberg's algorithm with an explicit facet cap.

Mirrors are processed in increasing order of ``a^2 / (s |q|)`` where
``s = (e, e)``, ``a = -(e, u0)`` and ``q = (u0, u0)``; that ratio is the
squared hyperbolic sine of the distance from the control point to the mirror.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
import heapq
import logging
import time

from vinberg.bounds import auto_facet_cap, default_registry, facet_breakdown
from vinberg.chamber import simple_system, stabilizer_roots
from vinberg.forms import ControlVector, inner, require_admissible
from vinberg.polyhedra import finite_volume_test
from vinberg.roots import admissible_norms, enumerate_roots_at

log = logging.getLogger(__name__)

FACET_BOUND_MESSAGE = ("facet cap exceeded: the integral orthogonal group O_0(f, Z) contains "
                       "no maximal arithmetic hyperbolic reflection subgroup")


class Status(str, Enum):
    FINITE_VOLUME = "FiniteVolume"
    FACET_BOUND_EXCEEDED = "FacetBoundExceeded"
    BUDGET_EXHAUSTED = "BudgetExhausted"


class EngineError(ValueError):
    pass


@dataclass
class RunConfig:
    """Engine settings.

    ``facet_cap`` is an int, ``"auto"`` or ``None`` (no cap).  ``batch_budget``
    counts distance keys examined, empty ones included.  With
    ``check_every_batch`` false the finite-volume test runs after every
    accepted root instead of once per accepting batch.
    """

    facet_cap: object = None
    batch_budget: int = 10000
    check_every_batch: bool = True
    threads: int = 1
    registry: object = None
    degree: int = 1

    def to_json(self):
        cap = self.facet_cap
        return {"facet_cap": None if cap is None else str(cap),
                "batch_budget": str(self.batch_budget),
                "check_every_batch": self.check_every_batch,
                "degree": str(self.degree)}

    @classmethod
    def from_json(cls, obj, **kw):
        cap = obj.get("facet_cap")
        if cap is not None and cap != "auto":
            cap = int(cap)
        return cls(facet_cap=cap, batch_budget=int(obj.get("batch_budget", 10000)),
                   check_every_batch=bool(obj.get("check_every_batch", True)),
                   degree=int(obj.get("degree", 1)), **kw)


@dataclass
class VinbergState:
    form: object
    u0: ControlVector
    accepted: list
    chamber_size: int
    frontier: list  # heap of (key, s, a)
    iterations: int = 0
    keys_examined: int = 0
    candidates_examined: int = 0
    volume_checks: int = 0
    distance_log: list = field(default_factory=list)
    finite: bool = False

    @property
    def chamber(self):
        return self.accepted[:self.chamber_size]


@dataclass(frozen=True)
class RunVerdict:
    status: Status
    roots: tuple
    stats: dict
    distance_keys: tuple
    chamber_size: int
    cap: object = None
    breakdown: object = None
    vertex_report: object = None
    cone: object = None
    message: str = ""
    elapsed: float = 0.0


def distance_key(form, u0, e):
    """``sinh^2`` of the distance from ``x0`` to the mirror of ``e``, exactly."""
    u0 = getattr(u0, "u0", u0)
    e = getattr(e, "e", e)
    eu = inner(form, e, u0)
    if eu >= 0:
        raise ValueError("mirror not separating: (e, u0) must be negative")
    return Fraction(eu * eu, -inner(form, e, e) * inner(form, u0, u0))


def initial_state(form, u0):
    require_admissible(form)
    if not isinstance(u0, ControlVector):
        u0 = ControlVector.make(form, u0)
    chamber = simple_system(form, stabilizer_roots(form, u0), u0).simple_roots
    q = -u0.q
    frontier = [(Fraction(1, s * q), s, 1) for s in admissible_norms(form)]
    heapq.heapify(frontier)
    return VinbergState(form, u0, list(chamber), len(chamber), frontier)


def next_batch(state, budget=None, executor=None):
    """Pop the next non-empty batch of candidates at the smallest distance key.

    Every key popped counts against ``budget``.  Returns ``(roots, key)``, or
    ``None`` once the budget is spent.
    """
    while budget is None or state.keys_examined < budget:
        key = state.frontier[0][0]
        pairs = []
        while state.frontier and state.frontier[0][0] == key:
            _, s, a = heapq.heappop(state.frontier)
            pairs.append((s, a))
        for s, a in pairs:
            heapq.heappush(state.frontier, (Fraction((a + 1) ** 2, s * -state.u0.q), s, a + 1))
        state.keys_examined += 1
        pairs.sort()
        if executor is not None and len(pairs) > 1:
            results = list(executor.map(
                lambda p: enumerate_roots_at(state.form, state.u0, p[0], p[1]), pairs))
        else:
            results = [enumerate_roots_at(state.form, state.u0, s, a) for s, a in pairs]
        batch = sorted(r for rs in results for r in rs)
        state.candidates_examined += len(batch)
        if batch:
            return batch, key
    return None


def _acceptable(form, accepted, r):
    return all(inner(form, r.e, b.e) <= 0 for b in accepted)


def accept_filter(state, batch, key=None):
    """Append every candidate of ``batch`` whose products with all accepted roots are <= 0."""
    taken = []
    for r in batch:
        if _acceptable(state.form, state.accepted, r):
            state.accepted.append(r)
            state.iterations += 1
            if key is not None:
                state.distance_log.append(key)
            taken.append(r)
    return taken


def resolve_cap(form, config):
    if config.facet_cap != "auto":
        return config.facet_cap, None
    reg = config.registry if config.registry is not None else default_registry(form.dim)
    cap = auto_facet_cap(form.dim, config.degree, reg)
    if cap is None:
        raise EngineError("auto facet cap needs a covolume_cap entry in the registry; "
                          "pass an explicit cap instead")
    return cap, facet_breakdown(form.dim, config.degree, reg.get("covolume_cap"), reg)


def run(form, u0, config=None, state=None):
    """Run the algorithm until finite volume, the facet cap, or the budget.

    Parameters
    ----------
    form : QuadraticForm
    u0 : ControlVector or sequence of int
    config : RunConfig, optional
    state : VinbergState, optional
        A fresh or restored state; it is advanced in place, so callers that
        want to persist progress pass their own.

    Returns
    -------
    RunVerdict
    """
    config = config or RunConfig()
    t0 = time.perf_counter()
    cap, breakdown = resolve_cap(form, config)
    if state is None:
        state = initial_state(form, u0)
    log.debug("chamber: %s", [r.e for r in state.chamber])

    executor = ThreadPoolExecutor(config.threads) if config.threads > 1 else None
    try:
        status, report, cone = None, None, None
        if state.finite:
            # restored from a finished run; recompute the cone without counting a check
            _, report, cone = finite_volume_test(state.form, state.accepted, state.u0)
            status = Status.FINITE_VOLUME
        elif state.iterations and cap is not None and len(state.accepted) > cap:
            status = Status.FACET_BOUND_EXCEEDED
        while status is None:
            got = next_batch(state, config.batch_budget, executor)
            if got is None:
                status = Status.BUDGET_EXHAUSTED
                break
            batch, key = got
            if config.check_every_batch:
                taken = accept_filter(state, batch, key)
                if not taken:
                    continue
                if cap is not None and len(state.accepted) > cap:
                    status = Status.FACET_BOUND_EXCEEDED
                    break
                ok, report, cone = _check(state)
                if ok:
                    status = Status.FINITE_VOLUME
            else:
                for r in batch:
                    if not accept_filter(state, [r], key):
                        continue
                    if cap is not None and len(state.accepted) > cap:
                        status = Status.FACET_BOUND_EXCEEDED
                        break
                    ok, report, cone = _check(state)
                    if ok:
                        status = Status.FINITE_VOLUME
                        break
    finally:
        if executor is not None:
            executor.shutdown()
    state.finite = status is Status.FINITE_VOLUME

    stats = {
        "iterations": state.iterations,
        "facets": len(state.accepted),
        "keys_examined": state.keys_examined,
        "candidates_examined": state.candidates_examined,
        "volume_checks": state.volume_checks,
    }
    message = {
        Status.FINITE_VOLUME: "finite-volume polyhedron found: the form is reflective",
        Status.FACET_BOUND_EXCEEDED: FACET_BOUND_MESSAGE,
        Status.BUDGET_EXHAUSTED: "candidate budget exhausted before a verdict",
    }[status]
    return RunVerdict(status, tuple(state.accepted), stats, tuple(state.distance_log),
                      state.chamber_size, cap, breakdown, report, cone, message,
                      time.perf_counter() - t0)


def _check(state):
    state.volume_checks += 1
    return finite_volume_test(state.form, state.accepted, state.u0)
