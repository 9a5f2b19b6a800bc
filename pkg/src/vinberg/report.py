"""Run reports, atomic file output and resumable session caches."""
from fractions import Fraction
import hashlib
import heapq
import json
import os
import tempfile

from vinberg import __version__
from vinberg.diagram import area_gauss_bonnet, coxeter_diagram, emit_dot, gram_matrix
from vinberg.engine import Status, VinbergState
from vinberg.forms import ControlVector, inner
from vinberg.polyhedra import facet_cycle, finite_volume_test
from vinberg.roots import Root

SCHEMA = "vinberg-report/1"
CACHE_SCHEMA = "vinberg-cache/1"


class CacheError(ValueError):
    pass


def _q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(v):
    return [str(int(x)) for x in v]


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def digest(obj):
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def form_digest(form, u0):
    return digest({"gram": [list(r) for r in form.gram], "u0": list(getattr(u0, "u0", u0))})


def build_report(form, u0, config, verdict, registry=None):
    """Assemble the JSON-ready report of a finished run."""
    u0 = getattr(u0, "u0", u0)
    roots = list(verdict.roots)
    keys = [None] * verdict.chamber_size + [_q(k) for k in verdict.distance_keys]
    accepted = [{"e": _vec(r.e), "norm": str(r.norm), "a": str(r.a),
                 "chamber": i < verdict.chamber_size, "distance_key": keys[i]}
                for i, r in enumerate(roots)]

    rays, counts, area = [], None, None
    if roots:
        cone, rep = verdict.cone, verdict.vertex_report
        if verdict.status is not Status.FINITE_VOLUME or cone is None:
            _, rep, cone = finite_volume_test(form, roots, u0)
        kinds = {v: "proper" for v in rep.proper_rays}
        kinds.update({v: "ideal" for v in rep.ideal_rays})
        for v in cone.rays:
            rays.append({"v": _vec(v), "norm": str(inner(form, v, v)),
                         "kind": kinds.get(v, "spacelike")})
        counts = {"proper": str(rep.proper_count), "ideal": str(rep.ideal_count),
                  "spacelike": str(len(rep.spacelike_rays)),
                  "lineality": str(len(cone.lineality))}
        if verdict.status is Status.FINITE_VOLUME and form.dim == 2:
            area = _q(area_gauss_bonnet(coxeter_diagram(form, roots), facet_cycle(cone)))

    diagram = coxeter_diagram(form, roots) if _all_acute(form, roots) else None
    return {
        "schema": SCHEMA,
        "version": __version__,
        "input": {
            "form": {"dim": form.dim, "gram": [_vec(r) for r in form.gram]},
            "control": _vec(u0),
            "config": config.to_json(),
            "registry_digest": digest(registry.to_json()) if registry is not None else None,
        },
        "status": verdict.status.value,
        "message": verdict.message,
        "facet_cap": None if verdict.cap is None else str(verdict.cap),
        "accepted": accepted,
        "gram": [_vec(r) for r in gram_matrix(form, roots)],
        "diagram": diagram.to_json() if diagram else None,
        "rays": rays,
        "vertex_counts": counts,
        "area_over_pi": area,
        "bounds": verdict.breakdown.to_json() if verdict.breakdown is not None else None,
        "stats": {k: str(v) for k, v in sorted(verdict.stats.items())},
        "timing": {"seconds": f"{verdict.elapsed:.6f}"},
    }


def _all_acute(form, roots):
    return all(inner(form, a.e, b.e) <= 0 for i, a in enumerate(roots) for b in roots[i + 1:])


def strip_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


def atomic_write(path, text):
    """Write ``text`` to ``path`` through a temporary file and a rename."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=directory)
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def write_report(report, path):
    atomic_write(path, canonical_json(report))


def write_dot(form, roots, path):
    atomic_write(path, emit_dot(coxeter_diagram(form, roots)))


def save_session(state, path):
    obj = {
        "cache": CACHE_SCHEMA,
        "version": __version__,
        "digest": form_digest(state.form, state.u0),
        "accepted": [[_vec(r.e), str(r.norm), str(r.a)] for r in state.accepted],
        "chamber_size": state.chamber_size,
        "frontier": sorted([_q(k), str(s), str(a)] for k, s, a in state.frontier),
        "counters": {"iterations": state.iterations, "keys_examined": state.keys_examined,
                     "candidates_examined": state.candidates_examined,
                     "volume_checks": state.volume_checks},
        "distance_log": [_q(k) for k in state.distance_log],
        "finite": state.finite,
    }
    atomic_write(path, canonical_json(obj))


def restore_session(path, form, u0):
    """Rebuild a :class:`VinbergState` saved by :func:`save_session`."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CacheError(f"unreadable session cache {path}: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("cache") != CACHE_SCHEMA:
        raise CacheError(f"session cache version mismatch (expected {CACHE_SCHEMA})")
    if not isinstance(u0, ControlVector):
        u0 = ControlVector.make(form, u0)
    if obj.get("digest") != form_digest(form, u0):
        raise CacheError("cache/form mismatch")
    try:
        accepted = [Root(tuple(int(x) for x in e), int(s), int(a)) for e, s, a in obj["accepted"]]
        frontier = [(Fraction(k), int(s), int(a)) for k, s, a in obj["frontier"]]
        heapq.heapify(frontier)
        c = obj["counters"]
        state = VinbergState(form, u0, accepted, int(obj["chamber_size"]), frontier,
                             int(c["iterations"]), int(c["keys_examined"]),
                             int(c["candidates_examined"]), int(c["volume_checks"]),
                             [Fraction(k) for k in obj["distance_log"]], bool(obj["finite"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheError(f"corrupted session cache {path}: {exc}") from exc
    for r in accepted:
        if inner(form, r.e, r.e) != r.norm or inner(form, r.e, u0.u0) != -r.a:
            raise CacheError(f"corrupted session cache {path}: inconsistent root {r.e}")
    return state
