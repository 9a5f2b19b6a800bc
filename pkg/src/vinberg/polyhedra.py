"""Exact double description of polyhedral cones and the finite-volume test.

Cones are ``{x : a_k . x <= 0}``.  For Lorentzian halfspaces the rows are
``a_k = e_k^T G`` so that the constraint reads ``(e_k, x) <= 0``.
"""
from dataclasses import dataclass

from vinberg._linalg import dot, mat_vec, primitive, rank
from vinberg.forms import inner


@dataclass(frozen=True)
class ConeDescription:
    """Generators of a polyhedral cone together with its constraint rows.

    Attributes
    ----------
    halfspaces : tuple
        Input normals as given.
    rows : tuple
        Constraint rows actually used (``e^T G`` when a form was supplied).
    rays : tuple
        Primitive integer generators of the extreme rays, sorted.
    lineality : tuple
        Basis of the lineality space (empty for pointed cones).
    incidence : tuple of frozenset
        For each ray, the indices of the constraints tight at it.
    """

    halfspaces: tuple
    rows: tuple
    rays: tuple
    lineality: tuple
    incidence: tuple

    @property
    def ambient(self):
        return len(self.rows[0]) if self.rows else len(self.rays[0])

    @property
    def pointed(self):
        return not self.lineality


@dataclass(frozen=True)
class VertexReport:
    proper_count: int
    ideal_count: int
    spacelike_rays: tuple
    proper_rays: tuple = ()
    ideal_rays: tuple = ()


def extreme_rays(dim, halfspaces, form=None):
    """Incremental double description of ``{x : a_k . x <= 0}`` in ``R^{dim+1}``.

    The lineality space starts as the whole space and shrinks as constraints
    are inserted; afterwards each constraint splits the ray set by sign and
    adjacent (positive, negative) pairs, detected by an exact rank test,
    produce the new rays.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    N = dim + 1
    halfspaces = tuple(tuple(int(x) for x in h) for h in halfspaces)
    if any(len(h) != N for h in halfspaces):
        raise ValueError(f"shape: halfspace normals must have length {N}")
    if form is not None:
        rows = tuple(tuple(mat_vec(form.gram, h)) for h in halfspaces)
    else:
        rows = halfspaces

    lin = [tuple(int(i == j) for j in range(N)) for i in range(N)]
    rays = []  # list of (vector, frozenset of tight constraint indices)
    for k, a in enumerate(rows):
        idx = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
        if idx is not None:
            l = lin.pop(idx)
            al = dot(a, l)
            sgn = 1 if al > 0 else -1
            lin = [primitive([al * x - dot(a, v) * y for x, y in zip(v, l)]) if dot(a, v) else v
                   for v in lin]
            rays = [(_shift(r, a, l, al, sgn), t | {k}) for r, t in rays]
            rays.append((tuple(-sgn * x for x in l), frozenset(range(k))))
            continue
        target = N - len(lin) - 2
        pos, neg, keep = [], [], []
        for r, t in rays:
            v = dot(a, r)
            if v > 0:
                pos.append((r, t, v))
            elif v < 0:
                neg.append((r, t, v))
                keep.append((r, t))
            else:
                keep.append((r, t | {k}))
        for p, tp, vp in pos:
            for q, tq, vq in neg:
                common = tp & tq
                if len(common) < target:
                    continue
                if rank([rows[i] for i in common]) != target:
                    continue
                new = primitive([vp * y - vq * x for x, y in zip(p, q)])
                keep.append((new, common | {k}))
        rays = keep

    uniq = sorted({r for r, _ in rays})
    incidence = tuple(frozenset(i for i, a in enumerate(rows) if dot(a, r) == 0) for r in uniq)
    return ConeDescription(halfspaces, rows, tuple(uniq), tuple(lin), incidence)


def _shift(r, a, l, al, sgn):
    # move r along the eliminated lineality vector until a.r = 0, scaling by |al| > 0
    ar = dot(a, r)
    if ar == 0:
        return r
    return primitive([sgn * (al * x - ar * y) for x, y in zip(r, l)])


def facet_recovery(cone):
    """Indices of essential halfspaces (those supporting a facet of the cone)."""
    N = cone.ambient
    essential = set()
    seen = []
    for i, a in enumerate(cone.rows):
        if not any(a):
            continue
        tight = [r for r, t in zip(cone.rays, cone.incidence) if i in t]
        if rank(tight + list(cone.lineality)) != N - 1:
            continue
        # a positive multiple of an earlier essential row supports the same facet
        if any(rank([a, b]) == 1 and dot(a, b) > 0 for b in seen):
            continue
        seen.append(a)
        essential.add(i)
    return essential


def finite_volume_test(form, roots, u0):
    """Decide whether the polyhedron cut out by ``roots`` has finite volume.

    Every extreme ray of ``{x : (e, x) <= 0}`` must lie in the closure of the
    light cone sheet containing ``u0``.

    Returns
    -------
    (bool, VertexReport, ConeDescription)
    """
    u0 = getattr(u0, "u0", u0)
    es = [getattr(r, "e", r) for r in roots]
    cone = extreme_rays(form.dim, es, form)
    proper, ideal, bad = [], [], []
    for v in cone.rays:
        vv = inner(form, v, v)
        # rays with (v,v) <= 0 on the opposite sheet count as witnesses too
        if vv > 0 or inner(form, v, u0) >= 0:
            bad.append(v)
        elif vv < 0:
            proper.append(v)
        else:
            ideal.append(v)
    report = VertexReport(len(proper), len(ideal), tuple(bad), tuple(proper), tuple(ideal))
    ok = cone.pointed and not bad and bool(cone.rays)
    return ok, report, cone


def facet_cycle(cone):
    """Cyclic order of the facets of a pointed 3-dimensional cone (a polygon).

    Consecutive facets share an extreme ray.
    """
    if cone.ambient != 3:
        raise ValueError("facet cycles are only defined for polygons (ambient dimension 3)")
    adj = {}
    for t in cone.incidence:
        tight = sorted(t)
        if len(tight) != 2:
            raise ValueError(f"vertex with {len(tight)} tight facets")
        i, j = tight
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    if not adj:
        return []
    start = min(adj)
    cycle, prev, cur = [start], None, start
    while True:
        nxt = [x for x in adj[cur] if x != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        cycle.append(cur)
    return cycle
