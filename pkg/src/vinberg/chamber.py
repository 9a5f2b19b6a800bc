"""Roots through the control point and a simple system for their reflection group."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from vinberg.forms import inner
from vinberg.roots import admissible_norms, enumerate_roots_at


@dataclass(frozen=True)
class ChamberSystem:
    simple_roots: tuple

    @property
    def m(self):
        return len(self.simple_roots)


def stabilizer_roots(form, u0):
    """Every primitive crystallographic root orthogonal to ``u0`` (both signs)."""
    roots = []
    for s in admissible_norms(form):
        roots.extend(enumerate_roots_at(form, u0, s, 0))
    roots.sort()
    return roots


def _is_positive(e):
    return next(x for x in e if x != 0) > 0


def _positive_combination(r, p, q):
    """True if ``r = alpha p + beta q`` with ``alpha, beta > 0`` rational."""
    # pick two coordinates where (p, q) is invertible
    N = len(r)
    for i, j in combinations(range(N), 2):
        det = p[i] * q[j] - p[j] * q[i]
        if det:
            alpha = Fraction(r[i] * q[j] - r[j] * q[i], det)
            beta = Fraction(p[i] * r[j] - p[j] * r[i], det)
            if alpha <= 0 or beta <= 0:
                return False
            return all(alpha * pk + beta * qk == rk for pk, qk, rk in zip(p, q, r))
    return False


def simple_system(form, roots, u0=None):
    """Simple roots of the positive system cut out by lexicographic positivity.

    A positive root is simple when it is not a positive rational combination
    of two other positive roots.  The result is sorted lexicographically.
    """
    if u0 is not None:
        u0 = getattr(u0, "u0", u0)
        bad = [r for r in roots if inner(form, r.e, u0) != 0]
        if bad:
            raise ValueError(f"root {bad[0].e} is not orthogonal to the control vector")
    positive = sorted({r for r in roots if _is_positive(r.e)})
    simple = []
    for r in positive:
        others = [p for p in positive if p != r]
        if not any(_positive_combination(r.e, p.e, q.e) for p, q in combinations(others, 2)):
            simple.append(r)
    return ChamberSystem(tuple(simple))
