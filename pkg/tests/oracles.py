"""Independent brute-force oracles.

These deliberately avoid the package's own linear algebra: box bounds come
from a sympy inverse of the majorant form, rays from sympy null spaces, and
the chamber from a floating-point LP.  Only small instances are intended.
"""
from fractions import Fraction
from itertools import combinations, product
from math import gcd, isqrt

import numpy as np
import sympy
from scipy.optimize import linprog


def _prim(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in v)


def majorant_box(gram, u0, s, a):
    """Coordinate bounds for integer x with (x,x) = s and (x,u0) = -a.

    Uses the positive-definite majorant M = G + 2 (G u0)(G u0)^T / |q|,
    on which such x satisfy M(x) = s + 2 a^2 / |q|, hence
    |x_i|^2 <= M(x) (M^{-1})_{ii}.
    """
    G = sympy.Matrix(gram)
    u = sympy.Matrix(u0)
    q = (u.T * G * u)[0]
    c = G * u
    M = G + 2 * c * c.T / (-q)
    Minv = M.inv()
    R = sympy.Rational(s) + 2 * sympy.Rational(a) ** 2 / (-q)
    bounds = []
    for i in range(G.shape[0]):
        b2 = R * Minv[i, i]
        bounds.append(isqrt(int(sympy.floor(b2))) + 1)
    return bounds


def brute_roots(gram, u0, s, a, bounds=None):
    """Primitive crystallographic x with (x,x) = s, (x,u0) = -a, by box search."""
    G = np.array(gram, dtype=np.int64)
    N = G.shape[0]
    c = G @ np.array(u0, dtype=np.int64)
    if bounds is None:
        bounds = majorant_box(gram, u0, s, a)
    j = max(i for i in range(N) if c[i] != 0)
    others = [i for i in range(N) if i != j]
    grids = np.meshgrid(*[np.arange(-bounds[i], bounds[i] + 1) for i in others], indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1) if others else np.zeros((1, 0), np.int64)
    num = -a - pts @ c[others]
    ok = num % c[j] == 0
    pts, num = pts[ok], num[ok]
    X = np.zeros((len(pts), N), dtype=np.int64)
    X[:, others] = pts
    X[:, j] = num // c[j]
    GX = X @ G
    norms = np.einsum("ij,ij->i", X, GX)
    X, GX = X[norms == s], GX[norms == s]
    keep = (np.gcd.reduce(np.abs(X), axis=1) == 1) & np.all((2 * GX) % s == 0, axis=1)
    return sorted(tuple(int(v) for v in x) for x in X[keep])


def random_lorentzian_form(rng, n, lo=-5, hi=5):
    """Random symmetric integer matrix of signature (n, 1) and a small timelike u0."""
    N = n + 1
    while True:
        A = rng.integers(lo, hi + 1, size=(N, N))
        G = np.triu(A) + np.triu(A, 1).T
        ev = np.linalg.eigvalsh(G.astype(float))
        if np.min(np.abs(ev)) < 1e-6 or (ev < 0).sum() != 1:
            continue
        if round(np.linalg.det(G.astype(float))) == 0:
            continue
        for u in product(range(-2, 3), repeat=N):
            u = np.array(u)
            if u @ G @ u < 0 and np.gcd.reduce(np.abs(u)) == 1:
                return [[int(x) for x in row] for row in G], tuple(int(x) for x in u)


def brute_extreme_rays(rows):
    """Extreme rays of a pointed cone {x : A x <= 0} by solving every tight subsystem."""
    A = sympy.Matrix(rows)
    m, N = A.shape
    found = set()
    for sub in combinations(range(m), N - 1):
        ns = A.extract(list(sub), list(range(N))).nullspace()
        if len(ns) != 1:
            continue
        v = ns[0]
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
        v = [int(x * den) for x in v]
        for cand in (v, [-x for x in v]):
            if all(sum(r * x for r, x in zip(A.row(i), cand)) <= 0 for i in range(m)):
                found.add(_prim(cand))
    return sorted(found)


def brute_rank(vectors):
    return sympy.Matrix(vectors).rank() if vectors else 0


def lp_simple_roots(roots):
    """Positive roots (first nonzero coordinate > 0) not in the cone of the others."""
    pos = sorted({r for r in roots if next(x for x in r if x) > 0})
    simple = []
    for r in pos:
        others = [p for p in pos if p != r]
        if not others:
            simple.append(r)
            continue
        res = linprog(np.zeros(len(others)), A_eq=np.array(others, float).T,
                      b_eq=np.array(r, float), bounds=[(0, None)] * len(others),
                      method="highs")
        if res.status != 0:
            simple.append(r)
    return simple


def brute_vinberg(gram, u0, amax=3):
    """Vinberg's selection over every root with a <= amax, found by box search.

    Returns the accepted roots (chamber first) at the first distance key whose
    polyhedron passes the subset-solve finite-volume test, or ``None``.
    """
    G = np.array(gram, dtype=np.int64)
    u = np.array(u0)
    q = int(u @ G @ u)

    def ip(x, y):
        return int(np.array(x) @ G @ np.array(y))

    det = int(round(abs(np.linalg.det(G.astype(float)))))
    norms = [s for s in range(1, 2 * det + 1) if (2 * det) % s == 0]
    stab = [r for s in norms for r in brute_roots(gram, u0, s, 0)]
    chamber = lp_simple_roots(stab)
    cands = []
    for s in norms:
        for a in range(1, amax + 1):
            for r in brute_roots(gram, u0, s, a):
                cands.append((Fraction(a * a, s * -q), r))
    cands.sort()
    accepted = list(chamber)
    i = 0
    while i < len(cands):
        key = cands[i][0]
        group = []
        while i < len(cands) and cands[i][0] == key:
            group.append(cands[i][1])
            i += 1
        new = False
        for r in group:
            if all(ip(r, b) <= 0 for b in accepted):
                accepted.append(r)
                new = True
        if new and brute_finite(gram, u0, accepted):
            return accepted
    return None


def brute_finite(gram, u0, roots):
    G = sympy.Matrix(gram)
    rows = [list(sympy.Matrix([r]) * G) for r in roots]
    if brute_rank(rows) < len(gram):
        return False
    rays = brute_extreme_rays(rows)
    u = sympy.Matrix(u0)
    for v in rays:
        vv = sympy.Matrix(v)
        if (vv.T * G * vv)[0] > 0 or (vv.T * G * u)[0] >= 0:
            return False
    return bool(rays)
