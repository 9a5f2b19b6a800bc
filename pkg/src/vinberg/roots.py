"""Enumeration of primitive crystallographic roots at a fixed norm and level.

A *level* ``a`` fixes the product with the control vector, ``(e, u0) = -a``.
On that affine slice the form is positive definite, so the solutions of
``(e, e) = s`` are finite and can be listed exactly.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, isqrt

from vinberg._linalg import dot, gcd_list, inverse, ldl, mat_vec, primitive
from vinberg.forms import inner


@dataclass(frozen=True, order=True)
class Root:
    """Primitive integer vector ``e`` with norm ``s = (e, e) > 0``.

    ``a`` is ``-(e, u0)`` for the control vector the root was produced for.
    Ordering is lexicographic on the coordinates.
    """

    e: tuple
    norm: int
    a: int = 0


def normalize(v):
    """Return ``v`` divided by the gcd of its coordinates."""
    if not any(v):
        raise ValueError("cannot normalize the zero vector")
    return primitive(v)


def is_crystallographic(form, e):
    """Check that ``2 (e, v_i) / (e, e)`` is an integer for every basis vector ``v_i``."""
    s = inner(form, e, e)
    if s <= 0:
        return False
    return all((2 * x) % s == 0 for x in mat_vec(form.gram, e))


def discriminant_exponent(form):
    """Exponent of the discriminant group ``Z^{n+1}* / Z^{n+1}``.

    The dual lattice is ``G^{-1} Z^{n+1}``, so the exponent is the lcm of the
    denominators of ``G^{-1}``.
    """
    ell = 1
    for row in inverse(form.gram):
        for x in row:
            d = x.denominator
            ell = ell * d // _gcd(ell, d)
    return ell


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def admissible_norms(form):
    """All positive divisors of ``2 * ell``; a superset of crystallographic root norms.

    A primitive root ``e`` satisfies ``s | 2 gcd(G e)`` and ``gcd(G e) | ell``.
    """
    m = 2 * discriminant_exponent(form)
    return [d for d in range(1, m + 1) if m % d == 0]


def _int_range(center, radius_sq):
    """Integers ``k`` with ``(k - center)**2 <= radius_sq``."""
    if radius_sq < 0:
        return range(0)
    b = isqrt(floor(radius_sq)) + 1
    lo, hi = floor(center) - b, ceil(center) + b
    while lo <= hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


def _ext_gcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _unimodular_completion(c):
    """Columns of a unimodular ``U`` with ``c U = (g, 0, ..., 0)``, ``g = gcd(c) > 0``."""
    N = len(c)
    U = [[int(i == j) for i in range(N)] for j in range(N)]  # list of columns
    v = list(c)
    for j in range(1, N):
        if v[j] == 0:
            continue
        g, x, y = _ext_gcd(v[0], v[j])
        a, b = v[0] // g, v[j] // g
        col0, colj = U[0], U[j]
        U[0] = [x * p + y * q for p, q in zip(col0, colj)]
        U[j] = [-b * p + a * q for p, q in zip(col0, colj)]
        v[0], v[j] = g, 0
    if v[0] < 0:
        U[0] = [-x for x in U[0]]
        v[0] = -v[0]
    return U, v[0]


def _lll(gram, delta=Fraction(3, 4)):
    """LLL reduction of a basis given by its positive-definite Gram matrix.

    Returns the unimodular change of basis ``T`` (list of coefficient
    vectors, one per new basis vector) and the reduced Gram matrix.
    """
    n = len(gram)
    T = [[int(i == j) for i in range(n)] for j in range(n)]

    def gso():
        A = [[_bil(gram, T[i], T[j]) for j in range(n)] for i in range(n)]
        mu = [[Fraction(0)] * n for _ in range(n)]
        B = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                mu[i][j] = (A[i][j] - sum(mu[j][k] * mu[i][k] * B[k] for k in range(j))) / B[j]
            B[i] = A[i][i] - sum(mu[i][k] ** 2 * B[k] for k in range(i))
        return mu, B

    k = 1
    mu, B = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                T[k] = [x - r * y for x, y in zip(T[k], T[j])]
                mu, B = gso()
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            T[k], T[k - 1] = T[k - 1], T[k]
            mu, B = gso()
            k = max(k - 1, 1)
    return T, [[_bil(gram, T[i], T[j]) for j in range(n)] for i in range(n)]


def _bil(gram, u, v):
    return sum(u[i] * gram[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))


def _quad(gram, u):
    return _bil(gram, u, u)


def _exact_sqrt(q):
    """Square root of a non-negative Fraction if it is rational, else None."""
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class _Slice:
    """Integer points of ``{x : (x, u0) = -a}`` as an affine lattice.

    With ``U`` unimodular and ``c U = (g, 0, ..., 0)`` for ``c = G u0``, the
    integer solutions are ``x = U_0 (-a/g) + B z`` with ``z`` free, where the
    columns of ``B`` span the integer kernel of ``c``.  The form restricted to
    that kernel is positive definite; ``B`` is LLL-reduced against it.
    """

    def __init__(self, form, u0):
        G = form.gram
        N = form.dim + 1
        c = mat_vec(G, u0)
        U, self.g = _unimodular_completion(c)
        self.N = N
        self.U0 = U[0]
        basis = U[1:]
        m = len(basis)
        A = [[_bil(G, basis[i], basis[j]) for j in range(m)] for i in range(m)]
        if m:
            T, A = _lll(A)
            basis = [[sum(T[k][i] * basis[i][r] for i in range(m)) for r in range(N)]
                     for k in range(m)]
        self.basis = basis
        self.A = A
        self.L, self.D = ldl(A) if m else ([], [])
        self.Ainv = inverse(A) if m else []
        # per unit of w0 = -a/g: linear coefficient B^T G U0 and constant U0^T G U0
        GU0 = mat_vec(G, self.U0)
        self.lin = [dot(b, GU0) for b in basis]
        self.quad0 = dot(self.U0, GU0)

    def solutions(self, s, a):
        """Integer points ``x`` on the slice with ``(x, x) = s``."""
        if a % self.g:
            return []
        w0 = -a // self.g
        m = len(self.basis)
        # Q(z) = z^T A z + 2 w0 lin.z + w0^2 quad0, centred at z0 = -w0 A^{-1} lin
        z0 = [-w0 * dot(row, self.lin) for row in self.Ainv]
        const = w0 * w0 * self.quad0 - dot(z0, mat_vec(self.A, z0))
        R = s - const
        if R < 0:
            return []
        out = []
        z = [0] * m
        L, D = self.L, self.D

        def descend(i, rem):
            t = sum(L[j][i] * (z[j] - z0[j]) for j in range(i + 1, m))
            centre = z0[i] - t
            if i == 0:
                # last coordinate: solve D_0 (k - centre)^2 = rem exactly
                r = _exact_sqrt(rem / D[0])
                if r is None:
                    return
                for k in {centre - r, centre + r}:
                    if k.denominator == 1:
                        z[0] = int(k)
                        out.append(self._lift(z, w0))
                return
            for k in _int_range(centre, rem / D[i]):
                z[i] = k
                descend(i - 1, rem - D[i] * (k - centre) ** 2)

        if m == 0:
            if R == 0:
                out.append(self._lift(z, w0))
        else:
            descend(m - 1, R)
        return out

    def _lift(self, z, w0):
        return tuple(w0 * u + sum(zk * b[r] for zk, b in zip(z, self.basis))
                     for r, u in enumerate(self.U0))


_slice_cache = {}


def _slice_for(form, u0):
    key = (form.gram, tuple(u0))
    sl = _slice_cache.get(key)
    if sl is None:
        if len(_slice_cache) > 64:
            _slice_cache.clear()
        sl = _slice_cache[key] = _Slice(form, u0)
    return sl


def enumerate_roots_at(form, u0, s, a):
    """All primitive crystallographic ``e`` with ``(e,e) = s`` and ``(e,u0) = -a``.

    Parameters
    ----------
    form : QuadraticForm
    u0 : ControlVector or sequence of int
    s : int
        Target norm, positive.
    a : int
        Level, non-negative.

    Returns
    -------
    list of Root
        Duplicate-free, sorted lexicographically by coordinates.
    """
    if s <= 0:
        raise ValueError(f"norm must be positive, got {s}")
    if a < 0:
        raise ValueError(f"level must be non-negative, got {a}")
    u0 = getattr(u0, "u0", u0)
    sl = _slice_for(form, u0)
    found = []
    for x in sl.solutions(Fraction(s), a):
        if gcd_list(x) != 1:
            continue
        # exact re-check independent of the slice algebra
        if inner(form, x, x) != s or inner(form, x, u0) != -a:
            raise AssertionError(f"slice enumeration produced a wrong point {x}")
        if is_crystallographic(form, x):
            found.append(Root(x, s, a))
    found.sort()
    return found
