"""Integral quadratic forms of signature (n, 1) and their Lorentzian product."""
from dataclasses import dataclass, field
from fractions import Fraction
import json

from vinberg._linalg import dot, gcd_list, mat_vec


class FormError(ValueError):
    """Raised for malformed, degenerate or mis-shaped form input."""


@dataclass(frozen=True)
class QuadraticForm:
    """A symmetric integer Gram matrix of size ``dim + 1``.

    Parameters
    ----------
    dim : int
        Hyperbolic dimension ``n``; the ambient space has dimension ``n + 1``.
    gram : tuple of tuple of int
        Symmetric, non-degenerate Gram matrix.
    """

    dim: int
    gram: tuple
    signature: tuple = field(init=False, compare=False)

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        N = self.dim + 1
        if self.dim < 1 or len(gram) != N or any(len(r) != N for r in gram):
            raise FormError(f"shape: gram must be {N}x{N} for dim {self.dim}")
        if any(gram[i][j] != gram[j][i] for i in range(N) for j in range(i)):
            raise FormError("gram matrix is not symmetric")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "signature", _signature(gram))

    @classmethod
    def diagonal(cls, entries):
        entries = [int(d) for d in entries]
        N = len(entries)
        gram = tuple(tuple(entries[i] if i == j else 0 for j in range(N)) for i in range(N))
        return cls(N - 1, gram)

    @property
    def is_diagonal(self):
        N = self.dim + 1
        return all(self.gram[i][j] == 0 for i in range(N) for j in range(N) if i != j)

    def inner(self, u, v):
        return inner(self, u, v)

    def to_json(self):
        return {"dim": self.dim, "gram": [[_int_out(x) for x in row] for row in self.gram]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            dim = int(obj["dim"])
            if "gram" in obj:
                return cls(dim, tuple(tuple(int(x) for x in row) for row in obj["gram"]))
            if "diag" in obj:
                form = cls.diagonal(obj["diag"])
                if form.dim != dim:
                    raise FormError(f"shape: diag has {len(obj['diag'])} entries for dim {dim}")
                return form
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, FormError):
                raise
            raise FormError(f"malformed form: {exc}") from exc
        raise FormError("form JSON needs a 'gram' or 'diag' entry")


def _int_out(x):
    # JSON numbers lose precision past 2**53
    return str(x) if abs(x) >= 2 ** 53 else x


@dataclass(frozen=True)
class ControlVector:
    """A primitive timelike integer vector ``u0`` with ``q = (u0, u0) < 0``."""

    u0: tuple
    q: int

    @classmethod
    def make(cls, form, coords):
        u0 = tuple(int(c) for c in coords)
        if len(u0) != form.dim + 1:
            raise FormError(f"shape: control vector needs {form.dim + 1} coordinates")
        q = inner(form, u0, u0)
        if q >= 0:
            raise FormError(f"control vector {u0} is not timelike: (u0,u0) = {q}")
        if gcd_list(u0) != 1:
            raise FormError(f"control vector {u0} is not primitive")
        return cls(u0, q)


def inner(form, u, v):
    """Lorentzian product ``u^T G v``."""
    N = form.dim + 1
    if len(u) != N or len(v) != N:
        raise FormError(f"shape: vectors must have length {N}")
    return dot(u, mat_vec(form.gram, v))


def _signature(gram):
    # Symmetric elimination: 1x1 pivots on nonzero diagonal entries, 2x2
    # hyperbolic pivots when the whole remaining diagonal vanishes.
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    while a:
        n = len(a)
        i = next((k for k in range(n) if a[k][k] != 0), None)
        if i is not None:
            p = a[i][i]
            if p > 0:
                pos += 1
            else:
                neg += 1
            rest = [k for k in range(n) if k != i]
            a = [[a[r][c] - a[r][i] * a[i][c] / p for c in rest] for r in rest]
            continue
        pair = next(((r, c) for r in range(n) for c in range(r + 1, n) if a[r][c] != 0), None)
        if pair is None:
            raise FormError("degenerate: form has a nontrivial radical")
        r0, c0 = pair
        # [[0, b], [b, 0]] contributes one positive and one negative square
        pos += 1
        neg += 1
        b = a[r0][c0]
        rest = [k for k in range(n) if k not in pair]
        # inverse of the pivot block is [[0, 1/b], [1/b, 0]]
        a = [[a[r][c] - (a[r][r0] * a[c0][c] + a[r][c0] * a[r0][c]) / b for c in rest]
             for r in rest]
    return (pos, neg)


def signature(form):
    return form.signature


def is_admissible(form):
    return form.signature == (form.dim, 1)


def require_admissible(form):
    if not is_admissible(form):
        pos, neg = form.signature
        raise FormError(f"signature ({form.dim},1) required, found ({pos},{neg})")


def reflect(form, e, x):
    """Image of ``x`` under the reflection in the mirror orthogonal to ``e``."""
    s = inner(form, e, e)
    if s <= 0:
        raise FormError(f"not a root direction: (e,e) = {s}")
    k = Fraction(2 * inner(form, e, x), s)
    return tuple(Fraction(xi) - k * ei for xi, ei in zip(x, e))


def reflection_matrix(form, e):
    """Matrix of the reflection in ``e`` acting on column vectors (rational entries)."""
    N = form.dim + 1
    cols = [reflect(form, e, tuple(int(i == j) for i in range(N))) for j in range(N)]
    return [[cols[j][i] for j in range(N)] for i in range(N)]
