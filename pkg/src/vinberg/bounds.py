"""Effective bounds on the number of facets of arithmetic Coxeter polyhedra.

This is the only module that uses real arithmetic.  All computations run
in :mod:`mpmath` at ``DPS`` significant digits, and integer caps are rounded
in the conservative direction by a margin of ``MARGIN``.
"""
from dataclasses import dataclass, field
from importlib import resources
import json

import mpmath
from mpmath import mpf

DPS = 60
MARGIN = mpf("1e-20")

CONSTANT_NAMES = (
    "margulis",         # mu_n
    "dobrowolski",      # c(deg k), keyed by degree
    "finite_subgroup",  # m_n
    "density",          # delta_{n-1}
    "bieberbach",       # I_{n-1}
    "simplex_volume",   # omega_n
    "barycentric",      # c_n
    "covolume_cap",     # C(n)
)


class MissingConstant(KeyError):
    def __init__(self, names):
        self.names = tuple(names)
        super().__init__(", ".join(f"{n} missing" for n in self.names))

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class Constant:
    value: object  # mpf, dict {degree: mpf}, or None when absent
    provenance: str = ""


@dataclass(frozen=True)
class ConstantsRegistry:
    """Named constants for one hyperbolic dimension, each with its provenance."""

    n: int
    constants: dict = field(default_factory=dict)
    name: str = "custom"

    def __post_init__(self):
        for key, c in self.constants.items():
            if key not in CONSTANT_NAMES:
                raise ValueError(f"unknown constant {key!r}")
            vals = c.value.values() if isinstance(c.value, dict) else [c.value]
            if any(v is not None and v <= 0 for v in vals):
                raise ValueError(f"constant {key} must be positive")

    def get(self, name, degree=None):
        c = self.constants.get(name)
        value = None if c is None else c.value
        if isinstance(value, dict):
            value = value.get(int(degree)) if degree is not None else None
        return value

    def require(self, names, degree=None):
        missing = [nm for nm in names if self.get(nm, degree) is None]
        if missing:
            raise MissingConstant(missing)
        return [self.get(nm, degree) for nm in names]

    def with_overrides(self, **values):
        consts = dict(self.constants)
        for key, val in values.items():
            if key == "dobrowolski" and not isinstance(val, dict):
                raise ValueError("dobrowolski overrides need a {degree: value} mapping")
            consts[key] = Constant(_parse_value(val), "override")
        return ConstantsRegistry(self.n, consts, self.name + "+override")

    def to_json(self):
        out = {}
        for key in sorted(self.constants):
            c = self.constants[key]
            if isinstance(c.value, dict):
                val = {str(d): mpmath.nstr(v, 30) for d, v in sorted(c.value.items())}
            else:
                val = None if c.value is None else mpmath.nstr(c.value, 30)
            out[key] = {"value": val, "provenance": c.provenance}
        return {"n": self.n, "name": self.name, "constants": out}

    @classmethod
    def from_json(cls, obj):
        consts = {}
        for key, entry in obj.get("constants", {}).items():
            consts[key] = Constant(_parse_value(entry.get("value")), entry.get("provenance", ""))
        return cls(int(obj["n"]), consts, obj.get("name", "custom"))


def _parse_value(val):
    with mpmath.workdps(DPS):
        if val is None:
            return None
        if isinstance(val, dict):
            return {int(k): _parse_value(v) for k, v in val.items()}
        if isinstance(val, str) and val.strip() in ("pi", "π"):
            return +mpmath.pi
        return mpf(val)


def load_registry(path):
    with open(path, encoding="utf-8") as fh:
        return ConstantsRegistry.from_json(json.load(fh))


def default_registry(n):
    """Shipped literature-sourced registry for ``n`` in {2, 3}."""
    try:
        text = resources.files("vinberg.data").joinpath(f"registry_n{n}.json").read_text()
    except FileNotFoundError:
        raise KeyError(f"no default registry for n = {n}") from None
    return ConstantsRegistry.from_json(json.loads(text))


def toy_registry(n=2):
    text = resources.files("vinberg.data").joinpath("registry_toy.json").read_text()
    obj = json.loads(text)
    obj["n"] = n
    return ConstantsRegistry.from_json(obj)


def ball_volume(n, r):
    """Volume of a hyperbolic ``n``-ball of radius ``r``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    with mpmath.workdps(DPS):
        r = mpf(r)
        if r <= 0:
            raise ValueError("radius must be positive")
        if n == 2:
            return 2 * mpmath.pi * (mpmath.cosh(r) - 1)
        if n == 3:
            return mpmath.pi * (mpmath.sinh(2 * r) - 2 * r)
        sphere = 2 * mpmath.pi ** (mpf(n) / 2) / mpmath.gamma(mpf(n) / 2)
        # extra working precision covers the 1e-12 relative target comfortably
        with mpmath.workdps(DPS + 20):
            integral = mpmath.quad(lambda t: mpmath.sinh(t) ** (n - 1), [0, r])
        return sphere * integral


def dobrowolski_default(deg, coefficient="0.25"):
    """Shape-only lower bound ``coefficient * (log log d / log d)^3``.

    The raw expression rises up to ``d = e^e`` and falls afterwards, so its
    running minimum over ``3 <= d' <= d`` is ``min(raw(3), raw(d))``.  That
    minimum is still a lower bound and is non-increasing in ``d``.
    """
    if deg < 2:
        raise ValueError("degree must be at least 2")
    with mpmath.workdps(DPS):
        def raw(d):
            ld = mpmath.log(d)
            return (mpmath.log(ld) / ld) ** 3
        return mpf(coefficient) * min(raw(3), raw(max(int(deg), 3)))


def min_separation(n, deg, reg):
    """Lower bound ``d = min(mu_n, c(deg))`` on distances between vertices."""
    mu, c = reg.require(["margulis", "dobrowolski"], deg)
    return min(mu, c)


def max_finite_subgroup_order(n, deg, reg):
    (m_n,) = reg.require(["finite_subgroup"])
    with mpmath.workdps(DPS):
        return m_n * mpf(deg) ** (n * (n + 1))


@dataclass(frozen=True)
class BoundBreakdown:
    n: int
    deg: int
    vol: object
    d: object
    ball_vol: object
    f: object
    V1: object
    V2: object
    V: object
    F_raw: object
    F_bound: int

    def to_json(self):
        def s(x):
            return mpmath.nstr(x, 40) if not isinstance(x, int) else str(x)
        return {k: s(getattr(self, k)) for k in
                ("n", "deg", "vol", "d", "ball_vol", "f", "V1", "V2", "V", "F_raw", "F_bound")}


def _floor_up(x):
    # caps must never undercount: relative plus absolute slack, so a true
    # integer value perturbed down by MARGIN in either sense still floors to it
    return int(mpmath.floor(x * (1 + MARGIN) + MARGIN))


def _ceil_down(x):
    return int(mpmath.ceil(x * (1 - MARGIN)))


def facet_breakdown(n, deg, vol, reg):
    """Full chain of the facet upper bound, returned as a :class:`BoundBreakdown`."""
    needed = ["margulis", "dobrowolski", "finite_subgroup", "density", "bieberbach"]
    missing = [nm for nm in needed if reg.get(nm, deg) is None]
    if missing:
        raise MissingConstant(missing)
    with mpmath.workdps(DPS):
        vol = mpf(vol)
        if vol < 0:
            raise ValueError("volume must be non-negative")
        d = min_separation(n, deg, reg)
        bv = ball_volume(n, d / 2)
        f = max_finite_subgroup_order(n, deg, reg)
        delta, I = reg.get("density"), reg.get("bieberbach")
        V1 = vol * f / bv
        V2 = vol * (n - 1) * I / delta
        V = V1 + V2
        F_raw = mpf(2 * (n - 1)) / n * V
        return BoundBreakdown(n, deg, vol, d, bv, f, V1, V2, V, F_raw, _floor_up(F_raw))


def facet_upper_bound(n, deg, vol, reg):
    """Upper bound on the number of facets of a Coxeter polyhedron of volume ``vol``."""
    return facet_breakdown(n, deg, vol, reg).F_bound


def rank_lower_bound(n, vol, reg):
    """Lower bound ``ceil(vol / (omega_n c_n))`` on the number of facets."""
    omega, c_n = reg.require(["simplex_volume", "barycentric"])
    with mpmath.workdps(DPS):
        vol = mpf(vol)
        if vol <= 0:
            return 0
        return _ceil_down(vol / (omega * c_n))


def auto_facet_cap(n, deg, reg):
    """Facet cap at the covolume ceiling ``C(n)``, or ``None`` if it is not known."""
    cap = reg.get("covolume_cap")
    if cap is None:
        return None
    return facet_upper_bound(n, deg, cap, reg)
