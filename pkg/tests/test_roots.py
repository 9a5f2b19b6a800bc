from itertools import product
from math import gcd

import numpy as np
import pytest

from oracles import brute_roots, random_lorentzian_form
from vinberg.forms import QuadraticForm, inner, reflection_matrix
from vinberg.roots import (admissible_norms, discriminant_exponent, enumerate_roots_at,
                           is_crystallographic, normalize)

D3 = QuadraticForm.diagonal([-1, 1, 1])


@pytest.mark.parametrize("v,expected", [
    ((2, 2, 0), (1, 1, 0)), ((1, 1, 1), (1, 1, 1)), ((-3, 6, 9), (-1, 2, 3)),
])
def test_normalize(v, expected):
    assert normalize(v) == expected


def test_normalize_zero():
    with pytest.raises(ValueError):
        normalize((0, 0, 0))


def test_crystallographic_examples():
    assert is_crystallographic(D3, (0, 1, -1))
    assert is_crystallographic(D3, (1, 1, 1))
    # s = 5 and 2*2/5 is not integral
    assert not is_crystallographic(D3, (0, 2, 1))


def _observed_norms(diag, box=10):
    form = QuadraticForm.diagonal(diag)
    seen = set()
    for x in product(range(-box, box + 1), repeat=len(diag)):
        if gcd(*x) != 1:
            continue
        s = inner(form, x, x)
        if s > 0 and all((2 * d * xi) % s == 0 for d, xi in zip(diag, x)):
            seen.add(s)
    return seen


@pytest.mark.parametrize("diag,ell,norms", [
    ([-1, 1, 1], 1, [1, 2]),
    ([-2, 1, 1], 2, [1, 2, 4]),
    ([-1, 1], 1, [1, 2]),
])
def test_admissible_norms(diag, ell, norms):
    form = QuadraticForm.diagonal(diag)
    assert discriminant_exponent(form) == ell
    assert admissible_norms(form) == norms
    assert _observed_norms(diag) <= set(norms)


def test_discriminant_exponent_non_diagonal():
    # A2 root lattice plus a negative line: discriminant group Z/3 x Z/1
    f = QuadraticForm(2, ((2, -1, 0), (-1, 2, 0), (0, 0, -1)))
    assert discriminant_exponent(f) == 3
    assert admissible_norms(f) == [1, 2, 3, 6]


def _box(form, u0, s, a, b=2):
    out = []
    for x in product(range(-b, b + 1), repeat=form.dim + 1):
        if gcd(*x) == 1 and inner(form, x, x) == s and inner(form, x, u0) == -a \
                and is_crystallographic(form, x):
            out.append(x)
    return sorted(out)


@pytest.mark.parametrize("s,a,expected", [
    (1, 1, [(1, -1, -1), (1, -1, 1), (1, 1, -1), (1, 1, 1)]),
    (2, 1, []),
    (1, 0, [(0, -1, 0), (0, 0, -1), (0, 0, 1), (0, 1, 0)]),
])
def test_enumerate_examples(s, a, expected):
    got = [r.e for r in enumerate_roots_at(D3, (1, 0, 0), s, a)]
    assert got == expected
    assert got == _box(D3, (1, 0, 0), s, a)


def test_enumerate_argument_errors():
    with pytest.raises(ValueError):
        enumerate_roots_at(D3, (1, 0, 0), 0, 1)
    with pytest.raises(ValueError):
        enumerate_roots_at(D3, (1, 0, 0), 1, -1)


def test_enumerate_non_basis_control_vector():
    u0 = (2, 1, 0)  # q = -3
    for s in (1, 2):
        for a in range(6):
            got = [r.e for r in enumerate_roots_at(D3, u0, s, a)]
            assert got == brute_roots(D3.gram, u0, s, a)


def test_enumerate_large_coefficients():
    f = QuadraticForm.diagonal([-7, 1, 1, 1])
    for s in admissible_norms(f):
        for a in (0, 3, 7):
            got = [r.e for r in enumerate_roots_at(f, (1, 0, 0, 0), s, a)]
            assert got == brute_roots(f.gram, (1, 0, 0, 0), s, a)


def test_returned_roots_are_valid_and_reflections_integral():
    rng = np.random.default_rng(3)
    for _ in range(10):
        n = int(rng.integers(2, 4))
        gram, u0 = random_lorentzian_form(rng, n)
        f = QuadraticForm(n, gram)
        for s in admissible_norms(f)[:6]:
            for a in range(4):
                for r in enumerate_roots_at(f, u0, s, a):
                    assert gcd(*r.e) == 1
                    assert inner(f, r.e, r.e) == s == r.norm
                    assert inner(f, r.e, u0) == -a
                    assert is_crystallographic(f, r.e)
                    R = reflection_matrix(f, r.e)
                    assert all(x.denominator == 1 for row in R for x in row)


def test_random_forms_match_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(15):
        n = int(rng.integers(1, 4))
        gram, u0 = random_lorentzian_form(rng, n)
        f = QuadraticForm(n, gram)
        for a in range(4):
            for s in range(1, 7):
                assert [r.e for r in enumerate_roots_at(f, u0, s, a)] == \
                    brute_roots(gram, u0, s, a), (gram, u0, s, a)
