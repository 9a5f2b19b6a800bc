from fractions import Fraction
from itertools import combinations

import pytest

from oracles import brute_roots, lp_simple_roots
from vinberg.chamber import simple_system, stabilizer_roots
from vinberg.forms import QuadraticForm, inner, reflect
from vinberg.roots import Root

D3 = QuadraticForm.diagonal([-1, 1, 1])
D4 = QuadraticForm.diagonal([-1, 1, 1, 1])


def _brute_stabilizer(form, u0, norms):
    return sorted(r for s in norms for r in brute_roots(form.gram, u0, s, 0))


def test_stabilizer_roots_b2():
    roots = stabilizer_roots(D3, (1, 0, 0))
    assert len(roots) == 8
    assert [r.e for r in roots] == _brute_stabilizer(D3, (1, 0, 0), [1, 2])


def test_stabilizer_roots_b3():
    roots = stabilizer_roots(D4, (1, 0, 0, 0))
    assert len(roots) == 18
    assert sum(r.norm == 1 for r in roots) == 6
    assert sum(r.norm == 2 for r in roots) == 12
    assert [r.e for r in roots] == _brute_stabilizer(D4, (1, 0, 0, 0), [1, 2])


def test_stabilizer_roots_same_complement():
    f = QuadraticForm.diagonal([-7, 1, 1])
    assert [r.e for r in stabilizer_roots(f, (1, 0, 0))] == \
        [r.e for r in stabilizer_roots(D3, (1, 0, 0))]


def test_empty_system():
    assert simple_system(D3, []).m == 0


def test_b2_simple_system():
    roots = stabilizer_roots(D3, (1, 0, 0))
    ch = simple_system(D3, roots, (1, 0, 0))
    assert ch.m == 2
    e1, e2 = ch.simple_roots
    c = Fraction(inner(D3, e1.e, e2.e) ** 2, e1.norm * e2.norm)
    assert c == Fraction(1, 2) and inner(D3, e1.e, e2.e) < 0
    # brute force over 2-subsets of positive roots: the pair whose cone holds
    # every positive root is unique and equals the simple system
    positive = [r.e for r in roots if next(x for x in r.e if x) > 0]

    def spans(p, q):
        for r in positive:
            det = p[1] * q[2] - p[2] * q[1]
            al = Fraction(r[1] * q[2] - r[2] * q[1], det)
            be = Fraction(p[1] * r[2] - p[2] * r[1], det)
            if al < 0 or be < 0:
                return False
        return True
    pairs = [pq for pq in combinations(positive, 2)
             if pq[0][1] * pq[1][2] != pq[0][2] * pq[1][1] and spans(*pq)]
    assert pairs == [(e1.e, e2.e)]


def test_b3_simple_system():
    roots = stabilizer_roots(D4, (1, 0, 0, 0))
    ch = simple_system(D4, roots)
    assert [r.e for r in ch.simple_roots] == lp_simple_roots([r.e for r in roots])
    assert ch.m == 3
    labels = sorted(Fraction(inner(D4, a.e, b.e) ** 2, a.norm * b.norm)
                    for a, b in combinations(ch.simple_roots, 2))
    # B3: one orthogonal pair, one m=3 bond, one m=4 bond
    assert labels == [0, Fraction(1, 4), Fraction(1, 2)]


def test_simple_system_rejects_non_orthogonal():
    with pytest.raises(ValueError):
        simple_system(D3, [Root((1, 1, 1), 1, 1)], (1, 0, 0))


@pytest.mark.parametrize("diag", [[-1, 1, 1], [-1, 1, 1, 1], [-2, 1, 1, 1], [-1, 1, 1, 1, 1],
                                  [-3, 1, 2, 2]])
def test_chamber_invariants(diag):
    f = QuadraticForm.diagonal(diag)
    u0 = (1,) + (0,) * (len(diag) - 1)
    roots = stabilizer_roots(f, u0)
    ch = simple_system(f, roots, u0)
    assert ch.m <= f.dim
    for a, b in combinations(ch.simple_roots, 2):
        assert inner(f, a.e, b.e) <= 0
    assert [r.e for r in ch.simple_roots] == lp_simple_roots([r.e for r in roots])
    # orbit of every root under the simple reflections stays in the root list
    root_set = {r.e for r in roots}
    frontier = list(root_set)
    seen = set(frontier)
    while frontier:
        x = frontier.pop()
        for s in ch.simple_roots:
            y = tuple(int(c) for c in reflect(f, s.e, x))
            assert y in root_set
            if y not in seen:
                seen.add(y)
                frontier.append(y)
