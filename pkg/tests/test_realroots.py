from __future__ import annotations

import random
from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hybrid_nra.poly import Poly
from hybrid_nra.realroots import (
    Endpoint,
    Interval,
    LineStructure,
    count_real_roots_sturm,
    isolate_roots,
    pick_in,
    pick_rational,
    sign_at,
    solve_sign_conditions,
)

from nra_cases import SYMS, random_univariate, to_sympy

x = Poly.var(1)


def test_isolation_examples():
    roots = isolate_roots(x ** 2 - 2)
    assert len(roots) == 2
    assert -2 < roots[0].lo < roots[0].hi < -1
    assert 1 < roots[1].lo < roots[1].hi < 2
    assert isolate_roots(x ** 2 + 1) == []
    roots = isolate_roots((x - 1) ** 2 * (x + 3))
    assert [r.exact for r in roots] == [-3, 1]


def test_sign_at_examples():
    assert sign_at(x ** 2 - 2, Fraction(3, 2)) == 1
    assert sign_at(x ** 2 - 2, 0) == -1
    assert sign_at(x - 1, 1) == 0
    assert sign_at(-x, -8) == 1
    assert sign_at([0, -1], 8) == -1


def test_solve_sign_conditions_examples():
    s = solve_sign_conditions([(x - 1, ">"), (x - 3, "<")])
    (iv,) = list(s)
    assert iv.lo.value.exact == 1 and iv.hi.value.exact == 3
    assert pick_rational(s) == 2
    assert solve_sign_conditions([(x ** 2, "<")]).is_empty()
    assert pick_rational(solve_sign_conditions([(x ** 2, "<")])) is None
    s = solve_sign_conditions([(x ** 2 - 2, ">"), (x, "<")])
    (iv,) = list(s)
    assert iv.lo.value is None
    assert iv.hi.value.compare_rational(Fraction(-1414, 1000)) < 0 < iv.hi.value.compare_rational(Fraction(-1415, 1000))
    assert pick_rational(s) == -2


def test_pick_in_prefers_short_decimals():
    # the sector between the roots of 481t^2 - 90t + 4 (about 0.0703 and 0.1168)
    line = LineStructure([[4, -90, 481]])
    assert line.samples[1] == Fraction(1, 10)
    assert pick_in(Interval(Endpoint(Fraction(1, 3)), Endpoint(Fraction(2, 3)))) == Fraction(1, 2)
    assert pick_in(Interval(Endpoint(Fraction(-7, 2)), Endpoint(Fraction(5, 2)))) == 0
    assert pick_in(Interval(Endpoint(Fraction(1)), Endpoint(Fraction(1)))) is None


def test_root_counts_agree_with_sturm_and_sympy():
    rng = random.Random(11)
    for _ in range(150):
        p = random_univariate(rng, rng.randint(1, 12))
        if rng.random() < 0.3:
            p = p * random_univariate(rng, rng.randint(1, 3))
        n = len(isolate_roots(p))
        assert n == count_real_roots_sturm(p)
        # sympy counts with multiplicity; distinct roots come from the square-free part
        sq = sympy.sqf_part(sympy.Poly(to_sympy(p), SYMS[0]))
        assert n == sq.count_roots()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=2, max_size=10))
def test_isolating_intervals_bracket_roots(cs):
    if cs[-1] == 0:
        cs[-1] = 1
    roots = isolate_roots(cs)
    for r in roots:
        if r.is_exact():
            assert sign_at(cs, r.exact) == 0
        else:
            assert r.lo < r.hi
            assert sign_at(r.poly, r.lo) * sign_at(r.poly, r.hi) == -1
    for a, b in zip(roots, roots[1:]):
        assert a.high < b.low or (a.high == b.low and not (a.is_exact() and b.is_exact()))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(-6, 6), min_size=2, max_size=5), st.sampled_from("<>")),
                min_size=1, max_size=3))
def test_sign_condition_sets_match_grid(cons):
    cons = [(cs, op) for cs, op in cons if any(cs[1:])]
    if not cons:
        return
    s = solve_sign_conditions(cons)
    grid = [Fraction(k, 64) for k in range(-512, 513)]
    for q in grid:
        want = all((sign_at(cs, q) < 0) if op == "<" else (sign_at(cs, q) > 0) for cs, op in cons)
        assert s.contains(q) == want
    v = pick_rational(s)
    if v is None:
        assert not s.has_interior()
    else:
        for cs, op in cons:
            assert sign_at(cs, v) == (-1 if op == "<" else 1)


def test_line_samples_avoid_roots():
    rng = random.Random(5)
    for _ in range(60):
        ps = [random_univariate(rng, rng.randint(1, 6)).univariate(1) for _ in range(rng.randint(1, 3))]
        line = LineStructure(ps)
        assert line.num_cells == 2 * line.num_roots + 1
        for v in line.samples:
            for p in ps:
                assert sign_at(p, v) != 0
        xs = np.array([float(v) for v in line.samples])
        assert np.all(np.diff(xs) > 0)
