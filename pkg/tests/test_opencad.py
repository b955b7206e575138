from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from hybrid_nra.formula import eval_formula, normalize
from hybrid_nra.frontend.generator import random_small_formula
from hybrid_nra.mcsat import mcsat_solve
from hybrid_nra.opencad import lift_and_decide, opencad_solve, project_open
from hybrid_nra.realroots import sign_at

from nra_cases import V, quartic_form, running_example

x, y = V(1), V(2)


def test_projection_examples():
    T = project_open([x ** 2 - y ** 2], 2)
    assert T.at(1) == [x]
    assert T.at(2) == [x ** 2 - y ** 2] or T.at(2) == [y ** 2 - x ** 2]
    T = project_open([x ** 3 - 2], 1)
    assert list(T.levels) == [1]
    T = project_open([x - y, x + y], 2)
    assert T.at(1) == [x]
    for k in T.levels:
        for p in T.at(k):
            assert p.level == k


def test_small_decisions():
    r = opencad_solve(normalize([[(x ** 2 + y ** 2 - 1, "<")]]))
    assert r.status == "sat" and (x ** 2 + y ** 2 - 1).eval(r.model) < 0
    assert opencad_solve(normalize([[(x ** 2 + y ** 2, "<")]])).status == "unsat"
    assert opencad_solve(normalize([[(x, ">")], [(x, "<")]])).status == "unsat"
    F = running_example(1)
    r = opencad_solve(F)
    assert r.status == "sat" and eval_formula(F, r.model)


def test_quartic_form_is_positive_somewhere():
    F = normalize([[(quartic_form(), ">")]], 5)
    r = opencad_solve(F)
    assert r.status == "sat"
    assert quartic_form().eval(r.model) > 0
    assert quartic_form().eval({i: 1 for i in range(1, 6)}) == 5


def test_variable_order_changes_nothing_but_the_path():
    rng = random.Random(8)
    for _ in range(25):
        F = random_small_formula(rng)
        base = opencad_solve(F).status
        order = list(range(1, F.n + 1))
        rng.shuffle(order)
        r = opencad_solve(F, order=order)
        assert r.status == base
        if r.status == "sat":
            assert eval_formula(F, r.model)


def test_samples_avoid_every_tower_root():
    rng = random.Random(1)
    for _ in range(30):
        F = random_small_formula(rng)
        T = project_open(F.polys(), F.n)
        res = lift_and_decide(T, F, record=True)
        for pt in res.samples:
            k = max(pt)
            lower = {i: v for i, v in pt.items() if i < k}
            for f in T.at(k):
                q = f.subs_values(lower)
                if not q.is_const():
                    assert sign_at(q.univariate(k), pt[k]) != 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_agrees_with_mcsat_and_learned_clauses_only_prune(seed):
    F = random_small_formula(random.Random(seed), max_degree=4)
    m = mcsat_solve(F)
    plain = opencad_solve(F)
    assert plain.status == m.status
    if plain.status == "sat":
        assert eval_formula(F, plain.model)
    explained = [lc.valid for lc in m.learned if lc.provenance == "explain"]
    pruned = opencad_solve(F, explained)
    assert pruned.status == plain.status
    assert pruned.visited <= plain.visited


def test_model_values_are_rational():
    r = opencad_solve(running_example(2))
    assert all(isinstance(v, Fraction) for v in r.model.values())
