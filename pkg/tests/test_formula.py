from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybrid_nra.formula import (
    Atom,
    Clause,
    Literal,
    PartialAssignmentError,
    UnsupportedOperatorError,
    eval_formula,
    lit,
    normalize,
    partial_restrict,
)
from hybrid_nra.poly import Poly

from nra_cases import V, f1, f2, random_point, random_poly, running_example

x, y = V(1), V(2)


def test_running_example_truth_values():
    F = running_example(1)
    assert eval_formula(F, {1: Fraction(3, 2), 2: 0, 3: Fraction(8, 5)})
    assert not eval_formula(F, {1: 0, 2: 0, 3: 0})
    G = normalize([[(x, ">")], [(x, "<")]])
    assert not eval_formula(G, {1: Fraction(5)})
    with pytest.raises(PartialAssignmentError):
        eval_formula(F, {1: 0})


def test_normalize_rewrites_disequality():
    F = normalize([[(x, "!=")]])
    (c,) = F.clauses
    assert set(c) == {Literal(Atom(x, "<")), Literal(Atom(x, ">"))}
    F = normalize([[(x - 1, "<"), (y - 2, "!=")]])
    (c,) = F.clauses
    assert set(c) == {lit(x - 1, "<"), lit(y - 2, "<"), lit(y - 2, ">")}
    with pytest.raises(UnsupportedOperatorError):
        normalize([[(x, "<=")]])


def test_normalize_folds_constants_and_duplicates():
    F = normalize([[(Poly.const(1), ">")], [(x, "<"), (x, "<")], [(x, "<")]])
    assert len(F.clauses) == 1 and len(F.clauses[0]) == 1
    F = normalize([[(Poly.const(-1), ">")], [(x, "<")]])
    assert F.unsat
    assert not eval_formula(F, {1: -1})


def test_partial_restrict_running_example():
    r = 4
    F = running_example(r)
    sigma = {1: Fraction(3, 2)}
    sigma.update({i: Fraction(0) for i in range(2, r + 2)})
    G = partial_restrict(F, sigma)
    assert len(G.clauses) == 2
    for c in G.clauses:
        (l,) = c
        assert l.atom.poly.vars() == [r + 2]
    H = partial_restrict(running_example(1), {1: Fraction(10)})
    assert [l.atom.poly for c in H.clauses for l in c][1] == y ** 2 + V(3) ** 2 + 44
    assert partial_restrict(F, {}) is F


def test_levels():
    c = Clause([lit(x - 1, "<"), lit(f1(1), "<")])
    assert c.level == 3
    assert min(l.level for l in c) == 1
    assert lit(f2(2), "<").level == 4


def _raw_formula(rng: random.Random, n: int):
    raw = []
    for _ in range(rng.randint(1, 4)):
        raw.append([(random_poly(rng, n, 3, 3, 4), rng.choice(["<", ">", "!="])) for _ in range(rng.randint(1, 3))])
    return raw


def _raw_eval(raw, pt) -> bool:
    def holds(p, op):
        v = p.eval(pt)
        return v < 0 if op == "<" else v > 0 if op == ">" else v != 0
    return all(any(holds(p, op) for p, op in c) for c in raw)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_normalize_preserves_models(seed):
    rng = random.Random(seed)
    raw = _raw_formula(rng, 3)
    F = normalize(raw, 3)
    for _ in range(10):
        pt = random_point(rng, 3, den=2)
        assert eval_formula(F, pt) == _raw_eval(raw, pt)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_partial_restrict_then_eval(seed):
    rng = random.Random(seed)
    F = normalize(_raw_formula(rng, 3), 3)
    pt = random_point(rng, 3, den=3)
    keep = rng.sample([1, 2, 3], rng.randint(0, 3))
    G = partial_restrict(F, {k: pt[k] for k in keep})
    assert eval_formula(G, pt) == eval_formula(F, pt)
    for c in F.clauses:
        for l in c:
            assert l.level <= c.level <= F.n
