"""Seeded random instance generators.

``rf_generate`` follows the seven-set parameter signature of the random
formula generator used for the large random benchmark family; each structural
quantity is drawn uniformly from its set.  ``random_small_formula`` produces
the small sparse instances used by the cross-engine checks.
"""
from __future__ import annotations

import random
from math import comb
from typing import Iterable, List, Sequence, Tuple

from ..formula import PolyFormula, normalize
from ..poly import Poly


class InfeasibleParametersError(ValueError):
    pass


def _as_choices(name: str, values: Iterable[int]) -> List[int]:
    vs = sorted(set(int(v) for v in values))
    if not vs:
        raise InfeasibleParametersError("%s: empty parameter set" % name)
    if vs[0] <= 0:
        raise InfeasibleParametersError("%s: values must be positive, got %s" % (name, vs))
    return vs


def _monomial(rng: random.Random, n: int, d: int, spread: int = 3) -> Tuple[int, ...]:
    """Exponent vector of total degree d over a few random variables."""
    e = [0] * n
    if d == 0:
        return tuple(e)
    support = rng.sample(range(n), min(n, spread))
    for _ in range(d):
        e[rng.choice(support)] += 1
    return tuple(e)


def _coeff(rng: random.Random, bound: int) -> int:
    c = 0
    while c == 0:
        c = rng.randint(-bound, bound)
    return c


def random_poly(rng: random.Random, n: int, degree: int, terms: int, bound: int) -> Poly:
    """A polynomial in x_1..x_n with exactly ``terms`` terms and total degree ``degree``."""
    t = {_monomial(rng, n, degree): _coeff(rng, bound)}
    tries = 0
    while len(t) < terms:
        tries += 1
        if tries > 1000 * terms:
            raise InfeasibleParametersError("cannot place %d distinct terms of degree <= %d in %d variables"
                                            % (terms, degree, n))
        e = _monomial(rng, n, rng.randint(0, degree))
        if e not in t:
            t[e] = _coeff(rng, bound)
    return Poly(t)


def rf_generate(var_counts: Sequence[int], poly_counts: Sequence[int], clause_counts: Sequence[int],
                atoms_per_clause: Sequence[int], degrees: Sequence[int], coeff_bounds: Sequence[int],
                terms: Sequence[int], seed: int = 0) -> PolyFormula:
    """Random strict CNF; every structural quantity is drawn from its set.

    Positional reading of the sets: variables, polynomials, clauses, atoms per
    clause, polynomial degrees, coefficient bounds, terms per polynomial.
    Every polynomial of the pool appears in some atom when there are enough atoms.
    """
    V = _as_choices("var_counts", var_counts)
    P = _as_choices("poly_counts", poly_counts)
    C = _as_choices("clause_counts", clause_counts)
    A = _as_choices("atoms_per_clause", atoms_per_clause)
    D = _as_choices("degrees", degrees)
    B = _as_choices("coeff_bounds", coeff_bounds)
    T = _as_choices("terms", terms)
    if A[-1] > 2 * P[-1]:
        raise InfeasibleParametersError("atoms per clause exceed the 2 * polynomials distinct atoms available")
    for t in T:
        if t > comb(V[-1] + D[-1], D[-1]):
            raise InfeasibleParametersError("%d terms do not fit degree %d in %d variables" % (t, D[-1], V[-1]))
    rng = random.Random(seed)
    n = rng.choice(V)
    npoly = rng.choice(P)
    nclause = rng.choice(C)
    sizes = [rng.choice([a for a in A if a <= 2 * npoly] or [2 * npoly]) for _ in range(nclause)]
    pool = [random_poly(rng, n, rng.choice(D), min(rng.choice(T), comb(n + max(D), max(D))), rng.choice(B))
            for _ in range(npoly)]
    # distinct polynomials only
    seen = {}
    for p in pool:
        seen.setdefault(p, None)
    pool = list(seen)
    order = list(range(len(pool)))
    rng.shuffle(order)
    cover = iter(order)
    clauses: List[List[Tuple[Poly, str]]] = []
    keys = set()
    for size in sizes:
        for _ in range(100):
            atoms = {}
            while len(atoms) < size:
                k = next(cover, None)
                if k is None:
                    k = rng.randrange(len(pool))
                atoms.setdefault((k, rng.choice("<>")), None)
            key = frozenset(atoms)
            if key not in keys:
                break
        keys.add(key)
        clauses.append([(pool[k], op) for k, op in atoms])
    return normalize(clauses, n)


def random_small_formula(rng: random.Random, max_vars: int = 3, max_degree: int = 3, max_clauses: int = 4,
                         max_atoms: int = 3, bound: int = 4) -> PolyFormula:
    """A small sparse strict CNF over at most ``max_vars`` variables."""
    while True:
        n = rng.randint(1, max_vars)
        raw = []
        for _ in range(rng.randint(1, max_clauses)):
            clause = []
            for _ in range(rng.randint(1, max_atoms)):
                deg = rng.randint(1, max_degree)
                t = {}
                for _ in range(rng.randint(1, 3)):
                    e = [0] * n
                    for _ in range(rng.randint(1, deg)):
                        e[rng.randrange(n)] += 1
                    t[tuple(e)] = _coeff(rng, 3)
                t[(0,) * n] = rng.randint(-bound, bound)
                p = Poly(t)
                if not p.is_const():
                    clause.append((p, rng.choice("<>")))
            if clause:
                raw.append(clause)
        F = normalize(raw, n)
        if F.clauses:
            return F
