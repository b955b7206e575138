"""Shared builders for the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from hybrid_nra.formula import normalize
from hybrid_nra.poly import Poly

SYMS = sympy.symbols("x1:13")


def V(i: int) -> Poly:
    return Poly.var(i)


def to_sympy(p: Poly):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for i, k in enumerate(e):
            if k:
                term *= SYMS[i] ** k
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, n: int) -> Poly:
    P = sympy.Poly(sympy.expand(expr), *SYMS[:n])
    t = {}
    for mono, c in P.terms():
        t[tuple(mono)] = Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
    return Poly(t)


def f1(r: int) -> Poly:
    """x^2 + y_1^2 + ... + y_r^2 - z^2 over (x, y_1..y_r, z) = x_1..x_{r+2}."""
    p = V(1) ** 2 - V(r + 2) ** 2
    for i in range(2, r + 2):
        p = p + V(i) ** 2
    return p


def f2(r: int) -> Poly:
    p = (V(1) - 3) ** 2 + V(r + 2) ** 2 - 5
    for i in range(2, r + 2):
        p = p + V(i) ** 2
    return p


def running_example(r: int):
    return normalize([[(f1(r), "<")], [(f2(r), "<")]], r + 2)


def quartic_form() -> Poly:
    x = [V(i) for i in range(1, 6)]
    sq = [xi ** 2 for xi in x]
    s = sq[0] + sq[1] + sq[2] + sq[3] + sq[4]
    cyc = sq[0] * sq[1] + sq[1] * sq[2] + sq[2] * sq[3] + sq[3] * sq[4] + sq[4] * sq[0]
    return s ** 2 - 4 * cyc


def random_poly(rng: random.Random, n: int, max_deg: int, max_terms: int = 5, bound: int = 9) -> Poly:
    t = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * n
        for _ in range(rng.randint(0, max_deg)):
            e[rng.randrange(n)] += 1
        t[tuple(e)] = rng.randint(-bound, bound)
    return Poly(t)


def random_univariate(rng: random.Random, deg: int, bound: int = 20, var: int = 1) -> Poly:
    cs = [rng.randint(-bound, bound) for _ in range(deg)] + [rng.choice([-1, 1]) * rng.randint(1, bound)]
    return Poly.from_univariate(cs, var)


def random_point(rng: random.Random, n: int, lo: int = -10, hi: int = 10, den: int = 7):
    return {i: Fraction(rng.randint(lo * den, hi * den), rng.randint(1, den)) for i in range(1, n + 1)}
