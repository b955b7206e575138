"""2d-LS: local search over cells with line and plane cell-jumps.

Each jump picks a false atom and moves the assignment into a cell where that
atom holds, either along a line (axis or random direction) or inside a plane
(axes plane or a random plane, solved exactly by the bivariate solver).
Candidates are ranked by a weighted make-minus-break score.
"""
from __future__ import annotations

import random
from math import floor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .clock import Deadline, WallClock
from .formula import Atom, PolyFormula
from .mcsat import bivariate_sat
from .poly import Poly, to_rational
from .realroots import Endpoint, Interval, RealRoot, pick_in, solve_sign_conditions

Assignment = Dict[int, Fraction]


class DependentDirectionsError(ValueError):
    pass


@dataclass
class LSParams:
    max_restart: int = 1
    max_jump: int = 1000
    m: int = 6
    len1: int = 4
    budget: Optional[float] = None
    seed: int = 0
    fixed: Dict[int, Fraction] = field(default_factory=dict)
    domains: Dict[int, Tuple[Optional[Fraction], Optional[Fraction]]] = field(default_factory=dict)
    truncate: bool = True


@dataclass
class LSResult:
    status: str  # "SAT" or "UNKNOWN"
    alpha: Assignment
    num_jump: int
    moves: List[Tuple[int, str, str, Fraction]] = field(default_factory=list)
    restarts: int = 0
    timed_out: bool = False


# -- rational size control -------------------------------------------------------

def _digits(k: int) -> int:
    return len(str(abs(k)))


def truncate_rational(q, len1: int = 4) -> Fraction:
    """Drop trailing digits of numerator and denominator when either is longer than len1."""
    q = to_rational(q)
    n, d = abs(q.numerator), q.denominator
    dn, dd = _digits(n), _digits(d)
    if max(dn, dd) <= len1:
        return q
    cut = min(dn, dd) - 2
    if cut <= 0:
        return q
    p = 10 ** cut
    out = Fraction(n // p, d // p)
    return out if q >= 0 else -out


def height(q: Fraction) -> int:
    return _digits(q.numerator) + _digits(q.denominator)


# -- scoring ------------------------------------------------------------------------

def score(F: PolyFormula, alpha_old: Assignment, alpha_new: Assignment, weights) -> int:
    """Weight of clauses the move satisfies minus weight of clauses it breaks."""
    s = 0
    for i, c in enumerate(F.clauses):
        before = c.eval(alpha_old)
        after = c.eval(alpha_new)
        if before != after:
            w = weights[i] if not isinstance(weights, dict) else weights.get(i, 1)
            s += w if after else -w
    return s


def update_weights(F: PolyFormula, alpha: Assignment, weights, rng: Optional[random.Random] = None,
                   smooth_prob: float = 1e-3):
    """Bump falsified clauses; occasionally decrease every weight above 1."""
    out = list(weights)
    for i, c in enumerate(F.clauses):
        if not c.eval(alpha):
            out[i] += 1
    if rng is not None and rng.random() < smooth_prob:
        out = smooth_weights(out)
    return out


def smooth_weights(weights) -> List[int]:
    return [w - 1 if w > 1 else w for w in weights]


# -- candidate values inside an interval -----------------------------------------

def interval_candidate(iv: Interval) -> Optional[Fraction]:
    """The integer nearest the midpoint when inside, else a short decimal; unbounded
    intervals give the first integer past the finite end."""
    lo, hi = iv.lo.value, iv.hi.value
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None or hi is None:
        end = hi if lo is None else lo
        base = floor(end.hi if isinstance(end, RealRoot) else end)
        steps = range(base + 1, base - 3, -1) if lo is None else range(base, base + 3)
        for k in steps:
            if iv.contains(k):
                return Fraction(k)
        return pick_in(iv)
    mid = (Fraction(float(lo)) + Fraction(float(hi))) / 2
    k = round(mid)
    if iv.contains(k):
        return Fraction(k)
    return pick_in(iv)


def _domain_constraints(var_poly: Poly, dom) -> List[Tuple[Poly, str]]:
    out = []
    lo, hi = dom
    if lo is not None:
        out.append((var_poly - lo, ">"))
    if hi is not None:
        out.append((var_poly - hi, "<"))
    return out


def _line_values(p: Poly, op: str, t: int, extra=()) -> List[Tuple[Fraction, Interval]]:
    """Candidate values of x_t where p op 0 holds, one per interval."""
    if p.is_const():
        return []
    cons = [(p.univariate(t), op)] + [(q.univariate(t), o) for q, o in extra]
    out = []
    for iv in solve_sign_conditions(cons):
        if iv.is_point():
            continue
        v = interval_candidate(iv)
        if v is not None:
            out.append((v, iv))
    return out


def _restrict_to_var(p: Poly, alpha: Assignment, i: int) -> Poly:
    return p.subs_values({k: v for k, v in alpha.items() if k != i})


def cell_jump_axis(l: Atom, alpha: Assignment, i: int, domain=None) -> Optional[Assignment]:
    """Move along the x_i axis into a cell where l holds (nearest such cell)."""
    cands = _axis_candidates(l, alpha, i, domain)
    if not cands:
        return None
    a = alpha.get(i, Fraction(0))
    best = min(cands, key=lambda v: (abs(v - a), v))
    out = dict(alpha)
    out[i] = best
    return out


def _axis_candidates(l: Atom, alpha: Assignment, i: int, domain=None) -> List[Fraction]:
    p = _restrict_to_var(l.poly, alpha, i)
    extra = _domain_constraints(Poly.var(i), domain) if domain else []
    return [v for v, _ in _line_values(p, l.op, i, extra)]


def _line_poly(p: Poly, alpha: Assignment, d: Sequence, t: int) -> Poly:
    T = Poly.var(t)
    sigma = {}
    for k in range(1, len(d) + 1):
        a = alpha.get(k, Fraction(0))
        if d[k - 1] == 0:
            sigma[k] = Poly.const(a)
        else:
            sigma[k] = Poly.const(a) + T * to_rational(d[k - 1])
    return p.substitute(sigma)


def cell_jump_line(l: Atom, alpha: Assignment, d: Sequence) -> Optional[Assignment]:
    """Move along alpha + t*d into a cell where l holds (smallest |t|)."""
    if not any(d):
        raise ValueError("direction must be nonzero")
    cands = _line_candidates(l, alpha, d)
    if not cands:
        return None
    t = min(cands, key=lambda v: (abs(v), v))
    return _along(alpha, d, t)


def _along(alpha: Assignment, d: Sequence, t: Fraction) -> Assignment:
    out = dict(alpha)
    for k in range(1, len(d) + 1):
        if d[k - 1]:
            out[k] = alpha.get(k, Fraction(0)) + t * to_rational(d[k - 1])
    return out


def _line_candidates(l: Atom, alpha: Assignment, d: Sequence) -> List[Fraction]:
    t = len(d) + 1
    p = _line_poly(l.poly, alpha, d, t)
    return [v for v, _ in _line_values(p, l.op, t)]


def sample_point_2v(l: Atom, alpha: Assignment, i: int, j: int, domains=None,
                    extra: Sequence[Atom] = ()) -> Optional[Tuple[Fraction, Fraction]]:
    """A model (v_i, v_j) of l with every other variable fixed at alpha.

    ``extra`` atoms are kept true as well when that is possible; if the joint
    system has no model the sample of l alone is returned.
    """
    if not i < j:
        raise ValueError("sample_point_2v needs i < j")
    rest = {k: v for k, v in alpha.items() if k not in (i, j)}
    p = l.poly.subs_values(rest)
    if p.is_const():
        return None
    base = [Atom(p, l.op)]
    for v in (i, j):
        if domains and v in domains:
            base += [Atom(q, o) for q, o in _domain_constraints(Poly.var(v), domains[v])]
    model = None
    if extra:
        side = [r for r in (a.restrict(rest) for a in extra) if not isinstance(r, bool)]
        model = bivariate_sat(base + side)
    if model is None:
        model = bivariate_sat(base)
    if model is None:
        return None
    return model.get(i, alpha.get(i, Fraction(0))), model.get(j, alpha.get(j, Fraction(0)))


def is_sample_point(l: Atom, alpha: Assignment, i: int, j: int, point: Assignment) -> bool:
    """point agrees with alpha off x_i, x_j and satisfies l."""
    for k, v in alpha.items():
        if k not in (i, j) and point.get(k) != v:
            return False
    return l.eval(point)


def two_d_cell_jump_axes(l: Atom, alpha: Assignment, i: int, j: int, domains=None,
                         extra: Sequence[Atom] = ()) -> Optional[Assignment]:
    s = sample_point_2v(l, alpha, i, j, domains, extra)
    if s is None:
        return None
    out = dict(alpha)
    out[i], out[j] = s
    return out


def plane_poly(p: Poly, alpha: Assignment, d1: Sequence, d2: Sequence, t1: int, t2: int) -> Poly:
    """p restricted to the plane alpha + t1*d1 + t2*d2 (t1, t2 are variable indices)."""
    T1, T2 = Poly.var(t1), Poly.var(t2)
    sigma = {}
    for k in range(1, len(d1) + 1):
        sigma[k] = Poly.const(alpha.get(k, Fraction(0))) + T1 * to_rational(d1[k - 1]) + T2 * to_rational(d2[k - 1])
    return p.substitute(sigma)


def _independent(d1: Sequence, d2: Sequence) -> bool:
    n = len(d1)
    for a in range(n):
        for b in range(a + 1, n):
            if d1[a] * d2[b] - d1[b] * d2[a] != 0:
                return True
    return False


def two_d_cell_jump_plane(l: Atom, alpha: Assignment, d1: Sequence, d2: Sequence,
                          extra: Sequence[Atom] = ()) -> Optional[Assignment]:
    """Jump inside the plane alpha + <d1, d2> to a point where l holds."""
    if len(d1) != len(d2) or not _independent(d1, d2):
        raise DependentDirectionsError("plane directions must be linearly independent")
    n = len(d1)
    p = plane_poly(l.poly, alpha, d1, d2, n + 1, n + 2)
    if p.is_const():
        return None
    model = None
    if extra:
        side = []
        for a in extra:
            q = plane_poly(a.poly, alpha, d1, d2, n + 1, n + 2)
            if not q.is_const():
                side.append(Atom(q, a.op))
        model = bivariate_sat([Atom(p, l.op)] + side)
    if model is None:
        model = bivariate_sat([Atom(p, l.op)])
    if model is None:
        return None
    s1 = model.get(n + 1, Fraction(0))
    s2 = model.get(n + 2, Fraction(0))
    out = dict(alpha)
    for k in range(1, n + 1):
        if d1[k - 1] or d2[k - 1]:
            out[k] = alpha.get(k, Fraction(0)) + s1 * to_rational(d1[k - 1]) + s2 * to_rational(d2[k - 1])
    return out


# -- the search ---------------------------------------------------------------------------

class _Search:
    def __init__(self, F: PolyFormula, params: LSParams, clock=None):
        self.F = F
        self.n = F.n
        self.p = params
        self.rng = random.Random(params.seed)
        self.clock = clock or WallClock()
        self.deadline = Deadline(self.clock, params.budget)
        self.weights = [1] * len(F.clauses)
        self.free = [i for i in range(1, self.n + 1) if i not in params.fixed]
        self.var_clauses: Dict[int, List[int]] = {i: [] for i in range(1, self.n + 1)}
        for ci, c in enumerate(F.clauses):
            for v in c.vars():
                self.var_clauses[v].append(ci)
        self.moves: List[Tuple[int, str, str, Fraction]] = []
        self.max_protect = 6

    def tick(self, k: int = 1) -> None:
        self.clock.tick(k)

    # assignments
    def _inside(self, i: int, v: Fraction) -> bool:
        lo, hi = self.p.domains.get(i, (None, None))
        return (lo is None or v > lo) and (hi is None or v < hi)

    def _fit(self, i: int, v: Fraction) -> Fraction:
        if self._inside(i, v):
            return v
        lo, hi = self.p.domains[i]
        iv = Interval(Endpoint(lo), Endpoint(hi))
        c = interval_candidate(iv)
        return c if c is not None else v

    def initial(self, restart: int) -> Assignment:
        alpha = {}
        for i in range(1, self.n + 1):
            if i in self.p.fixed:
                alpha[i] = to_rational(self.p.fixed[i])
            elif restart == 0:
                alpha[i] = self._fit(i, Fraction(0))
            else:
                alpha[i] = self._fit(i, Fraction(self.rng.randint(-10, 10)))
        return alpha

    def clause_truth(self, alpha: Assignment) -> List[bool]:
        return [c.eval(alpha) for c in self.F.clauses]

    def score_move(self, truth: List[bool], alpha: Assignment, new: Assignment) -> int:
        changed = [k for k in new if new[k] != alpha.get(k)]
        touched = set()
        for k in changed:
            touched.update(self.var_clauses.get(k, ()))
        s = 0
        for ci in touched:
            after = self.F.clauses[ci].eval(new)
            if after != truth[ci]:
                s += self.weights[ci] if after else -self.weights[ci]
        self.tick(1 + len(touched))
        return s

    def _truncated(self, alpha: Assignment, new: Assignment, atom: Atom) -> Assignment:
        if not self.p.truncate:
            return new
        t = dict(new)
        for k, v in new.items():
            if v != alpha.get(k):
                t[k] = truncate_rational(v, self.p.len1)
        if t != new and atom.eval(t):
            return t
        return new

    # the two atom tiers
    def false_atoms(self, alpha: Assignment, truth: List[bool]):
        fal, sat = [], []
        seen_f, seen_s = set(), set()
        for ci, c in enumerate(self.F.clauses):
            for lit in c:
                a = lit.atom
                if a.eval(alpha):
                    continue
                if not truth[ci]:
                    if a not in seen_f:
                        seen_f.add(a)
                        fal.append(a)
                elif a not in seen_s:
                    seen_s.add(a)
                    sat.append(a)
        return fal, sat

    def best(self, cands, truth, alpha):
        best = None
        for key_extra, atom, new in cands:
            if new is None:
                continue
            new = self._truncated(alpha, new, atom)
            if not atom.eval(new):
                continue
            s = self.score_move(truth, alpha, new)
            if s <= 0:
                continue
            changed = sorted(k for k in new if new[k] != alpha.get(k))
            h = sum(height(new[k]) for k in changed)
            key = (-s, h, key_extra)
            if best is None or key < best[0]:
                best = (key, s, new, atom)
        return best

    # the four steps; each returns a candidate generator for one atom tier
    def step_axis(self, atoms, alpha):
        for ai, a in enumerate(atoms):
            for i in a.vars():
                if i in self.p.fixed:
                    continue
                self.tick()
                for v in _axis_candidates(a, alpha, i, self.p.domains.get(i)):
                    new = dict(alpha)
                    new[i] = v
                    yield (i, ai), a, new

    def step_lines(self, atoms, alpha, dirs):
        for ai, a in enumerate(atoms):
            for di, d in enumerate(dirs):
                self.tick()
                for t in _line_candidates(a, alpha, d):
                    new = _along(alpha, d, t)
                    if all(self._inside(k, new[k]) for k in self.free):
                        yield (di, ai), a, new

    def protected(self, alpha: Assignment, truth: List[bool], moved) -> List[Atom]:
        """Atoms that alone keep a satisfied clause true and that a move over ``moved`` could break."""
        out = []
        for ci, c in enumerate(self.F.clauses):
            if not truth[ci]:
                continue
            true_lits = [l for l in c if l.eval(alpha)]
            if len(true_lits) != 1 or not true_lits[0].positive:
                continue
            a = true_lits[0].atom
            if isinstance(a, Atom) and any(v in moved for v in a.vars()) and a not in out:
                out.append(a)
                if len(out) >= self.max_protect:
                    break
        return out

    def step_axes_planes(self, atoms, alpha, truth):
        for ai, a in enumerate(atoms):
            vs = [v for v in a.vars() if v not in self.p.fixed]
            for x in range(len(vs)):
                for y in range(x + 1, len(vs)):
                    if self.deadline.expired():
                        return
                    self.tick(10)
                    i, j = vs[x], vs[y]
                    extra = self.protected(alpha, truth, (i, j))
                    yield (i, j, ai), a, two_d_cell_jump_axes(a, alpha, i, j, self.p.domains, extra)

    def step_planes(self, atoms, alpha, truth, dirs):
        for ai, a in enumerate(atoms):
            for k in range(0, len(dirs) - 1, 2):
                if self.deadline.expired():
                    return
                self.tick(10)
                moved = {v for v in range(1, self.n + 1) if dirs[k][v - 1] or dirs[k + 1][v - 1]}
                extra = self.protected(alpha, truth, moved)
                new = two_d_cell_jump_plane(a, alpha, dirs[k], dirs[k + 1], extra)
                if new is not None and not all(self._inside(v, new[v]) for v in self.free):
                    new = None
                yield (k, ai), a, new

    def directions(self, count: int) -> List[List[int]]:
        out: List[List[int]] = []
        while len(out) < count:
            d = [0 if i in self.p.fixed else self.rng.randint(-10, 10) for i in range(1, self.n + 1)]
            if not any(d):
                continue
            if len(out) % 2 == 1 and not _independent(out[-1], d):
                if len(self.free) < 2:
                    out.append(d)
                continue
            out.append(d)
        return out

    def jump(self, alpha: Assignment, truth: List[bool]):
        fal, sat = self.false_atoms(alpha, truth)
        tiers = [("fal", fal), ("sat", sat)]

        def attempt(step, make):
            for tier, atoms in tiers:
                if not atoms:
                    continue
                b = self.best(make(atoms), truth, alpha)
                if b is not None:
                    self.moves.append((step, tier, b[3].to_str(), b[1]))
                    return b[2]
            return None

        new = attempt(1, lambda atoms: self.step_axis(atoms, alpha))
        if new is not None or not self.free:
            return new
        dirs = self.directions(2 * self.p.m)
        new = attempt(2, lambda atoms: self.step_lines(atoms, alpha, dirs))
        if new is not None:
            return new
        new = attempt(3, lambda atoms: self.step_axes_planes(atoms, alpha, truth))
        if new is not None:
            return new
        if len(self.free) < 2:
            return None
        return attempt(4, lambda atoms: self.step_planes(atoms, alpha, truth, dirs))

    def run(self) -> LSResult:
        num_jump = 1
        alpha = self.initial(0)
        if not self.F.clauses and not self.F.unsat:
            return LSResult("SAT", alpha, num_jump, self.moves, 0)
        for restart in range(self.p.max_restart):
            alpha = self.initial(restart)
            jumps = 0
            while jumps < self.p.max_jump:
                truth = self.clause_truth(alpha)
                self.tick(len(truth))
                if all(truth):
                    return LSResult("SAT", alpha, num_jump, self.moves, restart)
                if self.deadline.expired():
                    return LSResult("UNKNOWN", alpha, num_jump, self.moves, restart, True)
                new = self.jump(alpha, truth)
                if new is None:
                    break
                alpha = new
                jumps += 1
                num_jump += 1
                self.weights = update_weights(self.F, alpha, self.weights, self.rng)
            if all(self.clause_truth(alpha)):
                return LSResult("SAT", alpha, num_jump, self.moves, restart)
        return LSResult("UNKNOWN", alpha, num_jump, self.moves, self.p.max_restart, self.deadline.expired())


def run_2d_ls(F: PolyFormula, params: Optional[LSParams] = None, clock=None) -> LSResult:
    """Local search for a model of a strict CNF; SAT results always verify."""
    params = params or LSParams()
    if F.unsat:
        return LSResult("UNKNOWN", {i: Fraction(0) for i in range(1, F.n + 1)}, 1)
    return _Search(F, params, clock).run()
