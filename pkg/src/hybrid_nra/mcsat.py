"""Model-constructing satisfiability search for strict polynomial CNF.

Variables are assigned in the fixed order x_1..x_n.  Every assignment is a
rational taken from the interior of the current solution set, so the search
only ever explores full-dimensional regions (sufficient because the input
atoms are strict).  Conflicts at a level are explained by a cylindrical cell
around the lower sample built with sample-cell projection; each explanation
lemma is kept in two forms:

* the search form ``not cell or not core or not l`` that drives the search,
* the valid form, which adds ``x_L = root`` escape disjuncts for the finitely
  many sections where core and l can still hold, and is a real tautology.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .formula import Atom, Clause, Literal, PolyFormula, RootAtom
from .poly import (
    Poly,
    discriminant,
    resultant,
    square_free_basis,
    to_rational,
)
from .realroots import IntervalSet, LineStructure, pick_rational, solve_sign_conditions

TRUE, FALSE, UNDEF = "true", "false", "undef"
DEFAULT_BUDGET = 10 ** 6


class ResourceLimit(Exception):
    """The step budget ran out."""


def _point(a) -> Dict[int, Fraction]:
    if isinstance(a, Mapping):
        return {int(k): to_rational(v) for k, v in a.items()}
    return {i + 1: to_rational(v) for i, v in enumerate(a)}


# -- learned clauses ---------------------------------------------------------------

@dataclass(eq=False)
class LClause:
    """A clause in a level bucket, with its tautological companion."""

    clause: Clause
    valid: Clause
    provenance: str = "input"

    @property
    def level(self) -> int:
        return self.clause.level

    def __iter__(self):
        return iter(self.clause)


# -- trail -----------------------------------------------------------------------

@dataclass(frozen=True)
class TrailElement:
    kind: str  # "assign", "decide" or "prop"
    var: int = 0
    value: Optional[Fraction] = None
    literal: Optional[Literal] = None
    reason: Optional[LClause] = None

    def __str__(self) -> str:
        if self.kind == "assign":
            return "x%d -> %s" % (self.var, self.value)
        if self.kind == "decide":
            return "decide %s" % self.literal
        return "%s => %s" % (self.reason.clause, self.literal)


class Trail:
    def __init__(self):
        self.elems: List[TrailElement] = []
        self.assignment: Dict[int, Fraction] = {}
        self.level = 1
        self._lits: Dict[Literal, int] = {}
        self._cache: Dict[int, Dict[Literal, bool]] = {}

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def push(self, e: TrailElement) -> None:
        if e.kind == "assign":
            self.assignment[e.var] = e.value
        else:
            self._lits[e.literal] = len(self.elems)
        self.elems.append(e)

    def pop(self) -> TrailElement:
        e = self.elems.pop()
        if e.kind == "assign":
            del self.assignment[e.var]
            for k in list(self._cache):
                if k >= e.var:
                    del self._cache[k]
        else:
            del self._lits[e.literal]
        return e

    def decide(self, l: Literal) -> None:
        self.push(TrailElement("decide", literal=l))

    def propagate(self, c: LClause, l: Literal) -> None:
        self.push(TrailElement("prop", literal=l, reason=c))

    def assign(self, var: int, value) -> None:
        self.push(TrailElement("assign", var=var, value=to_rational(value)))

    def has(self, l: Literal) -> bool:
        return l in self._lits

    def literals_at(self, level: int) -> List[Literal]:
        return [e.literal for e in self.elems if e.kind != "assign" and e.literal.level == level]

    def value(self, l: Literal) -> str:
        if l in self._lits:
            return TRUE
        if l.negate() in self._lits:
            return FALSE
        lv = l.level
        if lv > len(self.assignment) or any(i not in self.assignment for i in range(1, lv + 1)):
            return UNDEF
        bucket = self._cache.setdefault(lv, {})
        v = bucket.get(l)
        if v is None:
            v = l.eval(self.assignment)
            bucket[l] = v
        return TRUE if v else FALSE

    def level_shape_ok(self) -> bool:
        """Every literal sits between the assignments of x_{k-1} and x_k for k = its level."""
        cur = 1
        for e in self.elems:
            if e.kind == "assign":
                if e.var != cur:
                    return False
                cur += 1
            elif e.literal.level != cur:
                return False
        return True


def value_of(target, M: Trail) -> str:
    """Three-valued truth of a literal, a clause, or a collection of clauses under M."""
    if isinstance(target, Literal):
        return M.value(target)
    if isinstance(target, (Clause, LClause)):
        undef = False
        for l in target:
            v = M.value(l)
            if v == TRUE:
                return TRUE
            if v == UNDEF:
                undef = True
        return UNDEF if undef else FALSE
    undef = False
    for c in target:
        v = value_of(c, M)
        if v == FALSE:
            return FALSE
        if v == UNDEF:
            undef = True
    return UNDEF if undef else TRUE


# -- one level: line structure for the current variable --------------------------

class LevelView:
    """Cells of the x_level line at the lower assignment, with per-literal truth masks."""

    def __init__(self, lits: Sequence[Literal], level: int, assignment: Mapping[int, Fraction],
                 extra: Sequence[Poly] = ()):
        self.level = level
        lower = {k: v for k, v in assignment.items() if k < level}
        self.polys: List[Poly] = []
        index: Dict[Poly, int] = {}
        for p in [l.atom.poly for l in lits] + list(extra):
            if p not in index:
                index[p] = len(self.polys)
                self.polys.append(p)
        dense = []
        for p in self.polys:
            q = p.subs_values(lower)
            dense.append(q.univariate(level) if not q.is_const() else ([q.const_value()] if q else []))
        self.line = LineStructure(dense)
        self.index = index
        ncell = self.line.num_cells
        self.all_mask = (1 << ncell) - 1
        self.sector_mask = sum(1 << c for c in range(0, ncell, 2))
        self._masks: Dict[Literal, int] = {}

    def mask(self, l: Literal) -> int:
        m = self._masks.get(l)
        if m is not None:
            return m
        a = l.atom
        line = self.line
        k = self.index[a.poly]
        m = 0
        if isinstance(a, RootAtom):
            roots = line.roots_of(k)
            if len(roots) >= a.index:
                t = 2 * roots[a.index - 1] + 1
                for c in range(line.num_cells):
                    if (a.op == "<" and c < t) or (a.op == "=" and c == t) or (a.op == ">" and c > t):
                        m |= 1 << c
        else:
            for c in range(line.num_cells):
                if a.sign_ok(line.signs[c][k]):
                    m |= 1 << c
        if not l.positive:
            m = self.all_mask & ~m
        self._masks[l] = m
        return m

    def conj(self, lits: Iterable[Literal]) -> int:
        m = self.all_mask
        for l in lits:
            m &= self.mask(l)
        return m

    def consistent(self, lits: Iterable[Literal]) -> bool:
        return bool(self.conj(lits) & self.sector_mask)

    def solve(self, lits: Iterable[Literal]) -> IntervalSet:
        m = self.conj(lits)
        return self.line.interval_set([c for c in range(self.line.num_cells) if m >> c & 1])

    def sector_cells(self, lits: Iterable[Literal]) -> List[int]:
        m = self.conj(lits) & self.sector_mask
        return [c for c in range(self.line.num_cells) if m >> c & 1]

    def min_core(self, trail_lits: Sequence[Literal], l: Literal) -> List[Literal]:
        core = list(trail_lits)
        i = 0
        while i < len(core):
            trial = core[:i] + core[i + 1:]
            if not self.consistent(trial + [l]):
                core = trial
            else:
                i += 1
        return core


def solve_trail(M: Trail, level: Optional[int] = None) -> IntervalSet:
    """Solution set of x_level for the level-`level` literals of M."""
    level = M.level if level is None else level
    lits = M.literals_at(level)
    view = LevelView(lits, level, M.assignment)
    return view.solve(lits)


def consistent(l: Literal, M: Trail) -> bool:
    lits = M.literals_at(l.level) + [l]
    return LevelView(lits, l.level, M.assignment).consistent(lits)


def min_conflict_core(M: Trail, l: Literal, level: Optional[int] = None) -> List[Literal]:
    level = l.level if level is None else level
    lits = M.literals_at(level)
    view = LevelView(lits + [l], level, M.assignment)
    return view.min_core(lits, l)


# -- sample-cell projection -------------------------------------------------------------

def _line_for(F: Sequence[Poly], var: int, a: Mapping[int, Fraction]) -> LineStructure:
    lower = {k: v for k, v in a.items() if k < var}
    dense = []
    for f in F:
        q = f.subs_values(lower)
        dense.append(q.univariate(var) if not q.is_const() else ([q.const_value()] if q else []))
    return LineStructure(dense)


def spoly(F: Sequence[Poly], var: int, a) -> List[Poly]:
    """Polynomials whose roots bound (or contain) a_var in the x_var line at a."""
    a = _point(a)
    F = list(dict.fromkeys(F))
    line = _line_for(F, var, a)
    if line.num_roots == 0:
        return []
    c = line.cell_of(a[var])
    if c % 2 == 1:
        return [F[min(line.vanish[c // 2])]]
    j = c // 2
    out = []
    if j > 0:
        out.append(F[min(line.vanish[j - 1])])
    if j < line.num_roots:
        g = F[min(line.vanish[j])]
        if g not in out:
            out.append(g)
    return out


def _split_coeffs(f: Poly, var: int, a: Mapping[int, Fraction]):
    """(sample coefficients, reductum) of f in x_var at a; reductum None when f vanishes at a."""
    cs = f.coeffs(var)
    lower = {k: v for k, v in a.items() if k < var}
    for j in range(len(cs) - 1, -1, -1):
        if cs[j].subs_values(lower) != 0:
            return cs[j:], Poly.from_coeffs(cs[: j + 1], var)
    return list(cs), None


def scoeff(f: Poly, var: int, a) -> List[Poly]:
    """Coefficients c_m..c_j down to the first one not vanishing at a (all of them if none)."""
    out = _split_coeffs(f, var, _point(a))[0]
    return [c for c in dict.fromkeys(reversed(out)) if not c.is_zero()]


def _prune(polys: Iterable[Poly]) -> List[Poly]:
    keep = [p for p in polys if not p.is_zero() and not p.is_const()]
    return square_free_basis(keep) if keep else []


def proj(F: Sequence[Poly], var: int, a) -> List[Poly]:
    """Sample-cell projection: sample coefficients, discriminants, and resultants with spoly."""
    a = _point(a)
    F = _prune(F)
    top = [f for f in F if f.degree(var) > 0]
    out: List[Poly] = [f for f in F if f.degree(var) == 0]
    S = spoly(top, var, a) if var in a else []
    for f in top:
        out.extend(scoeff(f, var, a))
        if f.degree(var) >= 2:
            out.append(discriminant(f, var))
        for g in S:
            if g != f:
                out.append(resultant(f, g, var))
    return _prune(out)


@dataclass
class Cell:
    """Cylindrical cell around a sample: one or two bounds per level."""

    atoms: List[Union[Atom, RootAtom]] = field(default_factory=list)
    escapes: List[Union[Atom, RootAtom]] = field(default_factory=list)
    projection: Dict[int, List[Poly]] = field(default_factory=dict)

    def holds(self, alpha: Mapping[int, Fraction]) -> bool:
        return all(a.eval(alpha) for a in self.atoms)


def _bound_atom(line: LineStructure, F: List[Poly], k_col: int, t: int, kind: str, var: int):
    """Atom for x_var {=,>,<} (root t of the line) using polynomial F[k_col]."""
    g = F[k_col]
    idx = line.root_index(k_col, t)
    roots = line.roots_of(k_col)
    if len(roots) == 1:
        if kind == "=":
            return Atom(g, "=")
        below = line.signs[2 * t][k_col]
        above = line.signs[2 * t + 2][k_col]
        if below and above and below != above:
            s = above if kind == ">" else below
            return Atom(g, ">" if s > 0 else "<")
    return RootAtom(var, kind, idx, g)


def _project_level(P: List[Poly], var: int, a: Mapping[int, Fraction], full: bool, out: List[Poly]):
    """Projection polynomials of level-`var` set P at the sample; returns bound atoms.

    ``full`` uses resultants of all pairs (needed above the conflict level so
    that the whole x_var line keeps its shape); otherwise only pairs with the
    polynomials bounding a_var.
    """
    reds: List[Optional[Poly]] = []
    for f in P:
        cs, red = _split_coeffs(f, var, a)
        out.extend(cs)
        reds.append(red if red is not None and red.degree(var) > 0 else None)
    for r in reds:
        if r is not None and r.degree(var) >= 2:
            out.append(discriminant(r, var))

    def res(i: int, j: int) -> None:
        if reds[i] is None or reds[j] is None:
            return
        r = resultant(reds[i], reds[j], var)
        if r.is_zero():
            r = resultant(P[i], P[j], var)
        out.append(r)

    atoms = []
    if full:
        for i in range(len(P)):
            for j in range(i + 1, len(P)):
                res(i, j)
        return atoms
    line = _line_for(P, var, a)
    if line.num_roots == 0:
        return atoms
    c = line.cell_of(a[var])
    bounds: List[int] = []
    if c % 2 == 1:
        t = c // 2
        k = min(line.vanish[t])
        bounds.append(k)
        atoms.append(_bound_atom(line, P, k, t, "=", var))
    else:
        j = c // 2
        if j > 0:
            k = min(line.vanish[j - 1])
            bounds.append(k)
            atoms.append(_bound_atom(line, P, k, j - 1, ">", var))
        if j < line.num_roots:
            k = min(line.vanish[j])
            if k not in bounds:
                bounds.append(k)
            atoms.append(_bound_atom(line, P, k, j, "<", var))
    for g in bounds:
        for i in range(len(P)):
            if i != g:
                res(i, g)
    return atoms


def explain_cell(core: Sequence[Literal], ell: Optional[Literal], level: int, a) -> Cell:
    """Cell around the lower sample a on which core and ell stay jointly infeasible."""
    a = _point(a)
    lits = list(core) + ([ell] if ell is not None else [])
    buckets: Dict[int, List[Poly]] = {}

    def add(ps: Iterable[Poly]) -> None:
        for p in ps:
            if p.is_zero() or p.is_const():
                continue
            buckets.setdefault(p.level, []).append(p)

    polys = list(dict.fromkeys(l.atom.poly for l in lits))
    cell = Cell()
    if polys:
        basis = square_free_basis([p for p in polys if not p.is_const()])
        top = [b for b in basis if b.level == level]
        add(b for b in basis if b.level < level)
        out: List[Poly] = []
        _project_level(top, level, a, True, out)
        add(out)
        cell.projection[level] = top
        cell.escapes = _escapes(lits, top, level, a)
    for k in range(level - 1, 0, -1):
        if k not in buckets:
            continue
        basis = square_free_basis(buckets.pop(k))
        add(b for b in basis if b.level < k)
        P = [b for b in basis if b.level == k]
        cell.projection[k] = P
        out = []
        cell.atoms[:0] = _project_level(P, k, a, False, out)
        add(out)
    return cell


def _escapes(lits: Sequence[Literal], top: List[Poly], level: int, a: Mapping[int, Fraction]):
    """Sections of the x_level line at a where every literal holds."""
    if not top:
        return []
    view = LevelView(lits, level, a, extra=top)
    m = view.conj(lits) & ~view.sector_mask & view.all_mask
    out = []
    cols = [view.index[b] for b in top]
    for c in range(view.line.num_cells):
        if not (m >> c & 1):
            continue
        t = c // 2
        k = min(k for k in cols if k in view.line.vanish[t])
        out.append(_bound_atom(view.line, view.polys, k, t, "=", level))
    return out


def explain(core: Sequence[Literal], a, ell: Optional[Literal] = None, level: Optional[int] = None) -> List[Union[Atom, RootAtom]]:
    """Cell constraints (conjunction) around the sample a for the given conflict."""
    lits = list(core) + ([ell] if ell is not None else [])
    if level is None:
        level = max((l.level for l in lits), default=1)
    return explain_cell(core, ell, level, a).atoms


def build_lemma(core: Sequence[Literal], ell: Literal, level: int, a) -> LClause:
    cell = explain_cell(core, ell, level, a)
    lits = [ell.negate()] + [l.negate() for l in core] + [Literal(x, False) for x in cell.atoms]
    search = Clause(lits)
    valid = Clause(lits + [Literal(x, True) for x in cell.escapes])
    return LClause(search, valid, "explain")


# -- resolution ---------------------------------------------------------------------

def _resolve_lits(cur: List[Literal], pivot: Literal, other: Iterable[Literal]) -> List[Literal]:
    neg = pivot.negate()
    out = [x for x in cur if x != neg]
    for x in other:
        if x != pivot and x not in out:
            out.append(x)
    return out


def resolve(c: Union[Clause, LClause], M: Trail, level: Optional[int] = None) -> LClause:
    """Resolve c against the propagated level-`level` literals of M, newest first."""
    level = M.level if level is None else level
    if isinstance(c, Clause):
        c = LClause(c, c)
    cur = list(c.clause.literals)
    valid = list(c.valid.literals)
    for e in reversed(M.elems):
        if e.kind == "assign":
            if e.var < level:
                break
            continue
        if e.literal.level != level:
            continue
        neg = e.literal.negate()
        if e.kind == "decide":
            if neg in cur:
                break
            continue
        if neg in cur:
            cur = _resolve_lits(cur, e.literal, e.reason.clause.literals)
            valid = _resolve_lits(valid, e.literal, e.reason.valid.literals)
    return LClause(Clause(cur), Clause(valid), "resolve")


# -- the engine -----------------------------------------------------------------------

class Hooks:
    """Callbacks the hybrid layer uses to steer the search; the defaults do nothing."""

    def seed(self, var: int) -> Optional[Fraction]:
        return None

    def after_assign(self, engine: "MCSAT") -> Optional[Dict[int, Fraction]]:
        return None

    def on_fail_cell(self, engine: "MCSAT") -> None:
        pass

    def on_learn(self, engine: "MCSAT", lemma: LClause) -> None:
        pass

    def on_backjump(self, engine: "MCSAT", level: int) -> None:
        pass

    def should_stop(self, engine: "MCSAT") -> bool:
        return False


@dataclass
class MCSATResult:
    status: str  # "sat", "unsat", "unknown" or "stopped"
    model: Optional[Dict[int, Fraction]] = None
    learned: List[LClause] = field(default_factory=list)
    steps: int = 0
    conflicts: int = 0

    @property
    def lemma_trace(self) -> List[Tuple[Clause, str]]:
        return [(l.valid, l.provenance) for l in self.learned]


class MCSAT:
    def __init__(self, F: PolyFormula, hooks: Optional[Hooks] = None, budget: int = DEFAULT_BUDGET,
                 learned: Sequence[LClause] = (), tick: Optional[Callable[[int], None]] = None):
        self.F = F
        self.n = F.n
        self.hooks = hooks or Hooks()
        self.budget = budget
        self.tick = tick
        self.M = Trail()
        self.CS: Dict[int, List[LClause]] = {i: [] for i in range(1, self.n + 1)}
        for c in F.clauses:
            self.CS[c.level].append(LClause(c, c, "input"))
        self.learned: List[LClause] = []
        for lc in learned:
            self._store(lc, lc.level)
        self.steps = 0
        self.conflicts = 0

    # bookkeeping
    def _step(self) -> None:
        self.steps += 1
        if self.tick is not None:
            self.tick(1)
        if self.steps > self.budget:
            raise ResourceLimit("step budget exhausted")

    def _store(self, lc: LClause, level: int) -> None:
        if level < 1:
            return
        bucket = self.CS.setdefault(level, [])
        if not any(x.clause == lc.clause for x in bucket):
            bucket.append(lc)

    def _learn(self, lc: LClause) -> None:
        self.learned.append(lc)
        self.hooks.on_learn(self, lc)

    @property
    def level(self) -> int:
        return self.M.level

    @level.setter
    def level(self, v: int) -> None:
        self.M.level = v

    def _pop_until(self, pred) -> None:
        while self.M.elems:
            e = self.M.pop()
            self._step()
            if pred(e):
                return

    # main loop
    def run(self) -> MCSATResult:
        if self.F.unsat:
            return MCSATResult("unsat", steps=self.steps)
        try:
            return self._loop()
        except ResourceLimit:
            return MCSATResult("unknown", learned=self.learned, steps=self.steps, conflicts=self.conflicts)

    def _result(self, status: str, model=None) -> MCSATResult:
        return MCSATResult(status, model, self.learned, self.steps, self.conflicts)

    def _loop(self) -> MCSATResult:
        if self.n == 0:
            return self._result("sat", {})
        while True:
            out = self._iteration()
            if out is not None:
                return out
            if self.hooks.should_stop(self):
                return self._result("stopped")

    def _iteration(self) -> Optional[MCSATResult]:
        M = self.M
        L = self.level
        bucket = self.CS[L]
        if value_of(bucket, M) == TRUE:
            lits = M.literals_at(L)
            view = LevelView(lits, L, M.assignment)
            sectors = view.sector_cells(lits)
            seed = self.hooks.seed(L)
            val = None
            if seed is not None and view.line.cell_of(seed) in sectors:
                val = to_rational(seed)
            if val is None:
                val = pick_rational(view.line.interval_set([sectors[0]]))
            M.assign(L, val)
            self._step()
            self.level = L + 1
            if self.level > self.n:
                return self._result("sat", dict(M.assignment))
            model = self.hooks.after_assign(self)
            if model is not None:
                return self._result("sat", model)
            return None

        # status update
        status = None
        for c in bucket:
            if value_of(c, M) == FALSE:
                status = ("unsat", None, c)
                break
        if status is None:
            for c in bucket:
                undef = [l for l in c if M.value(l) == UNDEF]
                if len(undef) == 1 and not any(M.value(l) == TRUE for l in c):
                    status = ("propagate", undef[0], c)
                    break
        if status is None:
            for c in bucket:
                if value_of(c, M) == UNDEF:
                    l = next(l for l in c if M.value(l) == UNDEF)
                    status = ("decide", l, c)
                    break
        kind, l, c = status

        if kind != "unsat":
            lits = M.literals_at(L)
            view = LevelView(lits + [l], L, M.assignment)
            if view.consistent(lits + [l]):
                if kind == "decide":
                    M.decide(l)
                else:
                    M.propagate(c, l)
                self._step()
            else:
                self.conflicts += 1
                core = view.min_core(lits, l)
                lemma = build_lemma(core, l, L, M.assignment)
                self._learn(lemma)
                self._store(lemma, L)
                M.propagate(lemma, l.negate())
                self._step()
                if kind == "propagate":
                    self.hooks.on_fail_cell(self)
                    kind = "unsat"

        if kind == "unsat":
            lemma = resolve(c, M, L)
            if lemma.clause.is_empty():
                return self._result("unsat")
            self._learn(lemma)
            if lemma.level == L:
                self._store(lemma, L)
                atoms = {x.atom for x in lemma.clause}
                idx = None
                for i in range(len(M.elems) - 1, -1, -1):
                    e = M.elems[i]
                    if e.kind == "decide" and e.literal.atom in atoms:
                        idx = i
                        break
                if idx is None:
                    raise AssertionError("no decided literal to undo")
                while len(M.elems) > idx:
                    M.pop()
                    self._step()
            else:
                tmp = lemma.level
                self._store(lemma, tmp)
                self._pop_until(lambda e: e.kind == "assign" and e.var == tmp)
                self.level = tmp
                self.hooks.on_backjump(self, tmp)
        return None


def mcsat_solve(F: PolyFormula, hooks: Optional[Hooks] = None, budget: int = DEFAULT_BUDGET,
                learned: Sequence[LClause] = (), tick=None) -> MCSATResult:
    return MCSAT(F, hooks, budget, learned, tick).run()


def bivariate_sat(atoms: Sequence[Atom], budget: int = DEFAULT_BUDGET) -> Optional[Dict[int, Fraction]]:
    """A rational model of a conjunction of strict atoms in at most two variables."""
    vs = sorted({v for a in atoms for v in a.vars()})
    if len(vs) > 2:
        raise ValueError("bivariate_sat takes at most two variables")
    if not vs:
        return {} if all(a.eval({}) for a in atoms) else None
    if len(vs) == 1:
        v = vs[0]
        s = solve_sign_conditions([(a.poly.univariate(v), a.op) for a in atoms])
        q = pick_rational(s)
        return None if q is None else {v: q}
    ren = {vs[0]: Poly.var(1), vs[1]: Poly.var(2)}
    clauses = [Clause([Literal(Atom(a.poly.substitute(ren), a.op))]) for a in atoms]
    res = mcsat_solve(PolyFormula(tuple(clauses), 2), budget=budget)
    if res.status != "sat":
        return None
    return {vs[0]: res.model[1], vs[1]: res.model[2]}
