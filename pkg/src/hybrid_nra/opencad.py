"""Open CAD: decide strict-only formulas by projection and lifting over full-dimensional cells.

Only sector samples are ever used, so the projection can afford to ignore
lower-dimensional trouble spots: it keeps every coefficient, every
discriminant and every pairwise resultant, and lifting picks one rational
per open interval between consecutive roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .clock import Deadline, WallClock
from .formula import Atom, Clause, Literal, PolyFormula, RootAtom
from .poly import Poly, discriminant, resultant, square_free_basis
from .realroots import LineStructure, coprime_basis


@dataclass
class ProjectionTower:
    n: int
    levels: Dict[int, List[Poly]] = field(default_factory=dict)

    def at(self, k: int) -> List[Poly]:
        return self.levels.get(k, [])

    def all(self) -> List[Poly]:
        return [p for k in sorted(self.levels) for p in self.levels[k]]


@dataclass
class CADResult:
    status: str  # "sat", "unsat" or "unknown"
    model: Optional[Dict[int, Fraction]] = None
    visited: int = 0
    pruned: int = 0


def _nonconst(ps: Iterable[Poly]) -> List[Poly]:
    return [p for p in ps if not p.is_zero() and not p.is_const()]


def project_level(P: Sequence[Poly], var: int) -> List[Poly]:
    """Coefficients, discriminants and pairwise resultants of P in x_var (constants dropped)."""
    out: List[Poly] = []
    for f in P:
        out.extend(f.coeffs(var))
        if f.degree(var) >= 2:
            out.append(discriminant(f, var))
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            out.append(resultant(P[i], P[j], var))
    return _nonconst(out)


def _basis(ps: List[Poly]) -> List[Poly]:
    if ps and all(p.level == 1 for p in ps):
        # univariate: the dense integer routines are much faster than generic gcds
        out = [Poly.from_univariate(b, 1).normalized() for b in coprime_basis([p.univariate(1) for p in ps])]
        out.sort(key=lambda p: (p.total_degree(), p.to_str()))
        return out
    return square_free_basis(ps)


def project_open(polys: Iterable[Poly], n: Optional[int] = None) -> ProjectionTower:
    """Projection tower over variables x_1..x_n, eliminating from the top."""
    ps = _nonconst(polys)
    if not ps:
        return ProjectionTower(n or 0, {})
    top = max(p.level for p in ps)
    n = top if n is None else n
    current = _basis(ps)
    tower = ProjectionTower(n, {})
    for k in range(top, 0, -1):
        Pk = [p for p in current if p.level == k]
        lower = [p for p in current if p.level < k]
        tower.levels[k] = Pk
        if k > 1:
            new = project_level(Pk, k) if Pk else []
            current = _basis(lower + new) if lower or new else []
    return tower


def _clause_top(c: Clause) -> int:
    return max((max(l.vars(), default=0) for l in c), default=0)


class _Lifter:
    def __init__(self, tower: ProjectionTower, F: PolyFormula, learned: Sequence[Clause], deadline=None, clock=None):
        self.tower = tower
        self.n = F.n
        self.deadline = deadline
        self.clock = clock
        self.checks: Dict[int, List[Clause]] = {}
        for c in list(F.clauses) + list(learned):
            self.checks.setdefault(_clause_top(c), []).append(c)
        self.visited = 0
        self.pruned = 0
        self.samples: List[Dict[int, Fraction]] = []  # kept only when record=True
        self.record = False

    def line(self, k: int, point: Dict[int, Fraction]) -> LineStructure:
        dense = []
        for f in self.tower.at(k):
            q = f.subs_values(point)
            if not q.is_const():
                dense.append(q.univariate(k))
        return LineStructure(dense)

    def ok(self, k: int, point: Dict[int, Fraction]) -> bool:
        return all(c.eval(point) for c in self.checks.get(k, ()))

    def lift(self, k: int, point: Dict[int, Fraction]) -> Optional[Dict[int, Fraction]]:
        if k > self.n:
            return dict(point)
        if self.deadline is not None and self.deadline.expired():
            raise TimeoutError
        samples = self.line(k, point).samples
        if self.clock is not None:
            self.clock.tick(len(samples))
        for v in samples:
            point[k] = v
            self.visited += 1
            if self.record:
                self.samples.append(dict(point))
            if not self.ok(k, point):
                self.pruned += 1
                continue
            found = self.lift(k + 1, point)
            if found is not None:
                return found
        point.pop(k, None)
        return None


def lift_and_decide(tower: ProjectionTower, F: PolyFormula, learned: Sequence[Clause] = (),
                    deadline=None, clock=None, record: bool = False) -> CADResult:
    """Depth-first lifting over open cells; learned clauses only prune."""
    if F.unsat:
        return CADResult("unsat")
    L = _Lifter(tower, F, learned, deadline, clock)
    L.record = record
    if not L.ok(0, {}):
        return CADResult("unsat")
    try:
        model = L.lift(1, {})
    except TimeoutError:
        res = CADResult("unknown", None, L.visited, L.pruned)
    else:
        res = CADResult("sat" if model is not None else "unsat", model, L.visited, L.pruned)
    if record:
        res.samples = L.samples  # type: ignore[attr-defined]
    return res


def _rename_atom(a, ren: Dict[int, Poly], idx: Dict[int, int]):
    if isinstance(a, RootAtom):
        return RootAtom(idx[a.var], a.op, a.index, a.poly.substitute(ren))
    return Atom(a.poly.substitute(ren), a.op)


def _rename_clause(c: Clause, ren, idx) -> Clause:
    return Clause(Literal(_rename_atom(l.atom, ren, idx), l.positive) for l in c)


def opencad_solve(F: PolyFormula, learned: Sequence[Clause] = (), order: Optional[Sequence[int]] = None,
                  budget: Optional[float] = None, clock=None) -> CADResult:
    """Project then lift.  ``order`` lists the variables from first lifted to last."""
    if F.unsat:
        return CADResult("unsat")
    n = F.n
    if order is not None:
        order = list(order)
        if sorted(order) != list(range(1, n + 1)):
            raise ValueError("order must be a permutation of 1..%d" % n)
        idx = {v: i + 1 for i, v in enumerate(order)}
        ren = {v: Poly.var(idx[v]) for v in order}
        G = PolyFormula(tuple(_rename_clause(c, ren, idx) for c in F.clauses), n, False, None)
        Ls = [_rename_clause(c, ren, idx) for c in learned]
        res = opencad_solve(G, Ls, None, budget, clock)
        if res.model is not None:
            res.model = {v: res.model[idx[v]] for v in order}
        return res
    tower = project_open(F.polys(), n)
    deadline = Deadline(clock or WallClock(), budget) if budget is not None else None
    return lift_and_decide(tower, F, learned, deadline, clock)
