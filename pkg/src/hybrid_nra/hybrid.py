"""Three-stage solver: 2d-LS, then MCSAT steered by local search, then open CAD.

Stage 1 looks for a model by local search alone.  Stage 2 runs MCSAT seeded
with the local-search assignment; at promising depths it hands the restricted
formula back to local search, and it counts the cells it has seen fail.  Once
that count, the stage-2 time and the degree all look bad, stage 3 decides the
formula with open CAD, pruned by every lemma MCSAT has learned.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, List, Optional, Tuple

from .clock import Deadline, WallClock
from .formula import PolyFormula, eval_formula, partial_restrict
from .localsearch import LSParams, run_2d_ls
from .mcsat import Hooks, mcsat_solve
from .opencad import opencad_solve
from .realroots import Endpoint, Interval, pick_in

log = logging.getLogger(__name__)

VARIANTS = ("full", "V1", "V2", "V3", "V4", "V5")


# -- heuristic formulas ------------------------------------------------------------

def _pow(base: int, e: Fraction):
    if e.denominator == 1:
        return Fraction(base) ** int(e)
    return base ** float(e)


def stage1_time_limit(mindeg: int, polynum: int, n: int, clausenum: int):
    """Stage-1 budget in seconds; exact (a Fraction) when every exponent is an integer."""
    t = (2 * _pow(3, Fraction(mindeg, 5) - 2) + _pow(2, Fraction(polynum, 10) - Fraction(3, 2))
         + _pow(2, Fraction(n, 10) - Fraction(3, 2)) + Fraction(clausenum, 50) - Fraction(1, 5))
    floor_ = Fraction(85, 100)
    return t if t >= floor_ else floor_


def goto_2dls(level: int, n: int, maxlevel: int) -> bool:
    return n - 2 > level and level > min(Fraction(2, 5) * n, Fraction(9, 10) * maxlevel)


def max_num_fail_cells(polynum: int, maxdeg: int, n: int) -> int:
    return floor(Fraction(1, 10) * min(polynum, maxdeg) * n)


def opencad_trigger(num_fail_cells: int, threshold: int, stage2_elapsed: float, maxdeg: int,
                    min_elapsed: float = 20.0, min_degree: int = 2) -> bool:
    return num_fail_cells > threshold and stage2_elapsed > min_elapsed and maxdeg > min_degree


def formula_stats(F: PolyFormula) -> Dict[str, int]:
    ps = F.polys()
    degs = [p.total_degree() for p in ps] or [0]
    return {
        "polynum": len(ps),
        "maxdeg": max(degs),
        "mindeg": min(degs),
        "n": F.n,
        "clausenum": len(F.clauses),
    }


# -- preprocessing -----------------------------------------------------------------

FIX_WIDTH = Fraction(1, 10 ** 5)


@dataclass
class Preprocessed:
    domains: Dict[int, Tuple[Optional[Fraction], Optional[Fraction]]] = field(default_factory=dict)
    fixed: Dict[int, Fraction] = field(default_factory=dict)
    status: Optional[str] = None  # "unsat" when some interval is empty
    direct_mcsat: bool = False


def preprocess(F: PolyFormula) -> Preprocessed:
    """Variable intervals from unit clauses with a univariate linear atom."""
    out = Preprocessed()
    if F.unsat:
        out.status = "unsat"
        return out
    for c in F.clauses:
        if len(c) != 1:
            continue
        l = c.literals[0]
        a = l.atom
        vs = a.vars()
        if not l.positive or getattr(a, "op", None) not in ("<", ">") or len(vs) != 1 or a.poly.degree(vs[0]) != 1:
            continue
        v = vs[0]
        b, k = a.poly.coeffs(v)
        bound = -b.const_value() / k.const_value()
        upper = (a.op == "<") == (k.const_value() > 0)
        lo, hi = out.domains.get(v, (None, None))
        if upper:
            hi = bound if hi is None else min(hi, bound)
        else:
            lo = bound if lo is None else max(lo, bound)
        out.domains[v] = (lo, hi)
    for v, (lo, hi) in sorted(out.domains.items()):
        if lo is not None and hi is not None:
            if lo >= hi:
                out.status = "unsat"
                return out
            if hi - lo < FIX_WIDTH:
                out.fixed[v] = pick_in(Interval(Endpoint(lo), Endpoint(hi)))
    out.direct_mcsat = F.n - len(out.fixed) <= 2
    return out


# -- the solver ----------------------------------------------------------------------

@dataclass
class HybridParams:
    max_restart1: int = 1
    max_restart2: int = 3
    max_jump: Optional[int] = None  # default 10^5 * polynum * n
    m: int = 6
    max_num_fail_cells: Optional[int] = None  # default from max_num_fail_cells()
    stage1_budget: Optional[float] = None  # default from stage1_time_limit()
    inner_ls_budget: float = 1.0
    inner_ls_timeouts: int = 3
    opencad_min_elapsed: float = 20.0
    opencad_min_degree: int = 2
    len1: int = 4
    truncate: bool = True
    seed: int = 0
    variant: str = "full"
    mcsat_budget: int = 10 ** 6
    order: Optional[List[int]] = None  # variable order for open CAD only

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError("unknown variant %r (expected one of %s)" % (self.variant, ", ".join(VARIANTS)))


@dataclass
class HybridResult:
    status: str  # "sat" or "unsat"
    model: Optional[Dict[int, Fraction]] = None
    stage: str = ""
    num_fail_cells: int = 0
    lemmas: int = 0
    cells: int = 0
    events: List[dict] = field(default_factory=list)


class _Stage2Hooks(Hooks):
    def __init__(self, solver: "_Hybrid"):
        self.s = solver

    def seed(self, var: int):
        return self.s.assignment.get(var)

    def after_assign(self, engine):
        return self.s.after_assign(engine)

    def on_fail_cell(self, engine) -> None:
        self.s.num_fail += 1
        self.s.fail_from_conflicts += 1
        self.s.event("fail_cell", level=engine.level)

    def on_learn(self, engine, lemma) -> None:
        self.s.learned.append(lemma)

    def on_backjump(self, engine, level: int) -> None:
        s = self.s
        if s.ls_disabled_at is not None and level < s.ls_disabled_at:
            s.ls_disabled_at = None
            s.ls_timeouts = 0
            s.event("inner_ls_enabled", level=level)

    def should_stop(self, engine) -> bool:
        return self.s.should_switch()


class _Hybrid:
    def __init__(self, F: PolyFormula, params: HybridParams, clock):
        self.F = F
        self.p = params
        self.clock = clock
        self.stats = formula_stats(F)
        st = self.stats
        self.threshold = (params.max_num_fail_cells if params.max_num_fail_cells is not None
                          else max_num_fail_cells(st["polynum"], st["maxdeg"], st["n"]))
        self.max_jump = params.max_jump or 10 ** 5 * max(1, st["polynum"]) * max(1, st["n"])
        self.events: List[dict] = []
        self.assignment: Dict[int, Fraction] = {}
        self.num_fail = 0
        self.fail_from_ls = 0
        self.fail_from_conflicts = 0
        self.maxlevel = 0
        self.learned = []
        self.ls_timeouts = 0
        self.ls_disabled_at: Optional[int] = None
        self.ls_calls = 0
        self.stage2: Optional[Deadline] = None
        self.pre = Preprocessed()

    def event(self, kind: str, **data) -> None:
        e = {"event": kind}
        e.update(data)
        self.events.append(e)
        log.debug("%s", e)

    def done(self, status: str, model=None, stage: str = "", cells: int = 0) -> HybridResult:
        if status == "sat" and not eval_formula(self.F, model):
            raise AssertionError("model does not satisfy the formula")
        self.event("result", status=status, stage=stage)
        return HybridResult(status, model, stage, self.num_fail, len(self.learned), cells, self.events)

    # stage 2 callbacks
    def after_assign(self, engine):
        level = engine.level
        for v, q in engine.M.assignment.items():
            self.assignment[v] = q
        self.maxlevel = max(self.maxlevel, level)
        if self.p.variant == "V4" or self.ls_disabled_at is not None:
            return None
        n = self.F.n
        if not goto_2dls(level, n, self.maxlevel):
            return None
        prefix = {v: engine.M.assignment[v] for v in range(1, level)}
        G = partial_restrict(self.F, prefix)
        if G.unsat:
            return None
        self.ls_calls += 1
        params = LSParams(
            max_restart=self.p.max_restart2, max_jump=self.max_jump, m=self.p.m, len1=self.p.len1,
            budget=self.p.inner_ls_budget, seed=self.p.seed + self.ls_calls, fixed=prefix,
            domains=self.pre.domains, truncate=self.p.truncate,
        )
        res = run_2d_ls(G, params, self.clock)
        self.num_fail += res.num_jump
        self.fail_from_ls += res.num_jump
        self.event("inner_ls", level=level, status=res.status, num_jump=res.num_jump, timed_out=res.timed_out)
        if res.status == "SAT":
            model = dict(prefix)
            for v in range(level, n + 1):
                model[v] = res.alpha[v]
            if eval_formula(self.F, model):
                self.event("stage", stage="2-ls")
                return model
        if self.p.variant != "V5":
            for v in range(level, n + 1):
                self.assignment[v] = res.alpha[v]
        if res.timed_out:
            self.ls_timeouts += 1
            if self.ls_timeouts >= self.p.inner_ls_timeouts:
                self.ls_disabled_at = level
                self.event("inner_ls_disabled", level=level)
        return None

    def should_switch(self) -> bool:
        if self.p.variant == "V3":
            return False
        return opencad_trigger(self.num_fail, self.threshold, self.stage2.elapsed(), self.stats["maxdeg"],
                               self.p.opencad_min_elapsed, self.p.opencad_min_degree)

    def opencad(self, reason: str) -> HybridResult:
        self.event("stage", stage="3", reason=reason, lemmas=len(self.learned))
        res = opencad_solve(self.F, [lc.valid for lc in self.learned], self.p.order, clock=self.clock)
        return self.done(res.status, res.model, "opencad", res.visited)

    def tick(self, k: int) -> None:
        self.clock.tick(k)

    def run(self) -> HybridResult:
        F, p = self.F, self.p
        self.event("start", variant=p.variant, **self.stats)
        if F.unsat:
            return self.done("unsat", stage="preprocess")
        self.pre = pre = preprocess(F)
        if pre.status == "unsat":
            return self.done("unsat", stage="preprocess")
        if pre.fixed:
            self.event("fixed", vars=sorted(pre.fixed))
        if pre.direct_mcsat:
            self.event("stage", stage="mcsat-direct")
            res = mcsat_solve(F, budget=p.mcsat_budget, tick=self.tick)
            self.learned = list(res.learned)
            if res.status in ("sat", "unsat"):
                return self.done(res.status, res.model, "mcsat-direct")
            return self.opencad("mcsat-budget")

        # stage 1
        if p.variant not in ("V1", "V4"):
            st = self.stats
            budget = p.stage1_budget
            if budget is None:
                budget = float(stage1_time_limit(max(1, st["mindeg"]), max(1, st["polynum"]), st["n"],
                                                 max(1, st["clausenum"])))
            self.event("stage", stage="1", budget=budget)
            ls = run_2d_ls(F, LSParams(
                max_restart=p.max_restart1, max_jump=self.max_jump, m=p.m, len1=p.len1, budget=budget,
                seed=p.seed, fixed=pre.fixed, domains=pre.domains, truncate=p.truncate,
            ), self.clock)
            self.event("stage1_done", status=ls.status, num_jump=ls.num_jump)
            self.num_fail = ls.num_jump
            self.fail_from_ls = ls.num_jump
            if ls.status == "SAT":
                return self.done("sat", ls.alpha, "2d-ls")
            self.assignment = dict(ls.alpha)

        if p.variant == "V2":
            return self.opencad("variant")

        # stage 2
        self.event("stage", stage="2")
        self.stage2 = Deadline(self.clock)
        res = mcsat_solve(F, _Stage2Hooks(self), budget=p.mcsat_budget, tick=self.tick)
        if res.status in ("sat", "unsat"):
            return self.done(res.status, res.model, "mcsat")
        return self.opencad("trigger" if res.status == "stopped" else "mcsat-budget")


def hybrid_solve(F: PolyFormula, params: Optional[HybridParams] = None, clock=None) -> HybridResult:
    """Decide a strict-only CNF; SAT models are verified before they are returned."""
    return _Hybrid(F, params or HybridParams(), clock or WallClock()).run()
