"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are repeated in the terminal summary under "acceptance criteria".
"""
from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from functools import lru_cache

import numpy as np
import pytest

from hybrid_nra.clock import WorkClock
from hybrid_nra.formula import Atom, eval_formula, normalize
from hybrid_nra.frontend.bench import run_bench, write_csv
from hybrid_nra.frontend.generator import random_small_formula
from hybrid_nra.frontend.smtlib import to_smtlib
from hybrid_nra.hybrid import (
    VARIANTS,
    HybridParams,
    goto_2dls,
    hybrid_solve,
    max_num_fail_cells,
    stage1_time_limit,
)
from hybrid_nra.localsearch import is_sample_point, sample_point_2v, truncate_rational, two_d_cell_jump_axes
from hybrid_nra.mcsat import mcsat_solve
from hybrid_nra.opencad import opencad_solve
from hybrid_nra.poly import discriminant, resultant, substitute, sylvester_resultant
from hybrid_nra.realroots import count_real_roots_sturm, isolate_roots

from conftest import ACCEPTANCE_LINES
from nra_cases import V, f1, f2, quartic_form, random_point, random_univariate, running_example

SUITE_SIZE = 200
SUITE_SEED = 20240601


def report(num: int, ok: bool, detail: str) -> None:
    line = "criterion %d: %s (%s)" % (num, "PASS" if ok else "FAIL", detail)
    ACCEPTANCE_LINES.append(line)
    print(line)


@lru_cache(maxsize=None)
def suite():
    rng = random.Random(SUITE_SEED)
    return tuple(random_small_formula(rng, max_vars=3, max_degree=3, max_clauses=4, max_atoms=3)
                 for _ in range(SUITE_SIZE))


@lru_cache(maxsize=None)
def mcsat_runs():
    return tuple(mcsat_solve(F) for F in suite())


# 129 points per axis, step 1/8 over [-8, 8]; k/8 for k in -64..64
GRID_K = np.arange(-64, 65, dtype=np.int64)


def grid_has_model(F) -> bool:
    """Exact search of the 1/8 grid: p(k/8) * 8^d is an integer, so int64 arithmetic decides signs."""
    axes = np.meshgrid(*([GRID_K] * F.n), indexing="ij") if F.n else []
    ok = np.ones(axes[0].shape if axes else (), dtype=bool)
    for c in F.clauses:
        cm = np.zeros_like(ok)
        for l in c:
            p = l.atom.poly
            d = p.total_degree()
            den = math.lcm(*[Fraction(v).denominator for v in p.terms.values()])
            val = np.zeros_like(axes[0])
            for e, v in p.terms.items():
                v = Fraction(v) * den
                term = np.full_like(axes[0], int(v) * 8 ** (d - sum(e)))
                for i, k in enumerate(e):
                    if k:
                        term = term * axes[i] ** k
                val = val + term
            s = np.sign(val)
            lm = np.zeros_like(ok)
            for sv in (-1, 0, 1):
                if l.holds_for_sign(sv):
                    lm |= s == sv
            cm |= lm
        ok &= cm
        if not ok.any():
            return False
    return bool(ok.any())


def test_criterion_1_running_example():
    worst, bad = 0.0, []
    for r in range(1, 11):
        F = running_example(r)
        t0 = time.perf_counter()
        res = hybrid_solve(F)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        if not (res.status == "sat" and eval_formula(F, res.model) and dt < 5):
            bad.append(r)
    report(1, not bad, "r=1..10, slowest %.2fs, failures %s" % (worst, bad))
    assert not bad


def test_criterion_2_worked_values():
    t1, t2 = V(1), V(2)
    checks = []
    checks.append(substitute(f2(1), {1: 15 * t2, 2: t1, 3: 16 * t2}) == t1 ** 2 + 481 * t2 ** 2 - 90 * t2 + 4)
    for r in (1, 2, 3, 5, 10):
        zero = {i: Fraction(0) for i in range(1, r + 3)}
        l1, l2 = Atom(f1(r), "<"), Atom(f2(r), "<")
        checks.append(is_sample_point(l1, zero, 1, r + 2, {**zero, 1: Fraction(1), r + 2: Fraction(2)}))
        checks.append(sample_point_2v(l2, zero, r + 1, r + 2) is None)
        checks.append(two_d_cell_jump_axes(l2, zero, r + 1, r + 2) is None)
    checks.append(truncate_rational(Fraction(1234, 12345)) == Fraction(12, 123))
    checks.append(truncate_rational(Fraction(12345, 1234)) == Fraction(123, 12))
    ok = all(checks)
    report(2, ok, "%d/%d exact checks" % (sum(checks), len(checks)))
    assert ok


def test_criterion_3_heuristics():
    checks = [
        stage1_time_limit(10, 15, 15, 60) == 5,
        isinstance(stage1_time_limit(10, 15, 15, 60), Fraction),
        goto_2dls(5, 10, 5) is True,
        goto_2dls(4, 10, 5) is False,
        all(goto_2dls(n - 1, n, m) is False for n in range(2, 30) for m in range(0, n + 1)),
        max_num_fail_cells(20, 5, 10) == 5,
    ]
    ok = all(checks)
    report(3, ok, "%d/%d exact checks" % (sum(checks), len(checks)))
    assert ok


def test_criterion_4_cross_engine_oracle():
    t0 = time.perf_counter()
    mismatches, bad_models, grid_hits = [], [], []
    counts = {"sat": 0, "unsat": 0}
    for i, (F, m) in enumerate(zip(suite(), mcsat_runs())):
        c = opencad_solve(F)
        h = hybrid_solve(F, HybridParams(), WorkClock())
        answers = {m.status, c.status, h.status}
        if len(answers) != 1 or "unknown" in answers:
            mismatches.append(i)
            continue
        counts[m.status] += 1
        if m.status == "sat":
            if not all(eval_formula(F, r.model) for r in (m, c, h)):
                bad_models.append(i)
        elif grid_has_model(F):
            grid_hits.append(i)
    dt = time.perf_counter() - t0
    ok = not (mismatches or bad_models or grid_hits) and dt < 600
    report(4, ok, "%d sat, %d unsat, mismatches %s, bad models %s, grid models %s, %.1fs"
           % (counts["sat"], counts["unsat"], mismatches, bad_models, grid_hits, dt))
    assert ok


def test_criterion_5_lemma_validity():
    """Explain lemmas are valid on their own; resolvents are valid modulo the input formula."""
    rng = random.Random(5)
    n_lemmas = violations = 0
    for F, m in zip(suite(), mcsat_runs()):
        for lc in m.learned:
            n_lemmas += 1
            for _ in range(1000):
                pt = random_point(rng, F.n)
                if lc.provenance == "explain":
                    good = lc.valid.eval(pt)
                else:
                    good = lc.valid.eval(pt) or not eval_formula(F, pt)
                if not good:
                    violations += 1
                    break
    report(5, violations == 0, "%d lemmas x 1000 points, %d violations" % (n_lemmas, violations))
    assert violations == 0


def test_criterion_6_kernel_identities():
    rng = random.Random(6)
    t0 = time.perf_counter()
    bad_res = bad_count = 0
    y = V(2)
    for _ in range(500):
        # discriminants start at degree 2
        d = rng.randint(2, 12)
        f = random_univariate(rng, d, var=2)
        if rng.random() < 0.5:
            # coefficients that depend on x_1 as well
            f = f + V(1) * y ** rng.randint(0, d - 1)
        g = f.derivative(2)
        lhs = f.lc(2) * discriminant(f, 2)
        rhs = resultant(f, g, 2)
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        if lhs != sign * rhs or rhs != sylvester_resultant(f, g, 2):
            bad_res += 1
    for _ in range(500):
        p = random_univariate(rng, rng.randint(1, 12))
        if rng.random() < 0.3 and p.degree(1) <= 9:
            p = p * random_univariate(rng, rng.randint(1, 3))
        roots = isolate_roots(p)
        if len(roots) != count_real_roots_sturm(p):
            bad_count += 1
    dt = time.perf_counter() - t0
    ok = bad_res == 0 and bad_count == 0 and dt < 120
    report(6, ok, "res-disc violations %d, Sturm violations %d, %.1fs" % (bad_res, bad_count, dt))
    assert ok


def test_criterion_7_quartic_form():
    q = quartic_form()
    F = normalize([[(q, ">")]], 5)
    t0 = time.perf_counter()
    res = hybrid_solve(F)
    dt = time.perf_counter() - t0
    ok = (res.status == "sat" and q.eval(res.model) > 0 and dt < 60
          and q.eval({i: 1 for i in range(1, 6)}) == 5)
    report(7, ok, "%s via %s in %.2fs" % (res.status, res.stage, dt))
    assert ok


def test_criterion_8_ablation_consistency():
    diffs = []
    for i, F in enumerate(suite()):
        want = hybrid_solve(F, HybridParams(), WorkClock()).status
        for v in VARIANTS:
            if v == "full":
                continue
            res = hybrid_solve(F, HybridParams(variant=v), WorkClock())
            if res.status != want or (res.status == "sat" and not eval_formula(F, res.model)):
                diffs.append((i, v))
    report(8, not diffs, "V1-V5 vs full on %d instances, differences %s" % (SUITE_SIZE, diffs[:10]))
    assert not diffs


@pytest.fixture(scope="module")
def suite_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("suite")
    for i, F in enumerate(suite()):
        (d / ("inst_%03d.smt2" % i)).write_text(to_smtlib(F))
    return d


def test_criterion_9_determinism(suite_dir):
    inst = [("inst_%03d" % i, str(suite_dir / ("inst_%03d.smt2" % i))) for i in range(SUITE_SIZE)]
    args = ["--clock", "work", "--seed", "1"]
    a = write_csv(run_bench(inst, args, timeout=120))
    b = write_csv(run_bench(inst, args, timeout=120))
    ok = a == b and a.count("\n") == SUITE_SIZE + 2
    report(9, ok, "two bench runs over %d instances, %d bytes, identical=%s" % (SUITE_SIZE, len(a), a == b))
    assert ok
