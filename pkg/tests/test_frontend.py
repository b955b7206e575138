from __future__ import annotations

import csv
import io
import json
import os
import random
import shutil
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hybrid_nra.formula import eval_formula, lit
from hybrid_nra.frontend import cli
from hybrid_nra.frontend.bench import BenchRecord, collect_instances, run_bench, write_csv
from hybrid_nra.frontend.generator import InfeasibleParametersError, random_small_formula, rf_generate
from hybrid_nra.frontend.smtlib import (
    SmtParseError,
    SmtUnsupportedOperator,
    UnsupportedLogicError,
    parse_file,
    parse_smtlib,
    to_smtlib,
)
from hybrid_nra.poly import Poly

DATA = os.path.join(os.path.dirname(__file__), "data")
HEAD = "(set-logic QF_NRA)(declare-fun x () Real)(declare-fun y () Real)"
BENCH_RF = ({30, 40}, {60, 80}, {20, 30}, {10, 20}, {20, 30}, {40, 60}, {3, 5})

x, y = Poly.var(1), Poly.var(2)


def test_parse_atoms():
    F = parse_smtlib(HEAD + "(assert (< (* x x) 2))").formula
    assert [c.literals for c in F.clauses] == [(lit(x ** 2 - 2, "<"),)]
    F = parse_smtlib(HEAD + "(assert (distinct x 0))").formula
    assert set(F.clauses[0]) == {lit(x, "<"), lit(x, ">")}
    F = parse_smtlib(HEAD + "(assert (> x 0.1))").formula
    assert F.clauses[0].literals[0].atom.poly == x - Fraction(1, 10)


@pytest.mark.parametrize("op", ["<=", ">=", "="])
def test_non_strict_operators_rejected(op):
    with pytest.raises(SmtUnsupportedOperator) as e:
        parse_smtlib(HEAD + "(assert (%s x 0))" % op)
    assert "1:" in str(e.value)


def test_errors_carry_positions():
    with pytest.raises(SmtParseError) as e:
        parse_smtlib(HEAD + "\n(assert (< x 0)")
    assert str(e.value).startswith("2:")
    with pytest.raises(UnsupportedLogicError):
        parse_smtlib("(set-logic QF_LIA)")
    with pytest.raises(SmtParseError):
        parse_smtlib(HEAD + "(assert (< z 0))")
    with pytest.raises(SmtUnsupportedOperator):
        parse_smtlib(HEAD + "(assert (not (< x 0)))")


def test_let_and_implication():
    text = HEAD + """
    (assert (let ((a (* x x)) (b (< y 0))) (let ((c (+ a 1))) (and b (> c y) (=> (not (distinct x 1)) (< a 3))))))
    (assert (let ((x 2)) (> y x)))"""
    F = parse_smtlib(text).formula
    assert F.to_str() == "(y < 0) and (x^2 - y + 1 > 0) and (x - 1 < 0 or x - 1 > 0 or x^2 - 3 < 0) and (y - 2 > 0)"


def test_data_files():
    p = parse_file(os.path.join(DATA, "ball_cut.smt2"))
    assert p.variables == ["a", "b", "c"] and p.check_sat
    p = parse_file(os.path.join(DATA, "running_example_r2.smt2"))
    assert eval_formula(p.formula, {1: Fraction(3, 2), 2: 0, 3: 0, 4: Fraction(8, 5)})


@settings(max_examples=60)
@given(st.integers(0, 10 ** 6))
def test_print_then_parse_round_trip(seed):
    F = random_small_formula(random.Random(seed), max_vars=4)
    G = parse_smtlib(to_smtlib(F)).formula
    assert G.clauses == F.clauses and G.n == F.n


def _check_rf(F, sets):
    V, P, C, A, D, B, T = sets
    assert F.n in V
    assert len(F.clauses) in C
    for c in F.clauses:
        assert len(c) in A
    polys = F.polys()
    assert len(polys) <= max(P)
    for p in polys:
        assert p.total_degree() in D
        assert len(p.terms) <= max(T)
        assert all(abs(Fraction(c)) <= max(B) for c in p.terms.values())


def test_rf_generator_benchmark_tuple():
    for seed in range(100):
        _check_rf(rf_generate(*BENCH_RF, seed=seed), BENCH_RF)


def test_rf_generator_singletons_and_errors():
    sets = ({3}, {4}, {5}, {2}, {2}, {5}, {3})
    for seed in range(20):
        F = rf_generate(*sets, seed=seed)
        assert F.n == 3 and len(F.clauses) == 5
        assert all(len(c) == 2 for c in F.clauses)
        assert len(F.polys()) == 4
    with pytest.raises(InfeasibleParametersError):
        rf_generate({3}, {4}, {0}, {2}, {2}, {5}, {3})
    with pytest.raises(InfeasibleParametersError):
        rf_generate({3}, {1}, {2}, {3}, {2}, {5}, {3})
    assert rf_generate(*BENCH_RF, seed=4).clauses == rf_generate(*BENCH_RF, seed=4).clauses


def test_csv_layout():
    recs = [BenchRecord("a", "sat", 0.5, "2d-ls", 3, 0, 0), BenchRecord("b", "unsat", 1.25, "mcsat", 10, 4, 0),
            BenchRecord("c", "unknown", 9.0, "timeout")]
    text = write_csv(recs)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["id", "answer", "time_s", "stage", "numFailCells", "lemmas", "cells"]
    assert rows[-1][:4] == ["#SUMMARY", "#SAT=1", "#UNSAT=1", "#ALL=3"]
    assert all(len(r) == 7 for r in rows)
    assert '"' not in text


def test_bench_runs_instances_in_subprocesses(tmp_path):
    for name in ("interval", "ball_cut", "running_example_r2"):
        shutil.copy(os.path.join(DATA, name + ".smt2"), tmp_path)
    inst = collect_instances([str(tmp_path)])
    assert [i for i, _ in inst] == ["ball_cut", "interval", "running_example_r2"]
    recs = run_bench(inst, ["--clock", "work"], timeout=60, jobs=2)
    assert [r.answer for r in recs] == ["unsat", "sat", "sat"]
    text = write_csv(recs)
    assert text.splitlines()[-1].startswith("#SUMMARY,#SAT=2,#UNSAT=1,#ALL=3")
    again = write_csv(run_bench(inst, ["--clock", "work"], timeout=60))
    assert again == text


def test_bench_timeout_reports_unknown():
    inst = [("slow", os.path.join(DATA, "slow_open_cad.smt2"))]
    (rec,) = run_bench(inst, ["--v2"], timeout=1.0)
    assert rec.answer == "unknown"
    assert rec.time_s == 1.0


def test_cli_solve_exit_codes(capsys):
    assert cli.main(["solve", os.path.join(DATA, "interval.smt2")]) == 0
    assert capsys.readouterr().out.strip() == "sat"
    assert cli.main(["solve", os.path.join(DATA, "ball_cut.smt2"), "--json", "--clock", "work"]) == 1
    rec = json.loads(capsys.readouterr().out)
    assert rec["answer"] == "unsat" and rec["stage"] == "mcsat"
    assert cli.main(["solve", os.path.join(DATA, "running_example_r2.smt2"), "--verbosity", "1", "--v4"]) == 0
    out = capsys.readouterr().out
    assert "z = " in out and "stage=" in out


def test_cli_errors(tmp_path, capsys):
    bad = tmp_path / "bad.smt2"
    bad.write_text(HEAD + "(assert (<= x 0))")
    assert cli.main(["solve", str(bad)]) == 3
    assert "non-strict" in capsys.readouterr().out
    assert cli.main(["solve", str(tmp_path / "missing.smt2")]) == 3
    with pytest.raises(SystemExit):
        cli.main(["solve", str(bad), "--stage2", "off", "--stage3", "off"])
    with pytest.raises(SystemExit):
        cli.main(["solve", str(bad), "--v1", "--v2"])


def test_cli_stage_flags_map_to_variants():
    p = cli.build_parser()
    a = p.parse_args(["solve", "f.smt2", "--stage1", "off"])
    assert cli.params_from_args(a).variant == "V1"
    a = p.parse_args(["solve", "f.smt2", "--stage3", "off", "--seed", "4", "--var-order", "2,1"])
    params = cli.params_from_args(a)
    assert (params.variant, params.seed, params.order) == ("V3", 4, [2, 1])


def test_cli_generate_and_bench(tmp_path, capsys):
    out = tmp_path / "gen"
    assert cli.main(["generate", "--out", str(out), "--count", "3", "--seed", "2"]) == 0
    names = sorted(os.listdir(out))
    assert names == ["small_0000.smt2", "small_0001.smt2", "small_0002.smt2"]
    for n in names:
        parse_file(str(out / n))
    csv_path = tmp_path / "r.csv"
    assert cli.main(["bench", str(out), "--csv", str(csv_path), "--clock", "work", "--timeout", "60"]) == 0
    rows = list(csv.reader(open(csv_path)))
    assert len(rows) == 5 and rows[-1][3] == "#ALL=3"
