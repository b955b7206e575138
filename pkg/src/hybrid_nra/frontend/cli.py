"""Command line: solve one SMT-LIB file, run a benchmark directory, or generate instances.

Exit codes of ``solve``: 0 sat, 1 unsat, 2 unknown (timeout), 3 error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import signal
import sys
import time
from typing import List, Optional

from ..clock import WallClock, WorkClock
from ..formula import FormulaError
from ..hybrid import HybridParams, hybrid_solve
from .smtlib import SmtError, parse_file, to_smtlib

EXIT = {"sat": 0, "unsat": 1, "unknown": 2, "error": 3}


class _Timeout(Exception):
    pass


def _on_off(s: str) -> bool:
    if s not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected on or off, got %r" % s)
    return s == "on"


def _var_order(s: str) -> List[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma separated list of variable indices")


def add_solver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--stage1", type=_on_off, default=True, metavar="on|off", help="2d-LS before MCSAT")
    p.add_argument("--stage2", type=_on_off, default=True, metavar="on|off", help="LS-driven MCSAT")
    p.add_argument("--stage3", type=_on_off, default=True, metavar="on|off", help="open CAD fallback")
    g = p.add_mutually_exclusive_group()
    for v in range(1, 6):
        g.add_argument("--v%d" % v, dest="variant", action="store_const", const="V%d" % v,
                       help="ablation preset V%d" % v)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--len1", type=int, default=4, help="digit bound for rational truncation")
    p.add_argument("--no-truncate", action="store_true", help="keep full rationals in local search")
    p.add_argument("--var-order", type=_var_order, default=None, help="open CAD variable order, e.g. 3,1,2")
    p.add_argument("--clock", choices=("wall", "work"), default="wall",
                   help="'work' measures budgets in counted work units, for reproducible runs")
    p.add_argument("--verbosity", type=int, default=0)


def params_from_args(a) -> HybridParams:
    variant = a.variant
    if variant is None:
        flags = (a.stage1, a.stage2, a.stage3)
        table = {(True, True, True): "full", (False, True, True): "V1",
                 (True, False, True): "V2", (True, True, False): "V3"}
        if flags not in table:
            raise SystemExit("unsupported stage combination: at most one stage can be switched off, "
                             "and open CAD is needed whenever MCSAT is off")
        variant = table[flags]
    return HybridParams(seed=a.seed, len1=a.len1, truncate=not a.no_truncate, variant=variant, order=a.var_order)


def _clock(name: str):
    return WorkClock() if name == "work" else WallClock()


def solve_file(path: str, params: HybridParams, clock_name: str = "wall", timeout: Optional[float] = None) -> dict:
    """Solve one file; returns a JSON-ready record."""
    clock = _clock(clock_name)
    start = time.monotonic()
    rec = {"answer": "unknown", "stage": "", "numFailCells": 0, "lemmas": 0, "cells": 0}
    if timeout:
        def fire(*_):
            raise _Timeout()
        signal.signal(signal.SIGALRM, fire)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        prob = parse_file(path)
        res = hybrid_solve(prob.formula, params, clock)
        rec.update(answer=res.status, stage=res.stage, numFailCells=res.num_fail_cells,
                   lemmas=res.lemmas, cells=res.cells)
        if res.model is not None:
            rec["model"] = {prob.names.get(k, "x%d" % k): str(v) for k, v in sorted(res.model.items())}
    except _Timeout:
        rec["answer"] = "unknown"
        rec["stage"] = "timeout"
    finally:
        if timeout:
            signal.setitimer(signal.ITIMER_REAL, 0)
    rec["time_s"] = clock.now() if clock.deterministic else time.monotonic() - start
    if rec["stage"] == "timeout" and timeout:
        rec["time_s"] = timeout
    return rec


def cmd_solve(a) -> int:
    params = params_from_args(a)
    try:
        rec = solve_file(a.file, params, a.clock, a.timeout)
    except (SmtError, FormulaError, OSError) as e:
        print("(error \"%s\")" % str(e).replace('"', "'"))
        return EXIT["error"]
    if a.json:
        print(json.dumps(rec, sort_keys=True))
    else:
        print(rec["answer"])
        if a.verbosity >= 1 and "model" in rec:
            for k, v in rec["model"].items():
                print("  %s = %s" % (k, v))
        if a.verbosity >= 1:
            print("; stage=%s numFailCells=%d lemmas=%d cells=%d time=%.3fs"
                  % (rec["stage"], rec["numFailCells"], rec["lemmas"], rec["cells"], rec["time_s"]))
    return EXIT[rec["answer"]]


def cmd_bench(a) -> int:
    from .bench import collect_instances, run_bench, write_csv

    instances = collect_instances(a.paths)
    extra = []
    for flag in ("stage1", "stage2", "stage3"):
        if not getattr(a, flag):
            extra += ["--%s" % flag, "off"]
    if a.variant:
        extra.append("--" + a.variant.lower())
    extra += ["--seed", str(a.seed), "--len1", str(a.len1), "--clock", a.clock]
    if a.no_truncate:
        extra.append("--no-truncate")
    if a.var_order:
        extra += ["--var-order", ",".join(map(str, a.var_order))]
    records = run_bench(instances, extra, a.timeout, jobs=a.jobs)
    text = write_csv(records, a.csv)
    if a.csv is None:
        sys.stdout.write(text)
    return 0


def cmd_generate(a) -> int:
    import random

    from .generator import random_small_formula, rf_generate

    os.makedirs(a.out, exist_ok=True)
    for i in range(a.count):
        if a.family == "rf":
            F = rf_generate({30, 40}, {60, 80}, {20, 30}, {10, 20}, {20, 30}, {40, 60}, {3, 5}, seed=a.seed + i)
        else:
            F = random_small_formula(random.Random(a.seed * 100003 + i))
        with open(os.path.join(a.out, "%s_%04d.smt2" % (a.family, i)), "w") as fh:
            fh.write(to_smtlib(F))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hybrid-nra", description="Hybrid solver for strict polynomial constraints")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", help="decide one SMT-LIB file")
    s.add_argument("file")
    s.add_argument("--timeout", type=float, default=None, help="seconds before answering unknown")
    s.add_argument("--json", action="store_true", help="print one JSON record")
    add_solver_args(s)
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="run every instance in a subprocess and write CSV")
    b.add_argument("paths", nargs="+", help=".smt2 files or directories")
    b.add_argument("--timeout", type=float, default=1200.0)
    b.add_argument("--csv", default=None, help="output path (stdout when omitted)")
    b.add_argument("--jobs", type=int, default=1)
    add_solver_args(b)
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("generate", help="write random instances as SMT-LIB files")
    g.add_argument("--out", required=True)
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--family", choices=("small", "rf"), default="small")
    g.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    a = build_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(getattr(a, "verbosity", 0), 2)]
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr)
    return a.func(a)


if __name__ == "__main__":
    sys.exit(main())
