"""Benchmark harness: one subprocess per instance, CSV out."""
from __future__ import annotations

import csv
import io
import json
import os
import subprocess
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

COLUMNS = ["id", "answer", "time_s", "stage", "numFailCells", "lemmas", "cells"]


@dataclass
class BenchRecord:
    id: str
    answer: str  # sat / unsat / unknown
    time_s: float
    stage: str = ""
    numFailCells: int = 0
    lemmas: int = 0
    cells: int = 0

    def row(self) -> List[str]:
        return [self.id, self.answer, "%.4f" % self.time_s, self.stage or "-", str(self.numFailCells),
                str(self.lemmas), str(self.cells)]


def collect_instances(paths: Iterable[str]) -> List[Tuple[str, str]]:
    """(id, path) pairs; directories contribute their .smt2 files in name order."""
    out = []
    for p in paths:
        if os.path.isdir(p):
            for name in sorted(os.listdir(p)):
                if name.endswith(".smt2"):
                    out.append((os.path.splitext(name)[0], os.path.join(p, name)))
        else:
            out.append((os.path.splitext(os.path.basename(p))[0], p))
    return out


def _clean(s: str) -> str:
    return s.replace(",", ";").replace("\n", " ")


def run_one(inst_id: str, path: str, solver_args: Sequence[str], timeout: float) -> BenchRecord:
    cmd = [sys.executable, "-m", "hybrid_nra.frontend.cli", "solve", path, "--json", *solver_args]
    t0 = time.monotonic()
    try:
        # the solver's own alarm answers first; the kill is the backstop
        proc = subprocess.run(cmd + ["--timeout", str(timeout)], capture_output=True, text=True,
                              timeout=timeout + 10)
    except subprocess.TimeoutExpired:
        return BenchRecord(_clean(inst_id), "unknown", timeout, "killed")
    try:
        rec = json.loads(proc.stdout.strip().splitlines()[-1])
    except (ValueError, IndexError):
        elapsed = time.monotonic() - t0
        return BenchRecord(_clean(inst_id), "unknown", min(elapsed, timeout), "crash")
    return BenchRecord(_clean(inst_id), rec["answer"], float(rec["time_s"]), _clean(rec.get("stage", "")),
                       int(rec.get("numFailCells", 0)), int(rec.get("lemmas", 0)), int(rec.get("cells", 0)))


def run_bench(instances: Sequence[Tuple[str, str]], solver_args: Sequence[str] = (), timeout: float = 1200.0,
              jobs: int = 1) -> List[BenchRecord]:
    """Records in input order; crashes and timeouts become ``unknown``."""
    if jobs <= 1:
        return [run_one(i, p, solver_args, timeout) for i, p in instances]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(lambda ip: run_one(ip[0], ip[1], solver_args, timeout), instances))


def summary_row(records: Sequence[BenchRecord]) -> List[str]:
    sat = sum(r.answer == "sat" for r in records)
    unsat = sum(r.answer == "unsat" for r in records)
    return ["#SUMMARY", "#SAT=%d" % sat, "#UNSAT=%d" % unsat, "#ALL=%d" % len(records), "", "", ""]


def write_csv(records: Sequence[BenchRecord], path: Optional[str] = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        w.writerow(r.row())
    w.writerow(summary_row(records))
    text = buf.getvalue()
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text
