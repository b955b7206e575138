"""SMT-LIB input, instance generators, the benchmark harness and the command line."""
from .bench import BenchRecord, collect_instances, run_bench, write_csv
from .generator import InfeasibleParametersError, random_small_formula, rf_generate
from .smtlib import (
    CNFBlowupError,
    ParsedProblem,
    SmtParseError,
    SmtUnsupportedOperator,
    UnsupportedLogicError,
    parse_file,
    parse_smtlib,
    to_smtlib,
)

__all__ = [
    "BenchRecord", "collect_instances", "run_bench", "write_csv",
    "InfeasibleParametersError", "random_small_formula", "rf_generate",
    "CNFBlowupError", "ParsedProblem", "SmtParseError", "SmtUnsupportedOperator", "UnsupportedLogicError",
    "parse_file", "parse_smtlib", "to_smtlib",
]
