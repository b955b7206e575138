"""A small SMT-LIB2 reader and writer for strict QF_NRA problems.

Accepted: set-logic QF_NRA, set-info/set-option (ignored), declare-fun and
declare-const of sort Real, define-fun of nullary Real constants, assert,
check-sat, get-model, exit.  Terms are built from numerals, decimals, +, -,
*, / by a constant, and declared or defined names.  Formulas use and, or,
not, =>, true, false, <, > and distinct.  let binds terms or formulas in
either position.  <=, >= and = are rejected.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..formula import PolyFormula, UnsupportedOperatorError, normalize
from ..poly import Poly

MAX_CLAUSES = 10 ** 4
_FORMULA_OPS = {"not", "and", "or", "=>", "<", ">", "<=", ">=", "=", "distinct"}


class SmtError(ValueError):
    def __init__(self, msg: str, pos: Optional[Tuple[int, int]] = None):
        self.pos = pos
        if pos is not None:
            msg = "%d:%d: %s" % (pos[0], pos[1], msg)
        super().__init__(msg)


class SmtParseError(SmtError):
    pass


class SmtUnsupportedOperator(SmtError, UnsupportedOperatorError):
    pass


class UnsupportedLogicError(SmtError):
    pass


class CNFBlowupError(SmtError):
    pass


# -- s-expressions ---------------------------------------------------------------

@dataclass
class Sym:
    text: str
    pos: Tuple[int, int]


@dataclass
class SList:
    items: list
    pos: Tuple[int, int]


_TOKEN = re.compile(r"""
    (?P<ws>\s+) | (?P<comment>;[^\n]*) | (?P<open>\() | (?P<close>\)) |
    (?P<string>"(?:[^"]|"")*") | (?P<quoted>\|[^|]*\|) | (?P<sym>[^\s()";|]+)
""", re.VERBOSE)


def _tokens(text: str):
    line, col0, i = 1, 0, 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise SmtParseError("unexpected character %r" % text[i], (line, i - col0 + 1))
        kind = m.lastgroup
        pos = (line, i - col0 + 1)
        chunk = m.group()
        if kind not in ("ws", "comment"):
            if kind == "quoted":
                chunk = chunk[1:-1]
            yield kind, chunk, pos
        nl = chunk.count("\n") if kind in ("ws", "string", "quoted") else 0
        if nl:
            line += nl
            col0 = m.start() + m.group().rfind("\n") + 1
        i = m.end()


def read_sexprs(text: str) -> list:
    stack: List[SList] = []
    top: list = []
    for kind, chunk, pos in _tokens(text):
        if kind == "open":
            stack.append(SList([], pos))
        elif kind == "close":
            if not stack:
                raise SmtParseError("unbalanced ')'", pos)
            node = stack.pop()
            (stack[-1].items if stack else top).append(node)
        else:
            (stack[-1].items if stack else top).append(Sym(chunk, pos))
    if stack:
        raise SmtParseError("missing ')' for list opened here", stack[-1].pos)
    return top


# -- formulas ------------------------------------------------------------------------

# boolean trees: ("and", [..]) / ("or", [..]) / ("atom", (poly, op)) / ("const", bool)
Tree = Tuple[str, object]

_NUM = re.compile(r"^(\d+)(?:\.(\d+))?$")


@dataclass
class ParsedProblem:
    variables: List[str]
    assertions: List[Tree]
    formula: PolyFormula
    logic: str = "QF_NRA"
    path: Optional[str] = None
    check_sat: bool = False

    @property
    def names(self) -> Dict[int, str]:
        return {i + 1: v for i, v in enumerate(self.variables)}


class _Reader:
    def __init__(self):
        self.vars: Dict[str, int] = {}
        self.order: List[str] = []
        self.consts: Dict[str, Poly] = {}
        self.scopes: List[Dict[str, tuple]] = []

    def lookup(self, name: str) -> Optional[tuple]:
        for scope in reversed(self.scopes):
            if name in scope:
                return scope[name]
        return None

    def is_formula(self, node) -> bool:
        if isinstance(node, Sym):
            b = self.lookup(node.text)
            return node.text in ("true", "false") if b is None else b[0] == "formula"
        op = self.head(node)
        if op == "let":
            return self._with_bindings(node, lambda body: self.is_formula(body))
        return op in _FORMULA_OPS

    def _with_bindings(self, node, k):
        if len(node.items) != 3 or not isinstance(node.items[1], SList):
            raise SmtParseError("malformed let", node.pos)
        scope: Dict[str, tuple] = {}
        for b in node.items[1].items:
            if not isinstance(b, SList) or len(b.items) != 2 or not isinstance(b.items[0], Sym):
                raise SmtParseError("malformed let binding", getattr(b, "pos", node.pos))
            name, expr = b.items[0].text, b.items[1]
            if self.is_formula(expr):
                # formulas are read later, once their polarity is known
                scope[name] = ("formula", expr, list(self.scopes))
            else:
                scope[name] = ("term", self.term(expr))
        self.scopes.append(scope)
        try:
            return k(node.items[2])
        finally:
            self.scopes.pop()

    def head(self, node) -> Optional[str]:
        if isinstance(node, SList) and node.items and isinstance(node.items[0], Sym):
            return node.items[0].text
        return None

    def term(self, node) -> Poly:
        if isinstance(node, Sym):
            t = node.text
            m = _NUM.match(t)
            if m:
                if m.group(2) is None:
                    return Poly.const(int(t))
                return Poly.const(Fraction(t))
            b = self.lookup(t)
            if b is not None:
                if b[0] != "term":
                    raise SmtParseError("%r is a formula, not a term" % t, node.pos)
                return b[1]
            if t in self.vars:
                return Poly.var(self.vars[t])
            if t in self.consts:
                return self.consts[t]
            raise SmtParseError("unknown symbol %r" % t, node.pos)
        op = self.head(node)
        if op is None:
            raise SmtParseError("expected a term", node.pos)
        if op == "let":
            return self._with_bindings(node, self.term)
        args = [self.term(a) for a in node.items[1:]]
        if op == "+":
            return sum(args, Poly.zero())
        if op == "-":
            if not args:
                raise SmtParseError("'-' needs an argument", node.pos)
            if len(args) == 1:
                return -args[0]
            out = args[0]
            for a in args[1:]:
                out = out - a
            return out
        if op == "*":
            out = Poly.one()
            for a in args:
                out = out * a
            return out
        if op == "/":
            if len(args) < 2:
                raise SmtParseError("'/' needs two arguments", node.pos)
            out = args[0]
            for a in args[1:]:
                if not a.is_const() or a.const_value() == 0:
                    raise SmtUnsupportedOperator("division is only supported by a nonzero constant", node.pos)
                out = out.scale(Fraction(1) / a.const_value())
            return out
        if op == "to_real":
            if len(args) != 1:
                raise SmtParseError("to_real takes one argument", node.pos)
            return args[0]
        raise SmtUnsupportedOperator("unsupported arithmetic operator %r" % op, node.pos)

    def formula(self, node, positive: bool = True) -> Tree:
        """Negation-normal form; ``positive=False`` builds the negation."""
        if isinstance(node, Sym):
            b = self.lookup(node.text)
            if b is not None and b[0] == "formula":
                saved = self.scopes
                self.scopes = b[2]
                try:
                    return self.formula(b[1], positive)
                finally:
                    self.scopes = saved
            if node.text in ("true", "false"):
                return ("const", (node.text == "true") == positive)
            raise SmtParseError("expected a formula, found %r" % node.text, node.pos)
        op = self.head(node)
        if op is None:
            raise SmtParseError("expected a formula", node.pos)
        args = node.items[1:]
        if op == "let":
            return self._with_bindings(node, lambda body: self.formula(body, positive))
        if op == "=>":
            if len(args) < 2:
                raise SmtParseError("'=>' needs two arguments", node.pos)
            # right associative: a => b => c is a => (b => c)
            *hyps, concl = args
            if positive:
                return ("or", [self.formula(h, False) for h in hyps] + [self.formula(concl, True)])
            return ("and", [self.formula(h, True) for h in hyps] + [self.formula(concl, False)])
        if op == "not":
            if len(args) != 1:
                raise SmtParseError("'not' takes one argument", node.pos)
            return self.formula(args[0], not positive)
        if op in ("and", "or"):
            kind = op if positive else ("or" if op == "and" else "and")
            return (kind, [self.formula(a, positive) for a in args])
        if op in ("<", ">"):
            if len(args) < 2:
                raise SmtParseError("%r needs two arguments" % op, node.pos)
            ts = [self.term(a) for a in args]
            pairs = [(ts[i] - ts[i + 1], op) for i in range(len(ts) - 1)]
            if positive:
                return ("and", [("atom", p) for p in pairs])
            # not (a < b) is a >= b: only constant comparisons survive
            return ("or", [self._negated(p, node) for p in pairs])
        if op == "distinct":
            ts = [self.term(a) for a in args]
            if len(ts) < 2:
                raise SmtParseError("'distinct' needs two arguments", node.pos)
            pairs = [(ts[i] - ts[j], "!=") for i in range(len(ts)) for j in range(i + 1, len(ts))]
            if positive:
                return ("and", [("atom", p) for p in pairs])
            return ("or", [self._negated(p, node) for p in pairs])
        if op in ("<=", ">=", "="):
            raise SmtUnsupportedOperator("non-strict operator %r is not supported" % op, node.pos)
        raise SmtUnsupportedOperator("unsupported operator %r" % op, node.pos)

    def _negated(self, atom, node) -> Tree:
        p, op = atom
        if p.is_const():
            v = p.const_value()
            holds = {"<": v < 0, ">": v > 0, "!=": v != 0}[op]
            return ("const", not holds)
        raise SmtUnsupportedOperator("negated %r gives a non-strict comparison" % op, node.pos)


def _simplify(t: Tree) -> Tree:
    kind, body = t
    if kind in ("atom", "const"):
        if kind == "atom" and body[0].is_const():
            v = body[0].const_value()
            return ("const", {"<": v < 0, ">": v > 0, "!=": v != 0}[body[1]])
        return t
    parts = []
    for s in (_simplify(x) for x in body):
        if s[0] == "const":
            if s[1] == (kind == "or"):
                return ("const", s[1])
            continue
        if s[0] == kind:
            parts.extend(s[1])
        else:
            parts.append(s)
    if not parts:
        return ("const", kind == "and")
    if len(parts) == 1:
        return parts[0]
    return (kind, parts)


def to_cnf(t: Tree, limit: int = MAX_CLAUSES, pos=None) -> Optional[List[List[tuple]]]:
    """Clauses of (poly, op); None for a false formula."""
    t = _simplify(t)

    def go(t) -> List[List[tuple]]:
        kind, body = t
        if kind == "const":
            return [] if body else [[]]
        if kind == "atom":
            return [[body]]
        if kind == "and":
            out = []
            for s in body:
                out.extend(go(s))
                if len(out) > limit:
                    raise CNFBlowupError("CNF exceeds %d clauses" % limit, pos)
            return out
        acc: List[List[tuple]] = [[]]
        for s in body:
            cs = go(s)
            if len(acc) * len(cs) > limit:
                raise CNFBlowupError("CNF exceeds %d clauses" % limit, pos)
            acc = [a + c for a in acc for c in cs]
        return acc

    clauses = go(t)
    if any(not c for c in clauses):
        return None
    return clauses


def parse_smtlib(text: str, path: Optional[str] = None) -> ParsedProblem:
    r = _Reader()
    logic = None
    trees: List[Tree] = []
    raw: List[List[tuple]] = []
    false = False
    check = False
    for cmd in read_sexprs(text):
        name = r.head(cmd)
        if name is None:
            raise SmtParseError("expected a command", cmd.pos)
        args = cmd.items[1:]
        if name == "set-logic":
            logic = args[0].text if args and isinstance(args[0], Sym) else None
            if logic != "QF_NRA":
                raise UnsupportedLogicError("unsupported logic %r (only QF_NRA)" % logic, cmd.pos)
        elif name in ("set-info", "set-option", "get-model", "exit", "get-info", "get-value"):
            continue
        elif name == "check-sat":
            check = True
        elif name in ("declare-fun", "declare-const"):
            if name == "declare-fun":
                if len(args) != 3 or not isinstance(args[1], SList) or args[1].items:
                    raise SmtUnsupportedOperator("only nullary functions (real variables) are supported", cmd.pos)
                sort = args[2]
            else:
                if len(args) != 2:
                    raise SmtParseError("malformed declare-const", cmd.pos)
                sort = args[1]
            if not isinstance(sort, Sym) or sort.text != "Real":
                raise SmtUnsupportedOperator("only sort Real is supported", cmd.pos)
            v = args[0].text
            if v in r.vars or v in r.consts:
                raise SmtParseError("symbol %r declared twice" % v, args[0].pos)
            r.order.append(v)
            r.vars[v] = len(r.order)
        elif name == "define-fun":
            if len(args) != 4 or not isinstance(args[1], SList) or args[1].items:
                raise SmtUnsupportedOperator("only constant definitions are supported", cmd.pos)
            if not isinstance(args[2], Sym) or args[2].text != "Real":
                raise SmtUnsupportedOperator("only sort Real is supported", cmd.pos)
            r.consts[args[0].text] = r.term(args[3])
        elif name == "assert":
            if len(args) != 1:
                raise SmtParseError("assert takes one formula", cmd.pos)
            t = r.formula(args[0])
            trees.append(t)
            cs = to_cnf(t, MAX_CLAUSES - len(raw), cmd.pos)
            if cs is None:
                false = True
            else:
                raw.extend(cs)
        else:
            raise SmtParseError("unsupported command %r" % name, cmd.pos)
    n = len(r.order)
    names = {i + 1: v for i, v in enumerate(r.order)}
    if false:
        F = PolyFormula((), n, True, names)
    else:
        F = normalize(raw, n, names)
    return ParsedProblem(list(r.order), trees, F, logic or "QF_NRA", path, check)


def parse_file(path: str) -> ParsedProblem:
    with open(path) as fh:
        return parse_smtlib(fh.read(), path)


# -- printing ------------------------------------------------------------------------

def _num(c: Fraction) -> str:
    c = Fraction(c)
    if c < 0:
        return "(- %s)" % _num(-c)
    if c.denominator == 1:
        return str(c.numerator)
    return "(/ %d %d)" % (c.numerator, c.denominator)


def term_to_smt(p: Poly, names: Dict[int, str]) -> str:
    terms = []
    for e, c in p.sorted_terms():
        factors = []
        for i, k in enumerate(e, 1):
            factors.extend([names.get(i, "x%d" % i)] * k)
        if not factors:
            terms.append(_num(c))
        elif c == 1:
            terms.append(factors[0] if len(factors) == 1 else "(* %s)" % " ".join(factors))
        else:
            terms.append("(* %s %s)" % (_num(c), " ".join(factors)))
    if not terms:
        return "0"
    return terms[0] if len(terms) == 1 else "(+ %s)" % " ".join(terms)


def to_smtlib(F: PolyFormula, names: Optional[Dict[int, str]] = None) -> str:
    names = dict(names or F.names or {})
    for i in range(1, F.n + 1):
        names.setdefault(i, "x%d" % i)
    lines = ["(set-logic QF_NRA)"]
    for i in range(1, F.n + 1):
        lines.append("(declare-fun %s () Real)" % names[i])
    if F.unsat:
        lines.append("(assert false)")
    for c in F.clauses:
        lits = []
        for l in c:
            a = "(%s %s 0)" % (l.atom.op, term_to_smt(l.atom.poly, names))
            lits.append(a if l.positive else "(not %s)" % a)
        lines.append("(assert %s)" % (lits[0] if len(lits) == 1 else "(or %s)" % " ".join(lits)))
    lines.append("(check-sat)")
    return "\n".join(lines) + "\n"
