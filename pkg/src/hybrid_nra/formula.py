"""Atoms, literals, clauses and CNF formulas over polynomial sign conditions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .poly import Poly, to_rational
from .realroots import isolate_roots, sign_holds

Assignment = Dict[int, Fraction]


class FormulaError(ValueError):
    pass


class PartialAssignmentError(FormulaError):
    pass


class UnsupportedOperatorError(FormulaError):
    pass


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class Atom:
    """poly op 0 with op in {<, >}; '=' only appears inside learned cells."""

    poly: Poly
    op: str

    def __post_init__(self):
        if self.op not in ("<", ">", "="):
            raise UnsupportedOperatorError("unsupported operator %r in atom %s" % (self.op, self.poly))
        if self.poly.is_zero():
            raise FormulaError("atom polynomial must be nonzero")

    @property
    def level(self) -> int:
        return self.poly.level

    def vars(self) -> List[int]:
        return self.poly.vars()

    def polys(self) -> List[Poly]:
        return [self.poly]

    def sign_ok(self, s: int) -> bool:
        return sign_holds(s, self.op)

    def eval(self, alpha: Mapping[int, Fraction]) -> bool:
        return sign_holds(_sign(self.poly.eval(alpha)), self.op)

    def restrict(self, alpha: Mapping[int, Fraction]) -> Union["Atom", bool]:
        p = self.poly.subs_values(alpha)
        if p.is_const():
            return sign_holds(_sign(p.const_value()), self.op)
        return Atom(p, self.op)

    def to_str(self, names=None) -> str:
        return "%s %s 0" % (self.poly.to_str(names), self.op)

    def __str__(self):
        return self.to_str()


@dataclass(frozen=True)
class RootAtom:
    """x_var op (index-th real root of poly in x_var); false when that root does not exist."""

    var: int
    op: str
    index: int
    poly: Poly

    @property
    def level(self) -> int:
        return max(self.var, self.poly.level)

    def vars(self) -> List[int]:
        return sorted(set(self.poly.vars()) | {self.var})

    def polys(self) -> List[Poly]:
        return [self.poly]

    def eval(self, alpha: Mapping[int, Fraction]) -> bool:
        if self.var not in alpha:
            raise PartialAssignmentError("x%d is unassigned" % self.var)
        lower = {k: v for k, v in alpha.items() if k != self.var}
        p = self.poly.subs_values(lower)
        if p.vars() not in ([], [self.var]):
            raise PartialAssignmentError("root atom needs all lower variables assigned")
        if p.is_zero() or p.is_const():
            return False
        roots = isolate_roots(p.univariate(self.var), width=None)
        if len(roots) < self.index:
            return False
        c = -roots[self.index - 1].compare_rational(alpha[self.var])
        return sign_holds(c, self.op)

    def restrict(self, alpha: Mapping[int, Fraction]) -> Union["RootAtom", bool]:
        if self.var in alpha and all(v in alpha for v in self.poly.vars()):
            return self.eval(alpha)
        if self.var in alpha:
            return self
        return RootAtom(self.var, self.op, self.index, self.poly.subs_values(alpha))

    def to_str(self, names=None) -> str:
        nm = names.get(self.var) if names else None
        return "%s %s root_%d(%s)" % (nm or "x%d" % self.var, self.op, self.index, self.poly.to_str(names))

    def __str__(self):
        return self.to_str()


AnyAtom = Union[Atom, RootAtom]


@dataclass(frozen=True)
class Literal:
    atom: AnyAtom
    positive: bool = True

    @property
    def level(self) -> int:
        return self.atom.level

    def negate(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    def __neg__(self) -> "Literal":
        return self.negate()

    def vars(self) -> List[int]:
        return self.atom.vars()

    def eval(self, alpha: Mapping[int, Fraction]) -> bool:
        return self.atom.eval(alpha) == self.positive

    def holds_for_sign(self, s: int) -> bool:
        """Truth of a polynomial literal given the sign of its polynomial."""
        return self.atom.sign_ok(s) == self.positive

    def to_str(self, names=None) -> str:
        s = self.atom.to_str(names)
        return s if self.positive else "not(%s)" % s

    def __str__(self):
        return self.to_str()


def lit(poly: Poly, op: str, positive: bool = True) -> Literal:
    return Literal(Atom(poly, op), positive)


class Clause:
    """A disjunction of literals, deduplicated, order preserved."""

    __slots__ = ("literals", "level", "_h")

    def __init__(self, literals: Iterable[Literal]):
        seen = []
        s = set()
        for l in literals:
            if l not in s:
                s.add(l)
                seen.append(l)
        self.literals: Tuple[Literal, ...] = tuple(seen)
        self.level = max((l.level for l in self.literals), default=0)
        self._h = None

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    def __contains__(self, l):
        return l in self.literals

    def __eq__(self, other):
        return isinstance(other, Clause) and set(self.literals) == set(other.literals)

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self.literals))
        return self._h

    def is_empty(self) -> bool:
        return not self.literals

    def vars(self) -> List[int]:
        vs = set()
        for l in self.literals:
            vs.update(l.vars())
        return sorted(vs)

    def eval(self, alpha: Mapping[int, Fraction]) -> bool:
        return any(l.eval(alpha) for l in self.literals)

    def to_str(self, names=None) -> str:
        if not self.literals:
            return "false"
        return " or ".join(l.to_str(names) for l in self.literals)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "Clause(%s)" % self.to_str()


@dataclass
class PolyFormula:
    """CNF over polynomial literals in variables x_1..x_n.

    ``unsat`` marks a formula already known false (an all-false clause); an
    empty clause list without that flag is trivially true.
    """

    clauses: Tuple[Clause, ...]
    n: int
    unsat: bool = False
    names: Optional[Dict[int, str]] = None

    def __post_init__(self):
        out = []
        seen = set()
        for c in self.clauses:
            if not isinstance(c, Clause):
                c = Clause(c)
            if c not in seen:
                seen.add(c)
                out.append(c)
        self.clauses = tuple(out)
        for c in self.clauses:
            if c.level > self.n:
                raise FormulaError("clause mentions x%d beyond n=%d" % (c.level, self.n))

    def atoms(self) -> List[AnyAtom]:
        seen = {}
        for c in self.clauses:
            for l in c:
                seen.setdefault(l.atom, None)
        return list(seen)

    def polys(self) -> List[Poly]:
        seen = {}
        for a in self.atoms():
            seen.setdefault(a.poly, None)
        return list(seen)

    def to_str(self) -> str:
        if self.unsat:
            return "false"
        if not self.clauses:
            return "true"
        return " and ".join("(%s)" % c.to_str(self.names) for c in self.clauses)

    def __str__(self):
        return self.to_str()


def level_of(x) -> int:
    return x.level


def eval_formula(F: PolyFormula, alpha: Mapping[int, Fraction]) -> bool:
    """Truth value of F under a complete assignment."""
    for i in range(1, F.n + 1):
        if i not in alpha:
            raise PartialAssignmentError("x%d is unassigned" % i)
    if F.unsat:
        return False
    alpha = {k: to_rational(v) for k, v in alpha.items()}
    return all(c.eval(alpha) for c in F.clauses)


_REWRITE = {"≠": "!=", "distinct": "!="}


def normalize(raw: Sequence[Sequence[Tuple[Poly, str]]], n: Optional[int] = None, names=None) -> PolyFormula:
    """Build a strict-only CNF from clauses of (poly, op) with op in {<, >, !=}.

    ``p != 0`` becomes ``p < 0 or p > 0``; constant atoms are folded.
    """
    clauses: List[Clause] = []
    unsat = False
    top = 0
    for rc in raw:
        lits: List[Literal] = []
        sat = False
        for p, op in rc:
            op = _REWRITE.get(op, op)
            if op not in ("<", ">", "!="):
                raise UnsupportedOperatorError("unsupported operator %r in atom %s %s 0" % (op, p, op))
            if p.is_const():
                v = p.const_value()
                if sign_holds(_sign(v), op):
                    sat = True
                continue
            top = max(top, p.level)
            if op == "!=":
                lits.append(Literal(Atom(p, "<")))
                lits.append(Literal(Atom(p, ">")))
            else:
                lits.append(Literal(Atom(p, op)))
        if sat:
            continue
        if not lits:
            unsat = True
            continue
        clauses.append(Clause(lits))
    if n is None:
        n = top
    if unsat:
        return PolyFormula((), n, True, names)
    return PolyFormula(tuple(clauses), n, False, names)


def partial_restrict(F: PolyFormula, sigma: Mapping[int, Fraction]) -> PolyFormula:
    """Substitute the assigned variables; satisfied clauses vanish, false literals drop."""
    if not sigma or F.unsat:
        return F
    sigma = {k: to_rational(v) for k, v in sigma.items()}
    out: List[Clause] = []
    for c in F.clauses:
        lits: List[Literal] = []
        sat = False
        for l in c:
            a = l.atom.restrict(sigma)
            if isinstance(a, bool):
                if a == l.positive:
                    sat = True
                    break
                continue
            lits.append(Literal(a, l.positive))
        if sat:
            continue
        if not lits:
            return PolyFormula((), F.n, True, F.names)
        out.append(Clause(lits))
    return PolyFormula(tuple(out), F.n, False, F.names)
