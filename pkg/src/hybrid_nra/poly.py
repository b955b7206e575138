"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a dict from exponent tuples to nonzero coefficients.  Variable
``x_i`` (1-based) lives at tuple position ``i - 1``; every tuple of a
polynomial has length equal to its level, so equal polynomials share one
representation.  Coefficients are kept as ``int`` when integral and as
``Fraction`` otherwise, which keeps the common integer case fast.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Rational = Fraction
Exp = Tuple[int, ...]


class PolynomialError(ValueError):
    pass


class UnassignedVariableError(PolynomialError):
    pass


class ZeroPolynomialError(PolynomialError):
    pass


class DegreeError(PolynomialError):
    pass


class ConstantInputError(PolynomialError):
    pass


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def to_rational(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


def _level_of(e: Exp) -> int:
    k = len(e)
    while k and e[k - 1] == 0:
        k -= 1
    return k


class Poly:
    """Immutable sparse polynomial over Q."""

    __slots__ = ("_t", "_n", "_h")

    def __init__(self, terms: Optional[Mapping] = None):
        d: Dict[Exp, object] = {}
        if terms:
            n = max(len(e) for e in terms)
            for e, c in terms.items():
                c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
                if c == 0:
                    continue
                e = tuple(e) + (0,) * (n - len(e))
                d[e] = _norm(d.get(e, 0) + c)
                if d[e] == 0:
                    del d[e]
        self._set(d)

    # -- construction helpers -------------------------------------------------

    def _set(self, d: Dict[Exp, object]) -> None:
        n = 0
        for e in d:
            k = _level_of(e)
            if k > n:
                n = k
        if d:
            width = len(next(iter(d)))
            if width != n:
                d = {e[:n]: c for e, c in d.items()}
        self._t = d
        self._n = n
        self._h = None

    @classmethod
    def _raw(cls, d: Dict[Exp, object]) -> "Poly":
        p = cls.__new__(cls)
        p._set(d)
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        return cls._raw({(): c} if c != 0 else {})

    @classmethod
    def var(cls, i: int) -> "Poly":
        if i < 1:
            raise PolynomialError("variable index must be >= 1")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw({(): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence["Poly"], var: int) -> "Poly":
        """Rebuild sum(coeffs[k] * x_var**k)."""
        out: Dict[Exp, object] = {}
        width = max([var] + [c._n for c in coeffs])
        for k, c in enumerate(coeffs):
            for e, v in c._t.items():
                e2 = list(e) + [0] * (width - len(e))
                e2[var - 1] += k
                out[tuple(e2)] = v
        return cls._raw(out)

    @classmethod
    def from_univariate(cls, coeffs: Sequence, var: int) -> "Poly":
        out = {}
        for k, c in enumerate(coeffs):
            c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
            if c != 0:
                out[(0,) * (var - 1) + (k,)] = c
        return cls._raw(out)

    # -- basic queries --------------------------------------------------------

    @property
    def terms(self) -> Dict[Exp, object]:
        return self._t

    @property
    def level(self) -> int:
        return self._n

    def is_zero(self) -> bool:
        return not self._t

    def is_const(self) -> bool:
        return self._n == 0

    def const_value(self) -> Fraction:
        if self._n:
            raise PolynomialError("not a constant")
        return to_rational(self._t.get((), 0))

    def vars(self) -> List[int]:
        seen = [False] * self._n
        for e in self._t:
            for i, k in enumerate(e):
                if k:
                    seen[i] = True
        return [i + 1 for i, s in enumerate(seen) if s]

    def degree(self, var: int) -> int:
        """Degree in x_var; -1 for the zero polynomial."""
        if not self._t:
            return -1
        if var > self._n:
            return 0
        return max(e[var - 1] for e in self._t)

    def total_degree(self) -> int:
        if not self._t:
            return -1
        return max(sum(e) for e in self._t)

    def coeffs(self, var: int) -> List["Poly"]:
        """Dense coefficient list in x_var, index = exponent."""
        if not self._t:
            return []
        if var > self._n:
            return [self]
        buckets: Dict[int, Dict[Exp, object]] = {}
        i = var - 1
        for e, c in self._t.items():
            k = e[i]
            buckets.setdefault(k, {})[e[:i] + (0,) + e[i + 1:]] = c
        deg = max(buckets)
        return [Poly._raw(buckets[k]) if k in buckets else Poly.zero() for k in range(deg + 1)]

    def lc(self, var: int) -> "Poly":
        return self.coeffs(var)[-1]

    def univariate(self, var: Optional[int] = None) -> List:
        """Dense ascending coefficients when only x_var occurs."""
        if not self._t:
            return []
        if var is None:
            vs = self.vars()
            if len(vs) > 1:
                raise PolynomialError("polynomial is not univariate")
            var = vs[0] if vs else 1
        deg = self.degree(var)
        out = [0] * (deg + 1)
        for e, c in self._t.items():
            for j, k in enumerate(e):
                if k and j != var - 1:
                    raise PolynomialError("polynomial is not univariate in x%d" % var)
            out[e[var - 1] if var <= len(e) else 0] = c
        return out

    # -- ordering and normal forms -------------------------------------------

    def _key(self, e: Exp):
        return (sum(e), tuple(reversed(e + (0,) * (self._n - len(e)))))

    def sorted_terms(self) -> List[Tuple[Exp, object]]:
        """Terms in decreasing graded-lex order (highest variable most significant)."""
        return sorted(self._t.items(), key=lambda t: self._key(t[0]), reverse=True)

    def leading_coefficient(self):
        if not self._t:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        return max(self._t.items(), key=lambda t: self._key(t[0]))[1]

    def normalized(self) -> "Poly":
        """Integer primitive associate with positive graded-lex leading coefficient."""
        if not self._t:
            return self
        den = 1
        for c in self._t.values():
            if type(c) is Fraction:
                den = den * c.denominator // igcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._t.items()}
        g = 0
        for c in ints.values():
            g = igcd(g, c)
        if self.leading_coefficient() < 0:
            g = -g
        return Poly._raw({e: c // g for e, c in ints.items()})

    def monic_sign(self) -> int:
        return 1 if self.leading_coefficient() > 0 else -1

    # -- arithmetic -----------------------------------------------------------

    def _aligned(self, other: "Poly"):
        a, b = self._t, other._t
        if self._n == other._n:
            return a, b
        n = max(self._n, other._n)
        if self._n < n:
            pad = (0,) * (n - self._n)
            a = {e + pad: c for e, c in a.items()}
        if other._n < n:
            pad = (0,) * (n - other._n)
            b = {e + pad: c for e, c in b.items()}
        return a, b

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if not other._t:
            return self
        if not self._t:
            return other
        a, b = self._aligned(other)
        d = dict(a)
        for e, c in b.items():
            v = d.get(e)
            if v is None:
                d[e] = c
            else:
                v = _norm(v + c)
                if v == 0:
                    del d[e]
                else:
                    d[e] = v
        return Poly._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def scale(self, c) -> "Poly":
        c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if c == 0:
            return Poly.zero()
        if c == 1:
            return self
        return Poly._raw({e: _norm(v * c) for e, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if not self._t or not other._t:
            return Poly.zero()
        if other._n == 0:
            return self.scale(other._t[()])
        if self._n == 0:
            return other.scale(self._t[()])
        a, b = self._aligned(other)
        d: Dict[Exp, object] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                v = d.get(e)
                d[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw({e: _norm(c) for e, c in d.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise PolynomialError("negative exponent")
        out = Poly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._n == 0 and self._t.get((), 0) == other
        return NotImplemented

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __bool__(self):
        return bool(self._t)

    # -- evaluation and substitution -----------------------------------------

    def eval(self, alpha: Mapping[int, object]) -> Fraction:
        """Exact value at a complete assignment of the variables of self."""
        vals = []
        for i in range(1, self._n + 1):
            v = alpha.get(i)
            if v is None:
                if any(e[i - 1] for e in self._t):
                    raise UnassignedVariableError("x%d is unassigned" % i)
                v = 0
            vals.append(v)
        total = 0
        cache: Dict[Tuple[int, int], object] = {}
        for e, c in self._t.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    pw = cache.get(key)
                    if pw is None:
                        pw = vals[i] ** k
                        cache[key] = pw
                    t = t * pw
            total = total + t
        return to_rational(total)

    def subs_values(self, alpha: Mapping[int, object]) -> "Poly":
        """Substitute rational values for the assigned variables only."""
        if not alpha:
            return self
        idx = [i for i in range(self._n) if (i + 1) in alpha]
        if not idx:
            return self
        cache: Dict[Tuple[int, int], object] = {}
        d: Dict[Exp, object] = {}
        for e, c in self._t.items():
            t = c
            e2 = list(e)
            for i in idx:
                k = e[i]
                if k:
                    key = (i, k)
                    pw = cache.get(key)
                    if pw is None:
                        pw = _norm(to_rational(alpha[i + 1]) ** k)
                        cache[key] = pw
                    t = t * pw
                    e2[i] = 0
            if t != 0:
                e2 = tuple(e2)
                v = d.get(e2)
                d[e2] = t if v is None else v + t
        return Poly._raw({e: _norm(c) for e, c in d.items() if c != 0})

    def substitute(self, sigma: Mapping[int, "Poly"]) -> "Poly":
        """Replace x_i by sigma[i] for every i in sigma (simultaneously)."""
        if not sigma:
            return self
        powers: Dict[Tuple[int, int], Poly] = {}

        def pw(i: int, k: int) -> Poly:
            key = (i, k)
            if key not in powers:
                powers[key] = sigma[i] ** k
            return powers[key]

        out = Poly.zero()
        for e, c in self._t.items():
            keep = []
            t = Poly.const(c)
            for i, k in enumerate(e):
                if not k:
                    keep.append(0)
                    continue
                if (i + 1) in sigma:
                    keep.append(0)
                    t = t * pw(i + 1, k)
                else:
                    keep.append(k)
            if any(keep):
                t = t * Poly._raw({tuple(keep): 1})
            out = out + t
        return out

    def derivative(self, var: int) -> "Poly":
        if var > self._n:
            return Poly.zero()
        i = var - 1
        d = {}
        for e, c in self._t.items():
            k = e[i]
            if k:
                d[e[:i] + (k - 1,) + e[i + 1:]] = _norm(c * k)
        return Poly._raw(d)

    # -- printing -------------------------------------------------------------

    def to_str(self, names: Optional[Mapping[int, str]] = None) -> str:
        if not self._t:
            return "0"

        def nm(i: int) -> str:
            if names and i in names:
                return names[i]
            return "x%d" % i

        parts = []
        for e, c in self.sorted_terms():
            mono = []
            for i, k in enumerate(e):
                if k == 1:
                    mono.append(nm(i + 1))
                elif k:
                    mono.append("%s^%d" % (nm(i + 1), k))
            c = to_rational(c)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono:
                body = "*".join(mono)
                if a != 1:
                    body = "%s*%s" % (a, body)
            else:
                body = str(a)
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += " %s %s" % (sign, body)
        return s

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "Poly(%s)" % self.to_str()


def arith(a: Poly, b: Poly, kind: str) -> Poly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise PolynomialError("unknown arithmetic kind %r" % kind)


def evaluate(f: Poly, alpha: Mapping[int, object]) -> Fraction:
    return f.eval(alpha)


def substitute(f: Poly, sigma: Mapping[int, Poly]) -> Poly:
    return f.substitute(sigma)


def derivative(f: Poly, var: int) -> Poly:
    return f.derivative(var)


# -- exact division ------------------------------------------------------------

def div_exact(a: Poly, b: Poly) -> Poly:
    """a / b, raising PolynomialError when b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return a
    if b.is_const():
        return a.scale(Fraction(1) / to_rational(b.const_value()))
    n = max(a.level, b.level)

    def lexkey(e):
        return tuple(reversed(e + (0,) * (n - len(e))))

    bt = b.terms
    be = max(bt, key=lexkey)
    bc = bt[be]
    be = be + (0,) * (n - len(be))
    rem = dict(a._aligned(Poly._raw({(0,) * n: 1}))[0]) if a.level < n else dict(a.terms)
    bt_pad = {e + (0,) * (n - len(e)): c for e, c in bt.items()}
    q: Dict[Exp, object] = {}
    while rem:
        re_ = max(rem, key=lexkey)
        rc = rem[re_]
        diff = tuple(x - y for x, y in zip(re_, be))
        if any(x < 0 for x in diff):
            raise PolynomialError("inexact polynomial division")
        coef = _div(rc, bc)
        q[diff] = coef
        for e, c in bt_pad.items():
            e2 = tuple(x + y for x, y in zip(diff, e))
            v = _norm(rem.get(e2, 0) - coef * c)
            if v == 0:
                rem.pop(e2, None)
            else:
                rem[e2] = v
    return Poly._raw(q)


def divides(b: Poly, a: Poly) -> bool:
    try:
        div_exact(a, b)
        return True
    except PolynomialError:
        return False


# -- univariate-over-a-ring helpers (coefficient lists of Poly) ---------------

def _trim(p: List[Poly]) -> List[Poly]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _prem(A: List[Poly], B: List[Poly]) -> List[Poly]:
    """Pseudo-remainder of A by B in R[x]."""
    A = list(A)
    d = len(B) - 1
    e = len(A) - len(B) + 1
    lcB = B[-1]
    while A and len(A) - 1 >= d:
        coef = A[-1]
        shift = len(A) - 1 - d
        A = [c * lcB for c in A]
        for i, bc in enumerate(B):
            A[i + shift] = A[i + shift] - coef * bc
        _trim(A)
        e -= 1
    if e > 0 and A:
        f = lcB ** e
        A = [c * f for c in A]
    return A


def resultant(f: Poly, g: Poly, var: int) -> Poly:
    """Resultant with respect to x_var by the subresultant PRS."""
    if f.is_zero() or g.is_zero():
        return Poly.zero()
    df, dg = f.degree(var), g.degree(var)
    if df < 1 and dg < 1:
        raise DegreeError("resultant needs positive degree in x%d" % var)
    if dg == 0:
        return g ** df
    if df == 0:
        return f ** dg
    A, B = f.coeffs(var), g.coeffs(var)
    s = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2:
            s = -1
        A, B = B, A
    g_ = Poly.one()
    h = Poly.one()
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _prem(A, B)
        if not R:
            return Poly.zero()
        A = B
        divisor = g_ * (h ** delta)
        B = [div_exact(c, divisor) for c in R]
        g_ = A[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g_
        else:
            h = div_exact(g_ ** delta, h ** (delta - 1))
        if len(B) - 1 == 0:
            da = len(A) - 1
            lb = B[0]
            if da == 1:
                res = lb
            else:
                res = div_exact(lb ** da, h ** (da - 1))
            return res if s == 1 else -res


def discriminant(f: Poly, var: int) -> Poly:
    d = f.degree(var)
    if d < 2:
        raise DegreeError("discriminant needs degree >= 2 in x%d" % var)
    r = resultant(f, f.derivative(var), var)
    q = div_exact(r, f.lc(var))
    return -q if (d * (d - 1) // 2) % 2 else q


def sylvester_resultant(f: Poly, g: Poly, var: int) -> Poly:
    """Resultant as the Sylvester determinant (fraction-free Bareiss)."""
    A, B = f.coeffs(var), g.coeffs(var)
    m, n = len(A) - 1, len(B) - 1
    if m < 1 and n < 1:
        raise DegreeError("resultant needs positive degree in x%d" % var)
    size = m + n
    if n == 0:
        return g ** m
    if m == 0:
        return f ** n
    rows = []
    for i in range(n):
        row = [Poly.zero()] * size
        for j, c in enumerate(reversed(A)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [Poly.zero()] * size
        for j, c in enumerate(reversed(B)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(rows)


def _bareiss_det(M: List[List[Poly]]) -> Poly:
    M = [list(r) for r in M]
    n = len(M)
    sign = 1
    prev = Poly.one()
    for k in range(n - 1):
        if M[k][k].is_zero():
            for r in range(k + 1, n):
                if not M[r][k].is_zero():
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = div_exact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


# -- gcd and square-free bases -------------------------------------------------

def _content(p: Poly, var: int) -> Poly:
    g = Poly.zero()
    for c in p.coeffs(var):
        if c.is_zero():
            continue
        g = gcd(g, c)
        if g.is_const():
            return Poly.one()
    return g


def primitive_part(p: Poly, var: int) -> Poly:
    if p.is_zero():
        return p
    c = _content(p, var)
    return div_exact(p, c).normalized() if not c.is_const() else p.normalized()


def gcd(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor in Q[x_1..x_n], normalized."""
    if a.is_zero():
        return b.normalized() if not b.is_zero() else b
    if b.is_zero():
        return a.normalized()
    if a.is_const() or b.is_const():
        return Poly.one()
    if a == b:
        return a.normalized()
    v = max(a.level, b.level)
    if a.degree(v) == 0:
        return gcd(a, _content(b, v))
    if b.degree(v) == 0:
        return gcd(_content(a, v), b)
    ca, cb = _content(a, v), _content(b, v)
    c = gcd(ca, cb)
    A = div_exact(a, ca).normalized()
    B = div_exact(b, cb).normalized()
    if A.degree(v) < B.degree(v):
        A, B = B, A
    Ac, Bc = A.coeffs(v), B.coeffs(v)
    while True:
        R = _prem(Ac, Bc)
        if not R:
            g = Poly.from_coeffs(Bc, v)
            break
        if len(R) == 1:
            g = Poly.one()
            break
        Ac = Bc
        Bc = primitive_part(Poly.from_coeffs(R, v), v).coeffs(v)
    g = primitive_part(g, v) if not g.is_const() else Poly.one()
    return (c * g).normalized()


def _sqfree_factors(f: Poly) -> List[Poly]:
    if f.is_const():
        return []
    v = f.level
    c = _content(f, v)
    pp = div_exact(f, c) if not c.is_const() else f
    out = _sqfree_factors(c) if not c.is_const() else []
    d = pp.derivative(v)
    g = gcd(pp, d)
    b = div_exact(pp, g)
    cc = div_exact(d, g)
    dd = cc - b.derivative(v)
    while not b.is_const():
        a = gcd(b, dd)
        if not a.is_const():
            out.append(a.normalized())
        b = div_exact(b, a)
        cc = div_exact(dd, a)
        dd = cc - b.derivative(v)
    return out


def square_free_basis(F: Iterable[Poly]) -> List[Poly]:
    """Primitive, square-free, pairwise coprime polynomials generating F."""
    basis: List[Poly] = []

    def insert(p: Poly) -> None:
        for i, b in enumerate(basis):
            g = gcd(b, p)
            if not g.is_const():
                basis.pop(i)
                for part in (g, div_exact(b, g), div_exact(p, g)):
                    if not part.is_const():
                        insert(part.normalized())
                return
        basis.append(p)

    for f in F:
        if f.is_zero() or f.is_const():
            raise ConstantInputError("square_free_basis needs non-constant input")
        for q in _sqfree_factors(f):
            insert(q)
    basis.sort(key=lambda p: (p.level, p.total_degree(), p.to_str()))
    return basis


def degree_info(f: Poly) -> dict:
    """Level, main degree, total degree and coefficients c_m..c_0 in the main variable."""
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no level")
    lv = f.level
    if lv == 0:
        return {"level": 0, "degree": 0, "total_degree": 0, "coefficients": [f]}
    cs = f.coeffs(lv)
    return {
        "level": lv,
        "degree": len(cs) - 1,
        "total_degree": f.total_degree(),
        "coefficients": list(reversed(cs)),
    }
