"""Exact real root isolation and univariate sign-condition solving.

Univariate polynomials are handled as dense ascending coefficient lists.  The
isolation routine is Descartes-rule bisection (Vincent-Collins-Akritas) on the
integer square-free part; irrational roots are kept as isolating brackets and
refined lazily when a comparison needs it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd as igcd
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .poly import Poly, PolynomialError, ZeroPolynomialError, to_rational

DEFAULT_WIDTH = Fraction(1, 2 ** 32)

OPS = {"<", ">", "=", "!=", "<=", ">=", "≠", "≤", "≥"}
_ALIASES = {"≠": "!=", "≤": "<=", "≥": ">="}


# -- dense integer helpers -----------------------------------------------------

def _trim(p: List) -> List:
    while p and p[-1] == 0:
        p.pop()
    return p


def as_dense(f: Union[Poly, Sequence], var: Optional[int] = None) -> List:
    if isinstance(f, Poly):
        return f.univariate(var)
    return _trim([c for c in f])


def primitive_int(p: Sequence) -> List[int]:
    """Integer primitive multiple of p with positive leading coefficient."""
    p = _trim(list(p))
    if not p:
        return []
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = den * c.denominator // igcd(den, c.denominator)
    q = [int(c * den) for c in p]
    g = 0
    for c in q:
        g = igcd(g, c)
    if q[-1] < 0:
        g = -g
    return [c // g for c in q]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sign_int(p: Sequence[int], q: Fraction) -> int:
    """Sign of p(q) for integer coefficients, without building fractions."""
    if not p:
        return 0
    q = to_rational(q)
    n, d = q.numerator, q.denominator
    acc = 0
    dp = 1
    for c in reversed(p):
        acc = acc * n + c * dp
        dp = dp * d
    return _sign(acc)


def sign_at(f: Union[Poly, Sequence], q) -> int:
    """Exact sign of f(q) for a univariate f."""
    p = as_dense(f)
    if not p:
        return 0
    s = sign_int(primitive_int(p), to_rational(q))
    # primitive_int makes the leading coefficient positive
    return s if p[-1] > 0 else -s


def _deriv(p: Sequence[int]) -> List[int]:
    return [i * c for i, c in enumerate(p)][1:]


def _prem(a: List[int], b: List[int]) -> List[int]:
    a = list(a)
    lb = b[-1]
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + shift] -= la * c
        _trim(a)
    return a


def ugcd(a: Sequence[int], b: Sequence[int]) -> List[int]:
    a, b = primitive_int(a), primitive_int(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while True:
        if len(b) == 1:
            return [1]
        r = _prem(a, b)
        if not r:
            return b
        a, b = b, primitive_int(r)


def udiv_exact(a: Sequence[int], b: Sequence[int]) -> List:
    """Quotient a / b over Q (b must divide a)."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    if any(a[: len(b) - 1]):
        raise PolynomialError("inexact univariate division")
    return q


def urem_is_zero(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(b) == 1:
        return True
    if len(a) < len(b):
        return not any(a)
    return not _prem(list(a), list(b))


def sqfree_part(p: Sequence) -> List[int]:
    p = primitive_int(p)
    if len(p) <= 2:
        return p
    g = ugcd(p, _deriv(p))
    if len(g) == 1:
        return p
    return primitive_int(udiv_exact(p, g))


def coprime_basis(polys: Iterable[Sequence]) -> List[List[int]]:
    """Square-free, pairwise coprime integer polynomials with the same roots."""
    basis: List[List[int]] = []

    def insert(p: List[int]) -> None:
        for i, b in enumerate(basis):
            g = ugcd(b, p)
            if len(g) > 1:
                basis.pop(i)
                for part in (g, primitive_int(udiv_exact(b, g)), primitive_int(udiv_exact(p, g))):
                    if len(part) > 1:
                        insert(part)
                return
        basis.append(p)

    for p in polys:
        p = sqfree_part(p)
        if len(p) > 1:
            insert(p)
    return basis


# -- isolation -----------------------------------------------------------------

def _variations(p: Sequence[int]) -> int:
    v = 0
    last = 0
    for c in p:
        if c:
            if last and (c > 0) != (last > 0):
                v += 1
            last = c
    return v


def _taylor1(p: Sequence[int]) -> List[int]:
    """Coefficients of p(x + 1)."""
    a = list(p)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += a[j + 1]
    return a


def _halve(p: Sequence[int]) -> List[int]:
    """Coefficients of 2^d p(x / 2)."""
    d = len(p) - 1
    return [c << (d - i) for i, c in enumerate(p)]


def _upper_count(p: Sequence[int]) -> int:
    """Descartes bound for the roots of p in (0, 1)."""
    return _variations(_taylor1(list(reversed(p))))


def _root_bound_pow2(p: Sequence[int]) -> int:
    lc = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    b = Fraction(m, lc) + 1
    k = 0
    while (1 << k) <= b:
        k += 1
    return k


def _positive_roots(p: List[int]) -> List[Tuple[Fraction, Fraction, bool]]:
    """Isolate roots of square-free p in (0, inf); p(0) != 0."""
    k = _root_bound_pow2(p)
    # q(x) = p(2^k x): roots now in (0, 1)
    q = [c << (k * i) for i, c in enumerate(p)]
    g = 0
    for c in q:
        g = igcd(g, c)
    q = [c // g for c in q]
    out = []
    scale = Fraction(1 << k)
    stack = [(q, 0, 0)]  # poly, numerator c, depth j: interval (c/2^j, (c+1)/2^j)
    while stack:
        q, c, j = stack.pop()
        v = _upper_count(q)
        if v == 0:
            continue
        if v == 1 and sum(q) != 0:
            out.append((scale * Fraction(c, 1 << j), scale * Fraction(c + 1, 1 << j), False))
            continue
        left = _halve(q)
        right = _taylor1(left)
        if right[0] == 0:
            out.append((scale * Fraction(2 * c + 1, 1 << (j + 1)),) * 2 + (True,))
            right = right[1:]
        if len(right) > 1:
            stack.append((right, 2 * c + 1, j + 1))
        stack.append((left, 2 * c, j + 1))
    return out


class RealRoot:
    """A real root of an integer square-free polynomial.

    Either ``exact`` is set (then lo == hi == exact), or the root is the only
    root of ``poly`` in the open interval (lo, hi) and poly has nonzero,
    opposite signs at lo and hi.
    """

    __slots__ = ("poly", "lo", "hi", "exact", "_slo")

    def __init__(self, poly: Sequence[int], lo: Fraction, hi: Fraction, exact: Optional[Fraction] = None):
        self.poly = list(poly)
        self.exact = exact
        if exact is not None:
            self.lo = self.hi = exact
            self._slo = 0
        else:
            self.lo, self.hi = lo, hi
            self._slo = sign_int(self.poly, lo)

    @property
    def low(self) -> Fraction:
        return self.lo

    @property
    def high(self) -> Fraction:
        return self.hi

    def is_exact(self) -> bool:
        return self.exact is not None

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine_once(self) -> None:
        if self.exact is not None:
            return
        m = (self.lo + self.hi) / 2
        s = sign_int(self.poly, m)
        if s == 0:
            self.exact = m
            self.lo = self.hi = m
            self._slo = 0
        elif s == self._slo:
            self.lo = m
        else:
            self.hi = m

    def refine(self, width: Fraction = DEFAULT_WIDTH) -> "RealRoot":
        while self.exact is None and self.hi - self.lo >= width:
            self.refine_once()
        return self

    def compare_rational(self, v) -> int:
        """Sign of (root - v)."""
        v = to_rational(v)
        if self.exact is not None:
            return _sign(self.exact - v)
        if v <= self.lo:
            return 1
        if v >= self.hi:
            return -1
        s = sign_int(self.poly, v)
        if s == 0:
            return 0
        return 1 if s == self._slo else -1

    def __float__(self) -> float:
        if self.exact is not None:
            return float(self.exact)
        return float((self.lo + self.hi) / 2)

    def __repr__(self) -> str:
        if self.exact is not None:
            return "RealRoot(%s)" % self.exact
        return "RealRoot(%s, (%s, %s))" % (self.poly, self.lo, self.hi)


def _clear_endpoints(p: List[int], lo: Fraction, hi: Fraction):
    """Shrink (lo, hi) until neither end is a root of p; p has exactly one root inside.

    An end can be a neighbouring exact root found by bisection.  p is square
    free, so its sign just inside a root end is read off the derivative.
    """
    dp = [i * c for i, c in enumerate(p)][1:]
    if sign_int(p, lo) == 0:
        inner = sign_int(dp, lo)  # sign of p on (lo, root)
        while True:
            m = (lo + hi) / 2
            sm = sign_int(p, m)
            if sm == 0:
                return m, m, m
            if sm == inner:
                lo = m
                break
            hi = m
    if sign_int(p, hi) == 0:
        inner = -sign_int(dp, hi)  # sign of p on (root, hi)
        while True:
            m = (lo + hi) / 2
            sm = sign_int(p, m)
            if sm == 0:
                return m, m, m
            if sm == inner:
                hi = m
                break
            lo = m
    return lo, hi, None


def _isolate_sqfree(p: List[int]) -> List[RealRoot]:
    roots: List[RealRoot] = []
    if p[0] == 0:
        roots.append(RealRoot([0, 1], Fraction(0), Fraction(0), Fraction(0)))
        p = p[1:]
    if len(p) > 1:
        found = [(lo, hi, ex) for lo, hi, ex in _positive_roots(p)]
        neg = [c if i % 2 == 0 else -c for i, c in enumerate(p)]
        found += [(-hi, -lo, ex) for lo, hi, ex in _positive_roots(neg)]
        for lo, hi, ex in found:
            if ex:
                roots.append(RealRoot(p, lo, lo, lo))
                continue
            lo, hi, x = _clear_endpoints(p, lo, hi)
            roots.append(RealRoot(p, lo, hi, x))
    for r in roots:
        if r.exact is not None:
            r.poly = [-r.exact.numerator, r.exact.denominator]
    roots.sort(key=lambda r: r.lo)
    return roots


def isolate_roots(f: Union[Poly, Sequence], width: Optional[Fraction] = DEFAULT_WIDTH) -> List[RealRoot]:
    """One isolating interval per distinct real root, ascending."""
    p = as_dense(f)
    if not p:
        raise ZeroPolynomialError("cannot isolate the roots of the zero polynomial")
    if len(p) == 1:
        return []
    roots = _isolate_sqfree(sqfree_part(p))
    if width is not None:
        for r in roots:
            r.refine(width)
    return roots


def count_real_roots_sturm(f: Union[Poly, Sequence]) -> int:
    """Number of distinct real roots via a Sturm sequence (independent check)."""
    p = [Fraction(c) for c in as_dense(f)]
    if len(p) <= 1:
        return 0
    seq = [p, [i * c for i, c in enumerate(p)][1:]]
    while len(seq[-1]) > 1:
        a, b = seq[-2], seq[-1]
        r = list(a)
        while len(r) >= len(b) and any(r):
            c = r[-1] / b[-1]
            s = len(r) - len(b)
            for i, bc in enumerate(b):
                r[s + i] -= c * bc
            r.pop()
            _trim(r)
        if not r:
            break
        seq.append([-c for c in r])

    def changes(vals):
        vals = [v for v in vals if v != 0]
        return sum(1 for u, w in zip(vals, vals[1:]) if (u > 0) != (w > 0))

    at_neg = [c[-1] * (-1) ** (len(c) - 1) for c in seq]
    at_pos = [c[-1] for c in seq]
    return changes(at_neg) - changes(at_pos)


# -- rational selection -------------------------------------------------------

def shortest_decimal(lo: Fraction, lo_closed: bool, hi: Fraction, hi_closed: bool) -> Fraction:
    """The m/10^k in the bounded interval with least k, nearest the midpoint."""
    mid = (lo + hi) / 2
    s = 1
    while True:
        s *= 10
        a, b = lo * s, hi * s
        m = -((-a.numerator) // a.denominator)
        if m == a and not lo_closed:
            m += 1
        M = b.numerator // b.denominator
        if M == b and not hi_closed:
            M -= 1
        if m <= M:
            c = min(max(round(mid * s), m), M)
            return Fraction(c, s)


def choose_in(lo: Optional[Fraction], lo_closed: bool, hi: Optional[Fraction], hi_closed: bool) -> Optional[Fraction]:
    """A simple rational in the interval: the integer nearest 0, else the shortest decimal."""
    if lo is not None and hi is not None:
        if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
            return None
        if lo == hi:
            return lo

    def inside(v) -> bool:
        if lo is not None and (v < lo or (v == lo and not lo_closed)):
            return False
        if hi is not None and (v > hi or (v == hi and not hi_closed)):
            return False
        return True

    if inside(0):
        return Fraction(0)
    if lo is not None and lo >= 0:
        n = -(-lo.numerator // lo.denominator)
        if n == lo and not lo_closed:
            n += 1
        if inside(n):
            return Fraction(n)
        return shortest_decimal(lo, lo_closed, hi, hi_closed)
    # the interval lies in the negatives: mirror it
    v = choose_in(-hi, hi_closed, None if lo is None else -lo, lo_closed)
    return None if v is None else -v


# -- interval sets -------------------------------------------------------------

Value = Union[Fraction, RealRoot, None]


@dataclass(frozen=True)
class Endpoint:
    value: Value  # None means infinite
    closed: bool = False

    def num(self) -> Optional[float]:
        return None if self.value is None else float(self.value)


@dataclass(frozen=True)
class Interval:
    lo: Endpoint
    hi: Endpoint

    def is_point(self) -> bool:
        return self.lo.value is not None and self.lo.value is self.hi.value or (
            isinstance(self.lo.value, Fraction) and self.lo.value == self.hi.value
        )

    def inner_bounds(self):
        """Rational sub-interval (lo, lo_closed, hi, hi_closed) of the interior.

        A bracketed irrational endpoint is replaced by the bracket end that lies
        inside the interval; bracket ends are never roots, so they are closed.
        """
        def conv(e: Endpoint, lower: bool):
            v = e.value
            if v is None:
                return None, False
            if isinstance(v, RealRoot):
                if v.exact is not None:
                    return v.exact, e.closed
                return (v.hi, True) if lower else (v.lo, True)
            return v, e.closed

        lo, lc = conv(self.lo, True)
        hi, hc = conv(self.hi, False)
        return lo, lc, hi, hc

    def contains(self, q: Fraction) -> bool:
        q = to_rational(q)
        for e, lower in ((self.lo, True), (self.hi, False)):
            v = e.value
            if v is None:
                continue
            c = v.compare_rational(q) if isinstance(v, RealRoot) else _sign(v - q)
            # c: sign(endpoint - q)
            if lower and (c > 0 or (c == 0 and not e.closed)):
                return False
            if not lower and (c < 0 or (c == 0 and not e.closed)):
                return False
        return True

    def __str__(self) -> str:
        def s(e: Endpoint, inf: str) -> str:
            if e.value is None:
                return inf
            if isinstance(e.value, RealRoot):
                if e.value.exact is not None:
                    return str(e.value.exact)
                return "root~%.6g" % float(e.value)
            return str(e.value)

        return "%s%s, %s%s" % (
            "[" if self.lo.closed else "(",
            s(self.lo, "-oo"),
            s(self.hi, "+oo"),
            "]" if self.hi.closed else ")",
        )


@dataclass
class IntervalSet:
    intervals: List[Interval] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not self.intervals

    def has_interior(self) -> bool:
        return any(not iv.is_point() for iv in self.intervals)

    def contains(self, q) -> bool:
        return any(iv.contains(q) for iv in self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return " U ".join(str(iv) for iv in self.intervals)


def pick_rational(s: IntervalSet) -> Optional[Fraction]:
    """A rational inside s: from the first interval with interior, else a rational point."""
    for iv in s.intervals:
        if iv.is_point():
            continue
        v = pick_in(iv)
        if v is not None:
            return v
    for iv in s.intervals:
        if iv.is_point() and isinstance(iv.lo.value, (Fraction, RealRoot)):
            v = iv.lo.value
            if isinstance(v, Fraction):
                return v
            if v.exact is not None:
                return v.exact
    return None


def _bracket(v, lower: bool, s: int) -> Fraction:
    """A rational at or beyond endpoint v (below it if lower), within 1/s when v is a root."""
    if isinstance(v, RealRoot):
        v.refine(Fraction(1, s))
        return v.lo if lower else v.hi
    return v


def pick_in(iv: Interval) -> Optional[Fraction]:
    """The simplest rational inside an interval with interior, decided exactly.

    Prefers the integer nearest 0, then the m/10^k with least k nearest the
    midpoint.  Irrational endpoints are compared exactly, so the choice does
    not depend on how far the isolating brackets happen to be refined.
    """
    if iv.contains(0):
        return Fraction(0)
    lo, hi = iv.lo.value, iv.hi.value
    positive = lo is not None and (lo.compare_rational(0) >= 0 if isinstance(lo, RealRoot) else lo >= 0)
    end = lo if positive else hi
    base = _bracket(end, positive, 2)
    k0 = floor(base)
    for k in (range(k0, k0 + 3) if positive else range(k0 + 1, k0 - 2, -1)):
        if iv.contains(k):
            return Fraction(k)
    if lo is None or hi is None:
        return None
    s = 1
    while True:
        s *= 10
        a, b = _bracket(lo, True, s), _bracket(hi, False, s)
        mid = (a + b) / 2
        m0, m1 = floor(a * s), floor(b * s) + 1
        for m in sorted(range(m0, m1 + 1), key=lambda m: (abs(Fraction(m, s) - mid), m)):
            if iv.contains(Fraction(m, s)):
                return Fraction(m, s)
        if s > 10 ** 60:
            return None


# -- line structure ----------------------------------------------------------------

class LineStructure:
    """Sign-invariant decomposition of the real line for a list of polynomials.

    Cells are numbered 0..2m: even index 2j is the open sector below root j
    (above root j-1), odd index 2i+1 is root i itself.
    """

    def __init__(self, polys: Sequence[Sequence]):
        self.polys = [primitive_int(as_dense(p)) for p in polys]
        self._psign = []
        for p in polys:
            d = as_dense(p)
            self._psign.append(1 if d and d[-1] > 0 else -1)
        nonconst = [p for p in self.polys if len(p) > 1]
        self.basis = coprime_basis(nonconst)
        roots: List[RealRoot] = []
        owner: List[int] = []
        for bi, b in enumerate(self.basis):
            for r in _isolate_sqfree(b):
                roots.append(r)
                owner.append(bi)
        order = _separate(roots)
        self.roots = [roots[i] for i in order]
        self.owner = [owner[i] for i in order]
        m = len(self.roots)
        # which basis elements divide each input polynomial
        divs = []
        for p in self.polys:
            if len(p) <= 1:
                divs.append(set())
            else:
                divs.append({bi for bi, b in enumerate(self.basis) if urem_is_zero(p, b)})
        self.vanish = [
            {k for k, ds in enumerate(divs) if self.owner[i] in ds} for i in range(m)
        ]
        self.samples: List[Fraction] = []
        for j in range(m + 1):
            lo = self.roots[j - 1] if j > 0 else None
            hi = self.roots[j] if j < m else None
            self.samples.append(pick_in(Interval(Endpoint(lo), Endpoint(hi))))
        self.signs: List[Tuple[int, ...]] = []
        for c in range(2 * m + 1):
            self.signs.append(tuple(self._sign_in_cell(k, c) for k in range(len(self.polys))))

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    @property
    def num_cells(self) -> int:
        return 2 * len(self.roots) + 1

    def _sign_in_cell(self, k: int, c: int) -> int:
        p = self.polys[k]
        if not p:
            return 0
        s0 = self._psign[k]
        if len(p) == 1:
            return s0 * _sign(p[0])
        if c % 2 == 0:
            return s0 * sign_int(p, self.samples[c // 2])
        i = c // 2
        if k in self.vanish[i]:
            return 0
        r = self.roots[i]
        return s0 * sign_int(p, r.exact if r.exact is not None else r.lo)

    def sample_of(self, c: int) -> Union[Fraction, RealRoot]:
        return self.samples[c // 2] if c % 2 == 0 else self.roots[c // 2]

    def root_index(self, k: int, i: int) -> int:
        """1-based index of root i among the real roots of poly k (0 if k does not vanish there)."""
        if k not in self.vanish[i]:
            return 0
        return sum(1 for t in range(i + 1) if k in self.vanish[t])

    def roots_of(self, k: int) -> List[int]:
        return [i for i in range(len(self.roots)) if k in self.vanish[i]]

    def cell_of(self, q) -> int:
        q = to_rational(q)
        lo, hi = 0, len(self.roots)
        # binary search over roots
        while lo < hi:
            mid = (lo + hi) // 2
            c = self.roots[mid].compare_rational(q)
            if c == 0:
                return 2 * mid + 1
            if c < 0:
                lo = mid + 1
            else:
                hi = mid
        return 2 * lo

    def interval_set(self, cells: Iterable[int]) -> IntervalSet:
        cs = sorted(set(cells))
        out: List[Interval] = []
        i = 0
        while i < len(cs):
            j = i
            while j + 1 < len(cs) and cs[j + 1] == cs[j] + 1:
                j += 1
            a, b = cs[i], cs[j]
            if a % 2 == 0:
                lo = Endpoint(self.roots[a // 2 - 1], False) if a > 0 else Endpoint(None)
            else:
                lo = Endpoint(self.roots[a // 2], True)
            if b % 2 == 0:
                hi = Endpoint(self.roots[b // 2], False) if b // 2 < len(self.roots) else Endpoint(None)
            else:
                hi = Endpoint(self.roots[b // 2], True)
            out.append(Interval(lo, hi))
            i = j + 1
        return IntervalSet(out)


def _separate(roots: List[RealRoot]) -> List[int]:
    """Refine until the isolating intervals are strictly disjoint; return sorted order."""
    while True:
        order = sorted(range(len(roots)), key=lambda i: (roots[i].lo, roots[i].hi))
        clash = False
        for a, b in zip(order, order[1:]):
            ra, rb = roots[a], roots[b]
            if ra.hi >= rb.lo:
                clash = True
                if ra.exact is None and (rb.exact is not None or ra.width() >= rb.width()):
                    ra.refine_once()
                else:
                    rb.refine_once()
        if not clash:
            return order


def analyze_line(polys: Sequence[Sequence]) -> LineStructure:
    return LineStructure(polys)


def _holds(sign: int, op: str) -> bool:
    if op == "<":
        return sign < 0
    if op == ">":
        return sign > 0
    if op == "=":
        return sign == 0
    if op == "!=":
        return sign != 0
    if op == "<=":
        return sign <= 0
    if op == ">=":
        return sign >= 0
    raise ValueError("unknown operator %r" % op)


def sign_holds(sign: int, op: str) -> bool:
    return _holds(sign, _ALIASES.get(op, op))


def solve_sign_conditions(constraints: Sequence[Tuple[Union[Poly, Sequence], str]]) -> IntervalSet:
    """Set of reals satisfying every (f op 0) constraint."""
    if not constraints:
        return IntervalSet([Interval(Endpoint(None), Endpoint(None))])
    ops = []
    for _, op in constraints:
        op = _ALIASES.get(op, op)
        if op not in OPS:
            raise ValueError("unknown operator %r" % op)
        ops.append(op)
    line = LineStructure([f for f, _ in constraints])
    cells = [c for c in range(line.num_cells) if all(_holds(s, op) for s, op in zip(line.signs[c], ops))]
    return line.interval_set(cells)
