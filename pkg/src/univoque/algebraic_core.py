"""Exact integer polynomials, real algebraic numbers and arithmetic in Q(beta).

Everything here is exact: rationals are ``fractions.Fraction`` and polynomial
coefficients are Python integers.  Floating point never enters a decision.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Iterable, Optional, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "IntPolynomial",
    "PolynomialParseError",
    "AlgebraicReal",
    "FieldElement",
    "PisotCheck",
    "isolate_roots",
    "refine",
    "element_floor",
    "element_compare",
    "unit_disk_counts",
    "reciprocal_trace_polynomial",
    "is_pisot",
    "is_salem",
    "salem_root",
]


class PolynomialParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense helpers on constant-first coefficient lists


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _horner(c: Sequence, x):
    v = 0
    for a in reversed(c):
        v = v * x + a
    return v


def _sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _divmod_q(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Division with remainder over Q."""
    r = [Fraction(x) for x in a]
    _trim(r)
    db = len(b) - 1
    lb = Fraction(b[-1])
    q = [Fraction(0)] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i, y in enumerate(b):
            r[i + k] -= f * y
        r.pop()
        _trim(r)
    return _trim(q), r


def _prem(a: Sequence, b: Sequence) -> list:
    """Pseudo-remainder scaled by a positive factor, so signs are preserved."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        lr = r[-1]
        r = [x * abs(lb) for x in r]
        s = lr if lb > 0 else -lr
        for i, y in enumerate(b):
            r[i + k] -= s * y
        r.pop()
        _trim(r)
    return r


def _primitive(c: Sequence[int]) -> list:
    g = 0
    for x in c:
        g = gcd(g, x)
    if g == 0:
        return []
    return [x // g for x in c]


def _to_int(c: Sequence[Rational]) -> list:
    """Clear denominators and remove content, keeping the sign of the leading term."""
    den = 1
    for x in c:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return _primitive([int(Fraction(x) * den) for x in c])


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------


_TERM = re.compile(r"([+-])?(\d+)?(\*)?(x(?:(?:\^|\*\*)(\d+))?)?")


class IntPolynomial:
    """Univariate polynomial with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = []
        for x in coeffs:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("non-integer coefficient %s" % x)
                x = x.numerator
            c.append(int(x))
        self.coeffs = tuple(_trim(c))

    # construction -------------------------------------------------------
    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(list(coeffs)[::-1])

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse strings such as ``x^14-2*x^13+x^11-x+1`` (``*`` optional)."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise PolynomialParseError("empty polynomial")
        pos = 0
        terms: dict[int, int] = {}
        first = True
        while pos < len(s):
            m = _TERM.match(s, pos)
            sign, num, star, xpart, exp = m.groups()
            if m.end() == pos or (num is None and xpart is None):
                raise PolynomialParseError("cannot parse %r at position %d" % (text, pos))
            if sign is None and not first:
                raise PolynomialParseError("missing operator at position %d in %r" % (pos, text))
            if star and (num is None or xpart is None):
                raise PolynomialParseError("misplaced '*' in %r" % text)
            c = int(num) if num is not None else 1
            if sign == "-":
                c = -c
            k = 0 if xpart is None else (int(exp) if exp is not None else 1)
            terms[k] = terms.get(k, 0) + c
            pos = m.end()
            first = False
        deg = max(terms)
        return cls([terms.get(i, 0) for i in range(deg + 1)])

    # basic properties ---------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __repr__(self) -> str:
        return "IntPolynomial(%r)" % (str(self),)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = "x" if k == 1 else "x^%d" % k
                body = mono if a == 1 else "%d*%s" % (a, mono)
            out.append((sign, body))
        first_sign, first_body = out[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in out[1:]:
            s += sign + body
        return s

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-x for x in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        return _horner(self.coeffs, x)

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x^k."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def reversed(self) -> "IntPolynomial":
        """x^deg * p(1/x)."""
        return IntPolynomial(self.coeffs[::-1])

    def is_reciprocal(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def content(self) -> int:
        g = 0
        for x in self.coeffs:
            g = gcd(g, x)
        return g

    def primitive(self) -> "IntPolynomial":
        """Content removed, leading coefficient made positive."""
        c = _primitive(self.coeffs)
        if c and c[-1] < 0:
            c = [-x for x in c]
        return IntPolynomial(c)

    def divmod(self, other: "IntPolynomial") -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder over Q as Fraction lists."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        return _divmod_q(self.coeffs, other.coeffs)

    def exact_div(self, other: "IntPolynomial") -> Optional["IntPolynomial"]:
        """Quotient when ``other`` divides ``self`` in Z[x], else None."""
        q, r = self.divmod(other)
        if r or any(x.denominator != 1 for x in q):
            return None
        return IntPolynomial(q)

    def divides(self, other: "IntPolynomial") -> bool:
        """True when self divides other over Q."""
        return not other.divmod(self)[1]

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        a = [Fraction(x) for x in self.coeffs]
        b = [Fraction(x) for x in other.coeffs]
        while b:
            a, b = b, _divmod_q(a, b)[1]
        if not a:
            return IntPolynomial()
        return IntPolynomial(_to_int(a)).primitive()

    def squarefree(self) -> "IntPolynomial":
        if self.degree <= 0:
            return self.primitive()
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.primitive()
        q, _ = self.divmod(g)
        return IntPolynomial(_to_int(q)).primitive()

    def strip_x(self) -> tuple[int, "IntPolynomial"]:
        """Split off the largest power of x dividing the polynomial."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k, IntPolynomial(self.coeffs[k:])

    def factor(self) -> tuple[int, list[tuple["IntPolynomial", int]]]:
        """Factorisation over Z as (content, [(irreducible, multiplicity)])."""
        import sympy

        X = sympy.Symbol("x")
        cont, facs = sympy.Poly(self.descending(), X, domain="ZZ").factor_list()
        out = []
        for f, m in facs:
            fp = IntPolynomial.from_descending(int(c) for c in f.all_coeffs())
            if fp.leading < 0:
                fp = -fp
                if m % 2:
                    cont = -cont
            out.append((fp, m))
        out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
        return int(cont), out

    def is_irreducible(self) -> bool:
        if self.degree <= 0:
            return False
        if self.degree == 1:
            return self.content() == 1
        _, facs = self.factor()
        return len(facs) == 1 and facs[0][1] == 1 and self.content() == 1

    # real roots ---------------------------------------------------------
    def sturm_sequence(self) -> list[list[int]]:
        p = list(self.coeffs)
        seq = [p, list(self.derivative().coeffs)]
        while seq[-1] and len(seq[-1]) > 1:
            r = _prem(seq[-2], seq[-1])
            if not r:
                break
            seq.append(_primitive([-x for x in r]) if r else r)
        return [s for s in seq if s]

    def root_bound(self) -> int:
        """Cauchy bound: every complex root has modulus below the result."""
        if self.degree < 1:
            return 1
        lead = abs(self.leading)
        m = max(abs(c) for c in self.coeffs[:-1])
        return 1 + -(-m // lead)

    def count_real_roots(self, lo: Rational, hi: Rational) -> int:
        """Distinct real roots in the half-open interval (lo, hi]."""
        seq = self.squarefree().sturm_sequence()
        return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def _sign_changes(seq: Sequence[Sequence[int]], x) -> int:
    if x == "-inf" or x == "+inf":
        vals = []
        for s in seq:
            lead = s[-1]
            deg = len(s) - 1
            v = _sign(lead) if x == "+inf" else _sign(lead) * (-1) ** deg
            vals.append(v)
    else:
        vals = [_sign(_horner(s, x)) for s in seq]
    vals = [v for v in vals if v]
    return sum(1 for a, b in zip(vals, vals[1:]) if a != b)


# ---------------------------------------------------------------------------


class AlgebraicReal:
    """A real root of ``defining`` isolated in the open interval (lo, hi).

    The endpoints are never roots.  ``refine`` only ever shrinks the interval;
    concurrent refinement is serialised by a per-instance lock.
    """

    def __init__(self, defining: IntPolynomial, lo: Rational, hi: Rational, *, checked: bool = False):
        lo, hi = Fraction(lo), Fraction(hi)
        if not lo < hi:
            raise ValueError("empty isolating interval")
        self.defining = defining
        self._sqf = defining.squarefree()
        if not checked:
            if self._sqf(lo) == 0 or self._sqf(hi) == 0:
                raise ValueError("interval endpoint is a root")
            if self._sqf.count_real_roots(lo, hi) != 1:
                raise ValueError("interval does not isolate exactly one root")
        self._lo, self._hi = lo, hi
        self._exact: Optional[Fraction] = None
        self._lock = threading.Lock()
        self._minimal: Optional[AlgebraicReal] = None
        self._field = None

    @classmethod
    def root_in(cls, p: IntPolynomial, lo: Rational = 1, hi: Rational = 2) -> "AlgebraicReal":
        """The unique root of p in (lo, hi); ValueError when not unique."""
        roots = isolate_roots(p, (lo, hi))
        if len(roots) != 1:
            raise ValueError("%s has %d roots in (%s, %s)" % (p, len(roots), lo, hi))
        return roots[0]

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._lo, self._hi

    @property
    def width(self) -> Fraction:
        return self._hi - self._lo

    def refine(self, width: Rational) -> tuple[Fraction, Fraction]:
        width = Fraction(width)
        if width <= 0:
            raise ValueError("width must be positive")
        with self._lock:
            p = self._sqf
            lo, hi = self._lo, self._hi
            if self._exact is not None:
                while hi - lo > width:
                    lo = self._exact - (self._exact - lo) / 2
                    hi = self._exact + (hi - self._exact) / 2
            else:
                slo = _sign(p(lo))
                while hi - lo > width:
                    mid = (lo + hi) / 2
                    sm = _sign(p(mid))
                    if sm == 0:
                        self._exact = mid
                        q = (hi - lo) / 8
                        lo, hi = mid - q, mid + q
                        while hi - lo > width:
                            lo, hi = mid - (mid - lo) / 2, mid + (hi - mid) / 2
                        break
                    if sm == slo:
                        lo = mid
                    else:
                        hi = mid
            self._lo, self._hi = lo, hi
            return lo, hi

    def exact_value(self) -> Optional[Fraction]:
        """The root when it is rational, else None."""
        if self._exact is not None:
            return self._exact
        m = self.minimal()
        if m.defining.degree == 1:
            a, b = m.defining.coeffs
            self._exact = Fraction(-a, b)
            return self._exact
        return None

    def minimal(self) -> "AlgebraicReal":
        """The same number with its minimal polynomial as defining polynomial."""
        if self._minimal is not None:
            return self._minimal
        p = self.defining.primitive()
        if p.is_irreducible():
            self._minimal = self
            return self
        _, facs = p.factor()
        while True:
            lo, hi = self.interval
            hits = [f for f, _ in facs if f.count_real_roots(lo, hi) >= 1 and f(hi) != 0]
            if len(hits) == 1:
                f = hits[0]
                # (lo, hi) isolates exactly one root overall, so it isolates f's root
                self._minimal = AlgebraicReal(f, lo, hi)
                return self._minimal
            self.refine(self.width / 4)

    def compare_rational(self, q: Rational) -> int:
        """Sign of (self - q)."""
        q = Fraction(q)
        if self._sqf(q) == 0:
            lo, hi = self.interval
            if lo < q < hi:
                return 0
        while True:
            lo, hi = self.interval
            if q <= lo:
                return 1
            if q >= hi:
                return -1
            self.refine(self.width / 2)

    def compare(self, other: "AlgebraicReal") -> int:
        """Sign of (self - other), decided exactly."""
        g = self._sqf.gcd(other._sqf)
        lo = max(self._lo, other._lo)
        hi = min(self._hi, other._hi)
        if g.degree >= 1 and lo < hi:
            if g(hi) != 0 and g.count_real_roots(lo, hi) >= 1:
                return 0
            if g(hi) == 0 and (g.count_real_roots(lo, hi) >= 1):
                return 0
        while True:
            if self._hi <= other._lo:
                return -1
            if other._hi <= self._lo:
                return 1
            self.refine(self.width / 2)
            other.refine(other.width / 2)

    def __lt__(self, other):
        return self.compare(other) < 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __float__(self) -> float:
        lo, hi = self.refine(Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def decimal(self, digits: int = 9) -> str:
        """Root rounded half-even to ``digits`` places after the point."""
        from decimal import ROUND_HALF_EVEN, Decimal, localcontext

        scale = 10**digits
        ex = self._exact
        if ex is not None:
            with localcontext() as ctx:
                ctx.prec = 200
                v = Decimal(ex.numerator) / Decimal(ex.denominator)
                return str(v.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))
        w = Fraction(1, 10 ** (digits + 2))
        while True:
            lo, hi = self.refine(w)
            a = _round_half_even(lo * scale)
            b = _round_half_even(hi * scale)
            if a == b:
                break
            w /= 10**3
        sign = "-" if a < 0 else ""
        a = abs(a)
        s = str(a).rjust(digits + 1, "0")
        return sign + s[:-digits] + ("." + s[-digits:] if digits else "")

    def significant(self, digits: int = 12) -> str:
        """Root rounded to ``digits`` significant figures (values of modulus >= 1)."""
        lo, hi = self.interval
        intpart = len(str(abs(int(lo)))) if abs(lo) >= 1 else 1
        return self.decimal(max(digits - intpart, 0))

    def __repr__(self) -> str:
        return "AlgebraicReal(%s, ~%s)" % (self.defining, self.decimal(6))


def _round_half_even(x: Fraction) -> int:
    f = floor(x)
    d = x - f
    if d > Fraction(1, 2):
        return f + 1
    if d < Fraction(1, 2):
        return f
    return f if f % 2 == 0 else f + 1


def isolate_roots(p: IntPolynomial, rng: tuple[Rational, Rational]) -> list[AlgebraicReal]:
    """One AlgebraicReal per distinct real root of p in the open interval ``rng``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    lo, hi = Fraction(rng[0]), Fraction(rng[1])
    sq = p.squarefree()
    if sq.degree < 1 or lo >= hi:
        return []
    seq = sq.sturm_sequence()

    def count(a, b):
        n = _sign_changes(seq, a) - _sign_changes(seq, b)
        if sq(b) == 0:
            n -= 1
        return n

    found: list[AlgebraicReal] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n <= 0:
            continue
        if n == 1 and sq(a) != 0 and sq(b) != 0:
            found.append(AlgebraicReal(p, a, b, checked=True))
            continue
        m = (a + b) / 2
        if sq(m) == 0:
            w = (b - a) / 4
            while sq(m - w) == 0 or sq(m + w) == 0 or count(m - w, m + w) != 1:
                w /= 2
            r = AlgebraicReal(p, m - w, m + w, checked=True)
            r._exact = m
            found.append(r)
            stack.append((a, m - w))
            stack.append((m + w, b))
        else:
            stack.append((a, m))
            stack.append((m, b))
    found.sort(key=lambda r: r.interval[0])
    return found


def refine(a: AlgebraicReal, width: Rational) -> tuple[Fraction, Fraction]:
    return a.refine(width)


# ---------------------------------------------------------------------------
# Q(beta)


class _Field:
    """Reduction data for Q(beta), built from the minimal polynomial."""

    def __init__(self, base: AlgebraicReal):
        m = base.minimal().defining
        self.base = base.minimal()
        self.poly = m
        self.degree = m.degree
        lead = Fraction(m.leading)
        # beta^d = -sum(monic[i] beta^i)
        self.monic = [Fraction(c) / lead for c in m.coeffs[:-1]]


def _field_of(base: AlgebraicReal) -> _Field:
    f = base._field
    if f is None:
        f = _Field(base)
        base._field = f
    return f


def _interval_mul(a: tuple, b: tuple) -> tuple:
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(ps), max(ps)


class FieldElement:
    """c_0 + c_1 beta + ... + c_{d-1} beta^{d-1} with rational c_i, fully reduced."""

    __slots__ = ("coords", "base", "_f")

    def __init__(self, coords: Iterable[Rational], base: AlgebraicReal, *, _field: Optional[_Field] = None):
        f = _field or _field_of(base)
        c = [Fraction(x) for x in coords]
        if len(c) > f.degree:
            c = _reduce(c, f)
        c += [Fraction(0)] * (f.degree - len(c))
        self.coords = tuple(c)
        self.base = f.base
        self._f = f

    @classmethod
    def from_rational(cls, q: Rational, base: AlgebraicReal) -> "FieldElement":
        return cls([q], base)

    @classmethod
    def generator(cls, base: AlgebraicReal) -> "FieldElement":
        f = _field_of(base)
        if f.degree == 1:
            return cls([-f.monic[0]], base)
        return cls([0, 1], base)

    @classmethod
    def from_polynomial(cls, p: Union[IntPolynomial, Sequence[Rational]], base: AlgebraicReal) -> "FieldElement":
        """p(beta) reduced."""
        c = p.coeffs if isinstance(p, IntPolynomial) else p
        f = _field_of(base)
        return cls(_reduce([Fraction(x) for x in c], f), base, _field=f)

    def _new(self, coords) -> "FieldElement":
        return FieldElement(coords, self.base, _field=self._f)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self._new([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new([a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return self._new([-a for a in self.coords])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new([a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._new([a * other for a in self.coords])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(_reduce(_mul(self.coords, other.coords), self._f))

    __rmul__ = __mul__

    def mul_beta(self) -> "FieldElement":
        """beta * self, by a single shift-and-reduce."""
        f = self._f
        c = [Fraction(0)] + list(self.coords)
        top = c.pop()
        if top:
            for i, m in enumerate(f.monic):
                c[i] -= top * m
        return self._new(c)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(beta)")
        # extended Euclid: s*a + t*m = g (a constant)
        m = [Fraction(x) for x in self._f.poly.coeffs]
        a = _trim(list(self.coords))
        r0, r1 = m, a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub(s0, _mul(q, s1))
        g = r1[0]
        return self._new(_reduce([x / g for x in s1], self._f))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def interval(self) -> tuple[Fraction, Fraction]:
        """An interval containing the value, from the current interval of beta."""
        lo, hi = self.base.interval
        ex = self.base._exact
        if ex is not None:
            v = _horner(self.coords, ex)
            return v, v
        acc = (Fraction(0), Fraction(0))
        for c in reversed(self.coords):
            acc = _interval_mul(acc, (lo, hi))
            acc = (acc[0] + c, acc[1] + c)
        return acc

    def floor(self) -> int:
        return element_floor(self)

    def compare(self, q: Rational) -> int:
        return element_compare(self, q)

    def __repr__(self) -> str:
        return "FieldElement(%s)" % ", ".join(str(c) for c in self.coords)


def _reduce(c: list, f: _Field) -> list:
    d = f.degree
    c = list(c)
    for k in range(len(c) - 1, d - 1, -1):
        top = c[k]
        if top:
            for i, m in enumerate(f.monic):
                c[k - d + i] -= top * m
        c[k] = Fraction(0)
    return c[:d]


def _tighten(e: FieldElement) -> None:
    e.base.refine(e.base.width / 2**16)


def element_floor(e: FieldElement) -> int:
    """Exact floor of the value of e."""
    if e.is_rational():
        return floor(e.coords[0])
    while True:
        lo, hi = e.interval()
        fl = floor(lo)
        if floor(hi) == fl and hi != fl + 1:
            return fl
        _tighten(e)


def element_compare(e: FieldElement, q: Rational) -> int:
    """Sign of (value of e) - q: -1, 0 or 1."""
    d = e - Fraction(q)
    if d.is_zero():
        return 0
    if d.is_rational():
        return _sign(d.coords[0])
    while True:
        lo, hi = d.interval()
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        _tighten(d)


# ---------------------------------------------------------------------------
# unit disk counting and Pisot / Salem recognition


def _schur_cohn(a: Sequence[Rational]) -> Optional[int]:
    """Roots in the open unit disk of a polynomial with a[0] != 0, or None if singular.

    Iterates T p = a_0 p - a_n p^rev (formal degree drops each step) and counts
    the negative partial products of the constants T^k p(0).
    """
    p = list(a)
    n = len(p) - 1
    prod = 1
    inside = 0
    for _ in range(n):
        a0, an = p[0], p[-1]
        t = [a0 * x - an * y for x, y in zip(p, reversed(p))]
        t.pop()
        delta = t[0]
        if delta == 0:
            return None
        prod *= _sign(delta)
        if prod < 0:
            inside += 1
        p = t
        if any(isinstance(x, Fraction) for x in p):
            # keep rationals small
            g = max(abs(x) for x in p)
            if g:
                p = [x / g for x in p]
    return inside


def _inside_no_circle(q: IntPolynomial) -> int:
    """Roots of q (no roots on the circle, q(0) != 0) inside the open unit disk."""
    r = _schur_cohn(q.coeffs)
    if r is not None:
        return r
    # Sandwich |z| < 1 - e  and  |z| < 1 + e; agreement certifies the count.
    eps = Fraction(1, 16)
    for _ in range(80):
        lo = _schur_cohn([c * (1 - eps) ** k for k, c in enumerate(q.coeffs)])
        hi = _schur_cohn([c * (1 + eps) ** k for k, c in enumerate(q.coeffs)])
        if lo is not None and hi is not None and lo == hi:
            return lo
        eps /= 16
    raise ArithmeticError("unit disk count did not stabilise for %s" % q)


def reciprocal_trace_polynomial(r: IntPolynomial) -> IntPolynomial:
    """h with r(z) = z^m h(z + 1/z) for a reciprocal r of even degree 2m."""
    if not r.is_reciprocal() or r.degree % 2:
        raise ValueError("need a reciprocal polynomial of even degree")
    m = r.degree // 2
    h = [0] * (m + 1)
    v_prev, v = [2], [0, 1]  # z^k + z^-k as a polynomial in y
    h[0] += r.coeffs[m]
    for k in range(1, m + 1):
        c = r.coeffs[m + k]
        for i, x in enumerate(v):
            h[i] += c * x
        v_prev, v = v, _sub(_mul([0, 1], v), v_prev)
    return IntPolynomial(h)


def unit_disk_counts(p: IntPolynomial) -> tuple[int, int, int]:
    """(inside, on, outside) counts of the distinct complex roots of p."""
    if p.degree < 1:
        return 0, 0, 0
    k, q = p.squarefree().strip_x()
    inside = 1 if k else 0
    if q.degree < 1:
        return inside, 0, 0
    g = q.gcd(q.reversed())
    on = 0
    if g.degree >= 1:
        q = IntPolynomial(_to_int(q.divmod(g)[0]))
        # g collects circle roots and reciprocal pairs a, 1/a
        for lin in (IntPolynomial([-1, 1]), IntPolynomial([1, 1])):
            e = g.exact_div(lin) if lin.divides(g) else None
            if e is not None:
                g = e
                on += 1
        if g.degree >= 1:
            # with z - 1 and z + 1 removed what is left is reciprocal of even degree
            h = reciprocal_trace_polynomial(g)
            circle = h.squarefree().count_real_roots(-2, 2) - (1 if h(2) == 0 else 0)
            on += 2 * circle
            off = g.degree - 2 * circle
            inside += off // 2
    if q.degree >= 1:
        inside += _inside_no_circle(q)
    outside = p.squarefree().strip_x()[1].degree + (1 if k else 0) - inside - on
    return inside, on, outside


@dataclass(frozen=True)
class PisotCheck:
    """Outcome of ``is_pisot``; truthy exactly when the polynomial is Pisot."""

    is_pisot: bool
    reason: str
    root: Optional[AlgebraicReal] = None

    def __bool__(self) -> bool:
        return self.is_pisot


def is_pisot(p: IntPolynomial) -> PisotCheck:
    """Decide whether p is the minimal polynomial of a Pisot number.

    ``reason`` is one of: pisot, not_monic, reducible, no_dominant_root,
    conjugate_outside.
    """
    if not p.is_monic():
        return PisotCheck(False, "not_monic")
    if p.degree < 1:
        return PisotCheck(False, "no_dominant_root")
    if not p.is_irreducible():
        return PisotCheck(False, "reducible")
    big = isolate_roots(p, (1, p.root_bound() + 1))
    if len(big) != 1:
        return PisotCheck(False, "no_dominant_root")
    if p.degree == 1:
        return PisotCheck(True, "pisot", big[0])
    inside, on, _ = unit_disk_counts(p)
    if on == 0 and inside == p.degree - 1:
        return PisotCheck(True, "pisot", big[0])
    return PisotCheck(False, "conjugate_outside", big[0])


def is_salem(p: IntPolynomial) -> bool:
    """Salem minimal polynomial test via the trace polynomial h(z + 1/z)."""
    if not p.is_monic() or p.degree < 4 or p.degree % 2 or not p.is_reciprocal():
        return False
    if not p.is_irreducible():
        return False
    h = reciprocal_trace_polynomial(p)
    m = h.degree
    if h(2) == 0 or h(-2) == 0:
        return False
    above = h.count_real_roots(2, h.root_bound() + 1)
    circle = h.count_real_roots(-2, 2)
    below = h.count_real_roots(-h.root_bound() - 1, -2)
    return above == 1 and below == 0 and circle == m - 1


def salem_root(p: IntPolynomial) -> AlgebraicReal:
    """The root > 1 of a Salem polynomial."""
    roots = isolate_roots(p, (1, p.root_bound() + 1))
    if len(roots) != 1:
        raise ValueError("%s has %d real roots above 1" % (p, len(roots)))
    return roots[0]
