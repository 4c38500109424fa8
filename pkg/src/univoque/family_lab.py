"""k-parametric expansion patterns for regular Pisot families.

A pattern such as ``00(11)^k011(01)^{k+1}1`` or ``1(101)^k0((110)^k1)^inf``
describes one expansion for every k.  This module conjectures patterns from
two samples, proves the value identity for all k at once as a bivariate
polynomial division, and decides greedy/lazy status for all large k from a
few concrete instances.  It also builds the Thue-Morse approximants of the
Komornik-Loreti constant and the numbers reached by the Phi map.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .algebraic_core import AlgebraicReal, IntPolynomial, isolate_roots
from .beta_expansion import (
    DEFAULT_STEP_CAP,
    is_valid_greedy,
    is_valid_lazy,
    star_expand,
)
from .pisot_enumeration import RegularFamily, regular_polynomial
from .word_engine import DigitWord, bracket_classify, greedy_to_star, phi_map, thue_morse_shifted

__all__ = [
    "Literal",
    "Power",
    "Pattern",
    "PatternSyntaxError",
    "NonAffineExponent",
    "OffsetError",
    "NoAlignment",
    "InstabilityDetected",
    "FamilyIndex",
    "FamilyIdentity",
    "Bivariate",
    "PatternClass",
    "instantiate",
    "conjecture_pattern",
    "verify_family",
    "classify_pattern",
    "pattern_cutoff",
    "komornik_loreti_polynomials",
    "komornik_loreti_approximants",
    "thue_morse_divisor",
    "phi_bridge",
]


class PatternSyntaxError(ValueError):
    pass


class NonAffineExponent(PatternSyntaxError):
    pass


class OffsetError(ValueError):
    pass


class NoAlignment(ValueError):
    pass


class InstabilityDetected(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# patterns


@dataclass(frozen=True)
class Literal:
    digits: tuple

    def __str__(self) -> str:
        return "".join(map(str, self.digits))


@dataclass(frozen=True)
class Power:
    """``word`` repeated slope*k + offset times."""

    word: tuple
    slope: int = 1
    offset: int = 0
    bare: bool = False  # printed as d^e rather than (d)^e

    def exponent(self, k: int) -> int:
        return self.slope * k + self.offset

    def exponent_text(self) -> str:
        if self.slope == 0:
            e = str(self.offset)
        else:
            e = "k" if self.slope == 1 else "%dk" % self.slope
            if self.offset:
                e += "%+d" % self.offset
        return e if len(e) == 1 else "{%s}" % e

    def __str__(self) -> str:
        w = "".join(map(str, self.word))
        if self.bare and len(self.word) == 1:
            return "%s^%s" % (w, self.exponent_text())
        return "(%s)^%s" % (w, self.exponent_text())


Block = Union[Literal, Power]


def _merge(blocks: Sequence[Block]) -> tuple:
    out: list = []
    for b in blocks:
        if isinstance(b, Literal):
            if not b.digits:
                continue
            if out and isinstance(out[-1], Literal):
                out[-1] = Literal(out[-1].digits + b.digits)
                continue
        out.append(b)
    return tuple(out)


_INF = r"(?:\^\{?(?:inf|\\infty|∞)\}?)"
_EXP = re.compile(r"\^(\{[^{}]*\}|[0-9]|k)")  # unbraced exponents are one character


def _parse_exponent(text: str) -> tuple[int, int]:
    t = text.strip("{}").replace(" ", "")
    m = re.fullmatch(r"(\d*)k([+-]\d+)?", t)
    if m:
        return int(m.group(1) or 1), int(m.group(2) or 0)
    m = re.fullmatch(r"([+-]?\d+)\+(\d*)k", t)
    if m:
        return int(m.group(2) or 1), int(m.group(1))
    m = re.fullmatch(r"\d+", t)
    if m:
        return 0, int(t)
    raise NonAffineExponent("exponent %r is not of the form a*k+c" % text)


def _parse_blocks(s: str, pos: int, closing: bool) -> tuple[list, int]:
    blocks: list = []
    while pos < len(s):
        c = s[pos]
        if c == ")":
            if not closing:
                raise PatternSyntaxError("unbalanced ')' at %d" % pos)
            return blocks, pos
        if c.isdigit():
            m = _EXP.match(s, pos + 1)
            if m:
                slope, off = _parse_exponent(m.group(1))
                blocks.append(Power((int(c),), slope, off, bare=True))
                pos = m.end()
            else:
                blocks.append(Literal((int(c),)))
                pos += 1
            continue
        if c == "(":
            inner, end = _parse_blocks(s, pos + 1, True)
            if end >= len(s) or s[end] != ")":
                raise PatternSyntaxError("unbalanced '(' at %d" % pos)
            m = re.compile(_INF).match(s, end + 1)
            if m:
                blocks.append(("tail", inner))
                pos = m.end()
                continue
            m = _EXP.match(s, end + 1)
            if not m:
                raise PatternSyntaxError("group at %d has no exponent" % pos)
            if any(not isinstance(b, Literal) for b in inner):
                raise PatternSyntaxError("nested powers are only allowed inside the tail")
            word = tuple(d for b in inner for d in b.digits)
            slope, off = _parse_exponent(m.group(1))
            blocks.append(Power(word, slope, off))
            pos = m.end()
            continue
        raise PatternSyntaxError("unexpected %r at %d" % (c, pos))
    if closing:
        raise PatternSyntaxError("missing ')'")
    return blocks, pos


class Pattern:
    """head (tail)^inf where both parts are lists of literal and powered blocks.

    Every powered word whose exponent depends on k has the same length,
    ``block_size``; constant powers such as ``(011)^2`` are just shorthand.
    """

    __slots__ = ("head", "tail")

    def __init__(self, head: Sequence[Block] = (), tail: Sequence[Block] = ()):
        self.head = _merge(head)
        self.tail = _merge(tail)
        sizes = {len(b.word) for b in self.blocks if isinstance(b, Power) and b.slope}
        if len(sizes) > 1:
            raise PatternSyntaxError("powered words of different lengths %s" % sorted(sizes))

    @property
    def blocks(self) -> tuple:
        return self.head + self.tail

    @property
    def block_size(self) -> Optional[int]:
        for b in self.blocks:
            if isinstance(b, Power) and b.slope:
                return len(b.word)
        return None

    @property
    def min_k(self) -> int:
        """Smallest k at which every exponent is non-negative."""
        k = 0
        for b in self.blocks:
            if isinstance(b, Power):
                if b.slope == 0:
                    if b.offset < 0:
                        raise OffsetError("negative constant exponent in %s" % b)
                    continue
                k = max(k, -(b.offset // b.slope))
        return k

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        s = re.sub(r"\s+", "", text)
        blocks, _ = _parse_blocks(s, 0, False)
        tails = [i for i, b in enumerate(blocks) if isinstance(b, tuple)]
        if not tails:
            return cls(blocks)
        if tails != [len(blocks) - 1]:
            raise PatternSyntaxError("the (...)^inf tail must come last and only once")
        return cls(blocks[:-1], blocks[-1][1])

    def __str__(self) -> str:
        head = "".join(map(str, self.head))
        if not self.tail:
            return head or "0"
        return "%s(%s)^inf" % (head, "".join(map(str, self.tail)))

    def __repr__(self) -> str:
        return "Pattern(%r)" % str(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Pattern) and (self.head, self.tail) == (other.head, other.tail)

    def __hash__(self) -> int:
        return hash((self.head, self.tail))

    def digits(self, part: Sequence[Block], k: int) -> list[int]:
        out: list[int] = []
        for b in part:
            if isinstance(b, Literal):
                out.extend(b.digits)
            else:
                e = b.exponent(k)
                if e < 0:
                    raise OffsetError("exponent of %s is %d at k = %d" % (b, e, k))
                out.extend(b.word * e)
        return out

    def literal_length(self) -> int:
        """Total length of the k-independent material."""
        n = 0
        for b in self.blocks:
            if isinstance(b, Literal):
                n += len(b.digits)
            elif b.slope == 0:
                n += len(b.word) * b.offset
            else:
                n += len(b.word) * max(b.offset, 0)
        return n

    def instantiate(self, k: int, alphabet_max: int = 1) -> DigitWord:
        return instantiate(self, k, alphabet_max)


def instantiate(p: Pattern, k: int, alphabet_max: int = 1) -> DigitWord:
    """The concrete word at k."""
    if k < 0:
        raise OffsetError("k must be non-negative")
    head = p.digits(p.head, k)
    tail = p.digits(p.tail, k)
    if p.tail and not tail:
        raise OffsetError("tail of %s is empty at k = %d" % (p, k))
    return DigitWord(head, tail, alphabet_max)


# ---------------------------------------------------------------------------
# conjecture from two samples


def _scan(s1: Sequence[int], s2: Sequence[int], L: int, k1: int, finite: bool = False) -> list:
    """Align two strings; an extra block of L characters in s2 that repeats the
    last L characters read becomes a power whose exponent grows with k."""
    blocks: list = []
    lit: list[int] = []
    i = j = 0
    while True:
        if i < len(s1) and j < len(s2) and s1[i] == s2[j]:
            lit.append(s1[i])
            i += 1
            j += 1
            continue
        if i == len(s1) and j == len(s2):
            break
        w = list(s2[j:j + L])
        if len(w) < L or len(lit) < L or lit[-L:] != w:
            raise NoAlignment("samples disagree at positions %d/%d and no block of size %d explains it" % (i, j, L))
        j += L
        copies = 0
        while len(lit) >= L and lit[-L:] == w:
            del lit[-L:]
            copies += 1
        blocks.append(Literal(tuple(lit)))
        blocks.append(Power(tuple(w), 1, copies - k1))
        lit = []
    if finite and not lit and len(blocks) >= 2:
        # finite words end on a literal digit: 11(011)^k is written 1(101)^k1
        pre, pw = blocks[-2], blocks[-1]
        if pre.digits and pre.digits[-1] == pw.word[-1]:
            blocks[-2] = Literal(pre.digits[:-1])
            blocks[-1] = Power(pw.word[-1:] + pw.word[:-1], pw.slope, pw.offset)
            lit = [pw.word[-1]]
    blocks.append(Literal(tuple(lit)))
    return blocks


def conjecture_pattern(small: DigitWord, large: DigitWord, L: int, k_small: int = 1) -> Pattern:
    """Pattern reproducing ``small`` at k_small and ``large`` at k_small + 1.

    Finite samples are aligned in one pass.  For eventually periodic samples
    the preperiods and the periods are aligned separately; since each sample
    is stored with its shortest preperiod, the split point is searched over
    rotations of the two periods.
    """
    if L < 1:
        raise ValueError("block size must be positive")
    if small.is_finite != large.is_finite:
        raise NoAlignment("one sample is finite and the other is not")
    m = small.alphabet_max
    candidates = []
    if small.is_finite:
        candidates.append((list(small.pre), [], list(large.pre), []))
    else:
        q1, q2 = len(small.per), len(large.per)
        shifts = sorted(((a, b) for a in range(q1) for b in range(q2)), key=lambda t: (t[0] + t[1], t[0]))
        for a, b in shifts:
            p1 = list(small.pre) + list(small.per[:a])
            t1 = list(small.per[a:] + small.per[:a])
            p2 = list(large.pre) + list(large.per[:b])
            t2 = list(large.per[b:] + large.per[:b])
            candidates.append((p1, t1, p2, t2))
    last: Optional[Exception] = None
    for p1, t1, p2, t2 in candidates:
        try:
            head = _scan(p1, p2, L, k_small, not t1)
            tail = _scan(t1, t2, L, k_small) if t1 else []
            pat = Pattern(head, tail)
        except (NoAlignment, PatternSyntaxError) as e:
            last = e
            continue
        try:
            ok = instantiate(pat, k_small, m) == small and instantiate(pat, k_small + 1, m) == large
        except OffsetError:
            ok = False
        if ok:
            return pat
    raise NoAlignment(str(last) if last else "no alignment found")


# ---------------------------------------------------------------------------
# bivariate identity


class Bivariate:
    """Sparse polynomial in x and y with rational coefficients, keys (deg_y, deg_x)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def from_x(cls, p: IntPolynomial, ydeg: int = 0, xshift: int = 0) -> "Bivariate":
        return cls({(ydeg, i + xshift): c for i, c in enumerate(p.coeffs) if c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Bivariate") -> "Bivariate":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return Bivariate(t)

    def __neg__(self) -> "Bivariate":
        return Bivariate({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Bivariate") -> "Bivariate":
        return self + (-other)

    def __mul__(self, other: "Bivariate") -> "Bivariate":
        t: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                key = (a + c, b + d)
                t[key] = t.get(key, 0) + u * v
        return Bivariate(t)

    def __eq__(self, other) -> bool:
        return isinstance(other, Bivariate) and self.terms == other.terms

    def divide(self, other: "Bivariate") -> Optional["Bivariate"]:
        """Exact quotient in Q[x, y], or None when other does not divide self."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = max(other.terms)
        lc = other.terms[lead]
        rem = Bivariate(self.terms)
        q: dict = {}
        while not rem.is_zero():
            top = max(rem.terms)
            if top[0] < lead[0] or top[1] < lead[1]:
                return None
            mono = (top[0] - lead[0], top[1] - lead[1])
            c = rem.terms[top] / lc
            q[mono] = q.get(mono, 0) + c
            rem = rem - Bivariate({mono: c}) * other
        return Bivariate(q)

    def y_coefficients(self) -> dict[int, IntPolynomial]:
        """Coefficient of each power of y, as a polynomial in x (integer coefficients required)."""
        out: dict[int, list] = {}
        for (a, b), v in self.terms.items():
            if v.denominator != 1:
                raise ValueError("non-integer coefficient")
            c = out.setdefault(a, [])
            c.extend([0] * (b + 1 - len(c)))
            c[b] = int(v)
        return {a: IntPolynomial(c) for a, c in out.items()}

    def specialize(self, ypow: int) -> IntPolynomial:
        """Substitute y = x^ypow."""
        deg = max((a * ypow + b for a, b in self.terms), default=0)
        c = [Fraction(0)] * (deg + 1)
        for (a, b), v in self.terms.items():
            c[a * ypow + b] += v
        return IntPolynomial(c)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            v = self.terms[(a, b)]
            mono = "*".join(s for s in (
                ("y^%d" % a if a > 1 else "y" if a == 1 else ""),
                ("x^%d" % b if b > 1 else "x" if b == 1 else ""),
            ) if s)
            mag = abs(v)
            coef = str(mag) if (mag != 1 or not mono) else ""
            body = "*".join(s for s in (coef, mono) if s)
            parts.append(("-" if v < 0 else "+") + body)
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def __repr__(self) -> str:
        return "Bivariate(%r)" % str(self)


# Expressions whose exponents are affine in k: keys (slope, const) -> coefficient,
# standing for sum c * x^(slope*k + const).


def _amul(p: dict, q: dict) -> dict:
    out: dict = {}
    for (a, b), u in p.items():
        for (c, d), v in q.items():
            key = (a + c, b + d)
            out[key] = out.get(key, 0) + u * v
    return {k: v for k, v in out.items() if v}


def _aadd(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def _apow(p: dict, n: int) -> dict:
    out = {(0, 0): 1}
    for _ in range(n):
        out = _amul(out, p)
    return out


def _xpoly(digits: Sequence[int]) -> dict:
    n = len(digits)
    return {(0, n - 1 - i): d for i, d in enumerate(digits) if d}


class _Value:
    """sum a_i x^(len - i) over a block list, as numerator / (x^L - 1)^den."""

    def __init__(self, L: int):
        self.L = L
        self.num: dict = {}
        self.den = 0
        self.length = (0, 0)
        self.D = {(0, L): 1, (0, 0): -1}

    def append(self, b: Block) -> None:
        if isinstance(b, Literal) or b.slope == 0:
            digits = b.digits if isinstance(b, Literal) else b.word * b.offset
            self.num = _aadd(_amul(self.num, {(0, len(digits)): 1}), _amul(_xpoly(digits), _apow(self.D, self.den)))
            self.length = (self.length[0], self.length[1] + len(digits))
            return
        if len(b.word) != self.L:
            raise PatternSyntaxError("powered word %s does not have the block size %d" % (b, self.L))
        # V(w^e) = V(w) (x^(L e) - 1) / (x^L - 1)
        elen = (self.L * b.slope, self.L * b.offset)
        geo = _amul(_xpoly(b.word), {elen: 1, (0, 0): -1})
        self.num = _aadd(_amul(_amul(self.num, {elen: 1}), self.D), _amul(geo, _apow(self.D, self.den)))
        self.den += 1
        self.length = (self.length[0] + elen[0], self.length[1] + elen[1])


def _part_value(blocks: Sequence[Block], L: int) -> _Value:
    v = _Value(L)
    for b in blocks:
        v.append(b)
    return v


def _identity(p: Pattern) -> tuple[dict, int, int]:
    """Affine-exponent numerator D of "pattern has value 1", with den and L."""
    L = p.block_size or 1
    h = _part_value(p.head, L)
    if not p.tail:
        # V(head) - x^N
        num = _aadd(h.num, _amul({h.length: 1}, _apow(h.D, h.den)), -1)
        return num, h.den, L
    t = _part_value(p.tail, L)
    den = max(h.den, t.den)
    D = h.D
    head = _aadd(_amul(h.num, _apow(D, den - h.den)), _amul({h.length: 1}, _apow(D, den)), -1)
    num = _aadd(_amul({t.length: 1, (0, 0): -1}, head), _amul(t.num, _apow(D, den - t.den)))
    return num, den, L


@dataclass(frozen=True)
class FamilyIndex:
    """Family member used at pattern index k: n = slope*k + offset."""

    family: RegularFamily
    slope: int
    offset: int

    def n(self, k: int) -> int:
        return self.slope * k + self.offset

    def __str__(self) -> str:
        return "%s, n = %dk%+d" % (self.family.name, self.slope, self.offset)


@dataclass
class FamilyIdentity:
    """D_k = cofactor * P*_k in Q[x, y] with y = x^(g k); cofactor None means refuted."""

    index: FamilyIndex
    pattern: Pattern
    g: int
    xshift: int
    identity: Bivariate
    family_poly: Bivariate
    cofactor: Optional[Bivariate]

    @property
    def verified(self) -> bool:
        return self.cofactor is not None

    def check(self, k: int) -> bool:
        """The specialised univariate identity at k (multiplied through by x^xshift)."""
        if self.cofactor is None:
            return False
        y = self.g * k
        return self.identity.specialize(y) == (self.cofactor * self.family_poly).specialize(y)


def _to_bivariate(expr: dict, g: int, shift: int) -> Bivariate:
    out: dict = {}
    for (a, c), v in expr.items():
        if a % g:
            raise NonAffineExponent("slope %d is not a multiple of %d" % (a, g))
        key = (a // g, c + shift)
        out[key] = out.get(key, 0) + v
    return Bivariate(out)


def verify_family(p: Pattern, index: FamilyIndex) -> FamilyIdentity:
    """Prove that p evaluates to 1 at the family root for every k by one exact division."""
    if index.slope <= 0:
        raise NonAffineExponent("family index must grow with k")
    num, den, L = _identity(p)
    P, A, B = index.family.polynomials
    extra = A if index.family.branch[1] == "A" else B
    sign = 1 if index.family.branch[0] == "+" else -1
    fam = {(index.slope, index.offset + i): c for i, c in enumerate(P.coeffs) if c}
    fam = _aadd(fam, {(0, i): c for i, c in enumerate(extra.coeffs) if c}, sign)
    g = 0
    for a, _ in list(num) + list(fam):
        g = gcd(g, a)
    g = g or index.slope
    shift = max(0, -min(c for _, c in list(num) + list(fam)))
    ident = _to_bivariate(num, g, shift)
    famb = _to_bivariate(fam, g, 0)
    # cancel the (x^L - 1) powers and x powers introduced by clearing denominators
    coeffs = ident.y_coefficients()
    content = IntPolynomial()
    for c in coeffs.values():
        content = c if content.is_zero() else content.gcd(c)
    introduced = IntPolynomial.monomial(shift)
    for _ in range(den):
        introduced = introduced * IntPolynomial([-1] + [0] * (L - 1) + [1])
    h = content.gcd(introduced)
    reduced = ident
    if h.degree > 0:
        hb = Bivariate.from_x(h)
        reduced = ident.divide(hb)
        if reduced is None:  # pragma: no cover - h divides every coefficient
            reduced = ident
    cof = reduced.divide(famb)
    return FamilyIdentity(index, p, g, shift, reduced, famb, cof)


# ---------------------------------------------------------------------------
# all-k classification


@dataclass(frozen=True)
class PatternClass:
    greedy: bool
    lazy: bool
    univoque: bool
    periodic_self_bracketed: bool
    K: int

    @property
    def label(self) -> str:
        if self.univoque:
            return "univoque"
        if self.periodic_self_bracketed:
            return "periodic self-bracketed"
        return "neither"


def pattern_cutoff(p: Pattern) -> int:
    """K = 2 + ceil((S + 2T)/L), S the literal length and T the tail length at k = 1."""
    L = p.block_size or 1
    S = p.literal_length()
    T = len(p.digits(p.tail, max(1, p.min_k)))
    return max(p.min_k, 2 + -(-(S + 2 * T) // L))


def _classify_at(p: Pattern, index: FamilyIndex, k: int) -> tuple:
    res = regular_polynomial(index.family, index.n(k))
    if res.root is None:
        raise ValueError("no root in (1, 2) at n = %d" % index.n(k))
    w = instantiate(p, k)
    g = is_valid_greedy(w, res.root)
    lz = is_valid_lazy(w, res.root)
    psb = g and w.is_finite and bracket_classify(greedy_to_star(w)).tag == "periodic"
    return g, lz, g and lz, psb


def classify_pattern(p: Pattern, index: FamilyIndex, K: Optional[int] = None) -> PatternClass:
    """Greedy/lazy/univoque/periodic self-bracketed status valid for all k >= K.

    The word-level predicates are evaluated at K, K + 1 and K + 2 against the
    actual family root; disagreement doubles K once before giving up.
    """
    K = pattern_cutoff(p) if K is None else K
    for attempt in range(2):
        got = {_classify_at(p, index, k) for k in (K, K + 1, K + 2)}
        if len(got) == 1:
            g, lz, u, psb = got.pop()
            return PatternClass(g, lz, u, psb, K)
        K *= 2
    raise InstabilityDetected("classification of %s still changes near k = %d" % (p, K))


# ---------------------------------------------------------------------------
# Thue-Morse approximants and the Phi map


def komornik_loreti_polynomials(k: int) -> tuple[IntPolynomial, IntPolynomial, DigitWord, DigitWord]:
    """Q_{2^k}, R_{2^k} and the words t_1..t_{2^k} and t_1..t_{2^k-1}(1 comp(t_1..t_{2^k-1}))^inf."""
    if k < 1:
        raise ValueError("k must be positive")
    t = thue_morse_shifted(2 ** k)
    tau = DigitWord(t)
    head = t[:-1]
    delta = DigitWord(head, [1] + [1 - d for d in head])
    return tau.value_polynomial(), delta.value_polynomial(), tau, delta


def thue_morse_divisor(k: int) -> IntPolynomial:
    """(x + 1)(x^2 + 1)...(x^(2^(k-2)) + 1)."""
    d = IntPolynomial([1])
    for j in range(k - 1):
        d = d * (IntPolynomial.monomial(2 ** j) + 1)
    return d


def _root_with_greedy(p: IntPolynomial, word: DigitWord, lo=1, hi=2) -> AlgebraicReal:
    for f, _ in p.factor()[1]:
        for r in isolate_roots(f, (lo, hi)):
            if is_valid_greedy(word, r):
                return r
    raise ArithmeticError("no root of %s in (%s, %s) has greedy word %s" % (p, lo, hi, word))


def komornik_loreti_approximants(kmax: int) -> tuple[list[AlgebraicReal], list[AlgebraicReal]]:
    """tau_{2^k} (increasing to the constant) and delta_{2^k} (decreasing to it), k = 1..kmax."""
    if kmax < 1:
        raise ValueError("kmax must be positive")
    taus, deltas = [], []
    for k in range(1, kmax + 1):
        Q, R, tw, dw = komornik_loreti_polynomials(k)
        taus.append(_root_with_greedy(Q, tw))
        deltas.append(_root_with_greedy(R, dw))
    return taus, deltas


def phi_bridge(theta: AlgebraicReal, step_cap: int = DEFAULT_STEP_CAP) -> AlgebraicReal:
    """The number whose quasi-greedy word is Phi applied to that of theta."""
    star = star_expand(theta, step_cap).word
    image = phi_map(star)
    finite = DigitWord(image.per[:-1] + (1,))
    lo = theta.refine(Fraction(1, 10**6))[1]
    return _root_with_greedy(finite.value_polynomial(), finite, lo, 2)
