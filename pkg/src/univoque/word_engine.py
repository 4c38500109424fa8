"""Eventually periodic digit words and the combinatorics used on expansions of 1.

A word is ``preperiod (period)^inf``.  An empty period means the word ends in
``0^inf`` and is called finite.  All words are kept in a canonical form
(minimal period, shortest preperiod) so that equal sequences compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

from .algebraic_core import IntPolynomial

__all__ = [
    "DigitWord",
    "BracketClass",
    "WordShapeError",
    "lex_compare",
    "shift",
    "complement",
    "bracket_classify",
    "run_length_reject",
    "phi_map",
    "phi_limit",
    "thue_morse_shifted",
    "star_to_greedy",
    "greedy_to_star",
]


class WordShapeError(ValueError):
    pass


def _minimal_period(per: list[int]) -> list[int]:
    n = len(per)
    # failure function of the period gives its smallest root
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and per[i] != per[k]:
            k = fail[k - 1]
        if per[i] == per[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1] if n else 0
    if p and n % p == 0:
        return per[:p]
    return per


class DigitWord:
    """Eventually periodic sequence of digits in [0, alphabet_max]."""

    __slots__ = ("pre", "per", "alphabet_max")

    def __init__(self, pre: Iterable[int] = (), per: Iterable[int] = (), alphabet_max: int = 1):
        pre = [int(d) for d in pre]
        per = [int(d) for d in per]
        for d in pre + per:
            if d < 0 or d > alphabet_max:
                raise WordShapeError("digit %d outside [0, %d]" % (d, alphabet_max))
        if per and not any(per):
            per = []
        if per:
            per = _minimal_period(per)
            while pre and pre[-1] == per[-1]:
                pre.pop()
                per = [per[-1]] + per[:-1]
        else:
            while pre and pre[-1] == 0:
                pre.pop()
        self.pre = tuple(pre)
        self.per = tuple(per)
        self.alphabet_max = alphabet_max

    # text format ------------------------------------------------------
    @classmethod
    def parse(cls, text: str, alphabet_max: int = 1) -> "DigitWord":
        """Parse ``111001011(1001010)^inf``; ``^inf`` may also be written ``^∞``."""
        s = re.sub(r"\s+", "", text)
        m = re.fullmatch(r"(\d*)(?:\((\d+)\)\^?(?:inf|∞))?", s)
        if not m:
            raise WordShapeError("cannot parse word %r" % text)
        return cls([int(c) for c in m.group(1)], [int(c) for c in (m.group(2) or "")], alphabet_max)

    def __str__(self) -> str:
        head = "".join(map(str, self.pre))
        if not self.per:
            return head or "0"
        return "%s(%s)^inf" % (head, "".join(map(str, self.per)))

    def __repr__(self) -> str:
        return "DigitWord(%r)" % str(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, DigitWord) and (self.pre, self.per) == (other.pre, other.per)

    def __hash__(self) -> int:
        return hash((self.pre, self.per))

    # access -----------------------------------------------------------
    @property
    def is_finite(self) -> bool:
        return not self.per

    @property
    def is_purely_periodic(self) -> bool:
        return bool(self.per) and not self.pre

    def digit(self, i: int) -> int:
        """Digit at 0-based position i."""
        if i < len(self.pre):
            return self.pre[i]
        if not self.per:
            return 0
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> list[int]:
        return [self.digit(i) for i in range(n)]

    def _period_len(self) -> int:
        return len(self.per) if self.per else 1

    def run_lengths(self) -> tuple[float, float]:
        """Longest run of 0s and of 1s over the infinite word (``inf`` if unbounded)."""
        per = list(self.per) or [0]
        if len(set(per)) == 1:
            d = per[0]
            other = _longest(self.pre, 1 - d)
            return (float("inf"), other) if d == 0 else (other, float("inf"))
        body = list(self.pre) + per * 3
        return _longest(body, 0), _longest(body, 1)

    # operations -------------------------------------------------------
    def shift(self, k: int) -> "DigitWord":
        return shift(self, k)

    def complement(self) -> "DigitWord":
        return complement(self)

    def compare(self, other: "DigitWord") -> int:
        return lex_compare(self, other)

    def value_polynomial(self) -> IntPolynomial:
        """An integer polynomial vanishing at beta whenever the word has value 1 in base beta.

        With preperiod a_1..a_p and period b_1..b_q the value identity is
        (x^q - 1)(sum a_i x^(p-i) - x^p) + sum b_j x^(q-j) = 0, and for a finite
        word simply sum a_i x^(p-i) - x^p = 0.
        """
        p = len(self.pre)
        head = IntPolynomial([self.pre[p - 1 - k] for k in range(p)]) - IntPolynomial.monomial(p)
        if not self.per:
            return head
        q = len(self.per)
        tail = IntPolynomial([self.per[q - 1 - k] for k in range(q)])
        return (IntPolynomial.monomial(q) - 1) * head + tail


def _longest(digits: Sequence[int], d: int) -> int:
    best = cur = 0
    for x in digits:
        cur = cur + 1 if x == d else 0
        best = max(best, cur)
    return best


def lex_compare(a: DigitWord, b: DigitWord) -> int:
    """-1, 0 or 1 comparing the two infinite sequences lexicographically."""
    qa, qb = a._period_len(), b._period_len()
    n = max(len(a.pre), len(b.pre)) + qa * qb // gcd(qa, qb)
    for i in range(n):
        x, y = a.digit(i), b.digit(i)
        if x != y:
            return -1 if x < y else 1
    return 0


def shift(w: DigitWord, k: int) -> DigitWord:
    if k < 0:
        raise ValueError("negative shift")
    p = len(w.pre)
    if k <= p:
        return DigitWord(w.pre[k:], w.per, w.alphabet_max)
    if not w.per:
        return DigitWord((), (), w.alphabet_max)
    r = (k - p) % len(w.per)
    return DigitWord((), w.per[r:] + w.per[:r], w.alphabet_max)


def complement(w: DigitWord) -> DigitWord:
    m = w.alphabet_max
    per = [m - d for d in w.per] if w.per else [m]
    return DigitWord([m - d for d in w.pre], per, m)


@dataclass(frozen=True)
class BracketClass:
    """strict, periodic (some equality) or none (some inequality fails)."""

    tag: str
    witness: Optional[int] = None

    def __post_init__(self):
        if self.tag not in ("strict", "periodic", "none"):
            raise ValueError("bad bracket tag %r" % self.tag)
        if (self.tag == "strict") != (self.witness is None):
            raise ValueError("witness present exactly for non-strict tags")


def bracket_classify(w: DigitWord) -> BracketClass:
    """Classify w against  comp(w) <= shift^k(w) <= w  for every k >= 1."""
    if w.alphabet_max != 1:
        raise WordShapeError("self-bracketing is defined for binary words")
    bar = complement(w)
    equality = None
    for k in range(1, max(1, len(w.pre) + len(w.per)) + 1):
        s = shift(w, k)
        up = lex_compare(s, w)
        down = lex_compare(bar, s)
        if up > 0 or down > 0:
            return BracketClass("none", k)
        if (up == 0 or down == 0) and equality is None:
            equality = k
    if equality is not None:
        return BracketClass("periodic", equality)
    return BracketClass("strict")


def run_length_reject(w: DigitWord) -> bool:
    """True when the longest 0-run is strictly longer than the longest 1-run."""
    if w.alphabet_max != 1:
        raise WordShapeError("binary words only")
    z, o = w.run_lengths()
    return z > o


def phi_map(b: DigitWord) -> DigitWord:
    """(z0)^inf  ->  (z 1 comp(z) 0)^inf."""
    if b.alphabet_max != 1 or not b.is_purely_periodic or b.per[-1] != 0:
        raise WordShapeError("phi_map needs a purely periodic binary word (z0)^inf, got %s" % b)
    z = list(b.per[:-1])
    return DigitWord((), z + [1] + [1 - d for d in z] + [0], 1)


def phi_limit(b: DigitWord, digits: int) -> list[int]:
    """First ``digits`` digits of the limit of iterating phi_map from b."""
    phi_map(b)  # shape check
    z = list(b.per[:-1])
    # each iterate is (z' 0)^inf with z' = z 1 comp(z), so every z is a prefix of the next
    while len(z) < digits:
        z = z + [1] + [1 - d for d in z]
    return z[:digits]


def thue_morse_shifted(n: int) -> list[int]:
    """t_1 ... t_n where t is the Thue-Morse word 0110 1001 ... ."""
    if n < 1:
        raise ValueError("n must be positive")
    return [bin(i).count("1") % 2 for i in range(1, n + 1)]


def star_to_greedy(a: DigitWord) -> DigitWord:
    """(w0)^inf  ->  w1, the finite greedy word paired with a quasi-greedy one."""
    if not a.is_purely_periodic or a.per[-1] >= a.alphabet_max:
        raise WordShapeError("expected a purely periodic word (w0)^inf, got %s" % a)
    w = list(a.per)
    w[-1] += 1
    return DigitWord(w, (), a.alphabet_max)


def greedy_to_star(b: DigitWord) -> DigitWord:
    """Quasi-greedy word: (e_1 .. e_{m-1} (e_m - 1))^inf for finite b, identity otherwise."""
    if not b.is_finite:
        return b
    if not b.pre:
        raise WordShapeError("the zero word has no quasi-greedy form")
    e = list(b.pre)
    e[-1] -= 1
    return DigitWord((), e, b.alphabet_max)
