"""Greedy, lazy and quasi-greedy expansions of 1 in an algebraic base.

Remainders live in Q(beta) as exact coordinate vectors, so a repeated
remainder is detected exactly and gives the preperiod and the period.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebraic_core import AlgebraicReal, FieldElement, IntPolynomial, element_floor
from .word_engine import BracketClass, DigitWord, bracket_classify, complement, greedy_to_star, lex_compare, shift

__all__ = [
    "DEFAULT_STEP_CAP",
    "StepLimitExceeded",
    "ExpansionResult",
    "BetaClass",
    "greedy_expand",
    "lazy_expand",
    "star_expand",
    "is_valid_greedy",
    "is_valid_lazy",
    "word_has_value_one",
    "word_value",
    "lazy_lex_condition",
    "classify_beta",
    "unit_check",
]

DEFAULT_STEP_CAP = 100_000


class StepLimitExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__("no repeated remainder within %d steps" % cap)
        self.cap = cap


@dataclass(frozen=True)
class ExpansionResult:
    word: DigitWord
    kind: str  # greedy, lazy or star
    base: AlgebraicReal
    steps_to_period: int


@dataclass(frozen=True)
class BetaClass:
    """univoque, periodic_self_bracketed or neither, with the words that decided it."""

    tag: str
    greedy: DigitWord
    lazy: Optional[DigitWord] = None

    @property
    def label(self) -> str:
        return "periodic self-bracketed" if self.tag == "periodic_self_bracketed" else self.tag


def _check_base(beta: AlgebraicReal) -> int:
    if beta.compare_rational(1) <= 0:
        raise ValueError("base must exceed 1")
    if beta.exact_value() is not None and beta.exact_value().denominator == 1:
        raise ValueError("integer bases are not supported")
    return element_floor(FieldElement.generator(beta))


def _run(beta: AlgebraicReal, step, r0: FieldElement, alphabet_max: int, cap: int):
    seen = {r0.coords: 0}
    digits = []
    r = r0
    for n in range(1, cap + 1):
        d, r = step(r)
        digits.append(d)
        if r.is_zero():
            return DigitWord(digits, (), alphabet_max), n
        m = seen.get(r.coords)
        if m is not None:
            return DigitWord(digits[:m], digits[m:], alphabet_max), n
        seen[r.coords] = n
    raise StepLimitExceeded(cap)


def greedy_expand(beta: AlgebraicReal, step_cap: int = DEFAULT_STEP_CAP) -> ExpansionResult:
    """d_beta(1): digit floor(beta r), remainder its fractional part, from r = 1."""
    top = _check_base(beta)
    beta = beta.minimal()

    def step(r):
        br = r.mul_beta()
        d = element_floor(br)
        return d, br - d

    word, n = _run(beta, step, FieldElement.from_rational(1, beta), top, step_cap)
    return ExpansionResult(word, "greedy", beta, n)


def lazy_expand(beta: AlgebraicReal, step_cap: int = DEFAULT_STEP_CAP) -> ExpansionResult:
    """l_beta(1): digit max(0, ceil(beta r - B)) with B = floor(beta)/(beta - 1), from r = 1."""
    top = _check_base(beta)
    beta = beta.minimal()
    one = FieldElement.from_rational(1, beta)
    b = FieldElement.from_rational(top, beta) / (FieldElement.generator(beta) - one)

    def step(r):
        br = r.mul_beta()
        d = max(0, -element_floor(b - br))
        return d, br - d

    word, n = _run(beta, step, one, top, step_cap)
    return ExpansionResult(word, "lazy", beta, n)


def star_expand(beta: AlgebraicReal, step_cap: int = DEFAULT_STEP_CAP) -> ExpansionResult:
    g = greedy_expand(beta, step_cap)
    return ExpansionResult(greedy_to_star(g.word), "star", g.base, g.steps_to_period)


def word_value(word: DigitWord, beta: AlgebraicReal) -> FieldElement:
    """sum w_i beta^(-i) as an exact element of Q(beta)."""
    beta = beta.minimal()
    inv = FieldElement.generator(beta).inverse()
    v = FieldElement.from_rational(0, beta)
    for d in reversed(word.pre):
        v = (v + d) * inv
    if not word.per:
        return v
    t = FieldElement.from_rational(0, beta)
    for d in reversed(word.per):
        t = (t + d) * inv
    # t is one period; the full tail is t / (1 - beta^-q)
    inv_q = FieldElement.from_rational(1, beta)
    for _ in word.per:
        inv_q = inv_q * inv
    tail = t / (1 - inv_q)
    for _ in word.pre:
        tail = tail * inv
    return v + tail


def word_has_value_one(word: DigitWord, beta: AlgebraicReal) -> bool:
    """Exact test that sum w_i beta^(-i) = 1, through the word's integer value polynomial."""
    v = word.value_polynomial()
    if v.is_zero():
        return True
    return FieldElement.from_polynomial(v, beta.minimal()).is_zero()


def _shifts(word: DigitWord):
    return range(1, max(1, len(word.pre) + len(word.per)) + 1)


def is_valid_greedy(word: DigitWord, beta: AlgebraicReal) -> bool:
    """shift^k(s) < s for all k >= 1, and the word has value 1."""
    if any(lex_compare(shift(word, k), word) >= 0 for k in _shifts(word)):
        return False
    return word_has_value_one(word, beta)


def lazy_lex_condition(word: DigitWord) -> bool:
    """shift^k(comp(s)) < s for all k >= 1.

    This lexicographic form only characterises lazy words of 1 for bases at
    least the golden ratio; ``is_valid_lazy`` uses the exact digit test.
    """
    bar = complement(word)
    return all(lex_compare(shift(bar, k), word) < 0 for k in _shifts(bar))


def is_valid_lazy(word: DigitWord, beta: AlgebraicReal) -> bool:
    """Value 1, and no nonzero digit could be lowered.

    Lowering s_n by one is possible exactly when the complemented tail
    shift^n(comp(s)) has value >= 1, so every nonzero digit needs that value < 1.
    """
    if not word_has_value_one(word, beta):
        return False
    bar = complement(word)
    # value of shift^n(bar) from the previous one: v_n = beta v_{n-1} - bar_n
    v = word_value(bar, beta)
    for n in range(1, len(word.pre) + max(len(word.per), 1) + 1):
        v = v.mul_beta() - bar.digit(n - 1)
        if word.digit(n - 1) > 0 and v.compare(1) >= 0:
            return False
    return True


class ClassificationMismatch(AssertionError):
    pass


def classify_beta(beta: AlgebraicReal, step_cap: int = DEFAULT_STEP_CAP) -> BetaClass:
    """Univoque iff greedy = lazy; cross-checked against strict self-bracketing of the greedy word."""
    g = greedy_expand(beta, step_cap).word
    l = lazy_expand(beta, step_cap).word
    equal = g == l
    strict = beta.compare_rational(2) < 0 and bracket_classify(g).tag == "strict"
    if equal != strict:
        raise ClassificationMismatch("greedy=lazy is %s but strict bracketing is %s for %r" % (equal, strict, beta))
    if equal:
        return BetaClass("univoque", g, l)
    if g.is_finite and bracket_classify(greedy_to_star(g)).tag == "periodic":
        return BetaClass("periodic_self_bracketed", g, l)
    return BetaClass("neither", g, l)


def unit_check(p: IntPolynomial) -> bool:
    if not p.is_monic():
        raise ValueError("unit_check expects a monic polynomial")
    return abs(p.constant) == 1
