from fractions import Fraction

import pytest

from oracles import representations, unroll
from univoque.algebraic_core import AlgebraicReal, FieldElement, IntPolynomial, element_floor
from univoque.beta_expansion import (
    StepLimitExceeded,
    classify_beta,
    greedy_expand,
    is_valid_greedy,
    is_valid_lazy,
    lazy_expand,
    lazy_lex_condition,
    star_expand,
    unit_check,
    word_value,
)
from univoque.pisot_enumeration import pisot_of_degree, psi_polynomials
from univoque.word_engine import DigitWord, bracket_classify

P = IntPolynomial.parse
W = DigitWord.parse


def root(text):
    return AlgebraicReal.root_in(P(text))


GOLDEN = "x^2-x-1"
CHI = "x^4-x^3-2*x^2+1"
PSI2 = "x^3-x^2-x-1"

TABLE2 = [(p, r) for d in (2, 3, 4) for p, r in pisot_of_degree(d)]


def test_greedy_examples():
    assert str(greedy_expand(root(GOLDEN)).word) == "11"
    assert str(greedy_expand(root("x^3-x-1")).word) == "10001"
    assert str(greedy_expand(root(CHI)).word) == "11(10)^inf"


def test_lazy_examples():
    assert str(lazy_expand(root(GOLDEN)).word) == "0(1)^inf"
    assert str(lazy_expand(root(PSI2)).word) == "(110)^inf"


def test_lazy_salem_long_period():
    w = "011010110"
    expected = "0" + "111" + "0101" + "(" + "1" * 7 + "0" + "1" * 6 + w + "111" + w + "1" * 6 + "0" + ")^inf"
    got = lazy_expand(root("x^6-x^5-x^4+x^3-x^2-x+1")).word
    assert got == W(expected)


def test_star_examples():
    assert str(star_expand(root(GOLDEN)).word) == "(10)^inf"
    assert str(star_expand(root(PSI2)).word) == "(110)^inf"
    assert str(star_expand(root(CHI)).word) == "11(10)^inf"


def test_step_limit():
    with pytest.raises(StepLimitExceeded):
        greedy_expand(root("x^2-2"), step_cap=200)


def test_rejects_integer_and_small_bases():
    with pytest.raises(ValueError):
        greedy_expand(AlgebraicReal.root_in(P("x-2"), 1, 3))
    with pytest.raises(ValueError):
        greedy_expand(AlgebraicReal.root_in(P("2*x-1"), 0, 1))


def test_validity_examples():
    g = root(GOLDEN)
    assert is_valid_greedy(W("11"), g)
    assert not is_valid_greedy(W("0(1)^inf"), g)
    assert is_valid_lazy(W("0(1)^inf"), g)
    assert not is_valid_lazy(W("11"), g)


def test_validity_of_psi_family_word():
    P2, A2, _ = psi_polynomials(2)
    beta = AlgebraicReal.root_in(P2 * IntPolynomial.monomial(4) - A2)
    w = W("111(0110)^inf")
    assert is_valid_greedy(w, beta) and is_valid_lazy(w, beta)


def test_validity_needs_the_value():
    # lexicographically fine but with the wrong value
    assert not is_valid_greedy(W("1101"), root(GOLDEN))


def test_lazy_lex_condition_fails_below_golden_ratio():
    # the lexicographic lazy criterion rejects a genuine lazy word for beta < golden ratio
    w = lazy_expand(root("x^3-x-1")).word
    assert str(w) == "0000(1)^inf"
    assert is_valid_lazy(w, root("x^3-x-1"))
    assert not lazy_lex_condition(w)


def test_classify_examples():
    assert classify_beta(root(CHI)).tag == "univoque"
    assert classify_beta(root("x^3-2*x^2+x-1")).tag == "periodic_self_bracketed"
    assert classify_beta(root("x^3-x^2-1")).tag == "neither"


def test_unit_check():
    assert unit_check(P("x^3-x-1"))
    assert unit_check(P("x^3-2*x^2+x-1"))
    assert not unit_check(P("x^2-2"))


@pytest.mark.parametrize("poly,beta", TABLE2, ids=[str(p) for p, _ in TABLE2])
def test_expansions_have_value_one(poly, beta):
    for res in (greedy_expand(beta), lazy_expand(beta), star_expand(beta)):
        assert word_value(res.word, beta) == FieldElement.from_rational(1, beta.minimal())


@pytest.mark.parametrize("poly,beta", TABLE2, ids=[str(p) for p, _ in TABLE2])
def test_greedy_maximal_lazy_minimal_depth_12(poly, beta):
    depth = 12
    reps = representations(float(beta), depth)
    g = tuple(unroll(greedy_expand(beta).word, depth))
    lz = tuple(unroll(lazy_expand(beta).word, depth))
    assert g in reps and lz in reps
    assert max(reps) == g
    assert min(reps) == lz


def _greedy_of(x: FieldElement, top: int, cap: int = 5000) -> DigitWord:
    """Greedy digits of x by the plain algorithm d = min(top, floor(beta r))."""
    seen, digits, r = {}, [], x
    for n in range(cap):
        if r.is_zero():
            return DigitWord(digits, (), top)
        if r.coords in seen:
            m = seen[r.coords]
            return DigitWord(digits[:m], digits[m:], top)
        seen[r.coords] = n
        br = r.mul_beta()
        d = min(top, element_floor(br))
        digits.append(d)
        r = br - d
    raise AssertionError("no period")


@pytest.mark.parametrize("poly,beta", TABLE2, ids=[str(p) for p, _ in TABLE2])
def test_lazy_is_complement_of_greedy_of_the_mirror_point(poly, beta):
    beta = beta.minimal()
    b = FieldElement.generator(beta)
    x = FieldElement.from_rational(1, beta) / (b - 1) - 1
    lazy = lazy_expand(beta).word
    assert _greedy_of(x, 1) == lazy.complement()


@pytest.mark.parametrize("poly,beta", TABLE2, ids=[str(p) for p, _ in TABLE2])
def test_three_univoque_criteria_agree(poly, beta):
    g = greedy_expand(beta).word
    lz = lazy_expand(beta).word
    c = classify_beta(beta)
    assert (c.tag == "univoque") == (g == lz) == (bracket_classify(g).tag == "strict")
