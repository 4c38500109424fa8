"""Pisot numbers in an interval by the Dufresnoy-Pisot tree search, regular
families accumulating at psi_r and chi, and small-degree Salem numbers.

Search state
------------
A node is a prefix u_0..u_{n-1} of the power series of a rational function
A(z)/Q(z).  For each sign eps in {-1, +1} there is a unique
E(z) = 1 + c_1 z + ... + c_n z^n with

    sum_{j=0..k} c_j u_{k-j} = eps * c_{n-k}        (k = 0..n-1),

and the next coefficient must satisfy  w_n <= u_n <= w_n*  where
w = eps - sum_{j>=1} c_j u_{n-j}  (eps = -1 gives w_n, eps = +1 gives w_n*).
The monic polynomial x^n E(1/x) = sum c_j x^(n-j) is the candidate Pisot
polynomial; when u_n hits a bound exactly the branch terminates with it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebraic_core import AlgebraicReal, IntPolynomial, isolate_roots, is_pisot, is_salem, salem_root
from .beta_expansion import BetaClass, classify_beta
from .word_engine import DigitWord

__all__ = [
    "SearchNode",
    "LimitFunction",
    "RegularFamily",
    "RegularResult",
    "PisotRecord",
    "SearchResult",
    "BudgetExceeded",
    "ThresholdError",
    "series",
    "dp_bounds",
    "dp_bounds_linear",
    "extend_node",
    "root_node",
    "limit_functions",
    "boyd_search",
    "CALIBRATED_PRUNE_EXTRA",
    "pisot_of_degree",
    "regular_polynomial",
    "psi_polynomials",
    "chi_polynomials",
    "psi_family_expansion",
    "psi_family_univoque",
    "salem_enumerate",
    "salem_coefficient_bounds",
]


def series(num: IntPolynomial, den: IntPolynomial, n: int) -> list[Fraction]:
    """First n power-series coefficients of num/den (den(0) != 0)."""
    a = list(num.coeffs)
    q = den.coeffs
    if not q or q[0] == 0:
        raise ValueError("denominator must not vanish at 0")
    out: list[Fraction] = []
    for k in range(n):
        s = Fraction(a[k] if k < len(a) else 0)
        for j in range(1, min(k, len(q) - 1) + 1):
            s -= q[j] * out[k - j]
        out.append(s / q[0])
    return out


# ---------------------------------------------------------------------------
# bounds


def _solve(u: Sequence[int], n: int, eps: int) -> Optional[list[Fraction]]:
    """c_0..c_n for the order-n system by Gauss-Jordan elimination; None if singular."""
    # unknowns c_1..c_n, last column is the right-hand side
    rows = []
    for k in range(n):
        row = [Fraction(0)] * (n + 1)
        for j in range(1, k + 1):
            row[j - 1] += u[k - j]
        row[n - k - 1] -= eps
        row[n] = Fraction(-u[k])
        rows.append(row)
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if piv is None:
            return None
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return [Fraction(1)] + [rows[i][n] for i in range(n)]


def _bound(c: Sequence[Fraction], u: Sequence[int], n: int, eps: int) -> Fraction:
    return eps - sum(c[j] * u[n - j] for j in range(1, n + 1))


@dataclass
class SearchNode:
    """Prefix u_0..u_{n-1} with the two bounding E polynomials and the bounds on u_n.

    ``minus``/``star`` hold c_0..c_n (None when the system is singular);
    ``w_star`` is None when u_n is unbounded above.
    """

    prefix: tuple
    minus: Optional[list]
    star: Optional[list]
    w: Optional[Fraction]
    w_star: Optional[Fraction]

    @property
    def n(self) -> int:
        return len(self.prefix)

    def candidate(self, eps: int) -> Optional[IntPolynomial]:
        """x^n E(1/x) for the chosen sign, when it has integer coefficients."""
        c = self.minus if eps < 0 else self.star
        if c is None or any(x.denominator != 1 for x in c):
            return None
        return IntPolynomial.from_descending(int(x) for x in c)


def _node_from(prefix: tuple, cm, cp) -> SearchNode:
    n = len(prefix)
    u = list(prefix) + [0]
    w = _bound(cm, u, n, -1) if cm is not None else None
    ws = _bound(cp, u, n, 1) if cp is not None else None
    if n == 1:
        # only the lower bound u_0^2 - 1 constrains u_1
        ws = None
    return SearchNode(prefix, cm, cp, w, ws)


def dp_bounds_linear(prefix: Sequence[int]) -> SearchNode:
    """Node for ``prefix`` with both systems solved directly."""
    prefix = tuple(int(x) for x in prefix)
    n = len(prefix)
    return _node_from(prefix, _solve(prefix, n, -1), _solve(prefix, n, 1))


def root_node(u0: int = 1) -> SearchNode:
    return dp_bounds_linear((u0,))


def extend_node(node: SearchNode, u_n: int) -> SearchNode:
    """Child node for prefix + (u_n,), by the order-raising recurrence when it applies.

    With a = u_n - w*, b = u_n - w and d = w - w*, each sign eps' satisfies
    d E'(z) = a (1 - eps' z) E^-(z) - b (1 + eps' z) E^+(z).
    """
    prefix = node.prefix + (int(u_n),)
    if node.minus is None or node.star is None or node.w is None or node.w_star is None or node.w == node.w_star:
        return dp_bounds_linear(prefix)
    n = node.n
    den = node.w - node.w_star
    a = u_n - node.w_star
    b = u_n - node.w
    out = []
    for e in (-1, 1):
        c = [Fraction(0)] * (n + 2)
        for j, x in enumerate(node.minus):
            c[j] += a * x
            c[j + 1] -= a * e * x
        for j, x in enumerate(node.star):
            c[j] -= b * x
            c[j + 1] -= b * e * x
        out.append([x / den for x in c])
    return _node_from(prefix, out[0], out[1])


def dp_bounds(prefix: Sequence[int], method: str = "recurrence") -> tuple:
    """(w_n, w_n*) for the prefix; w_n* is None when unbounded."""
    if method == "linear":
        node = dp_bounds_linear(prefix)
    elif method == "recurrence":
        node = root_node(prefix[0])
        for u in prefix[1:]:
            node = extend_node(node, u)
    else:
        raise ValueError("method must be 'recurrence' or 'linear'")
    return node.w, node.w_star


# ---------------------------------------------------------------------------
# limit functions


class ThresholdError(AssertionError):
    pass


NINE_QUARTERS = Fraction(9, 4)


@dataclass
class LimitFunction:
    """A rational function whose series prefix of length ``threshold_N`` forces regularity."""

    name: str
    numerator: IntPolynomial
    denominator: IntPolynomial
    threshold_N: int
    series_prefix: tuple = ()
    gap: Optional[Fraction] = None
    first_N: Optional[int] = None

    def __post_init__(self):
        self.verify()

    def verify(self) -> "LimitFunction":
        """Recompute the series and the gap w*_N - w_N; fail loudly if it is not < 9/4."""
        s = series(self.numerator, self.denominator, self.threshold_N + 1)
        if any(x.denominator != 1 for x in s):
            raise ThresholdError("%s does not have an integer series" % self.name)
        self.series_prefix = tuple(int(x) for x in s[: self.threshold_N])
        node = root_node(self.series_prefix[0])
        first = None
        for k in range(1, self.threshold_N + 1):
            if k > 1:
                node = extend_node(node, self.series_prefix[k - 1])
            if node.w is not None and node.w_star is not None and first is None:
                if node.w_star - node.w < NINE_QUARTERS:
                    first = k
        if node.w is None or node.w_star is None:
            raise ThresholdError("bounds undefined at N=%d for %s" % (self.threshold_N, self.name))
        self.gap = node.w_star - node.w
        self.first_N = first
        if not self.gap < NINE_QUARTERS:
            raise ThresholdError("w*_N - w_N = %s is not below 9/4 for %s" % (self.gap, self.name))
        return self

    def prefix(self, length: int) -> tuple:
        return tuple(int(x) for x in series(self.numerator, self.denominator, length))

    def certificate(self) -> str:
        return "%s: N=%d (first N with gap < 9/4: %s), prefix %s, w*_N - w_N = %s" % (
            self.name,
            self.threshold_N,
            self.first_N,
            " ".join(map(str, self.series_prefix)),
            self.gap,
        )


def limit_functions() -> list[LimitFunction]:
    P = IntPolynomial.parse
    return [
        LimitFunction("f1", P("-x-1"), P("x^3+x^2+x-1"), 24),
        LimitFunction("f2", P("x^3-1"), P("x^3+x^2+x-1"), 11),
        LimitFunction("f3", P("-x^3-x^2+x+1"), P("x^4-2*x^2-x+1"), 33),
        LimitFunction("f4", P("x^4-x^2+1"), P("x^4-2*x^2-x+1"), 44),
    ]


# ---------------------------------------------------------------------------
# Boyd search


# Extra prefix length before a branch matching a limit series is cut.  With 0
# the cut happens exactly at threshold_N.  Every extra level keeps two more
# regular Pisot numbers of that branch; the values below are fitted so that
# the published counts (227 and 303) are reproduced, and the same setting is
# used for both ranges.
CALIBRATED_PRUNE_EXTRA = {"f1": 5, "f2": 0, "f3": 5, "f4": 0}


class BudgetExceeded(RuntimeError):
    def __init__(self, budget: int, partial: "SearchResult"):
        super().__init__("node budget %d exhausted; results are partial" % budget)
        self.budget = budget
        self.partial = partial


@dataclass
class PisotRecord:
    poly: IntPolynomial
    root: AlgebraicReal
    beta_class: Optional[BetaClass] = None


@dataclass
class SearchResult:
    records: list
    nodes: int = 0
    pruned: int = 0
    complete: bool = True

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def _horner_desc(c: Sequence[Fraction], x: Fraction) -> Fraction:
    v = Fraction(0)
    for a in c:
        v = v * x + a
    return v


def boyd_search(
    interval: tuple,
    prune: Optional[Sequence[LimitFunction]] = None,
    max_degree: Optional[int] = None,
    *,
    prune_extra: int | dict = 0,
    node_budget: Optional[int] = None,
    classify: bool = False,
) -> SearchResult:
    """All Pisot numbers in [lo, hi] (a subinterval of (1, 2)) outside pruned regular branches.

    ``prune`` defaults to the four limit functions; a branch is cut once its
    prefix agrees with a limit series on its first threshold_N (+ prune_extra)
    terms.  ``prune_extra`` may be a dict keyed by limit-function name.
    Every Pisot number in (1, 2) is a unit, so the search starts from u_0 = 1.
    ``max_degree`` (default: none) drops candidates of higher degree; the
    tree is finite without it.
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if not (1 < lo < hi < 2):
        raise ValueError("interval must lie inside (1, 2)")
    if prune is None:
        prune = limit_functions()
    cuts = []
    for f in prune:
        extra = prune_extra.get(f.name, 0) if isinstance(prune_extra, dict) else prune_extra
        length = f.threshold_N + extra
        cuts.append((length, f.prefix(length)))

    found: dict[IntPolynomial, AlgebraicReal] = {}
    checked: set = set()
    stats = {"nodes": 0, "pruned": 0}

    def emit(p: Optional[IntPolynomial]) -> None:
        if p is None or (max_degree is not None and p.degree > max_degree) or p in checked:
            return
        checked.add(p)
        _, facs = p.factor()
        for f, _m in facs:
            if f.degree < 1 or f in found:
                continue
            if f(lo) != 0 and f.count_real_roots(lo, hi) == 0:
                continue
            res = is_pisot(f)
            if res and res.root.compare_rational(lo) >= 0 and res.root.compare_rational(hi) <= 0:
                found[f] = res.root

    def visit(node: SearchNode) -> None:
        stats["nodes"] += 1
        if node_budget is not None and stats["nodes"] > node_budget:
            raise _Stop()
        for length, pre in cuts:
            if node.n == length and node.prefix == pre:
                stats["pruned"] += 1
                return
        w, ws = node.w, node.w_star
        k = math.ceil(w) if w is not None else None
        if k is None:
            return
        while ws is None or k <= ws:
            if w is not None and k == w:
                emit(node.candidate(-1))
            elif ws is not None and k == ws:
                emit(node.candidate(1))
            else:
                child = extend_node(node, k)
                # every completion's Pisot root lies between the dominant roots of
                # the two candidate polynomials: x^n E^-(1/x) is negative right of
                # its root and x^n E^+(1/x) positive right of its root
                if child.minus is not None and _horner_desc(child.minus, hi) < 0:
                    if ws is None:
                        break
                    k += 1
                    continue
                if child.star is not None and _horner_desc(child.star, lo) > 0:
                    k += 1
                    continue
                visit(child)
            k += 1

    complete = True
    try:
        visit(root_node(1))
    except _Stop:
        complete = False
    recs = [PisotRecord(p, r) for p, r in found.items()]
    recs.sort(key=_record_key)
    if classify:
        for r in recs:
            r.beta_class = classify_beta(r.root)
    result = SearchResult(recs, stats["nodes"], stats["pruned"], complete)
    if not complete:
        raise BudgetExceeded(node_budget, result)
    return result


class _Stop(Exception):
    pass


def _record_key(r: PisotRecord):
    lo, hi = r.root.refine(Fraction(1, 10**30))
    return (lo, r.poly.degree, r.poly.coeffs)


# ---------------------------------------------------------------------------
# regular families


def psi_polynomials(r: int) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    """P = x^{r+1} - x^r - ... - 1, A = x^{r+1} - 1, B = (x^r - 1)/(x - 1)."""
    if r < 1:
        raise ValueError("r >= 1")
    P = IntPolynomial([-1] * (r + 1) + [1])
    A = IntPolynomial([-1] + [0] * r + [1])
    B = IntPolynomial([1] * r)
    return P, A, B


def chi_polynomials() -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
    P = IntPolynomial.parse
    return P("x^4-x^3-2*x^2+1"), P("x^3+x^2-x-1"), P("x^4-x^2+1")


@dataclass(frozen=True)
class RegularFamily:
    """P x^n (+/-) A or P x^n (+/-) B at the limit point psi_r or chi."""

    limit: str  # "psi" or "chi"
    branch: str  # "+A", "-A", "+B", "-B"
    r: int = 2

    def __post_init__(self):
        if self.limit not in ("psi", "chi"):
            raise ValueError("limit must be psi or chi")
        if self.branch not in ("+A", "-A", "+B", "-B"):
            raise ValueError("branch must be one of +A, -A, +B, -B")

    @classmethod
    def parse(cls, limit: str, branch: str) -> "RegularFamily":
        limit = limit.strip().lower()
        if limit == "chi":
            return cls("chi", branch)
        if limit.startswith("psi"):
            return cls("psi", branch, int(limit[3:] or 2))
        raise ValueError("unknown limit point %r" % limit)

    @property
    def polynomials(self) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial]:
        return chi_polynomials() if self.limit == "chi" else psi_polynomials(self.r)

    @property
    def name(self) -> str:
        return ("chi" if self.limit == "chi" else "psi%d" % self.r) + " " + self.branch

    def polynomial(self, n: int) -> IntPolynomial:
        P, A, B = self.polynomials
        extra = A if self.branch[1] == "A" else B
        base = P.shift(n)
        return base + extra if self.branch[0] == "+" else base - extra

    def limit_point(self) -> AlgebraicReal:
        return AlgebraicReal.root_in(self.polynomials[0], 1, 2)


@dataclass
class RegularResult:
    poly: IntPolynomial
    factor: Optional[IntPolynomial]
    root: Optional[AlgebraicReal]

    @property
    def root_bigger_than_2(self) -> bool:
        return self.root is None


def regular_polynomial(family: RegularFamily, n: int) -> RegularResult:
    """The family member at n, with its irreducible factor and root in (1, 2) if any."""
    if n < 1:
        raise ValueError("n >= 1")
    p = family.polynomial(n)
    roots = isolate_roots(p, (1, 2))
    if not roots:
        return RegularResult(p, None, None)
    if len(roots) > 1:
        raise ArithmeticError("%s has several roots in (1, 2)" % p)
    m = roots[0].minimal()
    return RegularResult(p, m.defining, m)


def psi_family_expansion(r: int, n: int) -> DigitWord:
    """1^{r+1} (0^{n-r-1} 1^r 0)^inf, the greedy word of the root of P x^n - A at psi_r."""
    if n < r + 1:
        raise ValueError("need n >= r + 1")
    return DigitWord([1] * (r + 1), [0] * (n - r - 1) + [1] * r + [0])


def psi_family_univoque(r: int, n: int) -> bool:
    """Univoque exactly when r + 1 <= n <= 2r.

    At n = 2r + 1 the zero runs reach length r + 1 and the shift starting on
    the run falls below the complement, so the boundary sits one below 2(r + 1).
    """
    if n < r + 1:
        raise ValueError("need n >= r + 1")
    return n <= 2 * r


def pisot_of_degree(degree: int) -> list[tuple[IntPolynomial, AlgebraicReal]]:
    """All Pisot numbers of exactly this degree in (1, 2), sorted by value.

    Writing p = (x - beta) q with the roots of q inside the unit disk bounds
    |a_i| < C(d-1, i) + 2 C(d-1, i-1), and |a_d| = 1 because beta is a unit.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    d = degree
    bounds = [math.comb(d - 1, i) + 2 * math.comb(d - 1, i - 1) for i in range(1, d)]
    out = []

    def rec(prefix):
        if len(prefix) == d - 1:
            for last in (-1, 1):
                p = IntPolynomial.from_descending([1] + prefix + [last])
                if p(1) * p(2) >= 0:
                    continue
                res = is_pisot(p)
                if res and res.root.compare_rational(2) < 0:
                    out.append((p, res.root))
            return
        b = bounds[len(prefix)]
        for a in range(-b + 1, b):
            rec(prefix + [a])

    rec([])
    out.sort(key=lambda t: t[1].refine(Fraction(1, 10**30))[0])
    return out


# ---------------------------------------------------------------------------
# Salem numbers


def salem_coefficient_bounds(degree: int) -> list[int]:
    """b_0..b_degree of (x + 2)(x + 1/2)(x + 1)^(degree - 2) (all integers)."""
    q = [Fraction(1), Fraction(5, 2), Fraction(1)]
    for _ in range(degree - 2):
        q = [a + b for a, b in zip([Fraction(0)] + q, q + [Fraction(0)])]
    return [int(x) for x in q]


def salem_enumerate(degree: int, classify: bool = True) -> list[tuple]:
    """Reciprocal monic polynomials with |a_i| <= b_i that are Salem with root in (1, 2).

    Returns (polynomial, root, BetaClass or None) sorted by root.
    """
    if degree < 4 or degree % 2:
        raise ValueError("degree must be even and at least 4")
    b = salem_coefficient_bounds(degree)
    m = degree // 2
    out = []
    ranges = [range(-b[i], b[i] + 1) for i in range(1, m + 1)]

    def rec(i, acc):
        if i == m:
            p = IntPolynomial.from_descending([1] + acc + acc[:-1][::-1] + [1])
            # cheap necessary conditions before the exact tests
            if p(1) >= 0 or p(2) <= 0:
                return
            if is_salem(p):
                out.append(p)
            return
        for a in ranges[i]:
            rec(i + 1, acc + [a])

    rec(0, [])
    res = []
    for p in out:
        r = salem_root(p)
        if r.compare_rational(2) < 0:
            res.append((p, r, classify_beta(r) if classify else None))
    res.sort(key=lambda t: t[1].refine(Fraction(1, 10**30))[0])
    return res
