"""Command line interface: ``univoque <command> ...``.

Exit codes: 0 ok, 2 bad input, 3 no unique root, 4 step cap hit,
5 search budget exhausted (partial output is still printed, marked).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebraic_core import AlgebraicReal, IntPolynomial, PolynomialParseError, isolate_roots
from .beta_expansion import (
    DEFAULT_STEP_CAP,
    StepLimitExceeded,
    classify_beta,
    greedy_expand,
    lazy_expand,
    star_expand,
)
from .family_lab import (
    FamilyIndex,
    NoAlignment,
    Pattern,
    classify_pattern,
    conjecture_pattern,
    komornik_loreti_approximants,
    phi_bridge,
    verify_family,
)
from .pisot_enumeration import (
    CALIBRATED_PRUNE_EXTRA,
    BudgetExceeded,
    RegularFamily,
    boyd_search,
    limit_functions,
    pisot_of_degree,
    psi_polynomials,
    regular_polynomial,
    salem_enumerate,
)
from .word_engine import DigitWord

log = logging.getLogger("univoque")

EXIT_PARSE, EXIT_ROOTS, EXIT_STEPS, EXIT_BUDGET = 2, 3, 4, 5

CSV_COLUMNS = ["poly", "degree", "root", "greedy", "lazy", "class", "provenance"]


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# records and cache


@dataclass
class ResultRecord:
    poly: str
    degree: int
    root: str
    greedy: str = ""
    lazy: str = ""
    cls: str = ""
    provenance: str = ""

    @staticmethod
    def _split(word: str) -> dict:
        if not word:
            return {"pre": "", "per": ""}
        w = DigitWord.parse(word)
        return {"pre": "".join(map(str, w.pre)), "per": "".join(map(str, w.per))}

    @staticmethod
    def _join(d: dict) -> str:
        if not d or (not d.get("pre") and not d.get("per")):
            return ""
        return str(DigitWord([int(c) for c in d.get("pre", "")], [int(c) for c in d.get("per", "")]))

    def to_json(self) -> dict:
        return {
            "poly": self.poly,
            "degree": self.degree,
            "root": self.root,
            "greedy": self._split(self.greedy),
            "lazy": self._split(self.lazy),
            "class": self.cls,
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ResultRecord":
        return cls(
            str(d["poly"]),
            int(d["degree"]),
            str(d["root"]),
            cls._join(d.get("greedy") or {}),
            cls._join(d.get("lazy") or {}),
            str(d.get("class", "")),
            str(d.get("provenance", "")),
        )

    def row(self) -> list:
        return [self.poly, self.degree, self.root, self.greedy, self.lazy, self.cls, self.provenance]


def record_for(poly: IntPolynomial, root: AlgebraicReal, provenance: str, *, classify: bool = True,
               step_cap: int = DEFAULT_STEP_CAP) -> ResultRecord:
    rec = ResultRecord(str(poly), poly.degree, root.significant(12), provenance=provenance)
    if classify:
        c = classify_beta(root, step_cap)
        rec.greedy, rec.lazy, rec.cls = str(c.greedy), str(c.lazy), c.label
    return rec


def default_cache_path() -> Path:
    env = os.environ.get("UNIVOQUE_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "univoque" / "results.jsonl"


class ResultCache:
    """Line-delimited JSON: {"key": ..., "record": {...}} per line."""

    def __init__(self, path: Optional[Path]):
        self.path = path
        self._data: Optional[dict] = None

    def _load(self) -> dict:
        if self._data is not None:
            return self._data
        self._data = {}
        if self.path is None or not self.path.exists():
            return self._data
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    obj = json.loads(line)
                    self._data[obj["key"]] = ResultRecord.from_json(obj["record"])
                except (ValueError, KeyError, TypeError) as e:
                    log.warning("cache %s line %d skipped: %s", self.path, lineno, e)
        return self._data

    def get(self, key: str) -> Optional[ResultRecord]:
        if self.path is None:
            return None
        return self._load().get(key)

    def put(self, key: str, rec: ResultRecord) -> None:
        if self.path is None:
            return
        self._load()[key] = rec
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps({"key": key, "record": rec.to_json()}, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# output


def emit(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
        return
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([_flat(r.get(c, "")) for c in columns])
        return
    table = [[str(_flat(r.get(c, ""))) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(t[i]) for t in table]) for i, c in enumerate(columns)]
    for t in table:
        out.write("  ".join(v.ljust(widths[i]) for i, v in enumerate(t)).rstrip() + "\n")


def _flat(v):
    if isinstance(v, dict) and set(v) == {"pre", "per"}:
        return ResultRecord._join(v)
    return v


def emit_records(recs: list[ResultRecord], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps([r.to_json() for r in recs], indent=1) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in recs:
            w.writerow(r.row())
    else:
        emit([dict(zip(CSV_COLUMNS, r.row())) for r in recs], CSV_COLUMNS[:-1], "text", out)


# ---------------------------------------------------------------------------
# helpers


def parse_poly(text: str) -> IntPolynomial:
    try:
        p = IntPolynomial.parse(text)
    except PolynomialParseError as e:
        raise CliError(EXIT_PARSE, str(e))
    if p.degree < 1:
        raise CliError(EXIT_PARSE, "polynomial %r has no roots" % text)
    return p


def pick_root(p: IntPolynomial, index: Optional[int]) -> AlgebraicReal:
    roots = isolate_roots(p, (1, 2))
    if index is not None:
        if not 0 <= index < len(roots):
            raise CliError(EXIT_ROOTS, "root index %d out of range: %d root(s) in (1, 2)" % (index, len(roots)))
        return roots[index]
    if len(roots) != 1:
        raise CliError(EXIT_ROOTS, "%s has %d roots in (1, 2); use --root-index" % (p, len(roots)))
    return roots[0]


def parse_prune_extra(text: Optional[str]):
    if text is None:
        return dict(CALIBRATED_PRUNE_EXTRA)
    text = text.strip()
    if text.lstrip("-").isdigit():
        return int(text)
    out = {}
    for part in text.split(","):
        name, _, val = part.partition("=")
        try:
            out[name.strip()] = int(val)
        except ValueError:
            raise CliError(EXIT_PARSE, "bad --prune-extra entry %r (expected name=int)" % part)
    return out


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(EXIT_PARSE, "not a number: %r" % text)


# ---------------------------------------------------------------------------
# commands


def cmd_expand(args, cache: ResultCache, out) -> int:
    p = parse_poly(args.poly)
    key = "%s|%s|%s" % (p, args.mode, args.root_index)
    hit = cache.get(key)
    if hit is not None:
        print("cache hit: %s" % key, file=sys.stderr)
        out.write((hit.greedy if args.mode != "lazy" else hit.lazy) + "\n")
        return 0
    beta = pick_root(p, args.root_index)
    fn = {"greedy": greedy_expand, "lazy": lazy_expand, "star": star_expand}[args.mode]
    word = str(fn(beta, args.step_cap).word)
    rec = ResultRecord(str(p), p.degree, beta.significant(12), provenance="expand " + args.mode)
    if args.mode == "lazy":
        rec.lazy = word
    else:
        rec.greedy = word
    cache.put(key, rec)
    out.write(word + "\n")
    return 0


def cmd_classify(args, cache: ResultCache, out) -> int:
    p = parse_poly(args.poly)
    key = "%s|classify|%s" % (p, args.root_index)
    rec = cache.get(key)
    if rec is not None:
        print("cache hit: %s" % key, file=sys.stderr)
    else:
        beta = pick_root(p, args.root_index)
        rec = record_for(p, beta, "classify", step_cap=args.step_cap)
        cache.put(key, rec)
    if args.format == "text":
        out.write(rec.cls + "\n")
    else:
        emit_records([rec], args.format, out)
    return 0


def _parse_skip(items) -> list[tuple[Fraction, Fraction]]:
    gaps = []
    for s in items or []:
        a, sep, b = s.partition(":")
        if not sep:
            raise CliError(EXIT_PARSE, "--skip expects LO:HI, got %r" % s)
        gaps.append((_frac(a), _frac(b)))
    return sorted(gaps)


def _search_ranges(lo: Fraction, hi: Fraction, gaps) -> list[tuple[Fraction, Fraction]]:
    ranges, cur = [], lo
    for a, b in gaps:
        if b <= cur or a >= hi:
            continue
        if a > cur:
            ranges.append((cur, a))
        cur = max(cur, b)
    if cur < hi:
        ranges.append((cur, hi))
    return ranges


def cmd_search(args, cache: ResultCache, out) -> int:
    lo, hi = _frac(args.lo), _frac(args.hi)
    if not 1 < lo < hi < 2:
        raise CliError(EXIT_PARSE, "need 1 < lo < hi < 2")
    prune = [] if args.no_prune else None
    extra = parse_prune_extra(args.prune_extra)
    below = None
    if args.below:
        below = pick_root(parse_poly(args.below), None)
    records, partial = [], False
    budget = args.node_budget
    for a, b in _search_ranges(lo, hi, _parse_skip(args.skip)):
        try:
            res = boyd_search((a, b), prune, args.max_degree, prune_extra=extra, node_budget=budget)
        except BudgetExceeded as e:
            res, partial = e.partial, True
        records.extend(res.records)
        if budget is not None:
            budget = max(budget - res.nodes, 0)
        if partial:
            break
    if below is not None:
        records = [r for r in records if r.root.compare(below) < 0]
    recs = []
    classify = args.univoque_only or not args.count_only
    for r in records:
        rec = record_for(r.poly, r.root, "search", classify=classify, step_cap=args.step_cap)
        if args.univoque_only and rec.cls != "univoque":
            continue
        recs.append(rec)
    if args.count_only:
        out.write("%d\n" % len(recs))
    else:
        emit_records(recs, args.format, out)
    if partial:
        out.write("# PARTIAL: node budget exhausted, results incomplete\n")
        return EXIT_BUDGET
    return 0


def cmd_salem(args, cache: ResultCache, out) -> int:
    recs = []
    for p, root, c in salem_enumerate(args.degree):
        rec = ResultRecord(str(p), p.degree, root.significant(12), str(c.greedy), str(c.lazy), c.label, "salem")
        recs.append(rec)
    emit_records(recs, args.format, out)
    return 0


# tables ----------------------------------------------------------------------

TABLE1 = [
    # polynomial text, name, greedy pattern in r, lazy pattern in r
    ("x^{r+1}-2x^r+x-1", "phi_r", "1^k0^{k-1}1", "1^{k-1}0(1)^inf", range(1, 5)),
    # at r = 1 (the golden ratio) the lazy word is 0(1)^inf, so the psi_r row starts at r = 2
    ("x^{r+1}-x^r-...-1", "psi_r", "1^{k+1}", "(1^k0)^inf", range(2, 4)),
    ("x^4-x^3-2x^2+1", "chi", "11(10)^inf", "11(10)^inf", range(0, 1)),
]


def _phi_poly(r: int) -> IntPolynomial:
    return IntPolynomial.monomial(r + 1) - IntPolynomial.monomial(r, 2) + IntPolynomial([-1, 1])


def table1_rows(step_cap: int = DEFAULT_STEP_CAP) -> list[dict]:
    rows = []
    for poly, name, g, l, rs in TABLE1:
        gp, lp = Pattern.parse(g), Pattern.parse(l)
        labels, ok = set(), True
        for r in rs:
            if name == "phi_r":
                p = _phi_poly(r)
            elif name == "psi_r":
                p = psi_polynomials(r)[0]
            else:
                p = IntPolynomial.parse(poly)
            c = classify_beta(AlgebraicReal.root_in(p, 1, 2), step_cap)
            ok &= c.greedy == gp.instantiate(r) and c.lazy == lp.instantiate(r)
            labels.add(c.label)
        rows.append({
            "poly": poly, "number": name, "greedy": str(gp).replace("k", "r"), "lazy": str(lp).replace("k", "r"),
            "comment": "/".join(sorted(labels)),
            "checked": ("r=%d..%d " % (rs.start, rs.stop - 1) if name != "chi" else "") + ("ok" if ok else "MISMATCH"),
        })
    return rows


def table2_rows(step_cap: int = DEFAULT_STEP_CAP) -> list[dict]:
    rows = []
    for d in (2, 3, 4):
        for p, root in pisot_of_degree(d):
            c = classify_beta(root, step_cap)
            rows.append({"poly": str(p), "root": root.decimal(9), "greedy": str(c.greedy), "lazy": str(c.lazy),
                         "comment": "" if c.tag == "neither" else c.label})
    return rows


def table3_rows() -> list[dict]:
    rows = []
    for d in (4, 6):
        for p, root, c in salem_enumerate(d):
            rows.append({"poly": str(p), "root": root.decimal(9), "greedy": str(c.greedy), "lazy": str(c.lazy),
                         "comment": "univoque" if c.tag == "univoque" else ""})
    return rows


def _family(limit: str, branch: str) -> tuple[RegularFamily, int, tuple]:
    fam = RegularFamily.parse(limit, branch)
    if fam.limit == "chi":
        return fam, 2, (1, 2)
    L = fam.r + 1
    return fam, L, tuple(range(1, L + 1))


def regular_rows(fam: RegularFamily, n_max: int, step_cap: int) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        res = regular_polynomial(fam, n)
        if res.root is None:
            rows.append({"branch": fam.name, "n": str(n), "greedy": "root bigger than 2", "lazy": "", "comment": ""})
            continue
        c = classify_beta(res.root, step_cap)
        rows.append({"branch": fam.name, "n": str(n), "greedy": str(c.greedy), "lazy": str(c.lazy),
                     "comment": "" if c.tag == "neither" else c.label})
    return rows


@dataclass
class FamilyReport:
    case: str
    greedy: str
    lazy: str
    verified: str
    cofactor: str
    status: str


def family_report(fam: RegularFamily, L: int, offset: int, k0: int, step_cap: int, classify: bool = True) -> FamilyReport:
    """Conjecture greedy and lazy patterns for n = L*k + offset from k0, k0 + 1, then verify them."""
    idx = FamilyIndex(fam, L, offset)
    words = {}
    for k in (k0, k0 + 1):
        res = regular_polynomial(fam, idx.n(k))
        if res.root is None:
            raise ArithmeticError("no root in (1, 2) at n = %d" % idx.n(k))
        words[k] = (greedy_expand(res.root, step_cap).word, lazy_expand(res.root, step_cap).word)
    pats = []
    for i in (0, 1):
        try:
            pats.append(conjecture_pattern(words[k0][i], words[k0 + 1][i], L, k0))
        except NoAlignment as e:
            pats.append(None)
            log.info("no alignment for %s n=%dk+%d: %s", fam.name, L, offset, e)
    case = "n=%dk+%d" % (L, offset)
    g, lz = pats
    verified, cof, status = [], "", ""
    for name, p in (("greedy", g), ("lazy", lz)):
        if p is None:
            verified.append(name + ":none")
            continue
        fi = verify_family(p, idx)
        verified.append(name + (":ok" if fi.verified else ":refuted"))
        if name == "greedy" and fi.verified:
            cof = str(fi.cofactor)
    if classify and g is not None:
        pc = classify_pattern(g, idx)
        status = "%s (k>=%d)" % (pc.label, pc.K)
        status = status.strip()
    return FamilyReport(case, str(g) if g else "-", str(lz) if lz else "-", " ".join(verified), cof, status)


def family_k0(fam: RegularFamily, L: int) -> int:
    # start the samples past the explicit rows of the tables
    return 3 if fam.limit == "psi" else 4


def cmd_table(args, cache: ResultCache, out) -> int:
    which = args.which
    if which == 1:
        emit(table1_rows(args.step_cap), ["poly", "number", "greedy", "lazy", "comment", "checked"], args.format, out)
    elif which == 2:
        emit(table2_rows(args.step_cap), ["poly", "root", "greedy", "lazy", "comment"], args.format, out)
    elif which == 3:
        emit(table3_rows(), ["poly", "root", "greedy", "lazy", "comment"], args.format, out)
    else:
        limit = "psi2" if which == 4 else "chi"
        rows = []
        for branch in ("+A", "-A", "+B", "-B"):
            fam, L, offsets = _family(limit, branch)
            rows.extend(regular_rows(fam, args.n_max, args.step_cap))
            if not args.no_patterns:
                for off in offsets:
                    rep = family_report(fam, L, off, family_k0(fam, L), args.step_cap)
                    rows.append({"branch": fam.name, "n": rep.case, "greedy": rep.greedy, "lazy": rep.lazy,
                                 "comment": "%s; %s" % (rep.verified, rep.status) if rep.status else rep.verified})
        emit(rows, ["branch", "n", "greedy", "lazy", "comment"], args.format, out)
    return 0


def cmd_family(args, cache: ResultCache, out) -> int:
    try:
        fam, L, offsets = _family(args.limit, args.branch)
    except ValueError as e:
        raise CliError(EXIT_PARSE, str(e))
    if args.n is not None:
        res = regular_polynomial(fam, args.n)
        if res.root is None:
            out.write("%s n=%d: root bigger than 2\n" % (fam.name, args.n))
            return 0
        rec = record_for(res.factor, res.root, "family %s n=%d" % (fam.name, args.n), step_cap=args.step_cap)
        if args.format == "text":
            out.write("%s n=%d  %s  %s\ngreedy %s\nlazy   %s\n%s\n" % (fam.name, args.n, rec.poly, rec.root,
                                                                      rec.greedy, rec.lazy, rec.cls))
        else:
            emit_records([rec], args.format, out)
        return 0
    if args.residue is not None:
        offsets = (args.residue,)
    rows = []
    for off in offsets:
        rep = family_report(fam, L, off, args.k0 or family_k0(fam, L), args.step_cap, classify=args.classify)
        row = {"case": rep.case, "greedy": rep.greedy, "lazy": rep.lazy, "verified": rep.verified,
               "cofactor": rep.cofactor}
        if args.classify:
            row["class"] = rep.status
        rows.append(row)
    cols = ["case", "greedy", "lazy", "verified", "cofactor"] + (["class"] if args.classify else [])
    emit(rows, cols, args.format, out)
    return 0


def cmd_phi(args, cache: ResultCache, out) -> int:
    theta = AlgebraicReal.root_in(psi_polynomials(args.r)[0], 1, 2)
    rows = []
    for i in range(args.iterations + 1):
        star = star_expand(theta, args.step_cap).word
        rows.append({"step": i, "poly": str(theta.minimal().defining), "root": theta.decimal(9), "quasi_greedy": str(star)})
        if i < args.iterations:
            theta = phi_bridge(theta, args.step_cap)
    emit(rows, ["step", "poly", "root", "quasi_greedy"], args.format, out)
    return 0


def cmd_kappa(args, cache: ResultCache, out) -> int:
    taus, deltas = komornik_loreti_approximants(args.kmax)
    rows = []
    for k, (t, d) in enumerate(zip(taus, deltas), 1):
        tl, _ = t.refine(Fraction(1, 10**12))
        _, dh = d.refine(Fraction(1, 10**12))
        rows.append({"k": k, "tau": t.decimal(9), "delta": d.decimal(9), "width": "%.3e" % float(dh - tl)})
    emit(rows, ["k", "tau", "delta", "width"], args.format, out)
    return 0


def cmd_thresholds(args, cache: ResultCache, out) -> int:
    rows = [{"name": f.name, "N": f.threshold_N, "first_N": f.first_N, "gap": str(f.gap),
             "gap_float": "%.6f" % float(f.gap)} for f in limit_functions()]
    emit(rows, ["name", "N", "first_N", "gap", "gap_float"], args.format, out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--no-cache", action="store_true", help="bypass the result cache")
    common.add_argument("--step-cap", type=int, default=DEFAULT_STEP_CAP,
                        help="maximum expansion steps before giving up (exit 4)")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="univoque", description="Univoque Pisot and Salem numbers toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="greedy, lazy or quasi-greedy expansion of 1")
    p.add_argument("--poly", required=True)
    p.add_argument("--mode", choices=("greedy", "lazy", "star"), default="greedy")
    p.add_argument("--root-index", type=int)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("classify", parents=[common], help="univoque / periodic self-bracketed / neither")
    p.add_argument("--poly", required=True)
    p.add_argument("--root-index", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", parents=[common], help="Pisot numbers in [lo, hi] by tree search")
    p.add_argument("lo")
    p.add_argument("hi")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--univoque-only", action="store_true")
    p.add_argument("--below", metavar="POLY", help="keep only roots below the root of POLY in (1, 2)")
    p.add_argument("--no-prune", action="store_true", help="do not cut branches at the limit series")
    p.add_argument("--prune-extra", metavar="SPEC",
                   help="extra prefix length before cutting: an int, or f1=5,f3=5 (default: calibrated)")
    p.add_argument("--skip", action="append", metavar="LO:HI",
                   help="leave out a subinterval (e.g. around a limit point); repeatable")
    p.add_argument("--node-budget", type=int)
    p.add_argument("--max-degree", type=int, default=None, help="drop candidates above this degree (default: no limit)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("salem", parents=[common], help="Salem numbers of a given degree in (1, 2)")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_salem)

    p = sub.add_parser("table", parents=[common], help="regenerate one of the result tables")
    p.add_argument("which", type=int, choices=(1, 2, 3, 4, 5))
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--no-patterns", action="store_true", help="tables 4-5: skip the conjectured closed forms")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("family", parents=[common], help="regular family: conjecture, verify, classify")
    p.add_argument("limit", help="psi2, psi3, ..., or chi")
    # a bare -A/-B would be read as an option; main() rewrites it to --branch=-A
    p.add_argument("--branch", required=True, choices=BRANCHES, metavar="{+A,-A,+B,-B}",
                   help="may also be given positionally after LIMIT")
    p.add_argument("--conjecture", action="store_true", help="conjecture and verify closed forms (default)")
    p.add_argument("--classify", action="store_true", help="also classify the greedy closed form for all large k")
    p.add_argument("--n", type=int, help="report a single family member instead")
    p.add_argument("--residue", type=int, help="only the class n = L*k + RESIDUE")
    p.add_argument("--k0", type=int, help="first sample index")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("phi", parents=[common], help="iterate the Phi map from psi_r")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--iterations", type=int, default=2)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("kappa", parents=[common], help="Thue-Morse approximants around the Komornik-Loreti constant")
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("thresholds", parents=[common], help="recompute the limit-series thresholds")
    p.set_defaults(func=cmd_thresholds)
    return ap


BRANCHES = ("+A", "-A", "+B", "-B")


def _branch_args(argv: list[str]) -> list[str]:
    if "family" not in argv:
        return argv
    i = argv.index("family")
    return argv[:i] + [("--branch=" + a if a in BRANCHES else a) for a in argv[i:]]


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(_branch_args(list(sys.argv[1:] if argv is None else argv)))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    cache = ResultCache(None if args.no_cache else default_cache_path())
    try:
        return args.func(args, cache, out)
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return e.code
    except StepLimitExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_STEPS


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
