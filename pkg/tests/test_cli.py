import csv
import io
import json

import pytest

from univoque.algebraic_core import AlgebraicReal, IntPolynomial
from univoque.cli import CSV_COLUMNS, ResultCache, ResultRecord, main, record_for


@pytest.fixture(autouse=True)
def cache_file(tmp_path, monkeypatch):
    path = tmp_path / "cache.jsonl"
    monkeypatch.setenv("UNIVOQUE_CACHE", str(path))
    return path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# --- expand / classify -------------------------------------------------------


@pytest.mark.parametrize("poly,mode,expected", [
    ("x^4-x^3-2*x^2+1", "greedy", "11(10)^inf"),
    ("x^2-x-1", "lazy", "0(1)^inf"),
    ("x^3-x-1", "greedy", "10001"),
    ("x^2-x-1", "star", "(10)^inf"),
])
def test_expand(poly, mode, expected):
    code, out = run("expand", "--poly", poly, "--mode", mode)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("poly,expected", [
    ("x^4-x^3-2*x^2+1", "univoque"),
    ("x^3-2*x^2+x-1", "periodic self-bracketed"),
    ("x^4-x^3-1", "neither"),
])
def test_classify(poly, expected):
    code, out = run("classify", "--poly", poly)
    assert code == 0
    assert out.strip() == expected


def test_exit_parse_error(capsys):
    code, _ = run("expand", "--poly", "x^^2", "--mode", "greedy")
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_exit_no_root():
    assert run("expand", "--poly", "x^2-5", "--mode", "greedy")[0] == 3


def test_exit_several_roots_and_root_index():
    p = IntPolynomial.parse("x^2-x-1") * IntPolynomial.parse("x^3-x-1")
    assert run("expand", "--poly", str(p), "--mode", "greedy")[0] == 3
    code, out = run("expand", "--poly", str(p), "--mode", "greedy", "--root-index", "1")
    assert code == 0 and out.strip() == "11"


def test_exit_step_limit():
    assert run("expand", "--poly", "x^2-2", "--mode", "greedy", "--step-cap", "200", "--no-cache")[0] == 4


# --- cache ------------------------------------------------------------------


def test_cache_cold_then_warm(cache_file, capsys):
    args = ("expand", "--poly", "x^4-x^3-2*x^2+1", "--mode", "greedy")
    code1, out1 = run(*args)
    err1 = capsys.readouterr().err
    code2, out2 = run(*args)
    err2 = capsys.readouterr().err
    assert code1 == code2 == 0
    assert out1 == out2
    assert "cache hit" not in err1
    assert "cache hit" in err2
    assert cache_file.exists()


def test_cache_corrupt_line(cache_file, caplog):
    cache_file.write_text("{not json\n")
    code, out = run("expand", "--poly", "x^2-x-1", "--mode", "lazy")
    assert code == 0 and out.strip() == "0(1)^inf"
    assert "line 1 skipped" in caplog.text


def test_cache_disabled_is_byte_identical(cache_file):
    args = ("classify", "--poly", "x^3-2*x^2+x-1")
    _, cold = run(*args)
    _, warm = run(*args)
    _, off = run(*args, "--no-cache")
    assert cold == warm == off


def test_cache_round_trip(tmp_path):
    cache = ResultCache(tmp_path / "c.jsonl")
    rec = record_for(IntPolynomial.parse("x^3-x^2-x-1"), AlgebraicReal.root_in(IntPolynomial.parse("x^3-x^2-x-1")),
                     "test")
    cache.put("key", rec)
    assert ResultCache(tmp_path / "c.jsonl").get("key") == rec


# --- records and formats ------------------------------------------------------


def _record():
    p = IntPolynomial.parse("x^4-x^3-2*x^2+1")
    return record_for(p, AlgebraicReal.root_in(p), "expand")


def test_record_json_round_trip():
    rec = _record()
    data = json.loads(json.dumps(rec.to_json()))
    assert set(data) >= {"poly", "degree", "root", "greedy", "lazy", "class"}
    assert data["greedy"] == {"pre": "11", "per": "10"}
    assert data["root"] == "1.90516616775"
    assert ResultRecord.from_json(data) == rec


def test_csv_and_json_formats():
    code, out = run("table", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9
    assert rows[0]["poly"] == "x^2-x-1"
    code, out = run("table", "2", "--format", "json")
    rows = json.loads(out)
    assert "1.839286755" in [r["root"] for r in rows]


def test_search_csv_columns():
    code, out = run("search", "1.3", "1.5", "--format", "csv", "--no-cache")
    assert code == 0
    reader = csv.reader(io.StringIO(out))
    assert next(reader) == CSV_COLUMNS
    assert len(list(reader)) == 4


def test_search_count_only_and_budget():
    code, out = run("search", "1.3", "1.6", "--count-only")
    assert code == 0 and out.strip() == "12"
    code, out = run("search", "1.3", "1.6", "--node-budget", "3")
    assert code == 5
    assert "PARTIAL" in out


def test_search_rejects_bad_interval():
    assert run("search", "0.5", "1.6")[0] != 0


def test_output_is_deterministic():
    assert run("table", "3")[1] == run("table", "3")[1]


# --- other commands -------------------------------------------------------------


def test_table_1():
    code, out = run("table", "1")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert "MISMATCH" not in out
    assert any("11(10)^inf" in l and "univoque" in l for l in lines)


def test_table_3_counts():
    code, out = run("table", "3", "--format", "json")
    rows = json.loads(out)
    assert len(rows) == 13
    assert sum(r["comment"] == "univoque" for r in rows) == 6


def test_family_conjecture():
    code, out = run("family", "psi2", "+B", "--conjecture", "--residue", "2")
    assert code == 0
    assert "1(101)^k1" in out and "-1" in out


def test_family_single_member_with_minus_branch():
    code, out = run("family", "psi3", "-A", "--n", "5")
    assert code == 0
    assert out.strip().splitlines()[-1] == "univoque"


def test_phi():
    code, out = run("phi", "--r", "2", "--iterations", "2")
    assert code == 0
    assert "1.870556617" in out


def test_kappa():
    code, out = run("kappa", "--kmax", "4")
    assert code == 0
    assert "1.787206963" in out


def test_thresholds():
    code, out = run("thresholds")
    assert code == 0
    for n in ("24", "11", "33", "44"):
        assert n in out
