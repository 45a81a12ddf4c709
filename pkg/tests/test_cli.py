import csv
import io
import json
import shutil
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

from bchkit import cli, lie
from bchkit.algebra import BCH_ALPHABET, NcPoly, commutator
from bchkit.serialize import from_json, poly_from_entries, to_json

TESTDATA = Path(__file__).resolve().parent.parent / "testdata"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_compute_csv_degree_two():
    code, out, _ = run(["compute", "--degree", "2", "--basis", "words", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [
        ["degree", "basis", "term", "numerator", "denominator"],
        ["1", "words", "A", "1", "1"],
        ["1", "words", "B", "1", "1"],
        ["2", "words", "AB", "1", "2"],
        ["2", "words", "BA", "-1", "2"],
    ]


def test_compute_degree_one_text():
    code, out, _ = run(["compute", "--degree", "1"])
    assert (code, out) == (0, "C_1 = A + B\n")


def test_compute_rightnormed_text():
    code, out, _ = run(["compute", "-n", "2", "--basis", "rightnormed", "--method", "direct"])
    assert code == 0
    assert out.splitlines()[1] == "C_2 = 1/4*[A,B] - 1/4*[B,A]"


@pytest.mark.parametrize("basis", ["words", "rightnormed"])
def test_compute_both_matches_golden(basis, tmp_path):
    target = tmp_path / "out.json"
    code, _, _ = run(["compute", "--degree", "8", "--method", "both", "--basis", basis, "--format", "json", "--output", str(target)])
    assert code == 0
    assert target.read_text() == (TESTDATA / f"bch_{basis}_deg8.json").read_text()


@pytest.mark.parametrize("name", ["bch_words_deg8.json", "bch_rightnormed_deg8.json"])
def test_json_roundtrip_byte_identical(name):
    text = (TESTDATA / name).read_text()
    alphabet, method, records = from_json(text)
    assert to_json(alphabet, method, records) == text
    assert [r.degree for r in records] == list(range(1, 9))


def test_golden_low_degrees_by_hand():
    _, _, records = from_json((TESTDATA / "bch_words_deg8.json").read_text())
    a, b = NcPoly.letter(BCH_ALPHABET, "A"), NcPoly.letter(BCH_ALPHABET, "B")
    got = [poly_from_entries(BCH_ALPHABET, r.entries) for r in records[:3]]
    assert got[0] == a + b
    assert got[1] == Fraction(1, 2) * (a * b - b * a)
    want3 = Fraction(1, 12) * commutator(a, commutator(a, b)) + Fraction(1, 12) * commutator(b, commutator(b, a))
    assert got[2] == want3


def test_golden_integers_exact():
    _, _, records = from_json((TESTDATA / "bch_words_deg8.json").read_text())
    dens = {int(d) for r in records for _, _, d in r.entries}
    assert max(dens) > 2**10
    for r in records:
        for _, num, den in r.entries:
            assert str(int(num)) == num and int(den) > 0


def test_method_disagreement_exits_one(monkeypatch):
    real = cli.bch_direct

    def skewed(n):
        comps = real(n)
        comps[1] = comps[1] + NcPoly.monomial(BCH_ALPHABET, "AB")
        return comps

    monkeypatch.setattr(cli, "bch_direct", skewed)
    code, out, err = run(["compute", "--degree", "3", "--method", "both"])
    assert code == 1
    assert out == ""
    assert "disagree at degree 2" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--degree", "0"],
        ["compute", "--method", "magic"],
        ["compute", "--format", "xml"],
        ["bench", "--max-degree", "-1"],
        ["verify", "--trials", "x"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    code, _, _ = run(argv)
    assert code == 2


def test_verify_passes_and_is_deterministic():
    argv = ["verify", "--max-degree", "5", "--trials", "20", "--seed", "42"]
    first = run(argv)
    second = run(argv)
    assert first[0] == 0
    assert first == second
    assert "result: PASS" in first[1]


def test_suite_reproducible():
    from bchkit.verify import run_suite, suite_table

    trial = suite_table(4)["baker_identity"]
    r1 = run_suite("baker_identity", trial, 2, 5, 1)
    r2 = run_suite("baker_identity", trial, 2, 5, 1)
    assert r1 == r2 and r1.ok


def test_verify_with_broken_rmap(monkeypatch):
    real = lie.rmap

    def broken(p):
        # wrong on every degree-2 word
        return real(p) + NcPoly(p.alphabet, {w: c for w, c in p.as_dict().items() if len(w) == 2})

    monkeypatch.setattr(lie, "rmap", broken)
    code, out, _ = run(["verify", "--max-degree", "4", "--trials", "10", "--seed", "42"])
    assert code == 1
    assert "counterexample baker_identity alphabet=2:" in out
    blob = out.split("counterexample baker_identity alphabet=2:\n", 1)[1]
    decoded = json.JSONDecoder().raw_decode(blob)[0]
    assert set(decoded) >= {"trial", "P", "Q"}
    assert all(set(e) == {"term", "num", "den"} for e in decoded["P"])
    assert "result: FAIL" in out


def test_bench_csv():
    code, out, _ = run(["bench", "--max-degree", "8"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 8
    assert [int(r["degree"]) for r in rows] == list(range(1, 9))
    cumulative = [int(r["cumulative_terms"]) for r in rows]
    assert cumulative == sorted(cumulative)
    for r in rows:
        n = int(r["degree"])
        assert int(r["direct_terms"]) <= 2**n
        assert r["direct_terms"] == r["recurrence_terms"]
        assert float(r["direct_seconds"]) >= 0 and float(r["recurrence_seconds"]) >= 0


def test_output_to_unwritable_path(tmp_path):
    code, _, err = run(["compute", "-n", "1", "--output", str(tmp_path / "missing" / "x.txt")])
    assert code == 2 and "bchkit:" in err


@pytest.mark.skipif(shutil.which("bchkit") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["bchkit", "compute", "--degree", "1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "C_1 = A + B\n"
