import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from frobkit.cli import run
from frobkit.homlab.instances import random_socle_problem
from frobkit.homlab.io import dump_problem
from frobkit.homlab.socle import check_socle_hypothesis


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def frac(text):
    return Fraction(text)


def test_hk_example():
    code, out, _ = call("hk", "--ideal", "x^2,x*y,y^2", "--prime", "2", "--emax", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [row["count"] for row in doc["series"]] == [12, 48, 192]
    assert frac(doc["multiplicity"]) == 3
    assert {frac(row["normalized"]) for row in doc["series"]} == {3}
    assert set(doc["estimate"]) == {"value", "window", "cauchy_gap", "lower", "upper"}


def test_dual_fsig_example():
    code, out, _ = call("dual-fsig", "--n", "3", "--class", "1", "--prime", "2", "--emax", "10")
    assert code == 0
    est = json.loads(out)["estimate"]
    lo, hi = frac(est["lower"]), frac(est["upper"])
    assert lo <= Fraction(1, 2) <= hi
    assert hi - lo < Fraction(1, 100)


def test_dual_fsig_interval_shrinks():
    widths = []
    for emax in (6, 8, 10):
        est = json.loads(call("dual-fsig", "--n", "3", "--class", "1", "--prime", "2", "--emax", str(emax))[1])["estimate"]
        widths.append(frac(est["upper"]) - frac(est["lower"]))
    assert widths == sorted(widths, reverse=True)


def test_classify_example():
    code, out, _ = call("classify", "--n", "2", "--prime", "3", "--emax", "10")
    assert code == 0
    doc = json.loads(out)
    assert doc["gorenstein"] == "certified-yes"
    assert doc["regular"] == "certified-no"


def test_csv_schema():
    code, out, _ = call("fsig", "--n", "3", "--prime", "2", "--emax", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["e", "q", "count", "normalized"]
    assert [int(r[0]) for r in rows[1:]] == [1, 2, 3, 4]


def test_json_round_trip_is_exact():
    _, out, _ = call("hk", "--ideal", "x^3,x*y^2,y^4", "--prime", "3", "--emax", "2")
    doc = json.loads(out)
    for row in doc["series"]:
        assert frac(row["normalized"]) == Fraction(row["count"], row["q"] ** 2)


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense"],
        [],
        ["hk", "--ideal", "x^2,w", "--prime", "2", "--emax", "2"],
        ["hk", "--ideal", "x,y", "--prime", "4", "--emax", "2"],
        ["fsig", "--n", "4", "--prime", "2", "--emax", "2"],
        ["hk", "--ideal", "x,y", "--prime", "2", "--emax", "1", "--emin", "3"],
        ["growth-order", "--prime", "2", "--emax", "5"],
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and "usage error" in err


def test_computation_errors():
    code, _, err = call("hk", "--ideal", "x^2,x*y", "--prime", "2", "--emax", "2")
    assert code == 3 and "NotZeroDimensional" in err
    code, _, err = call("relative-hk", "--ideal", "x,y", "--larger", "x^2,y^2")
    assert code == 3 and "NotContained" in err


def test_bq_oracle_deterministic(monkeypatch):
    argv = ["bq-oracle", "--n", "3", "--class", "1", "--prime", "2", "--emax", "3"]
    first = call(*argv, "--seed", "4")[1]
    assert first == call(*argv, "--seed", "4")[1]
    monkeypatch.setenv("FROBKIT_SEED", "4")
    assert call(*argv)[1] == first
    for row in json.loads(first)["series"]:
        assert row["lower"] <= row["count"] <= row["upper"]
    monkeypatch.setenv("FROBKIT_SEED", "four")
    assert call(*argv)[0] == 2


def test_socle_inject_file(tmp_path):
    path = tmp_path / "problem.json"
    seed = 0
    while True:
        S = random_socle_problem(5, seed)
        if S.subspace.shape[0] >= 2 and check_socle_hypothesis(S):
            break
        seed += 1
    dump_problem(S, path)
    code, out, _ = call("socle-inject", "--file", str(path), "--seed", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["hypothesis"] == "exhaustive"
    assert all(any(v) for v in doc["socle_images"])


def test_socle_inject_missing_file(tmp_path):
    code, _, err = call("socle-inject", "--file", str(tmp_path / "absent.json"))
    assert code == 2 and "absent.json" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert call("socle-inject", "--file", str(bad))[0] == 2


def test_growth_order_command():
    code, out, _ = call("growth-order", "--dim", "3", "--sub", "2", "--prime", "2", "--emax", "10")
    doc = json.loads(out)
    assert code == 0 and doc["order"] == "2/1" and frac(doc["ratio"]["value"]) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "frobkit", "hk-exact", "--ideal", "x^4,y^7"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["multiplicity"] == "28/1"
