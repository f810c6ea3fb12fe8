import csv
import io
import json
from fractions import Fraction

import pytest

from partbias import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_single_n(capsys):
    code, out, _ = run(capsys, "count", "--r", "1", "--s", "2", "--n", "4")
    assert code == 0
    record = json.loads(out)
    assert record["command"] == "count"
    (row,) = record["results"]
    assert row["total"] == 3 and row["greater"] == 2
    assert row["ratio"] == "2/3"


def test_count_undefined_ratio_is_null(capsys):
    code, out, _ = run(capsys, "count", "--r", "2", "--s", "3", "--n", "1")
    assert code == 0
    (row,) = json.loads(out)["results"]
    assert row["total"] == 0
    assert row["ratio"] is None


def test_count_invalid_exit_2(capsys):
    code, _, err = run(capsys, "count", "--r", "1", "--s", "1", "--n", "4")
    assert code == 2
    assert "DisjointnessViolation" in err


def test_count_range_csv(capsys):
    code, out, _ = run(capsys, "count", "--r", "1", "--s", "2",
                       "--n-max", "6", "--step", "2", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["n"] for r in rows] == ["0", "2", "4", "6"]
    assert rows[0]["ratio"] == "0/1"


def test_asymptote_corollaries(capsys):
    code, out, _ = run(capsys, "asymptote", "--r", "1,2", "--s", "3")
    assert code == 0
    (row,) = json.loads(out)["results"]
    assert row["ratio_limit"] == "9/10"

    code, out, _ = run(capsys, "asymptote", "--r", "1", "--s", "2,3,4")
    assert json.loads(out)["results"][0]["ratio_limit"] == "2/5"


def test_asymptote_gcd_violation(capsys):
    code, _, err = run(capsys, "asymptote", "--r", "2", "--s", "4")
    assert code == 2
    assert "GcdHypothesisViolated" in err


def test_volume(capsys):
    code, out, _ = run(capsys, "volume", "--a", "2,3", "--b", "6,10")
    assert code == 0
    (row,) = json.loads(out)["results"]
    expected = (Fraction(1, 24 * 4 * 6 * 8 * 9)
                - Fraction(1, 24 * 4 * 10 * 12 * 13))
    assert cli.parse_frac(row["v_ab"]) == expected
    assert (cli.parse_frac(row["v_ab"]) + cli.parse_frac(row["v_ba"])
            == cli.parse_frac(row["simplex_total"]))


def test_progression_modes(capsys):
    code, out, _ = run(capsys, "progression", "--r", "1", "--s", "2",
                       "--m", "2", "--N", "1", "--mode", "exact")
    assert code == 0
    assert json.loads(out)["results"][0]["value"] == "2/3"

    code, out, _ = run(capsys, "progression", "--r", "1", "--s", "2",
                       "--m", "2", "--N", "1", "--mode", "beta")
    assert json.loads(out)["results"][0]["value"] == "2/3"

    code, out, _ = run(capsys, "progression", "--r", "1", "--s", "2",
                       "--m", "2", "--N", "1", "--mode", "gamma")
    assert abs(float(json.loads(out)["results"][0]["value"]) - 2 / 3) < 1e-9

    code, out, _ = run(capsys, "progression", "--r", "1", "--s", "2",
                       "--m", "2", "--N", "3", "--mode", "quadrature")
    assert code == 0


def test_conjecture_row_count(capsys):
    code, out, _ = run(capsys, "conjecture", "--r", "1", "--s", "2",
                       "--m", "2", "--n-grid", "100,200,400",
                       "--N-grid", "2,4,6", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    cells = [r for r in rows if r["n"] != ""]
    limits = [r for r in rows if r["n"] == ""]
    assert len(cells) == 9
    assert len(limits) == 3
    for r in limits:
        assert "/" in r["ratio"]


def test_csv_and_json_content_identical(capsys):
    argv = ["conjecture", "--r", "1", "--s", "2", "--m", "2",
            "--n-grid", "50,100", "--N-grid", "1,2"]
    code, json_out, _ = run(capsys, *argv)
    assert code == 0
    code, csv_out, _ = run(capsys, *argv, "--format", "csv")
    assert code == 0
    json_rows = json.loads(json_out)["results"]
    csv_rows = list(csv.DictReader(io.StringIO(csv_out)))
    assert len(json_rows) == len(csv_rows)
    for jr, cr in zip(json_rows, csv_rows):
        for key in cli.CSV_HEADER:
            want = "" if jr[key] is None else str(jr[key])
            assert cr[key] == want


def test_round_trip_serialization(capsys):
    _, out, _ = run(capsys, "count", "--r", "1", "--s", "2", "--n", "2000")
    (row,) = json.loads(out)["results"]
    assert cli.parse_frac(row["ratio"]) == Fraction(667, 1001)


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("r=1,2\ns=3\n")
    code, out, _ = run(capsys, "asymptote", "--config", str(cfg))
    assert code == 0
    assert json.loads(out)["results"][0]["ratio_limit"] == "9/10"


def test_missing_options_exit_2(capsys):
    code, _, err = run(capsys, "asymptote", "--r", "1")
    assert code == 2
    assert "ValidationError" in err


def test_deterministic_output(capsys):
    argv = ["conjecture", "--r", "1", "--s", "2", "--m", "2",
            "--n-grid", "40,20", "--N-grid", "2,1"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2
    ns = [(r["N"], r["n"]) for r in json.loads(out1)["results"]
          if r["n"] is not None]
    assert ns == sorted(ns)
