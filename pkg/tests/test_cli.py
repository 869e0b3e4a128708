"""End-to-end command line behavior through click's test runner."""

import json

import pytest
from click.testing import CliRunner

from freeperiod.cli import main

FIG8 = "t^2 - 3*t + 1"
TREFOIL = "t^2 - t + 1"
K14 = "4*t^6 - 17*t^5 + 38*t^4 - 51*t^3 + 38*t^2 - 17*t + 4"


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def table(tmp_path):
    path = tmp_path / "knots.csv"
    path.write_text(
        "name,alexander\n"
        "trefoil,\"1,-1,1\"\n"
        "figure8,\"1,-3,1\"\n"
        "bad,\"1,2\"\n"
        "unsym,\"3,-1,-1\"\n",
        encoding="utf-8")
    return str(path)


# -- single-polynomial commands --------------------------------------------


def test_hartley_set_plain(runner):
    res = runner.invoke(main, ["hartley-set", "--poly", FIG8])
    assert res.exit_code == 0
    assert res.output == "{2}\n"


def test_hartley_set_json_rule(runner):
    res = runner.invoke(main, ["hartley-set", "--poly", TREFOIL, "--json"])
    payload = json.loads(res.output)
    assert payload["mode"] == "heuristic" and payload["rigorous"] is False
    (row,) = payload["results"]
    assert row["hartley"]["finite"] is False
    assert row["hartley"]["rule"] == "gcd(n, 6) = 1"
    assert 5 in row["hartley"]["members"]
    assert 2 not in row["hartley"]["members"]


def test_evalue_human_lines(runner):
    res = runner.invoke(main, ["evalue", "--poly", TREFOIL])
    assert res.output == "E = 0, rule gcd(n, 6) = 1\n"
    res = runner.invoke(main, ["evalue", "--poly", FIG8])
    assert res.output == "E = 2, set {2}\n"


def test_factor_human_and_json(runner):
    res = runner.invoke(main, ["factor", "--poly", K14])
    assert res.exit_code == 0
    assert res.output == ("1 * (t^3 - 3*t^2 + 5*t - 4)"
                          " * (4*t^3 - 5*t^2 + 3*t - 1)\n")
    res = runner.invoke(main, ["factor", "--poly", K14, "--json"])
    (row,) = json.loads(res.output)["results"]
    assert row["sign"] == 1 and row["content"] == 1
    assert row["factors"][0] == {"coeffs": [-4, 5, -3, 1], "mult": 1,
                                 "str": "t^3 - 3*t^2 + 5*t - 4"}


def test_coefficient_list_polynomials_parse(runner):
    res = runner.invoke(main, ["evalue", "--poly", "1,-3,1"])
    assert res.exit_code == 0 and res.output.startswith("E = 2")


def test_witness_success_and_refusal(runner):
    res = runner.invoke(main, ["witness", "--poly", FIG8, "--n", "2"])
    assert res.exit_code == 0
    assert res.output == "n = 2: witness t^2 - t - 1, sign +1, verified True\n"
    res = runner.invoke(main, ["witness", "--poly", FIG8, "--n", "3"])
    assert res.exit_code == 1
    assert "error:" in res.stderr and "not 3-Hartley" in res.stderr


def test_hartley_check_paths(runner):
    res = runner.invoke(main, ["hartley-check", "--poly", FIG8, "--n", "4"])
    assert res.output == "n = 4: no\n"
    res = runner.invoke(main, ["hartley-check", "--poly", FIG8, "--n", "2",
                               "--knot", "--json"])
    (row,) = json.loads(res.output)["results"]
    assert row["verdict"] is True and row["witness"] == [-1, -1, 1]
    assert row["sign"] == 1 and row["witness_palindromic"] is False
    res = runner.invoke(main, ["hartley-check", "--poly", "t^2 - 2",
                               "--n", "2", "--knot"])
    assert res.exit_code == 1 and "palindromic" in res.stderr


def test_murasugi_single_and_all(runner):
    res = runner.invoke(main, ["murasugi", "--poly", FIG8, "--q", "2"])
    assert res.output == ("q=2 lam=3 shift=0 sign=+1 divides=True"
                          " quotient 1\n")
    res = runner.invoke(main, ["murasugi", "--poly", FIG8, "--all", "--json"])
    (row,) = json.loads(res.output)["results"]
    assert [h["q"] for h in row["hits"]] == [2]
    res = runner.invoke(main, ["murasugi", "--poly", TREFOIL, "--q", "7"])
    assert res.output == "no hits (screen obstructs the period)\n"


def test_murasugi_domain_errors(runner):
    res = runner.invoke(main, ["murasugi", "--poly", TREFOIL, "--q", "6"])
    assert res.exit_code == 1 and "not a prime power" in res.stderr
    res = runner.invoke(main, ["murasugi", "--poly", "t^2 + 1", "--q", "2"])
    assert res.exit_code == 1 and "evaluate to +-1" in res.stderr


# -- usage errors ----------------------------------------------------------


def test_usage_errors_exit_2(runner, table):
    assert runner.invoke(main, ["murasugi", "--poly", FIG8]).exit_code == 2
    assert runner.invoke(
        main, ["murasugi", "--poly", FIG8, "--q", "2", "--all"]).exit_code == 2
    assert runner.invoke(main, ["factor"]).exit_code == 2
    assert runner.invoke(
        main, ["factor", "--poly", FIG8, "--poly-file", table]).exit_code == 2
    assert runner.invoke(main, ["survey", "--max-genus", "11"]).exit_code == 2
    assert runner.invoke(main, ["survey", "--max-genus", "0"]).exit_code == 2


def test_bad_polynomial_is_a_domain_error(runner):
    res = runner.invoke(main, ["factor", "--poly", "t^^2"])
    assert res.exit_code == 1
    assert res.stderr.startswith("error:")


# -- table input -----------------------------------------------------------


def test_poly_file_names_outputs_and_reports_skips(runner, table):
    res = runner.invoke(main, ["evalue", "--poly-file", table])
    assert res.exit_code == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "trefoil: E = 0, rule gcd(n, 6) = 1"
    assert lines[1] == "figure8: E = 2, set {2}"
    assert len(lines) == 2
    assert "row 4: value at 1 is 3, not +-1" in res.stderr
    assert "row 5: not palindromic up to sign" in res.stderr


def test_poly_file_jobs_fanout_matches_serial(runner, table):
    serial = runner.invoke(main, ["factor", "--poly-file", table, "--json"])
    fanned = runner.invoke(main, ["factor", "--poly-file", table,
                                  "--jobs", "3", "--json"])
    assert serial.stdout == fanned.stdout and serial.stdout


def test_ingest_human_json_and_strict(runner, table):
    res = runner.invoke(main, ["ingest", table])
    assert res.exit_code == 0
    assert res.stdout == ("trefoil: t^2 - t + 1\n"
                          "figure8: t^2 - 3*t + 1\n")
    assert "2 records, 2 skipped" in res.stderr
    res = runner.invoke(main, ["ingest", table, "--json"])
    payload = json.loads(res.stdout)
    assert payload["skipped"] == 2
    assert payload["records"][0]["name"] == "trefoil"
    assert payload["records"][0]["alexander"] == [1, -1, 1]
    assert payload["records"][0]["source"].endswith(":2")
    res = runner.invoke(main, ["ingest", table, "--strict"])
    assert res.exit_code == 1 and "row 4" in res.stderr


def test_ingest_missing_file_and_header(runner, tmp_path):
    res = runner.invoke(main, ["ingest", str(tmp_path / "nope.csv")])
    assert res.exit_code == 1 and "cannot read" in res.stderr
    bare = tmp_path / "bare.csv"
    bare.write_text("a,b\n1,2\n", encoding="utf-8")
    res = runner.invoke(main, ["ingest", str(bare)])
    assert res.exit_code == 1 and "header must contain" in res.stderr


# -- mode plumbing ---------------------------------------------------------


def test_mode_env_default_and_flag_override(runner):
    res = runner.invoke(main, ["evalue", "--poly", FIG8, "--json"],
                        env={"FPL_MODE": "rigorous"})
    payload = json.loads(res.output)
    assert payload["mode"] == "rigorous" and payload["rigorous"] is True
    res = runner.invoke(main, ["evalue", "--poly", FIG8, "--json",
                               "--mode", "heuristic"],
                        env={"FPL_MODE": "rigorous"})
    assert json.loads(res.output)["mode"] == "heuristic"


# -- survey ----------------------------------------------------------------


def test_survey_json_counts_and_filters(runner):
    res = runner.invoke(main, ["survey", "--max-genus", "3", "--json"])
    payload = json.loads(res.output)
    assert payload["aggregates"]["candidates"] == 7
    assert payload["config"]["rigorous"] is False
    assert payload["config"]["filters"]["top_gap_1"] is False
    res = runner.invoke(main, ["survey", "--max-genus", "4", "--json",
                               "--filters", "top-gap-1"])
    payload = json.loads(res.output)
    assert payload["aggregates"]["candidates"] == 8
    assert payload["config"]["filters"]["top_gap_1"] is True


def test_survey_human_summary(runner):
    res = runner.invoke(main, ["survey", "--max-genus", "2"])
    lines = res.output.splitlines()
    assert lines[0] == "mode: heuristic (rigorous: False)"
    assert lines[1] == ("counts: {'candidates': 3, 'cyclotomic_products': 3,"
                        " 'noncyclotomic': 0}")
    assert lines[2] == "hartley exceptional: 0"


def test_survey_seed_and_jobs_do_not_change_output(runner):
    base = runner.invoke(main, ["survey", "--max-genus", "3", "--json"])
    seeded = runner.invoke(main, ["survey", "--max-genus", "3", "--json",
                                  "--seed", "7"])
    forked = runner.invoke(main, ["survey", "--max-genus", "3", "--json",
                                  "--jobs", "2"])
    assert base.output == seeded.output == forked.output
