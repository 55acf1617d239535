import json

import pytest

from cyclo.cli import run
from cyclo.mpoly import parse
from cyclo.report import VerificationReport


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["poly", "12"], "x^4 - x^2 + 1"),
        (["poly", "5"], "x^4 + x^3 + x^2 + x + 1"),
        (["deriv", "5", "3"], "30"),
        (["ratio", "5", "3"], "6"),
        (["ratio", "3", "2"], "2/3"),
        (["omega", "2"], "x4 - 5*x2^2 + 5*x2"),
        (["sk", "2"], "(1/3)*(-x2 + 3*x1)"),
        (["fk", "2"], "(1/3)*(x2 + 3*x1^2 - 3*x1)"),
        (["vn", "3"], "x^2 + 3"),
        (["wn", "9"], "x^6 + 6*x^4 + 9*x^2 + 3"),
        (["totient", "4", "5"], "624"),
        (["fkn", "3", "5"], "x^3 - 3*x^2 + 8*x - 6\nintegral: yes"),
        (["fkn", "2", "3"], "x^2 - x + 2/3\nintegral: no"),
    ],
)
def test_compute_commands(capsys, argv, expected):
    code, out, _ = call(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


@pytest.mark.parametrize("route", ["partition", "series", "reconstruct"])
def test_fk_routes_print_same_polynomial(capsys, route):
    code, out, _ = call(capsys, "fk", "3", "--route", route)
    assert code == 0
    assert parse(out.strip()) == parse("x1*x2 + x1^3 - x2 - 3*x1^2 + 2*x1")


@pytest.mark.parametrize(
    "argv", [["ratio", "1", "0"], ["deriv", "x", "1"], ["poly", "0"], ["fkn", "3", "2"], ["nonsense"], []]
)
def test_usage_and_domain_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_verify_conjecture_text(capsys):
    code, out, _ = call(capsys, "verify", "conjecture", "--k-max", "6")
    assert code == 0
    assert out.startswith("conjecture-1: PASS")


def test_verify_json_schema_and_roundtrip(capsys):
    code, out, _ = call(capsys, "verify", "ak", "--n-max", "60", "--json")
    assert code == 0
    data = json.loads(out)
    assert {"claim_id", "range", "status", "counterexamples", "elapsed_ms"} <= set(data)
    assert data["claim_id"] == "ak-congruence" and data["status"] == "pass"
    rerendered = json.dumps(VerificationReport.from_dict(data).to_dict(), indent=2)
    assert rerendered + "\n" == out


def test_parallel_output_identical_to_serial(capsys):
    args = ["verify", "lehmer", "--n-max", "40", "--k-max", "8", "--json", "--no-timing"]
    code1, serial, _ = call(capsys, *args, "--jobs", "1")
    code2, parallel, _ = call(capsys, *args, "--jobs", "3")
    assert code1 == code2 == 0
    assert serial == parallel


def test_invalid_sweep_config_exit_2(capsys):
    code, _, err = call(capsys, "verify", "lehmer", "--n-min", "50", "--n-max", "10")
    assert code == 2 and "n_min" in err


def _write_mutated(tmp_path, capsys, k, delta):
    path = tmp_path / "fixtures.json"
    code, _, _ = call(capsys, "verify", "routes", "--k-max", "1", "--emit-fixtures", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    poly = parse(data["F"][str(k)])
    data["F"][str(k)] = str(poly + delta)
    path.write_text(json.dumps(data))
    return path


def test_fixture_roundtrip_passes(tmp_path, capsys):
    path = tmp_path / "fixtures.json"
    call(capsys, "verify", "routes", "--k-max", "1", "--emit-fixtures", str(path))
    for claim in ("routes", "conjecture"):
        code, _, _ = call(capsys, "verify", claim, "--fixtures", str(path))
        assert code == 0
    code, _, _ = call(capsys, "verify", "lehmer", "--n-max", "30", "--fixtures", str(path))
    assert code == 0


def test_mutated_fixture_exit_1(tmp_path, capsys):
    path = _write_mutated(tmp_path, capsys, 5, parse("x1"))
    code, out, _ = call(capsys, "verify", "conjecture", "--fixtures", str(path), "--json")
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "fail"
    assert data["counterexamples"][0]["params"] == [2]
    code, out, _ = call(capsys, "verify", "lehmer", "--n-max", "30", "--fixtures", str(path))
    assert code == 1 and "FAIL" in out


def test_emit_fixtures_contents(tmp_path, capsys):
    path = tmp_path / "f.json"
    call(capsys, "verify", "conjecture", "--k-max", "1", "--emit-fixtures", str(path))
    data = json.loads(path.read_text())
    assert data["Omega"]["2"] == "x4 - 5*x2^2 + 5*x2"
    assert set(data["F"]) == {str(k) for k in range(13)}


@pytest.mark.parametrize("claim", ["wmodp", "wexpansion", "wfactor", "integrality", "cyclotomic", "routes"])
def test_verify_small_ranges(capsys, claim):
    code, out, _ = call(capsys, "verify", claim, "--n-max", "40", "--k-max", "6", "--m-max", "4")
    assert code == 0, out


def test_cyclo_jobs_env(monkeypatch, capsys):
    monkeypatch.setenv("CYCLO_JOBS", "2")
    code, out, _ = call(capsys, "verify", "wfactor", "--n-max", "20")
    assert code == 0


def test_selftest_small_caps(capsys):
    code, out, _ = call(capsys, "selftest", "--n-max", "30", "--k-max", "6", "--m-max", "4", "--json", "--no-timing")
    assert code == 0
    reports = json.loads(out)
    assert {r["claim_id"] for r in reports} >= {"lehmer-identity", "conjecture-1", "ak-congruence", "w-mod-p"}
    assert all(r["status"] == "pass" for r in reports)
