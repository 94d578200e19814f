"""Claim registry, sweep runner, report serialization, CLI contract."""

import json

import pytest

from factratio import RunReport, UsageError, emit_report, list_claims, run_claim
from factratio.cli import main
from factratio.registry import CLAIMS, KINDS, get_claim, points_for, resolve_ranges

EXPECTED_IDS = {
    "thm-1.1",
    "thm-1.2",
    "thm-1.3",
    "thm-1.4",
    "cor-1.5",
    "lem-2.1",
    "lem-2.2",
    "lem-2.3",
    "lem-5.1",
    "lem-5.2",
    "thm-6.1",
    "cor-6.2",
    "thm-7.2",
    "thm-7.4",
    "conj-7.1",
    "conj-7.3",
    "conj-7.4-unimodal",
    "conj-7.5",
    "wz-positivity",
    "parity-power-of-2",
    "val-bounds",
}


def test_registry_contents():
    assert set(CLAIMS) == EXPECTED_IDS
    for record in CLAIMS.values():
        assert record.kind in KINDS
        assert record.anchor
        assert record.description


def test_list_claims_sorted_and_stable():
    ids = [r.id for r in list_claims()]
    assert ids == sorted(EXPECTED_IDS)
    assert [r.id for r in list_claims()] == ids


def test_list_claims_kind_filter():
    positivity = {r.id for r in list_claims(kind="q-positivity")}
    assert positivity == {"thm-6.1", "cor-6.2", "conj-7.3", "conj-7.5", "wz-positivity"}
    assert list_claims(kind="no-such-kind") == []


def test_conjecture_flags():
    conjectures = {r.id for r in list_claims() if r.conjecture}
    assert conjectures == {"conj-7.1", "conj-7.3", "conj-7.4-unimodal", "conj-7.5"}


def test_unknown_claim_id():
    with pytest.raises(UsageError):
        get_claim("thm-9.9")
    with pytest.raises(UsageError):
        run_claim("thm-9.9")


def test_range_validation():
    claim = get_claim("thm-1.1")
    with pytest.raises(UsageError):
        resolve_ranges(claim, {"a": 3})  # wrong parameter name
    with pytest.raises(UsageError):
        resolve_ranges(claim, {"n": 10**9})  # beyond the cap
    with pytest.raises(UsageError):
        resolve_ranges(claim, {"n": 0})
    assert resolve_ranges(claim, None) == {"n": 2000}


def test_points_ordering():
    claim = get_claim("thm-1.4")
    pts = points_for(claim, {"a": 2, "b": 2, "m": 2, "n": 2})
    assert pts == sorted(pts)
    assert len(pts) == 16
    conj = get_claim("conj-7.1")
    cpts = points_for(conj, {"a": 3, "b": 5, "n": 2})
    assert cpts == [(2, 1, 1), (2, 1, 2), (3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2)]


def test_run_claim_small_sweeps():
    rep = run_claim("thm-1.1", {"n": 30})
    assert (rep.checked, rep.passed, rep.failed) == (30, 30, 0)
    assert rep.ok and rep.counterexamples == []

    rep = run_claim("lem-2.1")
    assert rep.checked == 2 and rep.failed == 0

    rep = run_claim("conj-7.1", {"a": 3, "b": 2, "n": 4})
    assert rep.failed == 0


def test_run_claim_reports_known_counterexamples():
    # the published seventh-section expressions 4 and 5 fail at n = 10
    rep = run_claim("thm-7.2", {"n": 10})
    assert rep.failed == 2
    assert {(ce["family"], ce["n"], ce["d"]) for ce in rep.counterexamples} == {
        ("thm-7.2-4", 10, 9),
        ("thm-7.2-5", 10, 9),
    }


def test_worker_pool_determinism():
    r1 = emit_report(run_claim("thm-1.1", {"n": 50}, workers=1), "json")
    r2 = emit_report(run_claim("thm-1.1", {"n": 50}, workers=2), "json")
    r3 = emit_report(run_claim("thm-1.1", {"n": 50}, workers=5), "json")
    assert r1 == r2 == r3


def test_json_report_shape():
    rep = run_claim("thm-1.2", {"n": 10})
    payload = json.loads(emit_report(rep, "json"))
    assert payload["claim"] == "thm-1.2"
    assert payload["failed"] == 0
    assert payload["counterexamples"] == []
    assert payload["ranges"] == {"n": 10}
    assert "wall_time" not in json.dumps(payload)


def test_json_counterexamples_use_decimal_strings():
    rep = RunReport(
        claim_id="demo",
        kind="divisibility",
        description="d",
        anchor="a",
        conjecture=False,
        ranges={"n": 3},
        checked=3,
        passed=2,
        failed=1,
        counterexamples=[{"n": 2, "value": 10**40}],
    )
    payload = json.loads(emit_report(rep, "json"))
    assert payload["counterexamples"] == [{"n": "2", "value": str(10**40)}]


def test_csv_report():
    rep = run_claim("thm-1.1", {"n": 5})
    text = emit_report(rep, "csv").decode()
    assert text.splitlines()[0] == "claim"
    rep.counterexamples = [{"n": 4, "m": 7}, {"n": 9, "m": 3}]
    text = emit_report(rep, "csv").decode()
    lines = text.splitlines()
    assert lines[0] == "claim,m,n"
    assert lines[1] == "thm-1.1,7,4"


def test_text_report_contains_anchor():
    rep = run_claim("thm-1.1", {"n": 5})
    text = emit_report(rep, "text").decode()
    assert "3 S(n) = 0 (mod 2n+3)" in text
    assert "PASS" in text


def test_unknown_format():
    rep = run_claim("thm-1.1", {"n": 2})
    with pytest.raises(UsageError):
        emit_report(rep, "xml")


# ----------------------------------------------------------------------
# CLI surface
# ----------------------------------------------------------------------

def test_cli_verify_pass(capsys):
    assert main(["verify", "thm-1.1", "--n-max", "15", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["failed"] == 0


def test_cli_verify_failure_exit_code(capsys):
    # theorem-class failure: the published expressions fail at n=10
    code = main(["verify", "thm-7.2", "--n-max", "10", "--format", "json"])
    captured = capsys.readouterr()
    assert code == 1
    assert json.loads(captured.out)["failed"] == 2
    assert "warning" in captured.err


def test_cli_verify_unknown_claim(capsys):
    assert main(["verify", "thm-9.9"]) == 2
    assert "unknown claim" in capsys.readouterr().err


def test_cli_verify_cap_exceeded(capsys):
    assert main(["verify", "thm-1.1", "--n-max", "999999999"]) == 2
    assert "cap" in capsys.readouterr().err


def test_cli_verify_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "thm-1.1", "--n-max", "5", "--format", "json", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["checked"] == 5


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for claim_id in EXPECTED_IDS:
        assert claim_id in out


def test_cli_list_kind_filter_unknown_is_empty_success(capsys):
    assert main(["list", "--kind", "nonexistent"]) == 0
    assert capsys.readouterr().out == ""


def test_cli_landau(capsys):
    assert main(["landau", "--num", "6,1", "--den", "3,2,2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["minimum"] == 0
    assert payload["integral_for_all_n"] is True

    assert main(["landau", "--num", "5,1", "--den", "3,3", "--format", "json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["minimum"] == -1
    assert {"x": "2/3", "value": -1} in payload["witnesses"]


def test_cli_landau_bad_input(capsys):
    assert main(["landau", "--num", "6,x", "--den", "3,2,2"]) == 2
    assert main(["landau", "--num", "6,1", "--den", "3,2"]) == 2


def test_cli_qpoly_coeffs(capsys):
    assert main(["qpoly", "--family", "wz", "--n", "1", "--emit", "coeffs"]) == 0
    coeffs = json.loads(capsys.readouterr().out)
    assert coeffs == ["1", "1", "3", "3", "5", "4", "5", "3", "3", "1", "1"]


def test_cli_qpoly_exponents_and_summary(capsys):
    assert main(["qpoly", "--family", "q-catalan", "--n", "2", "--emit", "exponents"]) == 0
    assert json.loads(capsys.readouterr().out) == {"4": 1}
    assert main(["qpoly", "--family", "wz", "--n", "2"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["reciprocal"] is True and summary["degree"] == 40


def test_cli_qpoly_unknown_family(capsys):
    assert main(["qpoly", "--family", "nope", "--n", "1"]) == 2


def test_cli_qpoly_domain(capsys):
    assert main(["qpoly", "--family", "thm-7.2-4", "--n", "1"]) == 2


def test_workers_env_default(monkeypatch):
    from factratio.runner import default_workers

    monkeypatch.delenv("FACTRATIO_WORKERS", raising=False)
    assert default_workers() == 1
    monkeypatch.setenv("FACTRATIO_WORKERS", "4")
    assert default_workers() == 4
    monkeypatch.setenv("FACTRATIO_WORKERS", "junk")
    assert default_workers() == 1
