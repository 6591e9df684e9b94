"""End-to-end CLI behavior through main(), plus a few subprocess runs."""

import json
import subprocess
import sys

import pytest

from ringmat import cli

A_JSON = json.dumps({"ring": {"kind": "int"}, "entries": [[1, 2], [3, 4]]})


def run_main(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charpoly_reference(capsys):
    code, out, _ = run_main(["charpoly", "--matrix", A_JSON], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["c"] == ["1", "-5", "-2"]
    assert payload["chi"] == {"coeffs": ["-2", "-5", "1"]}
    assert payload["method"] == "direct"
    assert payload["D"][1]["entries"] == [["1", "0"], ["0", "1"]]


def test_charpoly_zero_matrix(capsys):
    m = json.dumps({"ring": "int", "entries": [[0] * 3] * 3})
    code, out, _ = run_main(["charpoly", "--matrix", m], capsys)
    assert code == 0
    assert json.loads(out)["chi"] == {"coeffs": ["0", "0", "0", "1"]}


def test_charpoly_mod8_canonical(capsys):
    m = json.dumps({"ring": {"kind": "mod", "m": 8}, "entries": [["2"]]})
    code, out, _ = run_main(["charpoly", "--matrix", m], capsys)
    assert code == 0
    assert json.loads(out)["chi"] == {"coeffs": ["6", "1"]}


def test_charpoly_newton_flag_needs_q_algebra(capsys):
    # --newton on Z silently falls back to the division-free route
    code, out, _ = run_main(["charpoly", "--matrix", A_JSON, "--newton"],
                            capsys)
    assert code == 0 and json.loads(out)["method"] == "direct"
    mq = json.dumps({"ring": "rat", "entries": [[1, 2], [3, 4]]})
    code, out, _ = run_main(["charpoly", "--matrix", mq, "--newton"], capsys)
    assert code == 0 and json.loads(out)["method"] == "newton"


def test_charpoly_output_reparses(capsys):
    from ringmat.serialize import matrix_from_json, parse_ring, \
        polynomial_from_json
    code, out, _ = run_main(["charpoly", "--matrix", A_JSON], capsys)
    payload = json.loads(out)
    ring = parse_ring(payload["ring"])
    chi = polynomial_from_json(payload["chi"], ring)
    assert chi.coeffs == (-2, -5, 1)
    assert matrix_from_json(payload["D"][0]).entry(1, 1) == -4


def test_adjugate_reference(capsys):
    code, out, _ = run_main(["adjugate", "--matrix", A_JSON], capsys)
    assert code == 0
    assert json.loads(out)["entries"] == [["4", "-2"], ["-3", "1"]]
    code, out, _ = run_main(["adjugate", "--matrix", A_JSON,
                             "--via-charpoly"], capsys)
    assert json.loads(out)["entries"] == [["4", "-2"], ["-3", "1"]]


def test_adjugate_1x1(capsys):
    m = json.dumps({"ring": "int", "entries": [[5]]})
    code, out, _ = run_main(["adjugate", "--matrix", m], capsys)
    assert json.loads(out)["entries"] == [["1"]]


def test_ring_override_flag(capsys):
    m = json.dumps({"entries": [[10]]})
    code, out, _ = run_main(["adjugate", "--matrix", m, "--ring", "mod:8"],
                            capsys)
    assert code == 0
    assert json.loads(out)["ring"] == {"kind": "mod", "m": 8}


def test_matrix_from_file_and_out(tmp_path, capsys):
    src = tmp_path / "a.json"
    src.write_text(A_JSON)
    dst = tmp_path / "out.json"
    code, out, _ = run_main(["adjugate", "--matrix", str(src),
                             "--out", str(dst)], capsys)
    assert code == 0
    assert out == ""
    assert json.loads(dst.read_text())["entries"] == [["4", "-2"],
                                                      ["-3", "1"]]


def test_verify_all_reference(capsys):
    code, out, _ = run_main(["verify", "all", "--matrix", A_JSON], capsys)
    assert code == 0
    body, summary = out.rsplit("\n", 2)[0], out.strip().splitlines()[-1]
    reports = json.loads(body)
    passed = [r for r in reports if r["passed"] and r["hypothesis_met"]]
    assert len(passed) >= 12
    assert summary.startswith("total=") and "failed=0" in summary


def test_verify_gate_exits_zero(capsys):
    code, out, _ = run_main(["verify", "frobenius_trace", "--matrix",
                             A_JSON, "--p", "2"], capsys)
    assert code == 0
    assert "hypothesis_not_met=1" in out


def test_verify_suite_params(capsys):
    m = json.dumps({"ring": "mod:8", "entries": [["2"]]})
    code, out, _ = run_main(["verify", "almkvist", "--matrix", m, "--k", "2"],
                            capsys)
    assert code == 0
    assert json.loads(out.rsplit("\n", 2)[0])[0]["passed"] is True


def test_fuzz_runs_and_summarizes(capsys):
    code, out, _ = run_main(["fuzz", "--ring", "mod:6", "--suite", "core",
                             "--count", "5", "--size", "3", "--seed", "9"],
                            capsys)
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("total=90 ")


def test_fuzz_count_zero(capsys):
    code, out, _ = run_main(["fuzz", "--ring", "int", "--count", "0",
                             "--size", "2"], capsys)
    assert code == 0
    assert json.loads(out.rsplit("\n", 2)[0]) == []


def test_fuzz_writes_report_file(tmp_path, capsys):
    dst = tmp_path / "report.json"
    code, out, _ = run_main(["fuzz", "--ring", "int", "--suite", "laplace",
                             "--count", "3", "--size", "3",
                             "--out", str(dst)], capsys)
    assert code == 0
    assert out.startswith("total=3 ")
    assert len(json.loads(dst.read_text())) == 3


def test_exit_code_2_parse_errors(capsys):
    cases = [
        ["charpoly", "--matrix", "{not json"],
        ["charpoly", "--matrix", json.dumps({"ring": "mod:0",
                                             "entries": [[1]]})],
        ["charpoly", "--matrix", "/no/such/file.json"],
        ["verify", "bogus_suite", "--matrix", A_JSON],
        ["fuzz", "--ring", "galois:9", "--count", "1", "--size", "2"],
        ["fuzz", "--ring", "int", "--count", "1", "--size", "9",
         "--suite", "blocks"],
    ]
    for argv in cases:
        code, _, err = run_main(argv, capsys)
        assert code == 2, argv
        assert err.startswith("error:"), argv


def test_exit_code_3_shape_errors(capsys):
    rect = json.dumps({"ring": "int", "entries": [[1, 2, 3], [4, 5, 6]]})
    for argv in (["charpoly", "--matrix", rect],
                 ["adjugate", "--matrix", rect],
                 ["verify", "cayley_hamilton", "--matrix", rect]):
        code, _, err = run_main(argv, capsys)
        assert code == 3, argv
        assert err.startswith("error:")


def _subprocess_run(argv, env_extra=None):
    import os
    env = dict(os.environ)
    env.pop("RINGMAT_MUTATE", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "ringmat.cli", *argv],
                          capture_output=True, text=True, env=env)


def test_identical_invocations_are_byte_identical():
    argv = ["fuzz", "--ring", "mod:8", "--suite", "adjugate", "--seed", "42",
            "--count", "6", "--size", "4"]
    first = _subprocess_run(argv)
    second = _subprocess_run(argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


def test_mutation_hook_drives_exit_1():
    argv = ["verify", "cayley_hamilton", "--matrix", A_JSON]
    clean = _subprocess_run(argv)
    assert clean.returncode == 0
    broken = _subprocess_run(argv, {"RINGMAT_MUTATE": "cayley_hamilton"})
    assert broken.returncode == 1
    reports = json.loads(broken.stdout.rsplit("\n", 2)[0])
    assert reports[0]["passed"] is False
    assert reports[0]["residual"] is not None
    assert "failed=1" in broken.stdout.strip().splitlines()[-1]
