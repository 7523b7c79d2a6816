import json
import subprocess
import sys

import pytest

from equalrank.cli import JobSpec, InputError, main, run


def call(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_gkrs_table(capsys):
    status, out, _ = call(capsys, "gkrs", "--g", "A2", "--h", "[2,-1]", "--lambda", "0,0")
    assert status == 0
    rows = [l for l in out.splitlines() if l.strip().startswith(("+1", "-1"))]
    assert len(rows) == 3
    assert "PASS" in out


def test_gkrs_json_sorted(capsys):
    status, out, _ = call(capsys, "gkrs", "--g", "A2>A1u1", "--lambda", "1,0", "--output", "json")
    data = json.loads(out)
    signs = [m["sign"] for m in data["multiplet"]]
    assert signs == sorted(signs, reverse=True)
    assert data["cross_check"] == "PASS"


def test_json_byte_stable(capsys):
    args = ("induce", "--g", "A2", "--h", "A2>A1u1", "--mu", "2,5/2", "--output", "json")
    _, a, _ = call(capsys, *args)
    _, b, _ = call(capsys, *args)
    assert a == b
    data = json.loads(a)
    assert data["agrees"] and data["pushforward"]["terms"] == [{"weight": [2, 1], "coeff": 1}]


def test_dirac_singular_prints_zero(capsys):
    status, out, _ = call(capsys, "dirac", "--g", "A1", "--h", "", "--mu", "0")
    assert status == 0 and out.strip() == "0"


def test_dirac_regular(capsys):
    status, out, _ = call(capsys, "dirac", "--g", "A1", "--h", "", "--mu=-2")
    assert out.strip() == "-1 V(1)"


def test_verify_weyl_b2(capsys):
    status, out, _ = call(capsys, "verify", "--suite", "weyl", "--g", "B2", "--max-coord", "2")
    assert status == 0 and "9/9" in out


@pytest.mark.parametrize("suite", ["thom", "clifford"])
def test_verify_matrix_suites(capsys, suite):
    status, out, _ = call(capsys, "verify", "--suite", suite, "--output", "json")
    data = json.loads(out)
    assert status == 0 and data["passed"] == data["total"] > 0


def test_verify_gkrs_and_frobenius(capsys):
    assert call(capsys, "verify", "--suite", "gkrs", "--embedding", '{"g":"B2","h_roots":[[2,-2],[0,2]]}')[0] == 0
    assert call(capsys, "verify", "--suite", "frobenius", "--g", "A1", "--h", "", "--max-coord", "2")[0] == 0


def test_rootdata(capsys):
    status, out, _ = call(capsys, "rootdata", "--g", "G2", "--output", "json")
    data = json.loads(out)
    assert data["weyl_order"] == 12 and len(data["positive_roots"]) == 6


def test_branch(capsys):
    status, out, _ = call(capsys, "branch", "--g", "A2>A1u1", "--lambda", "1,0", "--output", "json")
    assert json.loads(out)["terms"] == [{"weight": [0, -1], "coeff": 1}, {"weight": [1, 0], "coeff": 1}]


def test_explicit_roots_beat_catalog(capsys):
    _, out, _ = call(capsys, "gkrs", "--g", "A2>A1u1", "--h", "", "--lambda", "0,0", "--output", "json")
    assert len(json.loads(out)["multiplet"]) == 6


@pytest.mark.parametrize(
    "argv,fieldname",
    [
        (["gkrs", "--g", "A2", "--h", "[2,-1", "--lambda", "0,0"], "--h"),
        (["gkrs", "--g", "A2", "--h", "[2,-1]", "--lambda", "0"], "--lambda"),
        (["gkrs", "--g", "A2", "--lambda", "0,0"], "--h"),
        (["gkrs", "--g", "E9", "--h", "", "--lambda", "0"], "--g"),
        (["gkrs", "--g", "A2", "--h", "[3,-1]", "--lambda", "0,0"], "--h"),
        (["gkrs", "--g", "A2", "--h", "", "--lambda", "1,x"], "--lambda"),
        (["dirac", "--g", "A2", "--h", "[2,-1]", "--mu=-1,0"], "--mu"),
        (["gkrs", "--embedding", "{bad", "--lambda", "0"], "--embedding"),
    ],
)
def test_malformed_input_exit_2(capsys, argv, fieldname):
    status, _, err = call(capsys, *argv)
    assert status == 2
    assert fieldname in err


def test_unknown_command_exit_2(capsys):
    assert call(capsys, "frobnicate")[0] == 2


def test_jobspec_validation():
    with pytest.raises(InputError):
        run(JobSpec("gkrs", g="A2", h_roots=None, weight=(0, 0)))
    with pytest.raises(InputError):
        run(JobSpec("verify", suite="nope"))


def test_check_failure_exit_1(capsys, monkeypatch):
    from equalrank import cli
    from equalrank.chars import VirtualDecomposition

    monkeypatch.setattr(cli, "euler_restriction", lambda e, lam: VirtualDecomposition())
    status, out, _ = call(capsys, "gkrs", "--g", "A1", "--h", "", "--lambda", "1")
    assert status == 1 and "FAIL" in out


def test_weyl_bound_env(capsys, monkeypatch):
    monkeypatch.setenv("GKRS_WEYL_BOUND", "4")
    status, _, err = call(capsys, "gkrs", "--g", "B2", "--h", "", "--lambda", "0,0")
    assert status == 2 and "4" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "equalrank", "dirac", "--g", "A1", "--h", "", "--mu", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "+1 V(2)"
