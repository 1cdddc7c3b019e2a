import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from taftpiv.cli import dumps, run

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_classify_example():
    code, out, _ = call("classify", "--n", "3", "--params", "1,1,1,2")
    assert code == 0
    rep = json.loads(out)
    assert rep["command"] == "classify" and rep["oracle"] == "skipped"
    assert rep["result"]["has_pivotal"] is False
    assert rep["result"]["twisted_pivotal_pairs"] == [[2, 0]]
    assert set(rep) == {"command", "input", "result", "oracle", "version"}


def test_classify_with_oracle_and_taft():
    code, out, _ = call("classify", "--n", "4", "--taft", "--oracle")
    assert code == 0
    rep = json.loads(out)
    assert rep["oracle"] == "checked-ok"
    assert rep["result"]["quasi_pivotal_pairs"] == [[c, (-c - 1) % 4] for c in range(4)]


def test_census_csv():
    code, out, _ = call("census", "--n", "8", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "N,total,pivotal,twisted_pivotal,unimodular,spherical,twisted_spherical,nonunimod_twisted_spherical"
    assert row.split(",")[-1] == "4"


def test_census_workers_identical():
    _, a, _ = call("census", "--n", "10", "--workers", "1")
    _, b, _ = call("census", "--n", "10", "--workers", "8")
    assert a == b


def test_census_env_workers(monkeypatch):
    monkeypatch.setenv("TOOLKIT_WORKERS", "2")
    code, out, _ = call("census", "--n", "6")
    assert code == 0 and json.loads(out)["result"]["N"] == 6


def test_sphere_example():
    code, out, _ = call("sphere", "--n", "9", "--params", "1,3,5,3", "--c", "6", "--d", "6", "--oracle")
    assert code == 0
    rep = json.loads(out)
    assert rep["result"]["dim_sphere"] == 1
    assert rep["oracle"] == "checked-ok"


def test_verify():
    code, out, _ = call("verify", "--n", "4", "--params", "1,2,3,2")
    assert code == 0 and json.loads(out)["oracle"] == "checked-ok"
    code, out, _ = call("verify", "--n", "4", "--exhaustive")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["checked"] == 16 and rep["result"]["mismatches"] == []


def test_lattice():
    code, out, _ = call("lattice", "--max", "8")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["minimal_N"]["valid_without_Q"] == 8


def test_vectg():
    code, out, _ = call("vectg", "--cayley", str(DATA / "z2.txt"))
    rep = json.loads(out)
    assert code == 0
    assert rep["result"]["pair_count"] == 4 and rep["result"]["trivial_twist_count"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--n", "9", "--params", "1,3,5,4"],
        ["classify", "--n", "3", "--params", "1,1,1"],
        ["classify", "--n", "3"],
        ["sphere", "--n", "3", "--params", "1,1,1,2", "--c", "0", "--d", "0"],
        ["census", "--n", "1"],
        ["vectg", "--cayley", "/nonexistent/table.txt"],
        ["lattice", "--max", "1"],
    ],
)
def test_validation_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == "" and err


def test_usage_error_exit_code():
    code, _, _ = call("classify", "--bogus")
    assert code == 2


def test_mismatch_exit_code(monkeypatch):
    import taftpiv.cli as cli

    monkeypatch.setattr(cli, "accepted_pairs", lambda H, conv: [])
    code, out, _ = call("verify", "--n", "3", "--params", "1,1,1,2")
    assert code == 3 and json.loads(out)["oracle"] == "checked-mismatch"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--n", "8", "--params", "2,2,6,2"],
        ["census", "--n", "7"],
        ["vectg", "--cayley", str(DATA / "q8.txt")],
    ],
)
def test_json_round_trip(argv):
    _, out, _ = call(*argv)
    assert dumps(json.loads(out)) + "\n" == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "taftpiv", "classify", "--n", "3", "--params", "1,1,1,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["twisted_pivotal_pairs"] == [[2, 0]]
