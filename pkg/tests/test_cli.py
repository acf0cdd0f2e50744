from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from qgrass.cli import main
from qgrass.grass import ChiTable
from qgrass.kronecker import build_Mn
from qgrass.quiver import Quiver, a_linear, kronecker
from qgrass.rep import simple


@pytest.fixture
def files(tmp_path):
    paths = {
        "k": tmp_path / "k.json",
        "m2": tmp_path / "m2.json",
        "a2": tmp_path / "a2.json",
        "s1": tmp_path / "s1.json",
    }
    paths["k"].write_text(kronecker().dumps())
    paths["m2"].write_text(build_Mn(2).dumps())
    paths["a2"].write_text(a_linear(2).dumps())
    paths["s1"].write_text(simple(a_linear(2), 1).dumps())
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_count(capsys, files):
    code, rep = run(capsys, "count", "--quiver", files["k"], "--rep", files["m2"], "--dim", "1,2", "--prime", "3")
    assert code == 0 and rep["results"] == {"count": 4}
    assert set(rep) == {"command", "inputs", "results", "violations", "wall_time"}
    assert files["m2"] in rep["inputs"]


def test_cc(capsys, files):
    code, rep = run(capsys, "cc", "--quiver", files["a2"], "--rep", files["s1"], "--primes", "2,3")
    assert code == 0 and rep["results"]["laurent"] == "(1+x2)/x1"


def test_chi_roundtrip_and_determinism(capsys, files):
    args = ["chi", "--rep", files["m2"], "--primes", "2,3,5,7", "--extend"]
    _, a = run(capsys, *args)
    _, b = run(capsys, *args)
    assert a["results"] == b["results"]
    t = ChiTable.from_dict(a["results"], kronecker())
    assert t[(1, 2)] == 2


def test_tsv(capsys, files):
    assert main(["chi", "--rep", files["m2"], "--primes", "2,3,5,7", "--extend", "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "e\tchi\tpoly" and "1,2\t2\t1,1" in lines


def test_out_file(capsys, files, tmp_path):
    out = tmp_path / "r.json"
    assert main(["knit", "--quiver", files["k"], "--layers", "1", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert Quiver.from_dict(data["results"]["quiver"]) == kronecker()
    assert len(data["results"]["vertices"]) == 4


def test_mutate_and_cluster_vars(capsys):
    _, rep = run(capsys, "mutate", "--quiver", "A2", "--seq", "1")
    assert rep["results"]["cluster"] == ["(1+x2)/x1", "x2"]
    code, rep = run(capsys, "cluster-vars", "--quiver", "A2", "--depth", "5")
    assert code == 0 and len(rep["results"]["variables"]) == 5


def test_hall_tangent_kronecker(capsys, files):
    code, rep = run(capsys, "hall-count", "--quiver", "kronecker", "--rep", files["m2"], "--dim", "1,2", "--prime", "2")
    assert code == 0 and rep["results"]["count"] == 3
    code, rep = run(capsys, "tangent", "--rep", files["m2"], "--dim", "1,2", "--prime", "3")
    assert code == 0 and rep["results"]["min_tangent"] == rep["results"]["max_tangent"] == 1
    code, rep = run(capsys, "kronecker", "--kind", "DM", "--n", "1", "--primes", "2,3,5")
    assert code == 0 and rep["results"]["mismatches"] == 0 and rep["results"]["swap_errata"]


def test_ar_chi(capsys):
    _, rep = run(capsys, "ar-chi", "--quiver", "kronecker", "--vertex", "1,2")
    assert {tuple(x["e"]): x["chi"] for x in rep["results"]["entries"]}[(1, 2)] == 2


@pytest.mark.parametrize(
    "argv,kind",
    [
        (["nope"], "usage"),
        (["count", "--bogus"], "usage"),
        (["count", "--rep", "missing.json", "--dim", "1", "--prime", "2"], "io"),
        (["count", "--quiver", "kronecker", "--rep", "BAD", "--dim", "1,2", "--prime", "4"], "malformed-json"),
    ],
)
def test_errors_are_structured(capsys, tmp_path, argv, kind):
    if "BAD" in argv:
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        argv = [str(bad) if a == "BAD" else a for a in argv]
    code, rep = run(capsys, *argv)
    assert code != 0 and rep["error"]["type"] == kind


def test_budget_error(capsys, files):
    code, rep = run(capsys, "hall-count", "--rep", files["m2"], "--dim", "2,3", "--prime", "3", "--budget", "50")
    assert code == 2 and rep["error"]["type"] == "budget-exceeded" and rep["error"]["required"] > 50


def test_not_exceptional(capsys, tmp_path):
    from qgrass.kronecker import build_Mreg

    p = tmp_path / "r.json"
    p.write_text(build_Mreg(1, 0).dumps())
    code, rep = run(capsys, "tangent", "--rep", str(p), "--dim", "1,1", "--prime", "2", "--smooth")
    assert code == 2 and rep["error"]["ext_MM"] == 1


def test_verify_smoke(capsys):
    code, rep = run(capsys, "verify", "--suite", "smoke", "--criteria", "1,2,7")
    assert code == 0 and [c["passed"] for c in rep["results"]["criteria"]] == [True] * 3


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, QGRASS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import qgrass; print(qgrass.BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
