from __future__ import annotations

import json
import subprocess
import sys

import pytest

from monozeta import cli
from monozeta.cli import RunConfig, main, run
from monozeta.semigroup import derive_structure
from monozeta.topological import RatQs, zeta_top


def _run(*argv: str) -> tuple[int, str]:
    return run_capture(list(argv))


def run_capture(argv: list[str]) -> tuple[int, str]:
    proc = subprocess.run([sys.executable, "-m", "monozeta", *argv], capture_output=True, text=True)
    return proc.returncode, proc.stdout + proc.stderr


def test_invariants_json():
    status, out = _run("invariants", "--gens", "4,6,13", "--format", "json")
    assert status == 0
    doc = json.loads(out)
    assert [(p["N"], p["nu"]) for p in doc["pairs"]] == [(6, 8), (26, 37)]
    assert doc["lct"] == "4/3"


def test_topo_text():
    status, out = _run("topo", "--gens", "8,12,26,53")
    assert status == 0
    assert "2(14176s^3+103282s^2+246789s+193875)/((3+s)(11+6s)(50+26s)(235+106s))" in out


def test_series_check_exit_zero():
    status, out = _run("series-check", "--gens", "4,6,13", "--order", "60")
    assert status == 0 and "ok" in out


def test_invalid_semigroup_exit_one():
    status, out = _run("invariants", "--gens", "4,6,9")
    assert status == 1 and "n_i*b_i < b_(i+1)" in out
    assert _run("invariants", "--gens", "4;x")[0] == 1
    assert _run("frobnicate", "--gens", "4,6,13")[0] == 1
    assert _run("count", "--gens", "4,6,13", "--m", "2", "--q", "3")[0] == 1
    assert _run("count", "--gens", "4,6,13")[0] == 1


def test_input_file(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"generators": [2, 3]}))
    status, out = _run("topo", "--input", str(f))
    assert status == 0 and "(4s+5)/((1+s)(5+6s))" in out


def test_mismatch_exit_two(monkeypatch):
    monkeypatch.setattr(cli, "series_consistency", lambda *a, **k: False)
    assert run(RunConfig("series-check", (4, 6, 13)))[0] == 2

    def boom(S):
        from monozeta.errors import ResidueMismatch

        raise ResidueMismatch("forced")

    monkeypatch.setattr(cli, "poles_with_residues", boom)
    assert run(RunConfig("poles", (4, 6, 13)))[0] == 2


def test_count_and_budget():
    status, out = _run("count", "--gens", "2,3", "--m", "3", "--q", "5", "--json")
    assert status == 0
    assert json.loads(out) == {"m": 3, "q": 5, "local": False, "count": "1125", "expected": "1125", "match": True}
    status, out = _run("count", "--gens", "4,6,13", "--m", "6", "--q", "7", "--budget", "100")
    assert status == 1 and "BudgetExceeded" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["invariants", "--gens", "8,12,26,53", "--json"],
        ["motivic", "--gens", "4,6,13", "--json"],
        ["topo", "--gens", "4,6,13", "--json"],
        ["poles", "--gens", "8,12,26,53", "--json"],
        ["jets", "--gens", "4,6,13", "--m", "26", "--json"],
        ["flatness", "--gens", "4,6,13", "--json"],
        ["random", "--g", "3", "--seed", "5", "--count", "3", "--json"],
        ["verify-all", "--gens", "2,3", "--json"],
    ],
    ids=lambda a: a[0],
)
def test_json_round_trip_and_determinism(argv, capsys):
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert json.dumps(doc, indent=2) + "\n" == first


def test_topo_json_decodes_to_closed_form(capsys):
    main(["topo", "--gens", "4,6,13", "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert RatQs.from_json(doc["zeta"]) == zeta_top(derive_structure((4, 6, 13)))


def test_latex_output(capsys):
    assert main(["topo", "--gens", "2,3", "--latex"]) == 0
    assert r"\frac" in capsys.readouterr().out
    assert main(["motivic", "--gens", "4,6,13", "--latex"]) == 0
    assert r"\mathbb{L}" in capsys.readouterr().out


def test_jets_table(capsys):
    main(["jets", "--gens", "4,6,13", "--m", "13", "--json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["components"] == [{"kind": "B", "codim": 19}, {"kind": "C", "k": 2, "codim": 19}]
    assert doc["fiber_class"] == [{"ldeg": 22, "coef": -1}, {"ldeg": 23, "coef": 2}]


def test_verify_all_text(capsys):
    assert main(["verify-all", "--gens", "4,6,13"]) == 0
    out = capsys.readouterr().out
    assert "residues" in out and "FAIL" not in out
