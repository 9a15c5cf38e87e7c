import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from su3mult import chambers as ch
from su3mult.cli import main
from su3mult.lattice import TripleLabel

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "cells_count.txt": ["cells", "--count"],
    "rays.txt": ["rays"],
    "rays.jsonl": ["rays", "--json"],
    "chambers.txt": ["chambers"],
    "cells_dim3.jsonl": ["cells", "--dim", "3", "--json"],
    "diagram_c11.txt": ["diagram", "--chamber", "1,1"],
    "symmetries_glg.jsonl": ["symmetries", "--group", "Glg", "--json"],
    "orbit_gl.txt": ["orbit", "--cell", "C3,D3,LT", "--group", "Gl"],
    "explain_star.txt": ["mult", "--explain", "1,1;1,1;1,1"],
}


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    code, text = run(GOLDEN_CASES[name])
    assert code == 0
    assert text == (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize("argv,want", [
    (["mult", "1,1;1,1;1,1"], "2"),
    (["mult", "0,0;0,0;0,0"], "1"),
    (["mult", "1,0;0,0;0,0"], "0"),
    (["lr", "2,1,0|2,1,0|3,2,1"], "2"),
    (["lr", "1,0,0|1,0,0|2,0,0"], "1"),
    (["lr", "1,0,0|1,0,0|1,1,1"], "0"),
    (["su2", "1", "1", "0"], "1"),
    (["cells", "--count"], "1 9 35 75 93 63 18"),
    (["symmetries", "--group", "G", "--count"], "144"),
    (["symmetries", "--group", "Glg", "--count"], "6"),
    (["orbit", "--cell", "001010100", "--group", "Glg", "--count"], "6"),
    (["orbit", "--cell", "C3,D3,LT", "--group", "G", "--count"], "18"),
])
def test_single_values(argv, want):
    code, text = run(argv)
    assert code == 0
    assert text.strip() == want


def test_explain_fields():
    code, text = run(["--json", "mult", "--explain", "1,1;1,1;1,1"])
    info = json.loads(text)
    assert code == 0
    assert info["omega"] == "0" and info["chamber"] and info["c"] == 2
    code, text = run(["mult", "--explain", "1,1;1,1;1,1"])
    assert "omega: 0" in text and "chamber: " in text


def test_listing_sizes():
    assert len(run(["cells", "--dim", "6"])[1].splitlines()) == 18
    assert len(run(["chambers"])[1].splitlines()) == 18
    rays = run(["rays"])[1]
    assert "STAR (1,1;1,1;1,1)" in rays and len(rays.splitlines()) == 9
    assert len(run(["symmetries", "--group", "Gg"])[1].splitlines()) == 13


def test_lr_oracle_flag():
    code, text = run(["lr", "--oracle", "2,1,0|2,1,0|3,2,1"])
    assert code == 0 and text.strip() == "2 oracle=2 agree"


def test_chamber_and_stability():
    code, text = run(["chamber", "1,1;1,2;2,1"])
    assert code == 0 and text.startswith("cell: 100000001")
    code, text = run(["--json", "stability", "1,1;1,1;1,1", "0,0;0,1;1,0"])
    assert code == 0 and json.loads(text) == {
        "t": "1,1;1,1;1,1", "u": "0,0;0,1;1,0", "stable_value": 2, "index": 0,
    }


def test_batch_order_and_threads(tmp_path, monkeypatch):
    labels = [f"{a},{b};{b},{a};{a},{b}" for a in range(6) for b in range(6)]
    path = tmp_path / "in.jsonl"
    path.write_text("\n".join(json.dumps(x) for x in labels) + "\n")
    monkeypatch.setattr("su3mult.cli.CHUNK", 7)
    serial = run(["mult", "--batch", str(path)])
    monkeypatch.setenv("SU3MULT_THREADS", "4")
    threaded = run(["mult", "--batch", str(path)])
    assert serial == threaded
    direct = [run(["mult", x])[1] for x in labels]
    assert serial[1] == "".join(direct)


def test_batch_record_shapes(tmp_path):
    path = tmp_path / "in.jsonl"
    path.write_text('"1,1;1,1;1,1"\n\n{"t": [0,0,0,0,0,0]}\n[1,0,0,0,0,0]\n')
    code, text = run(["--json", "mult", "--batch", str(path)])
    assert code == 0
    assert [json.loads(x)["c"] for x in text.splitlines()] == [2, 1, 0]
    path.write_text('{"g": "2,1,0|2,1,0|3,2,1"}\n[[1,0,0],[1,0,0],[2,0,0]]\n')
    code, text = run(["lr", "--oracle", "--batch", str(path)])
    assert code == 0 and text.splitlines() == ["2 oracle=2 agree", "1 oracle=1 agree"]


def test_batch_parse_error_reports_line(tmp_path, capsys):
    path = tmp_path / "bad.jsonl"
    path.write_text('"1,1;1,1;1,1"\n"1,1;1,1"\n')
    code, _ = run(["mult", "--batch", str(path)])
    assert code == 2
    assert "line 2" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["mult", "1,2,3"],
    ["mult"],
    ["lr", "1,0|1,0|1,0"],
    ["lr", "0,1,0|0,0,0|0,1,0"],
    ["su2", "-1", "0", "1"],
    ["chamber", "3,0;0,0;0,0"],
    ["cells", "--dim", "9"],
    ["diagram"],
    ["diagram", "--cell", "111000000"],
    ["symmetries", "--group", "H"],
    ["orbit", "--cell", "10", "--group", "G"],
    ["stability", "1,1;1,1;1,1", "1,1;1,1;1,1"],
    ["verify", "--sweep", "-1"],
    ["mult", "--batch", "/nonexistent/file.jsonl"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _ = run(argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_passes():
    code, text = run(["verify", "--sweep", "0"])
    assert code == 0
    code, text = run(["verify", "--sweep", "2"])
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "5/5 suites passed"
    assert {x.split(":")[0] for x in lines[:-1]} == {
        "PASS oracle-equivalence", "PASS ray-table", "PASS f-vector",
        "PASS group-order", "PASS symmetry-invariance",
    }


def test_verify_corrupted_ray_table(monkeypatch):
    monkeypatch.setitem(ch.RAYS, "D3", TripleLabel(0, 0, 1, 0, 1, 0))
    code, text = run(["verify", "--sweep", "0"])
    assert code == 1
    assert "FAIL ray-table" in text and "counterexample" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "su3mult", "mult", "1,1;1,1;1,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "2\n"
    proc = subprocess.run([sys.executable, "-m", "su3mult", "mult", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2
