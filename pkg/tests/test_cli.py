import json
import subprocess
import sys

import pytest

from weylorbit import cli
from weylorbit.decomp import Decomposition
from weylorbit.export import emit_decomposition, emit_figure_data
from weylorbit.modular import FusionError


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


PRODUCT = "product --algebra G2 --M 20 --left C --lw 3,5 --right S --rw 1,1".split()


def test_product_document(capsys):
    code, out, _ = run(PRODUCT, capsys)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"algebra", "ring", "basis", "left", "right", "terms"}
    assert doc["basis"] == "S" and doc["ring"] == "discretized"
    terms = {tuple(t["weight"]): t["coeff"] for t in doc["terms"]}
    assert terms == {(4, 2): -1, (2, 5): 1, (5, 1): 1, (1, 7): -1, (2, 4): 1, (4, 1): -1,
                     (1, 6): -1}


@pytest.mark.parametrize("argv", [
    PRODUCT,
    "galois --algebra G2 --M 13 --ell 7".split(),
    "grid --algebra C3 --M 5 --set Lambda".split(),
    "eval --algebra A2 --M 4 --kind S --lw 1,2".split(),
    "smatrix --algebra G2 --level 2".split(),
    "fusion --algebra A2 --level 2 --no-cache --format csv".split(),
    "figure --algebra G2 --M 20 --kind foldArrows --left S --lw 3,5 --right S --rw 1,1".split(),
    "algebra-info --algebra F4".split(),
])
def test_deterministic(argv, capsys):
    a = run(argv, capsys)
    b = run(argv, capsys)
    assert a[0] == 0 and a[1] == b[1] and a[1]


@pytest.mark.parametrize("argv", [
    PRODUCT,
    "galois --algebra G2 --M 13 --ell 7".split(),
    "galois --algebra G2 --M 13 --ell 9 --check --arrows".split(),
    "grid --algebra G2 --M 6 --set F --interior --format csv".split(),
    "fusion --algebra A1 --level 3 --no-cache".split(),
    "product --algebra A2 --left S --lw 1,1 --right C --rw 2,0 --output out.json".split(),
    "verify --only 4".split(),
])
def test_round_trip(argv):
    cfg = cli.parse_args(argv)
    assert cli.parse_args(cfg.to_argv()) == cfg


@pytest.mark.parametrize("argv", [
    "product --algebra G2 --M 0 --left C --lw 3,5 --right S --rw 1,1",
    "product --algebra Q7 --left C --lw 3,5 --right S --rw 1,1",
    "product --algebra G2 --left C --lw 3,x --right S --rw 1,1",
    "product --algebra G2 --left C --lw 3,5,1 --right S --rw 1,1",
    "product --algebra G2 --left C --lw 3,5 --right S --rw 0,1",
    "galois --algebra G2 --M 13 --ell 26",
    "eval --algebra A2 --M 4 --kind C --lw 1,1 --point 9,9",
    "smatrix --algebra G2 --level -1",
    "algebra-info --algebra G2 --format csv",
    "figure --algebra G2 --M 6 --kind pie",
    "",
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(argv.split())
    assert e.value.code == 2


def test_computation_failure_exit_code(capsys, monkeypatch):
    def boom(*a, **k):
        raise FusionError("not integral")

    monkeypatch.setattr(cli, "fusion_triples", boom)
    code, _, err = run("fusion --algebra A1 --level 2".split(), capsys)
    assert code == 1 and "not integral" in err


def test_output_file(tmp_path, capsys):
    path = tmp_path / "d.json"
    code, out, _ = run(PRODUCT + ["--output", str(path)], capsys)
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["algebra"] == "G2"


def test_empty_decomposition(g2):
    doc = emit_decomposition(g2, Decomposition("S", 5), ("C", (0, 0)), ("S", (1, 1)))
    assert doc["terms"] == []


def test_figure_documents(g2):
    grid = emit_figure_data(g2, "grid", M=6)
    assert len(grid["labels"]) == 7 and len(grid["domain_vertices"]) == 3
    assert grid["domain_vertices"][1] == ["2", "0"]
    assert len(grid["cosets"]) == 36
    arrows = emit_figure_data(g2, "foldArrows", M=20, left="C", lw=(3, 5), right="C", rw=(1, 1))
    assert {"from": ["4", "6"], "to": ["4", "2"], "sign": 1} in arrows["arrows"]
    gal = emit_figure_data(g2, "galoisArrows", M=13, ell=7)
    assert len(gal["arrows"]) == sum(1 for a in range(5) for b in range(7) if 3 * a + 2 * b <= 13)
    assert any(a["sign"] == "undefined" for a in gal["arrows"])
    for a in gal["arrows"]:
        x, y = map(int, a["from"])
        interior = x > 0 and y > 0 and 3 * x + 2 * y < 13
        assert (a["sign"] in (1, -1)) == interior
    with pytest.raises(ValueError):
        emit_figure_data(g2, "pie")


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "weylorbit.cli", "algebra-info", "--algebra", "G2"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout)["dual_coxeter"] == 4


def test_help_mentions_cache_env(capsys):
    with pytest.raises(SystemExit):
        cli.main(["--help"])
    assert "WEYLORBIT_CACHE_DIR" in capsys.readouterr().out
