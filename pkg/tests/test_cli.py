import json
import subprocess
import sys

import pytest

from alphaline.cli import main
from alphaline.io import load_graph


def test_generate_and_solve(tmp_path, capsys):
    out = tmp_path / "h.col"
    assert main(["generate", "helm:n=4", "--out", str(out)]) == 0
    g = load_graph(out)
    assert (g.n, g.m) == (9, 12)
    assert main(["solve", str(out), "--what", "alpha"]) == 0
    assert "alpha = 5" in capsys.readouterr().out
    assert main(["solve", str(out), "--what", "nu"]) == 0
    assert "nu = 4" in capsys.readouterr().out
    assert main(["solve", str(out), "--what", "alpha-line"]) == 0
    text = capsys.readouterr().out
    assert "alpha-line = 4" in text
    witness = json.loads(text.split("witness (1-based) = ")[1].splitlines()[0])
    assert len(witness) == 4


def test_generate_json_stdout(capsys):
    assert main(["generate", "sun:n=3", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 6 and len(doc["edges"]) == 9


def test_verify_exit_codes(capsys):
    assert main(["verify", "--family", "helm:n=3..5", "--format", "csv"]) == 0
    assert main(["verify", "--family", "wheel:n=3..4", "--format", "csv"]) == 1
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--family", "wheel:n=2..4"],
        ["verify", "--family", "nope:n=3"],
        ["generate", "helm:n=1"],
        ["theorem1", "--count", "1", "--max-edges", "40"],
    ],
)
def test_config_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--oracle", "maybe"])
    assert info.value.code == 2


def test_solve_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 3 1\ne 1 1\n")
    assert main(["solve", str(bad)]) == 2


def test_theorem1_command(capsys):
    assert main(["theorem1", "--count", "20", "--max-vertices", "8", "--max-edges", "12",
                 "--seed", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["passed"] == 20 and doc["counterexamples"] == []


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "alphaline", "verify", "--family", "sunlet:n=3..4", "--format", "csv"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1].startswith("sunlet,3,3,3,6,9,true")
