import hashlib
import json
import subprocess
import sys
from pathlib import Path

import pytest

from spincover.cli import COMMANDS, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_colourings_of_figure1(capsys):
    code, rep, err = report(capsys, "colourings", DATA / "fig1.json")
    assert code == 0 and rep["pass"]
    assert rep["subcommand"] == "colourings"
    assert rep["input_digest"] == hashlib.sha256((DATA / "fig1.json").read_bytes()).hexdigest()
    assert rep["results"]["kappa_max"] == [2, 2, 1, 1]
    assert rep["results"]["c"] == 2
    assert len(rep["results"]["admissible"]) == 4
    assert err.startswith("elapsed ")


def test_weyl_orders_a2(capsys):
    code, rep, _ = report(capsys, "weyl", "orders", DATA / "a2.json")
    assert code == 0
    assert rep["results"] == {"W": 6, "Wtilde": 24, "What": 48, "c": 1, "colouring": [2, 2], "formula": "pass"}


@pytest.mark.parametrize(
    "argv",
    [
        ("diagram", "validate", "a2.json"),
        ("transform", "dl", "fig1.json"),
        ("transform", "unfold", "c2.json"),
        ("rank2", "verify", "k55.json"),
        ("amalgam", "utilde", "k55.json"),
        ("spinrep", "image", "a3.json"),
        ("weyl", "verify", "g2.json"),
        ("weyl", "presentation", "fig1.json"),
        ("weyl", "orders", "c2.json"),
        ("clifford", "check"),
    ],
)
def test_every_subcommand_succeeds(capsys, argv):
    args = [*argv[:-1], DATA / argv[-1]] if argv[-1].endswith(".json") else list(argv)
    code, rep, _ = report(capsys, *args)
    assert code == 0 and rep["pass"]
    assert rep["subcommand"] == " ".join(argv[: len(argv) - (1 if argv[-1].endswith(".json") else 0)])


def test_command_table_covers_required_subcommands():
    required = {
        ("diagram", "validate"),
        ("colourings",),
        ("transform", "dl"),
        ("transform", "unfold"),
        ("clifford", "check"),
        ("rank2", "verify"),
        ("amalgam", "utilde"),
        ("spinrep", "image"),
        ("weyl", "orders"),
        ("weyl", "verify"),
        ("weyl", "presentation"),
        ("suite",),
    }
    assert required <= set(COMMANDS)


def test_flags(capsys):
    code, rep, _ = report(capsys, "weyl", "presentation", DATA / "a2.json", "--family", "w")
    assert rep["results"]["family"] == "W"
    code, rep, _ = report(capsys, "colourings", DATA / "fig1.json", "--colouring", "[2,1,1,1]")
    assert code == 0
    code, rep, _ = report(capsys, "weyl", "orders", DATA / "a2.json", "--colouring", "trivial")
    assert rep["results"]["What"] == 24
    code, out, _ = run(capsys, "weyl", "orders", DATA / "a2.json", "--format", "text")
    assert code == 0 and "What" in out and not out.lstrip().startswith("{")


def test_input_errors_exit_two(capsys, tmp_path):
    code, out, err = run(capsys, "diagram", "validate", DATA / "bad.json")
    assert code == 2 and out == ""
    assert "ZeroNotSymmetric" in err and "(2,1)" in err
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert run(capsys, "colourings", empty)[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text('{"cartan": [[2, -1], [-1, 2]')
    code, _, err = run(capsys, "colourings", broken)
    assert code == 2 and "line 1" in err
    assert run(capsys, "colourings", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "colourings", DATA / "fig1.json", "--colouring", "[2,2,2,2]")[0] == 2
    assert run(capsys, "weyl", "orders", DATA / "fig1.json")[0] == 2


def test_cap_exceeded_exits_one(capsys):
    code, _, err = run(capsys, "weyl", "orders", DATA / "g2.json", "--cap", "5")
    assert code == 1 and err


def test_unknown_flag_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["colourings", str(DATA / "a2.json"), "--bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "spincover", "weyl", "verify", str(DATA / "fig1.json")]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout
