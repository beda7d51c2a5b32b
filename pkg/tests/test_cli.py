import json
import os
import subprocess
import sys

import pytest

from tgpdeform.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def js(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_kostka(capsys):
    assert js(capsys, "kostka", "--shape", "2,2", "--content", "1,1,1,1", "--modified") == (0, {"2": 1, "4": 1})
    assert js(capsys, "kostka", "--shape", "3", "--content", "3") == (0, 1)
    assert js(capsys, "kostka", "--shape", "2,2", "--content", "3,1") == (0, 0)


def test_cocharge(capsys):
    code, out = js(capsys, "cocharge", "--word", "422311123")
    assert code == 0 and out["cocharge"] == 6
    assert js(capsys, "cocharge", "--word", "4,2,2,3,1,1,1,2,3")[1] == out


def test_dim(capsys):
    assert js(capsys, "dim", "--lambda", "2,1", "--params", "1,1") == (0, {"dim": 3, "d_lambda": 3, "flat": True})
    assert js(capsys, "dim", "--lambda", "4")[1]["dim"] == 24
    assert js(capsys, "dim", "--lambda", "1,1,1")[1]["dim"] == 1


def test_gchar(capsys):
    code, out = js(capsys, "gchar", "--lambda", "4")
    assert code == 0 and out["match"]
    g = out["graded_character"]
    assert g == {
        "0": {"(4)": 1},
        "1": {"(3,1)": 1},
        "2": {"(3,1)": 1, "(2,2)": 1},
        "3": {"(3,1)": 1, "(2,1,1)": 1},
        "4": {"(2,2)": 1, "(2,1,1)": 1},
        "5": {"(2,1,1)": 1},
        "6": {"(1,1,1,1)": 1},
    }
    assert js(capsys, "gchar", "--lambda", "1,1")[1]["graded_character"] == {"0": {"(2)": 1}}
    assert js(capsys, "gchar", "--lambda", "2")[1]["graded_character"] == {"0": {"(2)": 1}, "1": {"(1,1)": 1}}


def test_other_commands(capsys):
    assert js(capsys, "char", "--lambda", "2,1", "--params", "1,2")[1]["character"] == {"(3)": 1, "(2,1)": 1}
    assert js(capsys, "flat-check", "--lambda", "3,1", "--params", "5,5,7")[1]["checks"]["flat"]
    assert js(capsys, "split-check", "--lambda", "2,1,1", "--params", "1,2")[1]["dim"] == 4
    assert js(capsys, "schur-weyl", "--lambda", "2,2", "--params", "1,2", "--rank", "4")[1]["ok"]
    assert js(capsys, "tanisaki", "--lambda", "2,1", "--params", "3,3", "--reduced")[1]["count"] == 5
    code, out = js(capsys, "rep-matrices", "--lambda", "2,1", "--params", "1,2", "--amended")
    assert code == 0 and out["relations"]
    code, out = js(capsys, "example6", "--a", "1", "--b", "2")
    assert code == 0 and out["generic"]["irreducible"]


@pytest.mark.parametrize("argv,code", [
    (["kostka", "--shape", "2,x", "--content", "3"], 2),
    (["cocharge", "--word", "1 x"], 2),
    (["dim"], 2),
    (["nonsense"], 2),
    (["dim", "--lambda", "2,1", "--params", "1,q"], 2),
    (["kostka", "--shape", "2,2", "--content", "3"], 3),
    (["cocharge", "--word", "1223"], 3),
    (["dim", "--lambda", "2,1", "--params", "1"], 3),
    (["rep-matrices", "--lambda", "2,1", "--params", "0,1", "--amended"], 3),
    (["example6", "--a", "0", "--b", "1"], 3),
    (["suite", "--max-d", "8"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_check_failure_exit(capsys, monkeypatch):
    import tgpdeform.limits as limits
    monkeypatch.setattr(limits, "example_report", lambda a, b: {"ok": False})
    assert run(capsys, "example6", "--a", "1", "--b", "2")[0] == 1


def test_theorem_violation_exit(capsys, monkeypatch):
    import tgpdeform.tgp as tgp
    monkeypatch.setattr(tgp, "d_lambda", lambda lam: -1)
    assert run(capsys, "dim", "--lambda", "2,1")[0] == 4


def test_suite_small(capsys):
    code, out = js(capsys, "suite", "--max-d", "1")
    assert code == 0 and out["ok"] and out["partitions"] == 1


def test_pretty_and_timing(capsys):
    code, out, err = run(capsys, "--pretty", "--timing", "dim", "--lambda", "2,1")
    assert code == 0
    assert out.splitlines()[0].split() == ["dim", "3"]
    assert "wall time" in err


def test_byte_identical_output():
    argv = [sys.executable, "-m", "tgpdeform", "suite", "--max-d", "3", "--trials", "3", "--seed", "7"]
    env = dict(os.environ, TGP_THREADS="2")
    first = subprocess.run(argv, capture_output=True, env=env, check=True).stdout
    second = subprocess.run(argv, capture_output=True, env=dict(env, TGP_THREADS="1"), check=True).stdout
    assert first == second
    assert json.loads(first)["ok"]
