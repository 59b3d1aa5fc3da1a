import subprocess
import sys

import pytest

from semigreen.cli import main

BRANDT = """5
0 0 0 0 0
0 1 0 3 0
0 0 2 0 4
0 0 3 0 1
0 4 0 2 0
labels: 0 e f a b
"""

# ab = f instead of e
BRANDT_BAD = BRANDT.replace("0 0 3 0 1", "0 0 3 0 2")


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"b2.txt": BRANDT, "bad.txt": BRANDT_BAD,
                       "i3.gens": "p 3: 2 1 3\np 3: 2 3 1\np 3: 1 2 -\n",
                       "fe.gens": "p 3: 2 3 -\np 3: 1 - -\n",
                       "junk.txt": "3\n0 1\n"}.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze(files, capsys):
    code, out, _ = run(["analyze", files["b2.txt"]], capsys)
    assert code == 0
    assert "order: 5" in out
    assert "J_classes: 2" in out
    assert "stable: true" in out


def test_analyze_kv_is_deterministic(files, capsys):
    _, a, _ = run(["analyze", files["i3.gens"], "--format", "kv"], capsys)
    _, b, _ = run(["analyze", files["i3.gens"], "--format", "kv"], capsys)
    assert a == b
    assert "[green]" in a and "order=34" in a


def test_eggbox(files, capsys):
    code, out, _ = run(["eggbox", files["b2.txt"]], capsys)
    assert code == 0 and "| *e | a  |" in out
    code, out, _ = run(["eggbox", files["b2.txt"], "--dot"], capsys)
    assert code == 0 and out.startswith("digraph")


def test_stability(files, capsys):
    code, out, _ = run(["stability", files["b2.txt"]], capsys)
    assert code == 0
    assert "kw1_stable: true" in out


def test_inherit_labels(files, capsys):
    code, out, _ = run(["inherit", files["b2.txt"], "--sub", "e,f"], capsys)
    assert code == 0
    assert "members: 0 e f" in out
    assert "D: contains=true equals=false" in out
    assert "(e, f)" in out


def test_inherit_indices_and_generator_file(files, capsys):
    code, out, _ = run(["inherit", files["b2.txt"], "--sub", "1,3"], capsys)
    assert code == 0 and "members: 0 e a" in out and "near_miss" in out
    code, out, _ = run(["inherit", files["i3.gens"], "--sub", files["fe.gens"]], capsys)
    assert code == 0 and "order: 5" in out


def test_enumerate(files, capsys):
    code, out, _ = run(["enumerate-subs", files["b2.txt"], "--max-seed", "2"], capsys)
    assert code == 0
    assert "{0 e f} order=3 regular not_inherited=DJ" in out
    assert out.strip().splitlines()[-1].startswith("total: ")


def test_paper_suite_only(capsys):
    code, out, _ = run(["paper-suite", "--only", "bicyclic"], capsys)
    assert code == 0
    assert "== bicyclic ==" in out and "== dj ==" not in out


def test_paper_suite_replace_corrupt(files, capsys):
    code, out, _ = run(["paper-suite", "--replace", f"brandt_b2={files['bad.txt']}"], capsys)
    assert code == 1
    assert "FAIL" in out


@pytest.mark.parametrize("argv", [
    ["analyze", "/nonexistent/file"],
    ["analyze", "junk.txt"],
    ["analyze", "bad.txt"],
    ["inherit", "b2.txt", "--sub", "zz"],
    ["inherit", "b2.txt", "--sub", "9"],
    ["paper-suite", "--replace", "nofile"],
])
def test_input_errors_exit_2(files, capsys, argv):
    argv = [files.get(a, a) for a in argv]
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err.startswith("semigreen: error:")


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "semigreen.cli", "stability", files["b2.txt"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "stable: true" in proc.stdout
