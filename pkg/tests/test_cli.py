import io
import json
import subprocess
import sys

import pytest

from spexlab.cli import main
from spexlab.constructions import make_S_plus
from spexlab.graph6 import graph6_decode, graph6_encode


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out)
    return code, out.getvalue()


def test_construct():
    code, text = run(["construct", "--family", "S+", "--n", "9", "--k", "2"])
    assert code == 0
    assert text.strip() == graph6_encode(make_S_plus(9, 2))
    assert len(text.splitlines()) == 1


def test_construct_missing_argument(capsys):
    code, _ = run(["construct", "--family", "K", "--a", "3"])
    assert code == 2
    assert "--b" in capsys.readouterr().err


def test_usage_errors():
    assert run(["nonsense"])[0] == 2
    assert run(["enum", "--n", "5", "--spec", "1,2"])[0] == 2
    assert run(["enum", "--n", "12"])[0] == 2
    assert run(["--workers", "0", "enum", "--n", "3"])[0] == 2
    assert run(["spectrum", "--input", "/nonexistent/file.g6"])[0] == 2


def test_spectrum_from_stdin(monkeypatch):
    code, text = run(["spectrum", "--format", "json"], stdin="Bw\nC~\n", monkeypatch=monkeypatch)
    assert code == 0
    d = json.loads(text)
    assert d["schema"] == 1
    assert [round(r["lambda"], 9) for r in d["results"]] == [2.0, 3.0]


def test_spectrum_csv(monkeypatch):
    code, text = run(["spectrum", "--perron"], stdin="Bw\n", monkeypatch=monkeypatch)
    lines = text.splitlines()
    assert lines[0].startswith("n,lambda") and lines[1].startswith("3,")


def test_check_free(monkeypatch):
    code, text = run(["check-free", "--spec", "2", "--witness"], stdin="C~\nCh\n", monkeypatch=monkeypatch)
    recs = [json.loads(l) for l in text.splitlines()]
    assert code == 0
    assert recs[0]["free"] is False and "witness" in recs[0]
    assert recs[1]["free"] is True


def test_check_free_explicit_graph(monkeypatch):
    # triangle against K4 and the path on four vertices
    code, text = run(["check-free", "--forbidden", "Bw"], stdin="C~\nCh\n", monkeypatch=monkeypatch)
    assert [json.loads(l)["free"] for l in text.splitlines()] == [False, True]


def test_enum():
    code, text = run(["enum", "--n", "5", "--connected"])
    assert code == 0 and len(text.splitlines()) == 21
    code, text = run(["enum", "--n", "6", "--spec", "2", "--no-prune"])
    code2, text2 = run(["enum", "--n", "6", "--spec", "2"])
    assert sorted(text.splitlines()) == sorted(text2.splitlines())


def test_ex_and_spex_search():
    code, text = run(["ex-search", "--n", "6", "--spec", "2", "--format", "json"])
    assert code == 0 and json.loads(text)["optimum"] == 7
    code, text = run(["spex-search", "--spec", "3", "--n", "8", "--format", "json"])
    d = json.loads(text)
    assert code == 0 and d["schema"] == 1 and d["unique"]
    code, text = run(["spex-search", "--forbidden", "A_", "--n", "4"])
    assert code == 0 and "optimum=0" in text


def test_spex_search_from_file(tmp_path):
    path = tmp_path / "in.g6"
    code, text = run(["enum", "--n", "6"])
    path.write_text(text)
    _, a = run(["spex-search", "--spec", "2", "--n", "6", "--input", str(path), "--format", "json"])
    _, b = run(["spex-search", "--spec", "2", "--n", "6", "--format", "json"])
    da, db = json.loads(a), json.loads(b)
    assert da["argmax"] == db["argmax"]


def test_bounds_table():
    code, text = run(["bounds", "--n", "10,100", "--spec", "2", "--spec", "2,2"])
    lines = text.splitlines()
    assert code == 0 and len(lines) == 6 and lines[-1].startswith("# aks_bound")


def test_verify_exit_codes(tmp_path):
    code, text = run(["verify", "--claim", "degree-squares", "--spec", "2", "--nmax", "7"])
    assert code == 0 and json.loads(text)["records"][0]["verdict"] == "pass"
    code, _ = run(["verify", "--claim", "lambda-bounds", "--spec", "2", "--n", "100"])
    assert code == 1
    assert run(["verify", "--claim", "degree-squares", "--spec", "2"])[0] == 2
    out = tmp_path / "rec.json"
    code, text = run(["verify", "--claim", "kab-containment", "--spec", "3", "--output", str(out)])
    assert code == 0 and text == "" and json.loads(out.read_text())["schema"] == 1


def test_verify_disjoint_paths_deterministic():
    argv = ["verify", "--claim", "disjoint-paths", "--spec", "2,2", "--n", "12", "--trials", "300", "--seed", "42"]
    assert run(argv)[1] == run(argv)[1]


def test_json_byte_identical_across_processes():
    argv = [sys.executable, "-m", "spexlab.cli", "spex-search", "--spec", "2", "--n", "7", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["schema"] == 1
