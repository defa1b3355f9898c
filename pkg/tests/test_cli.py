import json

from sextic19.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 39
    assert "A_17+A_2" in out


def test_list_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "list")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 39
    assert doc["items"][0]["id"] == 1


def test_show(capsys):
    code, out, _ = run_cli(capsys, "show", "3")
    assert code == 0
    assert "t^2 - 3" in out


def test_show_unknown_id(capsys):
    code, _, err = run_cli(capsys, "show", "40")
    assert code == 2
    assert "no record" in err


def test_verify_single_json(capsys):
    code, out, _ = run_cli(capsys, "--json", "--jobs", "1", "verify", "25")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    item = doc["items"][0]
    assert sorted(item.keys()) == ["checks", "claims", "curve", "passed",
                                   "seconds"]
    assert item["checks"]["milnor_total"] == 19
    assert item["checks"]["delta_total"] == 10


def test_verify_needs_ids(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2


def test_verify_corrupted_corpus(tmp_path, capsys):
    import json as _json

    from sextic19.database import default_corpus_path

    doc = _json.load(open(default_corpus_path()))
    # swap two even locations of curve 25 (A_4 and A_2)
    evens = doc["curves"][24]["even"]
    evens[1]["location"], evens[2]["location"] = (
        evens[2]["location"], evens[1]["location"])
    bad = tmp_path / "corrupt.json"
    bad.write_text(_json.dumps(doc))
    code, out, _ = run_cli(capsys, "--corpus", str(bad), "--jobs", "1",
                           "verify", "25")
    assert code == 1
    assert "FAIL" in out


def test_hilbert(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "6", "5", "3")
    assert code == 0
    assert "-1" in out
    code, out, _ = run_cli(capsys, "--json", "hilbert", "6", "5", "inf")
    assert json.loads(out)["symbol"] == 1


def test_conic_solve(capsys):
    code, out, _ = run_cli(capsys, "--json", "conic-solve", "6", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "unsolvable"
    assert "3" in doc["obstructions"]


def test_dual(capsys):
    code, out, _ = run_cli(capsys, "dual", "33")
    assert code == 0
    assert "dual degree 5" in out


def test_reduce(capsys):
    code, out, _ = run_cli(capsys, "--json", "reduce", "36")
    assert code == 0
    doc = json.loads(out)
    assert doc["Q"] == "24*u^2 + 1620 - v^2"
    assert doc["solvability"]["verdict"] == "unsolvable"


def test_implicitize(capsys):
    code, out, _ = run_cli(capsys, "--json", "implicitize", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 6
    assert doc["map_degree"] == 1


def test_corpus_env_override(tmp_path, capsys, monkeypatch):
    import shutil

    from sextic19.database import default_corpus_path

    copy = tmp_path / "corpus_copy.json"
    shutil.copyfile(default_corpus_path(), copy)
    monkeypatch.setenv("SEXTIC19_CORPUS", str(copy))
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    assert len([l for l in out.splitlines() if l.strip()]) == 39
