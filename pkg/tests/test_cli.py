import json

import pytest

from affevac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_evac_trace(capsys):
    code, out, _ = run(capsys, "evac", "2 3 5 7|1 4|6", "--route", "both", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["flip", "2|4", "7|1", "3", "5", "6"]
    assert lines[-1] == "2 4 6 7|1 3|5"


def test_evac_json(capsys):
    code, out, _ = run(capsys, "evac", "1 2|3 4", "--route", "both", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["agree"] is True
    assert data["results"] == {"rmatrix": "1 2|3 4", "rsk": "1 2|3 4"}


def test_evac_variant(capsys):
    code, out, _ = run(capsys, "evac", "1 2", "--variant", "1")
    assert code == 0 and out.strip() == "1 2"


def test_evac_parse_error(capsys):
    code, _, err = run(capsys, "evac", "1 2|x 4")
    assert code == 2
    assert "parse error" in err and "position" in err


def test_rsk_command(capsys):
    code, out, _ = run(capsys, "rsk", "2 3 5 7|1 4|6")
    assert code == 0
    assert out.splitlines() == ["P: 1 2 3 5 7/4/6", "Q: 1 2 3 3 3/2/3"]


def test_table_plain_and_json(capsys):
    code, out, _ = run(capsys, "table", "4")
    assert code == 0
    body = out.splitlines()[1:]
    assert [line.split()[1] for line in body] == ["1", "2", "4", "4", "8"]
    code, out, _ = run(capsys, "table", "4", "--format", "json")
    assert [r["t"] for r in json.loads(out)] == [1, 2, 4, 4, 8]


def test_table_single_shape_and_variant(capsys):
    code, out, _ = run(capsys, "table", "2,2", "--variant", "1", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0
    assert row["t"] == 4 and row["variants"] == {"1": 0}
    code, out, _ = run(capsys, "table", "3", "--shape", "--format", "json")
    assert [r["shape"] for r in json.loads(out)] == [[3]]


def test_table_cache(capsys, tmp_path):
    cache = tmp_path / "t.csv"
    code, first, _ = run(capsys, "table", "3", "--cache", str(cache))
    assert code == 0 and cache.exists()
    text = cache.read_text()
    code, second, _ = run(capsys, "table", "3", "--cache", str(cache))
    assert second == first
    assert cache.read_text() == text


def test_nmax_ceiling(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "core", "--n-max", "13")
    assert code == 2 and "ceiling" in err
    code, _, _ = run(capsys, "table", "9", "--n-max", "8")
    assert code == 2
    monkeypatch.setenv("AFFEVAC_NMAX", "3")
    code, _, _ = run(capsys, "table", "4")
    assert code == 2
    monkeypatch.setenv("AFFEVAC_NMAX", "bad")
    code, _, _ = run(capsys, "table", "2")
    assert code == 2


@pytest.mark.parametrize("suite,n", [("counting", "6"), ("rigged", "5"), ("conjecture", "6")])
def test_verify_suites(capsys, suite, n):
    code, out, _ = run(capsys, "verify", suite, "--n-max", n)
    assert code == 0
    assert out.startswith("[PASS]") or out.startswith("[REPORTED]")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "poly", "--n-max", "4", "--format", "json")
    (row,) = json.loads(out)
    assert code == 0 and row["suite"] == "poly" and row["ok"] is True


def test_rigged(capsys):
    code, out, _ = run(capsys, "rigged", "1 1 1 3 4/2 2/3 4/5")
    assert code == 0
    assert out.splitlines()[-1] == "cc = 11"
    code, out, _ = run(capsys, "rigged", "1 1 1 3 4/2 2/3 4/5", "--theta")
    assert out.splitlines()[-1] == "cc = 12"
    code, out, _ = run(capsys, "rigged", "--shape", "2,1", "--content", "1,1,1", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 2
    code, _, _ = run(capsys, "rigged")
    assert code == 2


def test_dominoes(capsys):
    code, out, _ = run(capsys, "dominoes", "4,2", "--list")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "3 domino tableaux of shape 4,2"
    assert len(lines) == 4
    code, out, _ = run(capsys, "dominoes", "3,3,1", "--format", "json")
    assert json.loads(out)["count"] == 3


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "table", "x")[0] == 2
    assert run(capsys, "dominoes", "1,2")[0] == 2


def test_evac_modulus(capsys):
    code, out, _ = run(capsys, "evac", "7 9|5", "--modulus", "3")
    assert code == 0
    assert out.strip() == "1 2|3"
