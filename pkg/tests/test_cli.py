import json

import pytest

from twobridge.cli import main, render_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_73_26(capsys):
    code, out, _ = run(capsys, "expand", "--alpha", "73", "--beta", "26")
    assert code == 0
    assert "K(73,26)" in out
    row = next(l for l in out.splitlines() if l.startswith("(2,4) "))
    assert "[3,-6,2,-2,2,-2]" in row


def test_expand_31_12_json(capsys):
    code, out, _ = run(capsys, "expand", "--alpha", "31", "--beta", "12", "--format", "json")
    d = json.loads(out)
    assert len(d["entries"]) == 8
    assert all(e["expansion"] is not None for e in d["entries"])
    assert set(d["collisions"]) == {"0", "4"}


def test_expand_text_rows(capsys):
    _, out, _ = run(capsys, "expand", "--alpha", "31", "--beta", "12")
    rows = [l for l in out.splitlines() if l.startswith("(")]
    assert len(rows) == 8
    assert "repeated: 0: (1,3) (3,5); 4: (3) (2,5)" in out


def test_even_alpha_rejected(capsys):
    code, _, err = run(capsys, "expand", "--alpha", "4", "--beta", "1")
    assert code == 2
    assert "alpha must be odd" in err


def test_gcd_rejected(capsys):
    code, _, err = run(capsys, "slopes", "--alpha", "9", "--beta", "3")
    assert code == 2
    assert "coprime" in err


def test_slopes_json_collisions(capsys):
    code, out, _ = run(capsys, "slopes", "--alpha", "31", "--beta", "12", "--format", "json")
    assert code == 0
    assert json.loads(out)["collisions"] == {"0": [[1, 3], [3, 5]], "4": [[3], [2, 5]]}


@pytest.mark.parametrize("alpha, beta, slopes", [(5, 2, [-4, 0, 4]), (3, 1, [0, 6])])
def test_slopes_sets(capsys, alpha, beta, slopes):
    _, out, _ = run(capsys, "slopes", "--alpha", str(alpha), "--beta", str(beta), "--format", "json")
    d = json.loads(out)
    assert [s for s, _ in d["slopes"]] == slopes
    assert d["collisions"] == {}
    _, text, _ = run(capsys, "slopes", "--alpha", str(alpha), "--beta", str(beta))
    assert "slopes: " + " ".join(map(str, slopes)) in text
    assert "repeated: none" in text


def test_mirror_input_is_folded(capsys):
    _, out, _ = run(capsys, "slopes", "--alpha", "3", "--beta", "2", "--format", "json")
    d = json.loads(out)
    assert (d["alpha"], d["beta"]) == (3, 1)
    assert d["input"] == {"alpha": 3, "beta": 2}


def test_canonical_flag(capsys):
    _, out, _ = run(capsys, "slopes", "--alpha", "73", "--beta", "26", "--canonical", "--format", "json")
    assert json.loads(out)["beta"] == 14


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_row_formats(capsys, fmt):
    code, out, _ = run(capsys, "expand", "--alpha", "31", "--beta", "12", "--format", fmt)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == (9 if fmt == "csv" else 8)


def test_json_round_trip(capsys):
    for argv in (["expand", "--alpha", "73", "--beta", "26"], ["slopes", "--alpha", "33", "--beta", "10"]):
        _, out, _ = run(capsys, *argv, "--format", "json")
        assert render_json(json.loads(out)) == out


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-alpha", "3")
    assert code == 0
    assert out.startswith("PASS: 1 knots")


def test_verify_99(capsys):
    code, out, _ = run(capsys, "verify", "--max-alpha", "99")
    assert code == 0
    assert "PASS" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    import twobridge.cli as cli

    monkeypatch.setattr(cli, "verify_knot", lambda k: (1, "boom"))
    code, out, _ = run(capsys, "verify", "--max-alpha", "5")
    assert code == 1
    assert "FAIL" in out and "boom" in out


def test_census_files_identical(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    code, out, _ = run(capsys, "census", "--min-alpha", "3", "--max-alpha", "101", "--out", str(a))
    assert code == 0
    summary = json.loads(out)
    run(capsys, "census", "--min-alpha", "3", "--max-alpha", "101", "--out", str(b), "--workers", "2")
    assert a.read_bytes() == b.read_bytes()
    assert summary["knots"] == len(a.read_text().splitlines()) - 1
    line = next(l for l in a.read_text().splitlines() if l.startswith("31,12,"))
    assert line.split(",")[6] == "true"


def test_census_jsonl_by_extension(capsys, tmp_path):
    out = tmp_path / "c.jsonl"
    code, _, _ = run(capsys, "census", "--max-alpha", "15", "--out", str(out))
    assert code == 0
    first = json.loads(out.read_text().splitlines()[0])
    assert (first["alpha"], first["beta"]) == (3, 1)


def test_census_io_error(capsys, tmp_path):
    code, _, err = run(capsys, "census", "--max-alpha", "15", "--out", str(tmp_path / "missing" / "c.csv"))
    assert code == 3
    assert "error" in err


def test_census_bad_range(capsys, tmp_path):
    code, _, _ = run(capsys, "census", "--min-alpha", "9", "--max-alpha", "5", "--out", str(tmp_path / "x"))
    assert code == 2
