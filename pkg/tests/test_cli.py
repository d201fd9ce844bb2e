import json

import pytest

from conftest import random_code
from nnfcodes.cli import main
from nnfcodes.codes import format_code_text


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run_json(capsys, *argv):
    assert main([*argv, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) == {"command", "params", "result"}
    return out["result"]


def test_weight_repetition(write, capsys):
    res = run_json(capsys, "weight", write("c.txt", "000\n111\n"))
    assert res["min_weight"] == 0
    assert res["distribution"] == {"0": 1, "3": 1}


def test_weight_generator_same_as_words(write, capsys):
    a = run_json(capsys, "weight", write("g.txt", "# generator\n111\n"))
    b = run_json(capsys, "weight", write("c.txt", "000\n111\n"))
    assert a == b


def test_weight_partition_flag(write, capsys):
    res = run_json(capsys, "weight", write("c.txt", "000\n011\n101\n110\n111\n001\n"))
    assert res["partitioned"] == [4, 2]


def test_weight_exclude_zero(write, capsys):
    res = run_json(capsys, "weight", write("c.txt", "000\n111\n"), "--exclude-zero")
    assert (res["min_weight"], res["witness"]) == (3, "111")
    res = run_json(capsys, "weight", write("c.txt", "000\n111\n"), "--exclude-zero", "--oracle")
    assert (res["min_weight"], res["witness"]) == (3, "111")


def test_weight_text(write, capsys):
    assert main(["weight", write("c.txt", "000\n111\n")]) == 0
    assert "min weight: 0" in capsys.readouterr().out


def test_distance_repetition(write, capsys):
    res = run_json(capsys, "distance", write("c.txt", "000\n111\n"))
    assert res["min_distance"] == 3
    assert res["pairs_total"] == 1
    assert res["witness_indices"] == [0, 1]


def test_distance_duplicate_warns(write, capsys):
    path = write("c.txt", "0101\n1100\n0011\n1100\n")
    assert main(["distance", path, "--format", "json"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["result"]["min_distance"] == 0
    assert "identical" in captured.err


def test_distance_ordered(write, capsys):
    res = run_json(capsys, "distance", write("c.txt", "000\n111\n"), "--ordered-pairs")
    assert res["ordered_distribution"] == {"0": 2, "3": 2}


@pytest.mark.parametrize("m", [8, 13])
def test_oracle_agrees(write, capsys, m, rng):
    path = write("c.txt", format_code_text(random_code(rng, m, 9)))
    for cmd in ("weight", "distance"):
        a = run_json(capsys, cmd, path)
        b = run_json(capsys, cmd, path, "--oracle")
        assert a["distribution"] == b["distribution"]
        assert a["method"] == "nnf" and b["method"] == "bruteforce"


def test_nnf_identity(write, capsys):
    res = run_json(capsys, "nnf", write("c.txt", "00\n01\n10\n11\n"))
    assert [len(p["terms"]) for p in res["polynomials"]] == [1, 1]


def test_nnf_repetition(write, capsys):
    res = run_json(capsys, "nnf", write("c.txt", "000\n111\n"))
    assert res["polynomials"] == [{"k": 1, "terms": [[1, 1]]}] * 3


def test_nnf_linear_counts(write, capsys):
    res = run_json(capsys, "nnf", write("g.txt", "# generator\n1011\n0111\n1101\n"))
    for c in res["nonzero_counts"]:
        assert c + 1 & c == 0  # of the form 2^r - 1


def test_census(capsys):
    res = run_json(capsys, "census", "1", "2")
    rows = {(r["representation"], r["k"]): r["counts"] for r in res["rows"]}
    assert rows[("ANF", 1)] == rows[("NNF", 1)] == [1, 2, 1]
    assert rows[("NNF", 2)] == [1, 4, 5, 4, 2]


def test_census_text(capsys):
    assert main(["census", "2"]) == 0
    out = capsys.readouterr().out
    assert "1 4 5 4 2" in " ".join(out.split())


def test_bench(capsys):
    res = run_json(capsys, "bench", "bf-linear", "--k-min", "3", "--k-max", "4", "--trials", "2")
    assert [r["exponent"] for r in res["reports"][0]["rows"]] == [2.0, 2.0]


@pytest.mark.parametrize(
    "argv,text,code",
    [
        (["weight"], None, 2),
        (["weight"], "0a\n", 3),
        (["nnf"], "00\n01\n11\n", 5),
        (["distance", "--max-k", "1"], "00\n01\n10\n11\n", 5),
        (["distance"], "01\n", 5),
    ],
)
def test_exit_codes(write, capsys, argv, text, code):
    path = write("c.txt", text) if text is not None else "/nonexistent/file.txt"
    assert main([argv[0], path, *argv[1:]]) == code


def test_overflow_exit_code(write, capsys, monkeypatch):
    from nnfcodes import cli
    from nnfcodes.errors import IntegerOverflow

    def boom(code):
        raise IntegerOverflow(phase="hypercube evaluation")

    monkeypatch.setattr(cli, "weight_distribution", boom)
    assert main(["weight", write("c.txt", "0\n1\n")]) == 4
    assert "hypercube evaluation" in capsys.readouterr().err
