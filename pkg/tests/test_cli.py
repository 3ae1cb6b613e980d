import io
import json

import pytest

from weakascent import cli, objects


def call(*argv, stdin=""):
    out = io.StringIO()
    code = cli.run(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def test_count():
    code, out = call("count", "--n", "5")
    assert code == 0
    record = json.loads(out)
    assert record.pop("n") == 5
    assert set(record.values()) == {106}


def test_map_seq_to_perm_text():
    code, out = call("map", "--from", "seq", "--to", "perm", "--format", "text", stdin="0 0 2 1 1 0 1 5\n")
    assert code == 0
    assert out == "6 2 7 5 4 1 3 8\n"


def test_map_seq_to_matrix_json():
    code, out = call("map", "--from", "seq", "--to", "matrix", stdin="[0,1,0]\n")
    assert code == 0
    assert json.loads(out) == [[1, 1], [0, 1]]


def test_map_poset_accepts_relations():
    stdin = json.dumps({"n": 3, "relations": [[1, 3], [2, 3]]}) + "\n"
    code, out = call("map", "--from", "poset", "--to", "seq", stdin=stdin)
    assert code == 0
    assert json.loads(out) == [0, 0, 2]


@pytest.mark.parametrize("src", objects.KINDS)
@pytest.mark.parametrize("dst", objects.KINDS)
@pytest.mark.parametrize("fmt", ["jsonl", "text"])
def test_map_round_trip(src, dst, fmt):
    _, generated = call("generate", "--object", src, "--n", "4", "--format", fmt)
    code, mapped = call("map", "--from", src, "--to", dst, "--format", fmt, stdin=generated)
    assert code == 0
    code, back = call("map", "--from", dst, "--to", src, "--format", fmt, stdin=mapped)
    assert code == 0
    assert back == generated


@pytest.mark.parametrize("kind", objects.KINDS)
def test_generate_is_deterministic_and_complete(kind):
    first = call("generate", "--object", kind, "--n", "5")[1]
    assert first == call("generate", "--object", kind, "--n", "5")[1]
    lines = first.splitlines()
    assert len(lines) == len(set(lines)) == 106


def test_generate_text_matrices_are_blank_line_separated():
    _, out = call("generate", "--object", "matrix", "--n", "2", "--format", "text")
    assert out == "10\n01\n\n11\n00\n\n"


def test_verify_passes():
    code, out = call("verify", "--suite", "all", "--max-n", "5")
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.splitlines())


def test_table_tsv():
    code, out = call("table", "--max-n", "3")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0] == ["n", "k", "a"]
    assert ["3", "3", "5"] in rows and ["3", "2", "1"] in rows


def test_series_and_bfile():
    assert call("series", "--terms", "5")[1].split() == ["1", "1", "2", "6", "23", "106"]
    assert call("bfile", "--terms", "2")[1] == "0 1\n1 1\n2 2\n"


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["count"], ["count", "--n", "0"], ["generate", "--object", "tree", "--n", "3"]],
)
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize(
    "kind, stdin",
    [
        ("seq", "0 2\n"),
        ("seq", "1 0\n"),
        ("perm", "3 4 1 2\n"),
        ("perm", "1 1 2\n"),
        ("matrix", "[[1,0],[0,0]]\n"),
        ("poset", '{"n": 4, "downset_sizes": [0, 1, 0, 2]}\n'),
        ("inv", "[0,1,0,0]\n"),
        ("seq", "not json\n"),
    ],
)
def test_invalid_objects(kind, stdin, capsys):
    code, _ = call("map", "--from", kind, "--to", "seq", stdin=stdin)
    assert code == 3
    assert "invalid object" in capsys.readouterr().err


def test_generate_cutoff(capsys):
    assert call("generate", "--object", "perm", "--n", "11")[0] == 4
    assert "cutoff" in capsys.readouterr().err
