import json

import pytest

from dodgson import Matrix
from dodgson.condense import (CondenseLevel, Done, FailureSite, HybridFallback,
                              PivotSelected, RepairApplied, ZeroDetected)
from dodgson.matrix import Span
from dodgson.matrixio import (MatrixParseError, event_to_dict, format_matrices,
                              format_matrix, matrix_to_json, parse_matrices, read_trace,
                              write_trace)
from dodgson.randmat import random_matrices

from matrices import N


def test_text_with_and_without_header():
    assert parse_matrices("3\n1 0 1\n1 3 1\n0 1 1\n") == [Matrix([[1, 0, 1], [1, 3, 1], [0, 1, 1]])]
    assert parse_matrices("1 0 1\n1 3 1\n0 1 1") == [Matrix([[1, 0, 1], [1, 3, 1], [0, 1, 1]])]
    assert parse_matrices("7\n") == [Matrix([[7]])]
    assert parse_matrices("1\n-7\n") == [Matrix([[-7]])]


def test_text_multiple_blocks():
    text = "2\n1 2\n3 4\n\n\n1 0\n0 1\n"
    assert parse_matrices(text) == [Matrix([[1, 2], [3, 4]]), Matrix.identity(2)]


@pytest.mark.parametrize("text", [
    "", "\n\n", "1 2\n3\n", "3\n1 2 3\n4 5 6\n", "1 2.5\n3 4\n", "1 2\n3 x\n",
    "1 1e3\n1 1\n", "1_0 2\n3 4\n",
])
def test_text_rejects_malformed(text):
    with pytest.raises(MatrixParseError):
        parse_matrices(text)


def test_json_format():
    doc = {"n": 2, "rows": [[1, "-20000000000000000000000000"], ["+3", 4]]}
    [m] = parse_matrices(json.dumps(doc))
    assert m[1, 2] == -20000000000000000000000000 and m[2, 1] == 3
    assert parse_matrices(json.dumps([doc, doc])) == [m, m]


@pytest.mark.parametrize("doc", [
    {"n": 2, "rows": [[1, 2], [3, 4.0]]},
    {"n": 3, "rows": [[1, 2], [3, 4]]},
    {"rows": [[1, 2], [3]]},
    {"n": 1, "rows": [[True]]},
    {"n": 1},
    [],
])
def test_json_rejects_malformed(doc):
    with pytest.raises(MatrixParseError):
        parse_matrices(json.dumps(doc))


def test_invalid_json_text():
    with pytest.raises(MatrixParseError):
        parse_matrices("{not json")


def test_round_trip_random_output():
    mats = random_matrices(5, seed=7, count=3)
    text = format_matrices(mats)
    assert text.count("\n\n") == 2
    assert parse_matrices(text) == mats


def test_round_trip_huge_integers():
    huge = -(10**5000) + 1
    m = Matrix([[huge, 1], [2, 3]])
    assert parse_matrices(format_matrix(m)) == [m]
    assert parse_matrices(json.dumps(matrix_to_json(m))) == [m]


def test_trace_lines(tmp_path):
    site = FailureSite(4, 2, 3)
    big = 3 * 10**30
    events = [CondenseLevel(3), ZeroDetected(site), PivotSelected(site, -1, 0, big),
              RepairApplied(site, -big), HybridFallback(site, Span(1, 3, 2, 4), 0), Done(big)]
    path = tmp_path / "t.jsonl"
    write_trace(events, path)
    lines = read_trace(path)
    assert lines == [event_to_dict(ev) for ev in events]
    assert lines[0] == {"event": "CondenseLevel", "level": 3}
    assert lines[1] == {"event": "ZeroDetected", "level": 4, "site": [2, 3]}
    assert lines[2]["pivot"] == [-1, 0] and lines[2]["alpha"] == str(big)
    assert lines[3]["value"] == str(-big)
    assert lines[4]["span"] == [1, 3, 2, 4]
    assert lines[5] == {"event": "Done", "det": str(big)}
    # no JSON numbers for arbitrary-size values
    for raw in path.read_text().splitlines():
        assert str(big) + "," not in raw and str(big) + "}" not in raw


def test_format_matrix_header():
    assert format_matrix(N) == "4\n1 0 3 0\n0 -1 0 1\n1 1 2 0\n0 2 0 1\n"
    assert format_matrix(N, header=False).startswith("1 0 3 0\n")
