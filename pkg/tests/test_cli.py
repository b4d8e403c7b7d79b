import io
import json
import subprocess
import sys

import pytest

from dodgson.cli import main
from dodgson.matrixio import format_matrix, parse_matrices, read_trace
from dodgson.randmat import random_matrices

from matrices import A, A5, M, N


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, m_or_text):
        p = tmp_path / name
        p.write_text(m_or_text if isinstance(m_or_text, str) else format_matrix(m_or_text))
        return str(p)
    return _write


def test_det_default(write):
    assert run(["det", write("a.txt", A)]) == (0, "3\n", "")


def test_det_strict_failure(write):
    code, out, err = run(["det", write("m.txt", M), "--method", "strict"])
    assert code == 3 and out == ""
    assert "level 3" in err and "(2,2)" in err


def test_det_double_cross(write):
    code, out, _ = run(["det", write("n.txt", N), "--method", "double-cross"])
    assert (code, out) == (0, "3\n")


@pytest.mark.parametrize("method", ["strict", "double-cross", "hybrid", "bareiss", "laplace"])
def test_det_every_method(write, method):
    code, out, _ = run(["det", write("a5.txt", A5), "--method", method])
    if method == "strict":
        assert code == 3
    else:
        assert (code, out) == (0, "4\n")


def test_det_json_input(write):
    doc = json.dumps({"n": 3, "rows": A.tolist()})
    assert run(["det", write("a.json", doc)])[:2] == (0, "3\n")


def test_det_stats_and_trace(write, tmp_path):
    trace = tmp_path / "t.jsonl"
    code, out, err = run(["det", write("m.txt", M), "--trace", str(trace), "--stats"])
    assert (code, out) == (0, "-3\n")
    assert "repairs=1" in err and "fallbacks=0" in err and "multiplications=" in err
    lines = read_trace(trace)
    assert [ln["event"] for ln in lines].count("Done") == 1
    assert lines[-1] == {"event": "Done", "det": "-3"}
    assert {"event": "PivotSelected", "level": 3, "site": [2, 2], "pivot": [-1, 0],
            "alpha": "3"} in lines


def test_trace_on_failure_has_no_done(write, tmp_path):
    trace = tmp_path / "t.jsonl"
    code, _, _ = run(["det", write("i6.txt", "\n".join(
        " ".join("1" if i == j else "0" for j in range(6)) for i in range(6))),
        "--method", "double-cross", "--trace", str(trace)])
    assert code == 3
    assert all(ln["event"] != "Done" for ln in read_trace(trace))


@pytest.mark.parametrize("text", ["1 2\n3\n", "1.5\n", "abc\n"])
def test_det_parse_errors(write, text):
    code, out, err = run(["det", write("bad.txt", text)])
    assert code == 2 and out == "" and "error" in err


def test_det_missing_file(tmp_path):
    code, _, err = run(["det", str(tmp_path / "nope.txt")])
    assert code == 2 and "cannot read" in err


def test_det_multiple_matrices_rejected(write):
    code, _, _ = run(["det", write("two.txt", "1\n\n2\n")])
    assert code == 2


def test_random_is_deterministic():
    code, out, _ = run(["random", "--n", "3", "--seed", "42"])
    assert code == 0
    assert out == run(["random", "--n", "3", "--seed", "42"])[1]
    # frozen: Random(42).random() stream mapped onto [-5, 5]
    assert parse_matrices(out) == random_matrices(3, 42)
    assert out == "3\n2 -5 -2\n-3 3 2\n4 -5 -1\n"


def test_random_degenerate_range():
    assert run(["random", "--n", "1", "--range", "0"])[1] == "1\n0\n"


def test_random_count():
    code, out, _ = run(["random", "--n", "5", "--seed", "7", "--count", "3"])
    mats = parse_matrices(out)
    assert code == 0 and len(mats) == 3 and all(m.order == 5 for m in mats)
    assert out.count("\n\n") == 2


def test_random_rejects_bad_args():
    with pytest.raises(SystemExit) as exc:
        run(["random", "--n", "0"])
    assert exc.value.code == 2


def test_check_file(write):
    code, out, _ = run(["check", write("a5.txt", A5)])
    assert code == 0 and out.startswith("PASS 1 n=5 det=4")
    code, out, _ = run(["check", write("z.txt", "0 0 0\n0 0 0\n0 0 0\n")])
    assert code == 0 and "det=0" in out


def test_check_random_suite():
    code, out, _ = run(["check", "--random-suite", "6,150,1"])
    assert code == 0
    assert out.splitlines()[-1] == "checked 150: 150 passed, 0 failed"


def test_check_parallel_matches_serial():
    serial = run(["check", "--random-suite", "5,60,3"])
    parallel = run(["check", "--random-suite", "5,60,3", "--jobs", "2"])
    assert serial == parallel


def test_check_disagreement(monkeypatch, write):
    import dodgson.cli as cli
    from dodgson import Strategy

    def rigged(a):
        return {Strategy.HYBRID: 1, Strategy.BAREISS: 2}

    monkeypatch.setattr(cli, "cross_check_values", rigged)
    code, out, _ = run(["check", write("a.txt", A)])
    assert code == 1 and "FAIL 1" in out and "1 0 1" in out


def test_bench_csv(tmp_path):
    png = tmp_path / "bench.png"
    code, out, err = run(["bench", "--n-list", "1,4", "--count", "3",
                          "--methods", "strict,hybrid,laplace", "--plot", str(png)])
    assert code == 0
    rows = [ln.split(",") for ln in out.strip().splitlines()]
    assert rows[0] == ["method", "n", "mean_ops", "mean_wall_time", "completed", "count"]
    by_key = {(r[0], r[1]): r for r in rows[1:]}
    assert by_key[("hybrid", "1")][2] == "0"
    assert float(by_key[("strict", "4")][2]) <= 56
    assert by_key[("laplace", "4")][2] == ""
    assert png.exists() and png.stat().st_size > 0


def test_module_entry_point(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text(format_matrix(A))
    res = subprocess.run([sys.executable, "-m", "dodgson", "det", str(p)],
                         capture_output=True, text=True)
    assert (res.returncode, res.stdout) == (0, "3\n")
