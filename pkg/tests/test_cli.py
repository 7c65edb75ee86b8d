from __future__ import annotations

import io
import json

import pytest

from prolific.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, main
from prolific.graph6 import parse_graph6


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_generate_then_index_pipeline():
    code, g6 = run(["generate", "claw:2,1,1"])
    assert code == EXIT_OK
    code, out = run(["index", "--param", "mu"], stdin=g6)
    assert code == EXIT_OK
    assert out.strip().endswith("Found(4)")


def test_iterate_chi_column():
    code, out = run(["iterate", "-f", "cp:3,3", "-k", "3", "-p", "chi", "--format", "json"])
    assert code == EXIT_OK
    levels = json.loads(out)[0]["levels"]
    assert [lv["chromatic"] for lv in levels] == [3, 3, 3, 4]


def test_iterate_star_maxdeg():
    code, out = run(["iterate", "-f", "star:4", "-k", "3", "--format", "json"])
    assert [lv["maxdeg"] for lv in json.loads(out)[0]["levels"]] == [4, 3, 4, 6]


def test_iterate_table_and_write(tmp_path):
    dest = tmp_path / "last.g6"
    code, out = run(["iterate", "-f", "complete:4", "-k", "2", "--write", str(dest)])
    assert code == EXIT_OK and out.startswith("# C~")
    g = parse_graph6(dest.read_text().strip())
    assert (g.n, g.e) == (12, 36)


def test_enumerate_prolific_four():
    code, out = run(["enumerate", "--n", "4", "--prolific"])
    assert code == EXIT_OK
    assert out.split() == ["CN", "C^", "C~"]


def test_enumerate_counts():
    _, out = run(["enumerate", "--n", "6"])
    assert len(out.split()) == 112
    _, out = run(["enumerate", "--n", "6", "--max-excess", "-1"])
    assert len(out.split()) == 6


def test_params_json():
    code, out = run(["params", "-f", "petersen", "-p", "c", "-p", "chi1", "--format", "json"])
    assert code == EXIT_OK
    assert json.loads(out)[0]["params"] == {"circumference": 9, "chromatic_index": 4}


def test_params_default_all():
    _, out = run(["params", "-g", "C~"])
    header = out.splitlines()[0].split()
    assert len(header) == 16


def test_generate_formats():
    _, dot = run(["generate", "cp:3,2", "--format", "dot"])
    assert dot.startswith("graph ") and "--" in dot
    _, js = run(["generate", "cp:3,2", "--format", "json"])
    assert json.loads(js)["n"] == 5


def test_scan_small():
    code, out = run(["scan", "--param", "e", "--n", "6", "--format", "json"])
    assert code == EXIT_OK
    assert json.loads(out)["max_index"] == 2


def test_scan_classes_and_workers():
    one = run(["scan", "--param", "lambda", "--n", "7", "--class", "delta>=3", "--format", "json"])
    two = run(["scan", "--param", "lambda", "--n", "7", "--class", "delta>=3", "--workers", "2", "--format", "json"])
    assert one == two
    assert json.loads(one[1])["max_index"] == 1


def test_budget_exit_code():
    code, out = run(["index", "-f", "cp:3,10", "-p", "mindeg", "--max-iterations", "4"])
    assert code == EXIT_BUDGET and "BudgetExceeded" in out


@pytest.mark.parametrize(
    "argv, stdin",
    [
        (["generate", "wheel:5"], ""),
        (["index", "-p", "mu"], "C\n"),
        (["verify", "-c", "Q9"], ""),
        (["index", "-p", "girth", "-g", "C~"], ""),
        (["enumerate", "--n", "40"], ""),
        (["verify"], ""),
    ],
)
def test_usage_errors(argv, stdin, capsys):
    code, _ = run(argv, stdin)
    assert code == EXIT_USAGE


def test_malformed_graph6_reports_line(capsys):
    code, _ = run(["params", "-p", "n"], stdin="C~\nC\n")
    assert code == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


def test_verify_list():
    code, out = run(["verify", "--list"])
    assert code == EXIT_OK and "| A1 |" in out


def test_verify_is_byte_stable_across_workers():
    a = run(["verify", "-c", "A1,T1", "--max-n", "7"])
    b = run(["verify", "-c", "A1,T1", "--max-n", "7", "--workers", "2"])
    assert a == b and a[0] == EXIT_OK
    docs = json.loads(a[1])
    assert [d["check"] for d in docs] == ["A1", "T1"]


def test_verify_table():
    code, out = run(["verify", "-c", "C1", "--max-n", "6", "--format", "table"])
    assert code == EXIT_OK and out.startswith("C1: PASS")
