import io
import json
import re
import subprocess
import sys

import pytest

from hkmonoid.cli import EXIT_DOMAIN, EXIT_OK, EXIT_VERIFY, main


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as exc:
        code = exc.code
    return code, out.getvalue()


def records(text):
    pairs = [line.split("\t", 1) for line in text.splitlines()]
    assert all(len(p) == 2 for p in pairs), text
    return pairs


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "s4.graph"
    path.write_text("# C3 with a pendant vertex\nn=4\n1->2\n2->3\n3->1\n1->4\n", encoding="utf-8")
    return path


def test_classify_builtins():
    assert run("classify", "--cycle", "3") == (EXIT_OK, "gk=1\ngraph criterion: no two cycles joined by a path\n")
    code, text = run("classify", "--example-s4")
    assert code == EXIT_OK and text.splitlines()[0] == "gk=2"
    code, text = run("classify", "--path", "4")
    assert text.splitlines()[0] == "finite"


def test_classify_records_from_file(graph_file):
    code, text = run("classify", "--graph", str(graph_file), "--format", "records")
    assert code == EXIT_OK
    assert dict(records(text)) == {
        "growth": "gk=2",
        "classification": "polynomial",
        "gk": "2",
        "two_connected_cycles": "false",
        "acyclic": "false",
    }


def test_classify_exponential(tmp_path):
    path = tmp_path / "tt.graph"
    path.write_text("n=6\n1->2\n2->3\n3->1\n4->5\n5->6\n6->4\n3->4\n", encoding="utf-8")
    code, text = run("classify", "--graph", str(path))
    assert text.splitlines() == ["exponential", "graph criterion: two distinct cycles joined by a path"]


def test_normalize_and_eq():
    assert run("normalize", "--cycle", "3", "212") == (EXIT_OK, "ab\n")
    assert run("normalize", "--example-s4", "abcabcdabcabc") == (EXIT_OK, "abcabcdabcabc\n")
    assert run("normalize", "--example-s4", "dabcd") == (EXIT_OK, "abcd\n")
    assert run("normalize", "--cycle", "4", "--system", "Sprime", "3 1") == (EXIT_OK, "ac\n")
    assert run("eq", "--cycle", "3", "121", "212") == (EXIT_OK, "equal\n")
    assert run("eq", "--cycle", "3", "12", "21") == (EXIT_OK, "not equal\n")
    code, text = run("eq", "--cycle", "3", "121", "212", "--format", "records")
    assert dict(records(text))["equal"] == "true"


def test_normalize_random_strategy_agrees():
    for seed in range(5):
        assert run("normalize", "--cycle", "5", "--strategy", "random", "--seed", str(seed), "5 3 1 4 2 5 3 1") == run(
            "normalize", "--cycle", "5", "5 3 1 4 2 5 3 1"
        )


def test_word_style_indices():
    assert run("normalize", "--cycle", "3", "--word-style", "indices", "212") == (EXIT_OK, "1.2\n")


def test_order_option_changes_normal_form_not_equality():
    _, natural = run("normalize", "--example-s4", "db")
    _, flipped = run("normalize", "--example-s4", "--order", "4 3 2 1", "db")
    assert natural == "bd\n" and flipped == "db\n"
    assert run("eq", "--example-s4", "--order", "4 3 2 1", "db", "bd") == (EXIT_OK, "equal\n")


def test_growth_table_and_records():
    code, text = run("growth", "--cycle", "3", "--max-len", "4")
    lines = text.splitlines()
    assert code == EXIT_OK and lines[0] == "length\tcount\tcumulative"
    assert lines[1:6] == ["0\t1\t1", "1\t3\t4", "2\t6\t10", "3\t6\t16", "4\t6\t22"]
    assert lines[-1] == "# gk=1"
    assert run("growth", "--cycle", "3", "--max-len", "4", "--format", "table") == (code, text)
    code, text = run("growth", "--example-s4", "--max-len", "5", "--format", "records")
    rec = dict(records(text))
    assert rec["gk"] == "2" and [rec[f"count_{k}"] for k in range(6)] == ["1", "4", "10", "16", "19", "22"]


def test_growth_plot(tmp_path):
    target = tmp_path / "growth.png"
    code, _ = run("growth", "--example-s4", "--max-len", "12", "--plot", str(target))
    assert code == EXIT_OK
    assert target.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_automaton_dot(tmp_path):
    target = tmp_path / "dfa.dot"
    code, text = run("automaton", "--cycle", "3", "--out", str(target))
    assert code == EXIT_OK and "written to" in text
    dot = target.read_text()
    assert dot.startswith("digraph") and dot == run("automaton", "--cycle", "3")[1]


def test_basis_formats():
    code, text = run("basis", "--cycle", "4")
    assert code == EXIT_OK and text.splitlines()[-1] == "# 40 rules"
    code, text = run("basis", "--cycle", "3", "--format", "json-like")
    data = json.loads(text)
    assert data["n"] == 3 and len(data["rules"]) == 9
    assert {"kind": "S-1", "lead": [1, 1], "replacement": [1]} in data["rules"]
    code, text = run("basis", "--cycle", "3", "--format", "dot-rules")
    assert text.startswith("digraph rules {") and text.count("->") == 9
    code, text = run("basis", "--example-s4", "--schema")
    assert code == EXIT_OK and "iii\td<d>b" in text.splitlines()


def test_basis_rejects_non_cycle_without_schema():
    assert run("basis", "--example-s4")[0] == EXIT_DOMAIN
    assert run("basis", "--cycle", "9")[0] == EXIT_DOMAIN


def test_obstructions_and_enumerate():
    code, text = run("obstructions", "--example-s4", "--max-len", "11")
    assert code == EXIT_OK
    assert {"dabcd", "dabcabcd"} <= set(text.split())
    assert run("enumerate", "--cycle", "3", "--max-len", "2")[1].split() == "- a b c ab ac ba bc ca cb".split()


def test_confluence_exit_codes():
    code, text = run("confluence", "--cycle", "4", "--max-len", "5")
    assert code == EXIT_OK and text.endswith("ok\n")
    code, text = run("confluence", "--cycle", "4", "--system", "Sprime", "--max-len", "5", "--format", "records")
    assert code == EXIT_OK and dict(records(text))["ok"] == "true"


def test_oracle_check():
    code, text = run("oracle-check", "--cycle", "3", "--max-len", "4")
    assert code == EXIT_OK and text.endswith("ok\n")
    code, text = run("oracle-check", "--cycle", "3", "--max-len", "9", "--budget", "1000")
    assert code == EXIT_DOMAIN


def test_verification_failure_exit_code(monkeypatch):
    import hkmonoid.oracle as oracle_mod

    monkeypatch.setattr(oracle_mod, "count_normal_words", lambda dfa, L: [0] * (L + 1))
    code, text = run("oracle-check", "--cycle", "3", "--max-len", "3")
    assert code == EXIT_VERIFY and "violation:" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["classify"],
        ["classify", "--cycle", "3", "--example-s4"],
        ["classify", "--cycle", "2"],
        ["normalize", "--example-s4", "--system", "S", "ab"],
        ["normalize", "--cycle", "3", "--order", "2 1 3", "--system", "Sprime", "ab"],
        ["normalize", "--cycle", "3", "14"],
        ["normalize", "--cycle", "3", "a?"],
        ["classify", "--graph", "/nonexistent/graph"],
        ["classify", "--cycle", "3", "--order", "1 2"],
        ["growth", "--cycle", "3", "--max-len", "-1"],
        ["confluence", "--cycle", "3", "--max-len", "0"],
        ["nosuchcommand"],
        ["growth", "--cycle", "3", "--format", "xml"],
    ],
)
def test_bad_input_exits_one(argv):
    assert run(*argv)[0] == EXIT_DOMAIN


def test_bad_graph_file(tmp_path):
    path = tmp_path / "bad.graph"
    path.write_text("n=2\n1->2\n2->1\n", encoding="utf-8")
    assert run("classify", "--graph", str(path))[0] == EXIT_DOMAIN


def test_gk_output_is_integer():
    for argv in (["classify", "--cycle", "5"], ["classify", "--example-s4"]):
        first = run(*argv)[1].splitlines()[0]
        assert re.fullmatch(r"gk=\d+", first)


def test_output_is_deterministic():
    argv = ["growth", "--example-s4", "--max-len", "9", "--format", "records"]
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hkmonoid", "classify", "--cycle", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("gk=1")
    proc = subprocess.run([sys.executable, "-m", "hkmonoid", "classify"], capture_output=True, text=True)
    assert proc.returncode == 1 and "graph source" in proc.stderr
