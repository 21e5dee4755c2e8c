import io
import json
import subprocess
import sys

import pytest

from domgames.cli import UsageError, main, parse_family, parse_predominated
from domgames.graph import cartesian_product, complete, cycle, path, star, to_graph6


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, inp=io.StringIO(stdin))
    return code, out.getvalue()


def test_value_plain():
    code, text = run("value", "--family", "cycle:5", "--variant", "ll")
    assert code == 0
    assert text.splitlines()[0] == "length 5"


def test_value_json_predominated():
    code, text = run(
        "value", "--graph6", "Bg", "--variant", "ll", "--starter", "staller",
        "--predominated", "0,2", "--json", "--line",
    )
    assert code == 0
    d = json.loads(text)
    assert d["graph"] == "Bg" and d["variant"] == "ll" and d["starter"] == "staller"
    assert d["predominated"] == [0, 2] and d["length"] == 2
    assert len(d["line"]) == 2 and d["line"][0][0] == "staller"
    assert set(d) >= {"optimal_first", "states_visited"}


def test_value_line_text():
    code, text = run("value", "--graph6", "A_", "--variant", "ll", "--line")
    assert code == 0
    assert "line D:0 S:0 D:1" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["value", "--graph6", "A"],
        ["value", "--graph6", "A?"],  # isolated vertices
        ["value"],
        ["value", "--family", "path:x"],
        ["value", "--family", "blob:3"],
        ["value", "--family", "cycle:2"],
        ["value", "--graph6", "Bg", "--predominated", "5"],
        ["value", "--graph6", "Bg", "--variant", "q"],
        ["value", "--graph6", "Bg", "--family", "path:3"],
        ["verify", "--suite", "parity"],
        ["corpus"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, _ = run(*argv)
    assert code == 2


def test_state_cap_exit_2():
    code, _ = run("value", "--family", "path:14", "--max-states", "5")
    assert code == 2


def test_parse_family():
    assert parse_family("star:4") == star(4)
    assert parse_family("ycorona:@").n == 7
    k2 = to_graph6(complete(2))
    assert parse_family(f"cartesian:{k2}x{to_graph6(star(4))}") == cartesian_product(complete(2), star(4))
    # 'x' is itself a graph6 character, so the split must be by length
    g = path(4)
    assert "x" not in to_graph6(g)
    assert parse_family(f"cartesian:{to_graph6(g)}x{to_graph6(cycle(5))}").n == 20
    with pytest.raises(UsageError):
        parse_family("cartesian:A_A_")
    assert parse_predominated("0, 2", 3) == 0b101
    assert parse_predominated(None, 3) == 0


def test_verify_suites(tmp_path):
    out_json = tmp_path / "r.json"
    out_csv = tmp_path / "r.csv"
    code, text = run(
        "verify", "--suite", "hierarchy", "--trees-up-to", "6", "--random", "5",
        "--random-n-max", "6", "--out", str(out_json), "--csv", str(out_csv),
    )
    assert code == 0 and text.startswith("[PASS] hierarchy")
    d = json.loads(out_json.read_text())
    assert d["passed"] and d["graphs_examined"] == 1 + 1 + 2 + 3 + 6 + 5
    assert out_csv.read_text().startswith("suite,passed")


def test_verify_other_suites():
    assert run("verify", "--suite", "theta", "--n-max", "10")[0] == 0
    assert run("verify", "--suite", "paths", "--n-max", "9")[0] == 0
    code, text = run("verify", "--suite", "families")
    assert code == 0 and "special_families" in text


def test_verify_graph6_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("A_\nBg\n")
    code, text = run("verify", "--suite", "llbound", "--graph6-file", str(f))
    assert code == 0 and "2 graphs" in text


def test_scan_reports_violation_exit_1(tmp_path):
    out_json = tmp_path / "s.json"
    code, text = run("scan", "conjectures", "--n-max", "4", "--out", str(out_json))
    assert code == 1
    assert "conj.L<=6n/7 on A_" in text
    assert json.loads(out_json.read_text())["passed"] is False
    code, _ = run("scan", "conjectures", "--n-min", "3", "--n-max", "8")
    assert code == 0


def test_corpus_export(tmp_path):
    code, text = run("corpus", "--trees", "6")
    assert code == 0 and len(text.split()) == 6
    target = tmp_path / "c.g6"
    code, text = run("corpus", "--random", "7", "--seed", "3", "--out", str(target))
    assert code == 0 and "wrote 7 graphs" in text
    assert len(target.read_text().split()) == 7


def test_play_as_staller():
    code, text = run("play", "--graph6", "Bg", "--human", "staller", stdin="")
    assert code == 0
    assert "engine (dominator) plays 1" in text
    assert "game over after 1 moves; optimal play gives 1" in text


def test_play_reprompts_on_illegal_input():
    code, text = run("play", "--family", "cycle:5", "--human", "dominator", stdin="foo\n9\n0\n2\n3\n4\n")
    assert code == 0
    assert "not a vertex index" in text
    assert "not in the graph" in text
    assert "game over" in text


def test_play_eof_exit_2():
    code, text = run("play", "--family", "cycle:5", "--human", "dominator", stdin="")
    assert code == 2 and "input ended" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "domgames", "value", "--family", "path:4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("length 2")


def test_play_ll_repeat_accepted():
    code, text = run("play", "--graph6", "A_", "--variant", "ll", "--human", "staller", stdin="0\n")
    assert code == 0
    assert "engine (dominator) plays 0" in text
    assert "illegal" not in text
    assert "game over after 3 moves" in text


def test_play_l_rejects_replay():
    code, text = run("play", "--family", "path:3", "--variant", "l", "--human", "staller", stdin="1\n0\n")
    assert code == 0
    assert "illegal: vertex 1 was already played" in text
    assert "game over after 2 moves" in text


def test_spec_value_examples():
    assert run("value", "--family", "path:3", "--variant", "ll", "--starter", "staller",
               "--predominated", "0,2")[1].startswith("length 2")
    assert run("value", "--graph6", "A_", "--variant", "d")[1].startswith("length 1")
    assert run("verify", "--suite", "hierarchy", "--trees-up-to", "9")[0] == 0
    assert run("verify", "--suite", "paths", "--n-max", "15")[0] == 0
