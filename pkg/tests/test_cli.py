import json
import subprocess
import sys

import pytest

from ramsey_star import graph as gc
from ramsey_star.cli import main
from ramsey_star.coloring import TwoColoring, load_coloring
from ramsey_star.constructions import ConstructionParams, build_ramsey_critical, build_star_critical
from ramsey_star.graph6 import to_graph6


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out.strip().splitlines()
    return code, (json.loads(out[-1]) if out else None)


def test_construct_star_critical(tmp_path, capsys):
    code, rec = run(capsys, "construct", "star-critical", "-n", 24, "-m", 7, "--out", tmp_path)
    assert code == 0
    out = rec["outcome"]
    assert out["verdict"]["good"] and out["order"] == 139 and out["star_k"] == 22
    assert out["center_degree"] == 116 and out["lower_bound"] == out["formula"] == 117
    c = load_coloring(tmp_path / "star-critical_n24_m7.json")
    assert c == build_star_critical(ConstructionParams(24, 7))
    host_g6, red_g6 = (tmp_path / "star-critical_n24_m7.g6").read_text().split()
    assert TwoColoring.from_graph6_pair(host_g6, red_g6) == c
    assert len(rec["artifacts"]) == 3


def test_construct_critical(tmp_path, capsys):
    code, rec = run(capsys, "construct", "critical", "-n", 4, "-m", 3, "--out", tmp_path)
    assert code == 0
    c = load_coloring(tmp_path / "critical_n4_m3.json")
    assert c == build_ramsey_critical(ConstructionParams(4, 3))
    assert sorted(map(len, gc.components(c.red))) == [3, 3]


def test_construct_guard(capsys):
    code = main(["construct", "star-critical", "-n", "3", "-m", "3"])
    assert code == 2
    assert "n >= 4" in capsys.readouterr().err


def test_runs_log_is_append_only(tmp_path, capsys):
    for _ in range(2):
        run(capsys, "arrows", "--complete", 5, "-n", 3, "-m", 3, "--out", tmp_path)
    lines = (tmp_path / "runs.jsonl").read_text().splitlines()
    assert len(lines) == 2
    rec = json.loads(lines[0])
    assert set(rec) >= {"subcommand", "parameters", "budget", "outcome", "artifacts", "wall_time", "seed"}


def test_arrows(capsys):
    code, rec = run(capsys, "arrows", "--complete", 6, "-n", 3, "-m", 3)
    assert code == 0 and rec["outcome"]["status"] == "arrows"


def test_arrows_witness_file(tmp_path, capsys):
    code, rec = run(capsys, "arrows", "--complete", 7, "--star-k", 2, "-n", 4, "-m", 3, "--out", tmp_path)
    assert code == 0 and rec["outcome"]["status"] == "does_not_arrow"
    witness = load_coloring(rec["outcome"]["witness_ref"])
    assert witness.host.star_k == 2 and witness.host.center == 6


def test_arrows_path(capsys):
    code, rec = run(capsys, "arrows", "--complete", 5, "--path", 3, "-m", 3)
    assert rec["outcome"]["status"] == "arrows" and rec["outcome"]["red_kind"] == "path"


def test_arrows_inconclusive(capsys):
    code, rec = run(capsys, "arrows", "--complete", 7, "-n", 4, "-m", 3, "--budget-nodes", 5)
    assert code == 3 and rec["outcome"]["status"] == "inconclusive"


def test_ramsey_and_table(tmp_path, capsys):
    code, rec = run(capsys, "ramsey", "--cycle", 4, "-m", 3, "--out", tmp_path)
    assert code == 0 and rec["outcome"]["value"] == 7
    code, rec = run(capsys, "star", "--cycle", 3, "-m", 3, "--out", tmp_path)
    assert code == 0 and rec["outcome"]["value"] == 5
    rows = (tmp_path / "regression.csv").read_text().splitlines()
    assert rows[0].startswith("kind,") and len(rows) == 3


def test_ramsey_inconclusive(capsys):
    code, _ = run(capsys, "ramsey", "--path", 4, "-m", 3, "--budget-nodes", 3)
    assert code == 3


def test_verify(tmp_path, capsys):
    run(capsys, "construct", "critical", "-n", 4, "-m", 3, "--out", tmp_path)
    path = tmp_path / "critical_n4_m3.json"
    code, rec = run(capsys, "verify", path, "-n", 4, "-m", 3)
    assert code == 0 and rec["outcome"]["good"]
    code, rec = run(capsys, "verify", path, "-n", 3, "-m", 3)
    assert code == 1 and rec["outcome"]["red_cycle_found"] is not None


def test_verify_graph6_pair(capsys):
    host, red = build_ramsey_critical(ConstructionParams(4, 3)).to_graph6_pair()
    code, _ = run(capsys, "verify", "--g6", host, red, "-n", 4, "-m", 3)
    assert code == 0


def test_verify_bad_file(tmp_path, capsys):
    (tmp_path / "x.json").write_text("{}")
    assert main(["verify", str(tmp_path / "x.json"), "-n", "3", "-m", "3"]) == 2


def test_check_lemma4_generate(capsys):
    code, rec = run(capsys, "check-lemma", "4", "--generate", "-n", 24, "-m", 7, "--seed", 1)
    assert code == 0 and rec["outcome"]["conclusion_holds"] is True


def test_check_lemma4_gated_input(capsys):
    g = gc.add_edges(gc.disjoint_union([gc.complete_graph(23)] * 6), [(0, 23), (1, 24)])
    code, rec = run(capsys, "check-lemma", "4", "--graph6", to_graph6(g), "-n", 24, "-m", 7)
    assert code == 0 and rec["outcome"]["hypotheses_hold"] is False


def test_check_lemma1_input_file(tmp_path, capsys):
    (tmp_path / "g.txt").write_text(to_graph6(gc.disjoint_union([gc.complete_graph(3)] * 3)) + "\n")
    code, rec = run(capsys, "check-lemma", "1", "--input", tmp_path / "g.txt", "-n", 4, "-m", 3)
    assert code == 0 and rec["outcome"]["conclusion_holds"] is True


def test_check_lemma1_violation_exit(capsys):
    g = gc.disjoint_union([gc.complete_graph(2), gc.empty_graph(1)])
    code, rec = run(capsys, "check-lemma", "1", "--graph6", to_graph6(g), "-n", 4, "-m", 3, "--r", 1)
    assert code == 4


def test_check_lemma3(capsys):
    g = gc.add_edges(gc.disjoint_union([gc.cycle_graph(5), gc.empty_graph(1)]), [(0, 5), (2, 5)])
    code, rec = run(capsys, "check-lemma", "3", "--graph6", to_graph6(g), "-n", 6)
    assert code == 0 and rec["outcome"]["conclusion_holds"] is True
    code, rec = run(capsys, "check-lemma", "3", "--generate", "--count", 12, "--seed", 3)
    assert code == 0 and rec["outcome"]["violations"] == 0 and rec["seed"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["check-lemma", "4", "--graph6", "not-graph6!", "-n", "24", "-m", "7"],
        ["check-lemma", "1", "--generate"],
        ["check-lemma", "1", "--graph6", "Bw", "-n", "9", "-m", "9"],
        ["arrows", "--complete", "4", "-n", "2", "-m", "3"],
        ["arrows", "--complete", "6", "-n", "3", "-m", "3", "--workers", "0"],
        ["ramsey", "--cycle", "3"],
    ],
)
def test_usage_errors(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    assert code == 2


def test_export_dot(tmp_path, capsys):
    run(capsys, "construct", "critical", "-n", 3, "-m", 3, "--out", tmp_path)
    code, rec = run(capsys, "export-dot", tmp_path / "critical_n3_m3.json", "--out", tmp_path)
    text = (tmp_path / "graph.dot").read_text()
    assert code == 0 and "0 -- 1 [color=red]" in text and "0 -- 2 [color=blue]" in text


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "ramsey_star", "export-dot", "--graph6", "Bw"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("graph")
    assert json.loads(proc.stderr)["subcommand"] == "export-dot"
