import pytest

from resolvekit import build_lcg, lcg_witness, write_graph
from resolvekit.cli import run


def out_of(capsys):
    captured = capsys.readouterr()
    return captured.out, captured.err


def test_gen_lcg_edge_list(capsys):
    assert run(["gen", "lcg", "--n", "3", "--k", "2", "--format", "edge-list"]) == 0
    out, _ = out_of(capsys)
    lines = out.splitlines()
    assert lines[0] == "p 12 15"
    assert len(lines) == 16
    for line in lines[1:]:
        u, v = map(int, line.split())
        assert 0 <= u < v < 12


def test_gen_matches_library(capsys):
    assert run(["gen", "lcg", "--n", "4", "--k", "2"]) == 0
    out, _ = out_of(capsys)
    assert out == write_graph(build_lcg(4, 2))


def test_gen_deterministic(capsys):
    run(["gen", "ccc", "--n", "2"])
    first, _ = out_of(capsys)
    run(["gen", "ccc", "--n", "2"])
    second, _ = out_of(capsys)
    assert first == second


def test_gen_dimacs(capsys):
    assert run(["gen", "ccc", "--n", "1", "--format", "dimacs"]) == 0
    out, _ = out_of(capsys)
    assert out.splitlines()[0] == "p edge 8 12"


def test_gen_labels_sidecar(tmp_path, capsys):
    labels = tmp_path / "labels.tsv"
    assert run(["gen", "lcg", "--n", "3", "--k", "2", "--labels-out", str(labels)]) == 0
    out_of(capsys)
    assert labels.read_text().splitlines()[0] == "0\t1\t0\t0\t1"


def test_verify_ccc_doubly_witness(capsys):
    code = run(["verify", "--family", "ccc", "--n", "2", "--kind", "doubly", "--set", "@witness"])
    out, _ = out_of(capsys)
    assert code == 0
    assert out == "true 24\n"


def test_verify_false_exits_one(capsys):
    code = run(["verify", "--family", "lcg", "--n", "3", "--k", "2", "--kind", "resolving", "--set", "0,1"])
    out, _ = out_of(capsys)
    assert code == 1
    assert out == "false 2\n"


def test_verify_label_tokens(capsys):
    # the three position-2 vertices of the last-layer triangles
    code = run(
        [
            "verify",
            "--family",
            "lcg",
            "--n",
            "3",
            "--k",
            "2",
            "--kind",
            "resolving",
            "--set",
            "2:1:1:2,2:2:1:2,2:3:1:2",
        ]
    )
    out, _ = out_of(capsys)
    assert code == 0
    assert out == "true 3\n"


def test_solve_lcg32(capsys):
    code = run(
        [
            "solve",
            "--family",
            "lcg",
            "--n",
            "3",
            "--k",
            "2",
            "--kind",
            "resolving",
            "--family-pruned",
        ]
    )
    out, _ = out_of(capsys)
    assert code == 0
    assert out == (
        "kind=resolving optimum=3 witness=4,7,10 method=pruned restriction=family-pruned\n"
    )


def test_solve_strong_vc(capsys):
    code = run(
        ["solve", "--family", "lcg", "--n", "3", "--k", "2", "--kind", "strong", "--method", "vc-reduction"]
    )
    out, _ = out_of(capsys)
    assert code == 0
    assert "optimum=5 witness=4,5,7,8,10 method=vc-reduction" in out


def test_solve_stats_on_stderr(capsys):
    run(
        [
            "solve",
            "--family",
            "lcg",
            "--n",
            "3",
            "--k",
            "2",
            "--kind",
            "resolving",
            "--stats",
        ]
    )
    out, err = out_of(capsys)
    assert "stats:" in err and "stats:" not in out


def test_solve_budget_exit_three(capsys):
    code = run(
        [
            "solve",
            "--family",
            "lcg",
            "--n",
            "3",
            "--k",
            "3",
            "--kind",
            "resolving",
            "--method",
            "naive",
            "--max-subsets",
            "10",
        ]
    )
    _, err = out_of(capsys)
    assert code == 3
    assert "budget" in err


def test_solve_vc_on_non_strong_rejected(capsys):
    code = run(
        ["solve", "--family", "lcg", "--n", "3", "--k", "2", "--kind", "doubly", "--method", "vc-reduction"]
    )
    _, err = out_of(capsys)
    assert code == 2
    assert "only solves the strong kind" in err


def test_witness_output(capsys):
    code = run(["witness", "--family", "lcg", "--n", "4", "--k", "2", "--kind", "doubly"])
    out, _ = out_of(capsys)
    assert code == 0
    expected = ",".join(str(v) for v in lcg_witness("doubly", 4, 2))
    assert out == expected + "\n"


def test_witness_pretty(capsys):
    code = run(["witness", "--family", "ccc", "--n", "2", "--kind", "resolving", "--pretty"])
    out, _ = out_of(capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 16
    assert lines[0].split("\t")[1] == "2:1:1:2"


def test_dist_tsv(capsys):
    code = run(["dist", "--family", "lcg", "--n", "3", "--k", "2"])
    out, _ = out_of(capsys)
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 12
    assert rows[0][0] == "0"


def test_audit_confirmed(capsys):
    code = run(["audit", "--family", "lcg", "--n", "3", "--k", "2", "--kind", "strong"])
    out, _ = out_of(capsys)
    assert code == 0
    assert "confirmed" in out


def test_audit_untested(capsys):
    code = run(["audit", "--family", "ccc", "--n", "2", "--kind", "resolving"])
    out, _ = out_of(capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[1].endswith("untested")
    assert lines[2].startswith("# ")


def test_graph_file_input(tmp_path, capsys):
    graph_file = tmp_path / "g.txt"
    labels_file = tmp_path / "labels.tsv"
    run(
        [
            "gen",
            "lcg",
            "--n",
            "3",
            "--k",
            "2",
            "--labels-out",
            str(labels_file),
        ]
    )
    out, _ = out_of(capsys)
    graph_file.write_text(out)
    code = run(
        [
            "verify",
            "--graph",
            str(graph_file),
            "--labels",
            str(labels_file),
            "--kind",
            "resolving",
            "--set",
            "2:1:1:2,2:2:1:2,2:3:1:2",
        ]
    )
    out, _ = out_of(capsys)
    assert code == 0
    assert out == "true 3\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--family", "lcg", "--n", "3", "--kind", "resolving"],  # missing --k
        ["solve", "--kind", "resolving"],  # no graph source
        ["gen", "ccc", "--n", "0"],  # out-of-range parameter
        ["verify", "--family", "ccc", "--n", "2", "--kind", "doubly", "--set", "zzz"],
        ["solve", "--family", "ccc", "--n", "2", "--k", "3", "--kind", "resolving"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(argv) == 2
    out_of(capsys)


def test_unknown_verb_exits_two(capsys):
    assert run(["frobnicate"]) == 2
    out_of(capsys)


def test_witness_missing_k_exits_two(capsys):
    assert run(["witness", "--family", "lcg", "--n", "3", "--kind", "resolving"]) == 2
    _, err = out_of(capsys)
    assert "--k is required" in err


def test_reproduce_table(capsys):
    code = run(["reproduce"])
    out, _ = out_of(capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("family\tkind\tparams")
    assert len(lines) == 11  # header + 9 claims + data-point comment
    verdicts = [line.split("\t")[-1] for line in lines[1:10]]
    assert verdicts.count("confirmed") == 7
    assert verdicts.count("untested") == 2
    assert lines[10].startswith("# data point")
    assert "optimum=3" in lines[10]
