"""Command-line tests driving main() directly: generation, runs,
predictions, verification, and benchmark plans."""

import pytest

from closurelab.cli import main


def test_gen_cycle_to_stdout(capsys):
    assert main(["gen", "cyc", "--n", "3"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "1\t2\n2\t3\n3\t1\n"
    assert captured.err.strip() == "3 edges"


def test_gen_empty_chain_to_file(tmp_path, capsys):
    out = tmp_path / "edges.tsv"
    assert main(["gen", "path", "--n", "1", "--format", "prolog", "--out", str(out)]) == 0
    assert out.read_bytes() == b""
    assert capsys.readouterr().out.strip() == "0 edges"


def test_gen_prolog_format(tmp_path):
    out = tmp_path / "edges.pl"
    assert main(["gen", "path", "--n", "3", "--format", "prolog", "--out", str(out)]) == 0
    assert out.read_bytes() == b"edge(1,2).\nedge(2,3).\n"


def test_gen_rejects_indivisible_chord_spacing(capsys):
    assert main(["gen", "cycextra", "--n", "10", "--k", "3"]) == 1
    err = capsys.readouterr().err
    assert "error:" in err
    assert "(k+1) must divide n" in err


def test_gen_rejects_missing_parameter(capsys):
    assert main(["gen", "cmpl"]) == 1
    assert "requires parameter n" in capsys.readouterr().err


def test_gen_rejects_unknown_family():
    with pytest.raises(SystemExit) as err:
        main(["gen", "pentagon", "--n", "3"])
    assert err.value.code == 2


def test_run_reports_counters_and_writes_paths(tmp_path, capsys):
    edges = tmp_path / "edges.tsv"
    paths = tmp_path / "paths.tsv"
    main(["gen", "cmpl", "--n", "3", "--out", str(edges)])
    code = main(
        [
            "run",
            "--engine",
            "minincrement",
            "--variant",
            "left",
            "--edges",
            str(edges),
            "--out",
            str(paths),
        ]
    )
    assert code == 0
    summary = capsys.readouterr().out.splitlines()[-1]
    assert "paths=9" in summary
    assert "rec_firings=27" in summary
    assert "LoadRules=0.000ms" in summary
    assert "Query=" in summary
    assert paths.read_bytes().startswith(b"1\t1\n1\t2\n")


def test_run_topdown_single_table(tmp_path, capsys):
    edges = tmp_path / "edges.tsv"
    main(["gen", "cyc", "--n", "4", "--out", str(edges)])
    out = tmp_path / "paths.tsv"
    main(
        [
            "run",
            "--engine",
            "topdown",
            "--variant",
            "left",
            "--edges",
            str(edges),
            "--out",
            str(out),
        ]
    )
    summary = capsys.readouterr().out
    assert "tables_created=1" in summary
    assert "paths=16" in summary


def test_run_ground_phases_in_summary(tmp_path, capsys):
    edges = tmp_path / "edges.tsv"
    main(["gen", "path", "--n", "4", "--out", str(edges)])
    out = tmp_path / "paths.tsv"
    main(
        [
            "run",
            "--engine",
            "ground",
            "--variant",
            "double",
            "--edges",
            str(edges),
            "--out",
            str(out),
        ]
    )
    summary = capsys.readouterr().out
    assert "Ground=" in summary
    assert "Solve=" in summary
    assert "Query=" not in summary


def test_run_empty_input(tmp_path, capsys):
    edges = tmp_path / "edges.tsv"
    edges.write_bytes(b"")
    out = tmp_path / "paths.tsv"
    code = main(
        [
            "run",
            "--engine",
            "seminaive",
            "--variant",
            "double",
            "--edges",
            str(edges),
            "--out",
            str(out),
        ]
    )
    assert code == 0
    assert out.read_bytes() == b""


def test_run_rejects_malformed_edge_file(tmp_path, capsys):
    edges = tmp_path / "edges.tsv"
    edges.write_text("1\t2\nwat\n")
    code = main(
        ["run", "--engine", "seminaive", "--variant", "left", "--edges", str(edges)]
    )
    assert code == 1
    assert "error: line 2:" in capsys.readouterr().err


def test_predict_grid(capsys):
    assert main(["predict", "grid", "--n", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("family,n,k,h,")
    assert out[1] == "Grid,2,,,4,4,5,2,2,2"


def test_predict_w(capsys):
    assert main(["predict", "w", "--n", "5", "--k", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "W,5,3,,10,15,15,0,0,0"


def test_predict_bintree(capsys):
    assert main(["predict", "bintree", "--h", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "BinTree,,,3,7,6,10,4,4,4"


def test_verify_family_passes(capsys):
    assert main(["verify", "cmpl", "--n", "6"]) == 0
    assert capsys.readouterr().out.strip() == "PASS"


def test_verify_reversed_tree_passes(capsys):
    assert main(["verify", "bintreerev", "--h", "4"]) == 0
    assert capsys.readouterr().out.strip() == "PASS"


def test_verify_without_target_is_usage_error(capsys):
    assert main(["verify"]) == 2
    assert "family or --random" in capsys.readouterr().err


def test_verify_random_trivial_graphs_pass(capsys):
    # On a single vertex every loop-free sample is empty, so all checks hold.
    assert main(["verify", "--random", "5", "--max-n", "1"]) == 0
    assert capsys.readouterr().out.strip() == "PASS"


def test_verify_random_reports_unequal_left_right_counts(capsys):
    # Seeded sampling hits a digraph whose left and right combination
    # counts differ; verify must report it honestly and exit nonzero.
    code = main(["verify", "--random", "25", "--max-n", "15", "--seed", "1"])
    assert code == 1
    err = capsys.readouterr().err
    assert err.startswith("FAIL")
    assert "combinations" in err


@pytest.mark.xfail(
    strict=True,
    reason="left/right combination counts differ on arbitrary digraphs "
    "(pinned counterexamples in test_oracles.py), so a hundred random "
    "trials cannot all pass",
)
def test_verify_random_hundred_trials(capsys):
    assert main(["verify", "--random", "100", "--max-n", "25"]) == 0


def test_bench_plan_to_csv(tmp_path, capsys):
    plan = tmp_path / "plan.txt"
    plan.write_text(
        "# two quick entries\n"
        "repeats=2\n"
        "path n=6 left minincrement\n"
        "path n=6 left ground\n"
    )
    out = tmp_path / "report.csv"
    assert main(["bench", str(plan), "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("#")
    assert lines[1].startswith("family,")
    assert len(lines) == 2 + 4 + 5  # comment, header, phases per engine
    assert "9 records" in capsys.readouterr().err


def test_bench_to_stdout(tmp_path, capsys):
    plan = tmp_path / "plan.txt"
    plan.write_text("cyc n=4 right seminaive\n")
    assert main(["bench", str(plan)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].startswith("family,")
    assert ",Query," in out


def test_bench_rejects_bad_plan(tmp_path, capsys):
    plan = tmp_path / "plan.txt"
    plan.write_text("path n=3 left warp\n")
    assert main(["bench", str(plan)]) == 1
    assert "error: line 1: unknown token 'warp'" in capsys.readouterr().err


def test_bench_missing_plan_file(tmp_path, capsys):
    assert main(["bench", str(tmp_path / "none.txt")]) == 1
    assert "error:" in capsys.readouterr().err
