import pytest

from revsynth.cli import main

PERES_IMAGES = "0 1 2 3 6 7 5 4"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_census_text_report(capsys):
    code, out, _ = run(capsys, "census", "-n", "3", "--lib", "nct",
                       "--polarity", "pos", "--objective", "gates")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d 0 1"
    assert lines[1] == "d 1 12"
    assert lines[-1] == "avg 5.87"


def test_census_tsv_report(capsys):
    code, out, _ = run(capsys, "census", "-n", "2", "--lib", "nct",
                       "--polarity", "mixed", "--format", "tsv")
    assert code == 0
    first = out.splitlines()[0].split("\t")
    assert first == ["nct", "+/-", "0", "1"]


def test_synth_reports_two_gates(capsys):
    code, out, _ = run(capsys, "synth", "--perm", PERES_IMAGES,
                       "--lib", "nct", "--polarity", "pos")
    assert code == 0
    assert out.startswith("lines 3\n")
    assert out.strip().endswith("gates 2")


def test_synth_writes_and_verifies_file(tmp_path, capsys):
    target = tmp_path / "peres.circ"
    code, out, _ = run(capsys, "synth", "--perm", PERES_IMAGES, "--out", str(target))
    assert code == 0 and "gates 2" in out
    code, out, _ = run(capsys, "verify", "--circuit", str(target), "--perm", PERES_IMAGES)
    assert code == 0 and out.strip() == "OK"


def test_verify_mismatch_exit_one(tmp_path, capsys):
    target = tmp_path / "c.circ"
    target.write_text("lines 3\nTOF x0 :\n")
    code, out, _ = run(capsys, "verify", "--circuit", str(target),
                       "--perm", "0 1 2 3 4 5 6 7")
    assert code == 1 and out.strip() == "MISMATCH"


def test_simulate_round_trip(tmp_path, capsys):
    target = tmp_path / "c.circ"
    code, out, _ = run(capsys, "synth", "--perm", PERES_IMAGES, "--out", str(target))
    assert code == 0
    code, out, _ = run(capsys, "simulate", "--circuit", str(target))
    assert code == 0
    assert out.strip() == f"perm 3: {PERES_IMAGES}"


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["census"])  # missing -n
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb"])
    assert exc.value.code == 2


def test_esop_min_and_compile(tmp_path, capsys):
    esop_file = tmp_path / "or.esop"
    code, out, _ = run(capsys, "esop-min", "--tt", "0111", "--out", str(esop_file))
    assert code == 0
    content = esop_file.read_text()
    assert content.startswith("vars 2\n")
    assert len(content.strip().splitlines()) == 3  # header + two cubes
    circ_file = tmp_path / "or.circ"
    code, out, _ = run(capsys, "compile-esop", "--esop", str(esop_file),
                       "--out", str(circ_file))
    assert code == 0
    assert circ_file.read_text().startswith("lines 3\n")


def test_esop_min_budget_failure(capsys):
    code, out, err = run(capsys, "esop-min", "--tt", "0110", "--budget", "1")
    assert code == 1
    assert "error:" in err


def test_esop_min_multi_output(capsys):
    code, out, _ = run(capsys, "esop-min", "--perm", PERES_IMAGES)
    assert code == 0
    assert out.startswith("vars 3\n")
    assert "| 2" in out


def test_anf_command(capsys):
    code, out, _ = run(capsys, "anf", "--tt", "00011101")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "anf 3: 00011010"
    assert set(lines[1:]) == {"-11", "1--", "11-"}


def test_sort_synth_cycles(capsys):
    code, out, _ = run(capsys, "sort-synth", "--perm", "7 1 4 3 0 2 6 5",
                       "--emit-cycles")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "cycles (0 7 5 2 4)"
    assert lines[-1] == "gates 10"


def test_sort_synth_greedy(capsys):
    code, out, _ = run(capsys, "sort-synth", "--perm", "7 1 4 3 0 2 6 5", "--greedy")
    assert code == 0
    assert int(out.splitlines()[-1].split()[1]) <= 10


def test_ilp_solve_and_emit(tmp_path, capsys):
    lp = tmp_path / "peres.lp"
    code, out, _ = run(capsys, "ilp", "--perm", PERES_IMAGES, "--depth", "2",
                       "--emit", str(lp), "--solve-naive")
    assert code == 0
    assert "objective 2" in out
    text = lp.read_text()
    assert text.startswith("Minimize") and text.rstrip().endswith("End")


def test_ilp_infeasible_exit_one(capsys):
    code, out, _ = run(capsys, "ilp", "--perm", PERES_IMAGES, "--depth", "1",
                       "--solve-naive")
    assert code == 1 and "infeasible" in out


def test_coverage_report(capsys):
    code, out, _ = run(capsys, "coverage", "--tt", "0110", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t")[0] == "cube"
    assert len(lines) == 11  # header + 9 rows + on-columns line


def test_cost_override(capsys):
    code, out, _ = run(capsys, "synth", "--perm", PERES_IMAGES, "--lib", "nctpf",
                       "--objective", "qc", "--cost", "peres:1=2", "--cost", "speres:1=2")
    assert code == 0
    assert out.strip().endswith("qc 2")


def test_miller_benchmark_file(capsys):
    from importlib import resources

    path = resources.files("revsynth.data").joinpath("miller.perm")
    code, out, _ = run(capsys, "synth", "--perm", str(path))
    assert code == 0
    assert out.strip().endswith("gates 5")
