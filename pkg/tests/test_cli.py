import io

import pytest

from energy_games.cli.bench import HEADER
from energy_games.cli.main import main
from energy_games.graph.instance_file import parse_instance
from energy_games.utils.excel_report import BenchWorkbook


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_auto_two_cycle(capsys, instance_file, two_cycle_text):
    code, out, _ = run(capsys, "solve", "--algo", "auto", "--in", instance_file(two_cycle_text))
    assert code == 0
    assert out == "v 1 1\nv 2 0\n"


def test_solve_reads_standard_input(capsys, monkeypatch, two_cycle_text):
    monkeypatch.setattr("sys.stdin", io.StringIO(two_cycle_text))
    code, out, _ = run(capsys, "solve")
    assert code == 0
    assert out == "v 1 1\nv 2 0\n"


def test_zero_rounds(capsys, instance_file, two_cycle_text):
    code, out, _ = run(capsys, "solve", "--algo", "rounds", "--rounds", "0", "--in", instance_file(two_cycle_text))
    assert code == 0
    assert out == "v 1 0\nv 2 0\n"


@pytest.mark.parametrize("argv", [["--algo", "rounds"], ["--algo", "fixpoint", "--rounds", "3"]])
def test_rounds_flag_only_with_rounds(capsys, instance_file, two_cycle_text, argv):
    code, out, err = run(capsys, "solve", *argv, "--in", instance_file(two_cycle_text))
    assert code == 2
    assert out == ""
    assert "--rounds" in err


def test_owner_mismatch_exits_with_precondition_code(capsys, instance_file):
    path = instance_file("p eg 2 2 1\no 1 A\no 2 B\ne 1 2 0\ne 2 1 0\n")
    code, out, err = run(capsys, "solve", "--algo", "all-bob", "--in", path)
    assert code == 3
    assert out == ""
    assert "BOB" in err


def test_parse_error_exits_with_validation_code(capsys, instance_file):
    code, _, err = run(capsys, "solve", "--in", instance_file("p eg 2 1 5\no 1 B\no 2 B\ne 1 2 9\n"))
    assert code == 2
    assert "weight 9" in err


def test_dead_end_exits_with_validation_code(capsys, instance_file):
    code, _, err = run(capsys, "solve", "--in", instance_file("p eg 2 1 1\no 1 A\no 2 A\ne 1 2 0\n"))
    assert code == 2
    assert "out-degree 0" in err


def test_missing_file_exits_with_validation_code(capsys, tmp_path):
    code, _, _ = run(capsys, "solve", "--in", str(tmp_path / "absent.txt"))
    assert code == 2


def test_brute_force_budget_exits_with_precondition_code(capsys, monkeypatch, instance_file):
    monkeypatch.setenv("ENERGY_GAMES_BRUTE_FORCE_BUDGET", "1")
    path = instance_file("p eg 2 4 1\no 1 A\no 2 B\ne 1 1 0\ne 1 2 0\ne 2 1 0\ne 2 2 0\n")
    code, _, err = run(capsys, "solve", "--algo", "brute", "--in", path)
    assert code == 3
    assert "budget" in err


def test_invalid_log_level(capsys, instance_file, two_cycle_text):
    code, _, _ = run(capsys, "--log-level", "LOUD", "solve", "--in", instance_file(two_cycle_text))
    assert code == 2


def test_apnp_single_edge(capsys, instance_file):
    code, out, _ = run(capsys, "apnp", "--in", instance_file("p eg 2 1 1\ne 1 2 1\n"))
    assert code == 0
    assert out == "r 2\n01\n00\n"


def test_apnp_edgeless(capsys, instance_file):
    code, out, _ = run(capsys, "apnp", "--algo", "oracle", "--in", instance_file("p eg 2 0 1\n"))
    assert code == 0
    assert out == "r 2\n00\n00\n"


def test_apnp_algorithms_agree(capsys, instance_file):
    _, generated, _ = run(capsys, "gen", "--type", "random", "--n", "6", "--m", "12", "--W", "3", "--seed", "21")
    path = instance_file(generated)
    _, dyck, _ = run(capsys, "apnp", "--algo", "dyck", "--in", path)
    _, oracle, _ = run(capsys, "apnp", "--algo", "oracle", "--in", path)
    assert dyck == oracle
    assert dyck.startswith("r 6\n")


def test_gen_all_alice(capsys):
    code, out, _ = run(capsys, "gen", "--type", "all-alice", "--n", "5", "--m", "9", "--W", "2", "--seed", "4")
    assert code == 0
    owner_lines = [line for line in out.splitlines() if line.startswith("o ")]
    assert len(owner_lines) == 5
    assert all(line.endswith(" A") for line in owner_lines)
    assert parse_instance(out).is_all_alice


def test_gen_is_deterministic(capsys):
    argv = ["gen", "--type", "random", "--n", "7", "--m", "15", "--W", "4", "--seed", "8", "--owner-bias", "0.3"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_gen_infeasible_parameters(capsys):
    code, out, err = run(capsys, "gen", "--n", "4", "--m", "3")
    assert code == 2
    assert out == ""
    assert err


def test_gen_neg_triangle_reparses(capsys):
    code, out, _ = run(capsys, "gen", "--type", "neg-triangle", "--n", "4", "--W", "3", "--seed", "1")
    assert code == 0
    g = parse_instance(out)
    assert g.m == 12


def test_generated_no_neg_cycle_passes_verification(capsys, instance_file):
    _, generated, _ = run(capsys, "gen", "--type", "no-neg-cycle", "--n", "8", "--m", "20", "--W", "5", "--seed", "2")
    code, _, _ = run(capsys, "solve", "--algo", "no-neg-cycle", "--verify", "--in", instance_file(generated))
    assert code == 0


@pytest.mark.parametrize("kind, algo", [("all-alice", "all-alice"), ("all-bob", "all-bob"), ("random", "fixpoint")])
def test_auto_matches_explicit_algorithm(capsys, instance_file, kind, algo):
    _, generated, _ = run(capsys, "gen", "--type", kind, "--n", "6", "--m", "12", "--W", "3", "--seed", "5")
    path = instance_file(generated)
    _, auto, _ = run(capsys, "solve", "--in", path)
    _, explicit, _ = run(capsys, "solve", "--algo", algo, "--in", path)
    _, brute, _ = run(capsys, "solve", "--algo", "brute", "--in", path)
    assert auto == explicit == brute


def test_check_reduction(capsys):
    code, out, _ = run(capsys, "check-reduction", "--n", "4", "--W", "3", "--seed", "0", "--count", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert all(line.endswith("agree") for line in lines[:5])
    assert lines[-1] == "checked 5 instances, 0 disagreements"


def test_check_reduction_from_file(capsys, instance_file):
    path = instance_file("p eg 3 3 2\ne 1 2 1\ne 2 3 -1\ne 3 1 -2\n")
    code, out, _ = run(capsys, "check-reduction", "--in", path)
    assert code == 0
    assert out.splitlines()[0] == "instance 0 n=3 apnp=1 brute=1 agree"


def test_bench_trivial_instance(capsys):
    code, out, _ = run(capsys, "bench", "--n", "1", "--m", "1", "--W", "1", "--repeats", "1")
    assert code == 0
    header, row = out.splitlines()
    assert header.split() == ["algo", "n", "m", "W", "seconds", "iterations", "ratio"]
    assert row.split()[:4] == ["value-iteration", "1", "1", "1"]


def test_bench_writes_workbook(capsys, tmp_path):
    path = tmp_path / "bench.xlsx"
    code, out, _ = run(capsys, "bench", "--algo", "fixpoint", "--n", "20", "--m", "40", "--scale", "m",
                       "--doublings", "2", "--repeats", "1", "--xlsx", str(path))
    assert code == 0
    rows = BenchWorkbook(path, HEADER).read_rows()
    assert [row[2] for row in rows] == [40, 80, 160]
    assert len(out.splitlines()) == 4


def test_bench_all_alice_defaults(capsys):
    code, out, _ = run(capsys, "bench", "--algo", "all-alice", "--repeats", "1")
    assert code == 0
    assert out.splitlines()[1].split()[:4] == ["all-alice", "40", "160", "2"]
