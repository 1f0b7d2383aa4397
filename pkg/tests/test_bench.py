import logging

import pytest

from energy_games.cli.bench import BenchRow, HEADER, default_size, format_table, run_bench, schedule, table_rows
from energy_games.utils.excel_report import BenchWorkbook


def test_schedule_doubles_the_chosen_parameter():
    assert schedule(10, 40, 5, "m", 2) == [(10, 40, 5), (10, 80, 5), (10, 160, 5)]
    assert schedule(10, 40, 5, "rounds", 1) == [(10, 40, 5), (10, 40, 10)]
    assert schedule(10, 40, 5, "n", 1) == [(10, 40, 5), (20, 80, 5)]
    assert schedule(10, 40, 5, "none", 3) == [(10, 40, 5)]


def test_schedule_rejects_unknown_scale():
    with pytest.raises(ValueError):
        schedule(10, 40, 5, "W", 1)


@pytest.mark.parametrize("algo", ["value-iteration", "no-neg-cycle", "fixpoint", "all-alice", "all-bob"])
def test_every_algorithm_runs(algo):
    rows = run_bench(algo, 6, 12, 2, repeats=2)
    assert len(rows) == 1
    assert rows[0].algo == algo
    assert rows[0].seconds >= 0


def test_iterations_column():
    rows = run_bench("value-iteration", 5, 10, 2, rounds=3, scale="rounds", doublings=2, repeats=1)
    assert [row.iterations for row in rows] == [3, 6, 12]
    assert run_bench("all-bob", 5, 10, 2, repeats=1)[0].iterations is None
    assert run_bench("no-neg-cycle", 5, 10, 2, repeats=1)[0].iterations == 5


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        run_bench("simplex", 5, 10, 2)


def test_ratios_and_table():
    rows = [BenchRow("fixpoint", 10, 20, 3, 0.5, 7), BenchRow("fixpoint", 10, 40, 3, 1.0, 9)]
    assert table_rows(rows) == [
        ("fixpoint", 10, 20, 3, 0.5, 7, None),
        ("fixpoint", 10, 40, 3, 1.0, 9, 2.0),
    ]
    lines = format_table(rows).splitlines()
    assert lines[0].split() == list(HEADER)
    assert lines[1].split() == ["fixpoint", "10", "20", "3", "0.5", "7", "-"]
    assert lines[2].split()[-1] == "2.0"


def test_workbook_round_trip(tmp_path):
    path = tmp_path / "bench.xlsx"
    rows = table_rows([BenchRow("all-bob", 4, 8, 2, 0.25, None)])
    book = BenchWorkbook(path, HEADER)
    book.write_rows(rows)
    book.write_rows(rows + rows)
    assert book.get_row_count() == 2
    assert book.read_rows()[0][:4] == ["all-bob", 4, 8, 2]


def test_workbook_rejects_ragged_rows(tmp_path):
    with pytest.raises(ValueError):
        BenchWorkbook(tmp_path / "bench.xlsx", HEADER).write_rows([("too", "short")])


def test_all_alice_gets_smaller_defaults():
    assert default_size("all-alice") == (40, 2)
    assert default_size("value-iteration") == (1000, 10)


def test_large_all_alice_runs_are_flagged(monkeypatch, caplog):
    monkeypatch.setattr("energy_games.cli.bench.ALICE_EXPANSION_WARNING", 10)
    with caplog.at_level(logging.WARNING, logger="energy_games.cli.bench"):
        run_bench("all-alice", 4, 8, 1, repeats=1)
    assert "expands the largest instance to 12 vertices" in caplog.text


def test_small_all_alice_runs_are_not_flagged(caplog):
    with caplog.at_level(logging.WARNING, logger="energy_games.cli.bench"):
        run_bench("all-alice", 4, 8, 1, repeats=1)
    assert not caplog.records
