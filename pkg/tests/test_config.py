import logging

import pytest

from energy_games.utils.config import SolverConfig
from energy_games.utils.exceptions import NegativeCycleError, OwnerMismatchError, ParseError, PreconditionError
from energy_games.utils.logging_setup import configure_logging

VARIABLES = ("ENERGY_GAMES_BRUTE_FORCE_BUDGET", "ENERGY_GAMES_LOG_LEVEL", "ENERGY_GAMES_BENCH_REPEATS")


@pytest.fixture
def clean_env(monkeypatch):
    for name in VARIABLES:
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_defaults(clean_env):
    assert SolverConfig.from_env() == SolverConfig(1_000_000, "WARNING", 5)


def test_reads_environment(clean_env):
    clean_env.setenv("ENERGY_GAMES_BRUTE_FORCE_BUDGET", "250")
    clean_env.setenv("ENERGY_GAMES_LOG_LEVEL", "debug")
    clean_env.setenv("ENERGY_GAMES_BENCH_REPEATS", "3")
    assert SolverConfig.from_env() == SolverConfig(250, "DEBUG", 3)


@pytest.mark.parametrize("name, value", [
    ("ENERGY_GAMES_BRUTE_FORCE_BUDGET", "lots"),
    ("ENERGY_GAMES_BENCH_REPEATS", "0"),
    ("ENERGY_GAMES_LOG_LEVEL", "CHATTY"),
])
def test_rejects_invalid_values(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ValueError):
        SolverConfig.from_env()


def test_configure_logging_installs_one_stderr_handler():
    configure_logging("INFO")
    logger = configure_logging("DEBUG")
    assert logger.name == "energy_games"
    assert len(logger.handlers) == 1
    assert logger.level == logging.DEBUG
    assert not logger.propagate


def test_exception_hierarchy():
    assert issubclass(OwnerMismatchError, PreconditionError)
    assert issubclass(NegativeCycleError, PreconditionError)
    error = NegativeCycleError([1, 2], -3)
    assert error.cycle == [1, 2]
    assert "1 -> 2" in str(error)
    assert str(ParseError("bad tag", 4)) == "line 4: bad tag"
    assert str(ParseError("no header")) == "no header"
