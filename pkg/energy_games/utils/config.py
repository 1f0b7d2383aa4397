"""
This module provides the solver configuration, read from environment variables.
"""
import os
import logging
from dataclasses import dataclass

DEFAULT_BRUTE_FORCE_BUDGET = 1_000_000
DEFAULT_BENCH_REPEATS = 5
DEFAULT_LOG_LEVEL = "WARNING"


def _read_positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ValueError(f"Environment variable '{name}' must be an integer, got {raw!r}.") from e
    if value < 1:
        raise ValueError(f"Environment variable '{name}' must be at least 1, got {value}.")
    return value


@dataclass(frozen=True)
class SolverConfig:
    """
    Settings shared by the solvers and the command line.

    Attributes:
        brute_force_budget (int): Largest number of positional strategy pairs
            brute_force is allowed to enumerate.
        log_level (str): Name of the logging level used by the command line.
        bench_repeats (int): Number of timed runs per benchmark row.
    """
    brute_force_budget: int = DEFAULT_BRUTE_FORCE_BUDGET
    log_level: str = DEFAULT_LOG_LEVEL
    bench_repeats: int = DEFAULT_BENCH_REPEATS

    @classmethod
    def from_env(cls) -> "SolverConfig":
        """
        Builds a configuration from the ENERGY_GAMES_* environment variables.

        Returns:
            SolverConfig: The configuration, with defaults for unset variables.

        Raises:
            ValueError: If a variable is set to an invalid value.
        """
        log_level = (os.getenv("ENERGY_GAMES_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper()
        if not isinstance(logging.getLevelName(log_level), int):
            raise ValueError(f"Environment variable 'ENERGY_GAMES_LOG_LEVEL' is not a logging level: {log_level!r}.")
        return cls(
            brute_force_budget=_read_positive_int("ENERGY_GAMES_BRUTE_FORCE_BUDGET", DEFAULT_BRUTE_FORCE_BUDGET),
            log_level=log_level,
            bench_repeats=_read_positive_int("ENERGY_GAMES_BENCH_REPEATS", DEFAULT_BENCH_REPEATS),
        )
