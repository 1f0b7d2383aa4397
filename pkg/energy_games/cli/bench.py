"""
Benchmark harness: times the solvers on seeded generated instances over a
doubling schedule and renders the results as a text table.

Instance generation is excluded from the timings.
"""
import logging
import statistics
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from energy_games.graph.game_graph import GameGraph
from energy_games.graph.generators import gen_no_neg_cycle, gen_random
from energy_games.solvers.all_alice import solve_all_alice
from energy_games.solvers.all_bob import solve_all_bob
from energy_games.solvers.value_iteration import fixpoint_with_sweeps, solve_no_neg_cycles, value_iteration

logger = logging.getLogger(__name__)

BENCH_ALGORITHMS = ("value-iteration", "no-neg-cycle", "fixpoint", "all-alice", "all-bob")
SCALES = ("none", "m", "rounds", "n")
HEADER = ("algo", "n", "m", "W", "seconds", "iterations", "ratio")

# (n, W) used when the command line leaves them out. The all-Alice solver
# saturates a graph of (2W + 1) * n vertices in cubic time.
DEFAULT_SIZE = (1000, 10)
ALGORITHM_SIZES = {"all-alice": (40, 2)}
ALICE_EXPANSION_WARNING = 2000


@dataclass(frozen=True)
class BenchRow:
    """One timed configuration. seconds is the median over the repeats."""
    algo: str
    n: int
    m: int
    W: int
    seconds: float
    iterations: Optional[int]


def _instance(algo: str, n: int, m: int, W: int, seed: int) -> GameGraph:
    if algo == "no-neg-cycle":
        return gen_no_neg_cycle(n, m, W, 0.5, seed)
    bias = {"all-alice": 1.0, "all-bob": 0.0}.get(algo, 0.5)
    return gen_random(n, m, W, bias, seed)


def _runner(algo: str, rounds: int) -> Callable[[GameGraph], Optional[int]]:
    """A callable that solves an instance and returns its iteration count, if any."""
    def run_rounds(g: GameGraph) -> int:
        value_iteration(g, rounds)
        return rounds

    def run_no_neg_cycle(g: GameGraph) -> int:
        solve_no_neg_cycles(g)
        return g.n

    def run_fixpoint(g: GameGraph) -> int:
        return fixpoint_with_sweeps(g)[1]

    def run_all_alice(g: GameGraph) -> None:
        solve_all_alice(g)

    def run_all_bob(g: GameGraph) -> None:
        solve_all_bob(g)

    runners = {
        "value-iteration": run_rounds,
        "no-neg-cycle": run_no_neg_cycle,
        "fixpoint": run_fixpoint,
        "all-alice": run_all_alice,
        "all-bob": run_all_bob,
    }
    if algo not in runners:
        raise ValueError(f"Unknown benchmark algorithm {algo!r}")
    return runners[algo]


def default_size(algo: str) -> Tuple[int, int]:
    """The default (n, W) for algo."""
    return ALGORITHM_SIZES.get(algo, DEFAULT_SIZE)


def schedule(n: int, m: int, rounds: int, scale: str, doublings: int) -> List[Tuple[int, int, int]]:
    """
    The (n, m, rounds) configurations of a doubling run.

    Args:
        n (int): Base vertex count.
        m (int): Base edge count.
        rounds (int): Base round count.
        scale (str): Which parameter doubles: "none", "m", "rounds" or "n" (n and m together).
        doublings (int): Number of doublings after the base row.
    """
    if scale not in SCALES:
        raise ValueError(f"Unknown scale {scale!r}, expected one of {SCALES}")
    steps = 0 if scale == "none" else doublings
    plan = []
    for k in range(steps + 1):
        factor = 2 ** k
        plan.append((
            n * factor if scale == "n" else n,
            m * factor if scale in ("m", "n") else m,
            rounds * factor if scale == "rounds" else rounds,
        ))
    return plan


def run_bench(
    algo: str,
    n: int,
    m: int,
    W: int,
    rounds: Optional[int] = None,
    scale: str = "none",
    doublings: int = 0,
    repeats: int = 5,
    seed: int = 0,
) -> List[BenchRow]:
    """
    Times algo over the doubling schedule.

    Returns:
        List[BenchRow]: One row per configuration, seconds being the median of repeats runs.
    """
    if algo not in BENCH_ALGORITHMS:
        raise ValueError(f"Unknown benchmark algorithm {algo!r}, expected one of {BENCH_ALGORITHMS}")
    plan = schedule(n, m, rounds if rounds is not None else n, scale, doublings)
    expanded = (2 * W + 1) * max(size for size, _, _ in plan)
    if algo == "all-alice" and expanded > ALICE_EXPANSION_WARNING:
        logger.warning(
            "all-alice expands the largest instance to %d vertices; saturation is cubic in that and may not finish",
            expanded,
        )
    rows = []
    for size, edges, round_count in plan:
        graph = _instance(algo, size, edges, W, seed)
        solve = _runner(algo, round_count)
        timings = []
        iterations = None
        for _ in range(repeats):
            start = time.perf_counter()
            iterations = solve(graph)
            timings.append(time.perf_counter() - start)
        row = BenchRow(algo, size, edges, W, statistics.median(timings), iterations)
        logger.info("bench %s n=%d m=%d: %.6fs", algo, size, edges, row.seconds)
        rows.append(row)
    return rows


def table_rows(rows: List[BenchRow]) -> List[Tuple]:
    """Rows in HEADER order; ratio is the time relative to the previous row."""
    result = []
    previous = None
    for row in rows:
        ratio = round(row.seconds / previous, 3) if previous else None
        result.append((row.algo, row.n, row.m, row.W, round(row.seconds, 6), row.iterations, ratio))
        previous = row.seconds
    return result


def format_table(rows: List[BenchRow]) -> str:
    """Renders the rows as an aligned text table."""
    cells = [list(HEADER)] + [["-" if c is None else str(c) for c in r] for r in table_rows(rows)]
    widths = [max(len(line[i]) for line in cells) for i in range(len(HEADER))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() + "\n" for line in cells)
