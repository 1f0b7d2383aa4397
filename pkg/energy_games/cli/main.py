"""
Command line front door of the energy_games package.

Subcommands:
    solve            minimum sufficient energies of a game instance
    apnp             all-pairs nonnegative prefix path reachability
    gen              seeded instance generation
    bench            solver timings over a doubling schedule
    check-reduction  negative-triangle detection through APNP against brute force

Results go to standard output, diagnostics to standard error. Exit codes:
0 success, 1 internal error or reduction disagreement, 2 parse or validation
error, 3 precondition error.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from energy_games.apnp.oracle import apnp_oracle
from energy_games.apnp.pipeline import apnp
from energy_games.cli.bench import BENCH_ALGORITHMS, HEADER, SCALES, default_size, format_table, run_bench, table_rows
from energy_games.graph.game_graph import GameGraph, Owner
from energy_games.graph.generators import gen_complete, gen_no_neg_cycle, gen_random
from energy_games.graph.instance_file import format_energy, format_reach, parse_instance, serialize_instance
from energy_games.reductions.negative_triangle import brute_force_neg_triangle, has_negative_triangle_via_apnp
from energy_games.solvers.all_alice import solve_all_alice
from energy_games.solvers.all_bob import solve_all_bob
from energy_games.solvers.strategies import brute_force
from energy_games.solvers.value_iteration import solve_fixpoint, solve_no_neg_cycles, value_iteration
from energy_games.utils.config import SolverConfig
from energy_games.utils.excel_report import BenchWorkbook
from energy_games.utils.exceptions import (
    EnergyGameError,
    ParseError,
    PreconditionError,
    ValidationError,
)
from energy_games.utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_PRECONDITION = 3

SOLVE_ALGORITHMS = ("auto", "all-alice", "all-bob", "no-neg-cycle", "fixpoint", "brute", "rounds")
GEN_TYPES = ("random", "no-neg-cycle", "all-alice", "all-bob", "neg-triangle")


def _read_input(path: Optional[str]):
    if path is None:
        return getattr(sys.stdin, "buffer", sys.stdin).read()
    return Path(path).read_bytes()


def _error(message: str) -> None:
    sys.stderr.write(f"energy-games: {message}\n")


def cmd_solve(args: argparse.Namespace, config: SolverConfig) -> int:
    """Solves the instance with the requested algorithm and prints the energy function."""
    if (args.algo == "rounds") != (args.rounds is not None):
        _error("--rounds is required with --algo rounds and only allowed with it")
        return EXIT_INVALID

    g = parse_instance(_read_input(args.infile))
    algo = args.algo
    if algo == "auto":
        algo = "all-alice" if g.is_all_alice else "all-bob" if g.is_all_bob else "fixpoint"
        logger.info("auto dispatch chose %s", algo)

    if algo == "all-alice":
        energy = solve_all_alice(g)
    elif algo == "all-bob":
        energy = solve_all_bob(g)
    elif algo == "no-neg-cycle":
        energy = solve_no_neg_cycles(g, verify=args.verify)
    elif algo == "fixpoint":
        energy = solve_fixpoint(g)
    elif algo == "brute":
        energy = brute_force(g, config.brute_force_budget)
    else:
        energy = value_iteration(g, args.rounds)

    sys.stdout.write(format_energy(energy))
    return EXIT_OK


def cmd_apnp(args: argparse.Namespace, config: SolverConfig) -> int:
    """Prints the APNP reachability matrix of the instance."""
    g = parse_instance(_read_input(args.infile), require_owners=False)
    reach = apnp(g, g.W) if args.algo == "dyck" else apnp_oracle(g, g.W)
    sys.stdout.write(format_reach(reach))
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: SolverConfig) -> int:
    """Prints a generated instance. Infeasible parameters are a validation error."""
    m = args.m if args.m is not None else 2 * args.n
    try:
        if args.type == "neg-triangle":
            complete = gen_complete(args.n, args.W, args.seed)
            g = GameGraph.from_digraph(complete, [Owner.ALICE] * complete.n)
        elif args.type == "no-neg-cycle":
            g = gen_no_neg_cycle(args.n, m, args.W, args.owner_bias, args.seed)
        else:
            bias = {"all-alice": 1.0, "all-bob": 0.0}.get(args.type, args.owner_bias)
            g = gen_random(args.n, m, args.W, bias, args.seed)
    except PreconditionError as e:
        _error(str(e))
        return EXIT_INVALID
    sys.stdout.write(serialize_instance(g))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, config: SolverConfig) -> int:
    """Prints the timing table and optionally stores it in a workbook."""
    default_n, default_w = default_size(args.algo)
    n = args.n if args.n is not None else default_n
    W = args.W if args.W is not None else default_w
    m = args.m if args.m is not None else 4 * n
    repeats = args.repeats if args.repeats is not None else config.bench_repeats
    try:
        rows = run_bench(args.algo, n, m, W, args.rounds, args.scale, args.doublings, repeats, args.seed)
    except PreconditionError as e:
        _error(str(e))
        return EXIT_INVALID
    sys.stdout.write(format_table(rows))
    if args.xlsx:
        BenchWorkbook(args.xlsx, HEADER).write_rows(table_rows(rows))
        logger.info("bench table written to %s", args.xlsx)
    return EXIT_OK


def cmd_check_reduction(args: argparse.Namespace, config: SolverConfig) -> int:
    """Runs both negative-triangle detectors and reports every disagreement."""
    if args.infile is not None:
        graphs = [parse_instance(_read_input(args.infile), require_owners=False)]
    else:
        try:
            graphs = [gen_complete(args.n, args.W, args.seed + k) for k in range(args.count)]
        except PreconditionError as e:
            _error(str(e))
            return EXIT_INVALID

    disagreements = 0
    for k, g in enumerate(graphs):
        via_apnp = has_negative_triangle_via_apnp(g)
        exhaustive = brute_force_neg_triangle(g)
        verdict = "agree" if via_apnp == exhaustive else "DISAGREE"
        disagreements += via_apnp != exhaustive
        sys.stdout.write(f"instance {k} n={g.n} apnp={int(via_apnp)} brute={int(exhaustive)} {verdict}\n")
    sys.stdout.write(f"checked {len(graphs)} instances, {disagreements} disagreements\n")
    return EXIT_FAILURE if disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """The root parser with one subparser per command."""
    parser = argparse.ArgumentParser(prog="energy-games", description="Exact solvers for energy games.")
    parser.add_argument("--log-level", default=None, help="logging level (default from ENERGY_GAMES_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="minimum sufficient energies of a game instance")
    solve.add_argument("--algo", choices=SOLVE_ALGORITHMS, default="auto")
    solve.add_argument("--rounds", type=int, default=None, help="round count for --algo rounds")
    solve.add_argument("--verify", action="store_true", help="check for negative cycles before no-neg-cycle")
    solve.add_argument("--in", dest="infile", default=None, help="instance file (default: standard input)")

    reach = commands.add_parser("apnp", help="all-pairs nonnegative prefix path reachability")
    reach.add_argument("--algo", choices=("dyck", "oracle"), default="dyck")
    reach.add_argument("--in", dest="infile", default=None, help="instance file (default: standard input)")

    gen = commands.add_parser("gen", help="generate a seeded instance")
    gen.add_argument("--type", choices=GEN_TYPES, default="random")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, default=None, help="edge count (default 2n, ignored for neg-triangle)")
    gen.add_argument("--W", type=int, default=1)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--owner-bias", type=float, default=0.5, help="probability that a vertex belongs to Alice")

    bench = commands.add_parser("bench", help="time a solver over a doubling schedule")
    bench.add_argument("--algo", choices=BENCH_ALGORITHMS, default="value-iteration")
    bench.add_argument("--n", type=int, default=None, help="vertex count (default 1000, 40 for all-alice)")
    bench.add_argument("--m", type=int, default=None, help="edge count (default 4n)")
    bench.add_argument("--W", type=int, default=None, help="weight bound (default 10, 2 for all-alice)")
    bench.add_argument("--rounds", type=int, default=None, help="rounds for value-iteration (default n)")
    bench.add_argument("--scale", choices=SCALES, default="none", help="parameter to double")
    bench.add_argument("--doublings", type=int, default=1)
    bench.add_argument("--repeats", type=int, default=None, help="timed runs per row (default from ENERGY_GAMES_BENCH_REPEATS)")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--xlsx", default=None, help="also write the table to this .xlsx workbook")

    check = commands.add_parser("check-reduction", help="negative-triangle reduction against brute force")
    check.add_argument("--n", type=int, default=6)
    check.add_argument("--W", type=int, default=4)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--count", type=int, default=10)
    check.add_argument("--in", dest="infile", default=None, help="check a single instance file instead")

    return parser


COMMANDS: Dict[str, Callable[[argparse.Namespace, SolverConfig], int]] = {
    "solve": cmd_solve,
    "apnp": cmd_apnp,
    "gen": cmd_gen,
    "bench": cmd_bench,
    "check-reduction": cmd_check_reduction,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one command.

    Args:
        argv (Optional[List[str]]): Arguments without the program name.
            Defaults to sys.argv[1:].

    Returns:
        int: The process exit code.
    """
    args = build_parser().parse_args(argv)
    try:
        config = SolverConfig.from_env()
        configure_logging(args.log_level or config.log_level)
    except ValueError as e:
        _error(str(e))
        return EXIT_INVALID

    try:
        return COMMANDS[args.command](args, config)
    except (ParseError, ValidationError) as e:
        _error(str(e))
        return EXIT_INVALID
    except PreconditionError as e:
        _error(str(e))
        return EXIT_PRECONDITION
    except EnergyGameError as e:
        logger.exception("internal error")
        _error(str(e))
        return EXIT_FAILURE
    except OSError as e:
        _error(str(e))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
