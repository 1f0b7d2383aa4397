"""
This module works with positional strategies: evaluating a strategy pair,
exhaustive min-max over all positional strategies, and extracting an Alice
strategy from a fixpoint energy function.

A positional strategy chooses an out-neighbour, not an edge. Between parallel
edges the owner takes the one that suits them: Alice the heaviest, Bob the
lightest.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional

from energy_games.graph.game_graph import INFINITY, Energy, EnergyFunction, GameGraph, Owner, require_valid_game
from energy_games.utils.config import SolverConfig
from energy_games.utils.exceptions import BudgetExceededError, InvariantViolationError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PositionalStrategy:
    """
    A history-independent choice of successor for every vertex of one player.

    Attributes:
        player (Owner): The player the strategy belongs to.
        choice (Mapping[int, int]): Owned vertex -> chosen out-neighbour.
    """
    player: Owner
    choice: Mapping[int, int]

    def __getitem__(self, v: int) -> int:
        return self.choice[v]

    def check(self, g: GameGraph) -> None:
        """
        Raises PreconditionError unless the strategy is defined on exactly the
        player's vertices and every choice is an out-neighbour.
        """
        owned = set(g.vertices_of(self.player))
        missing = sorted(owned - set(self.choice))
        extra = sorted(set(self.choice) - owned)
        if missing or extra:
            raise PreconditionError(
                f"{self.player.name} strategy must cover exactly the {self.player.name} vertices "
                f"(missing {missing}, not owned {extra})"
            )
        illegal = [v for v, x in self.choice.items() if x not in g.out_neighbors(v)]
        if illegal:
            raise PreconditionError(f"strategy moves along a non-edge at vertices {illegal}")


def move_weight(g: GameGraph, u: int, v: int) -> int:
    """Weight of the move u -> v for the owner of u, resolving parallel edges."""
    weights = [e.weight for e in g.out_edges[u] if e.target == v]
    if not weights:
        raise PreconditionError(f"({u}, {v}) is not an edge")
    return max(weights) if g.owner(u) is Owner.ALICE else min(weights)


def enumerate_strategies(g: GameGraph, player: Owner) -> Iterator[PositionalStrategy]:
    """Every positional strategy of player, in lexicographic order of choices."""
    owned = g.vertices_of(player)
    for picks in itertools.product(*(g.out_neighbors(v) for v in owned)):
        yield PositionalStrategy(player, dict(zip(owned, picks)))


def strategy_count(g: GameGraph, player: Optional[Owner] = None) -> int:
    """Number of positional strategies of player, or of strategy pairs when player is None."""
    vertices = g.vertices if player is None else g.vertices_of(player)
    return math.prod(g.out_degree(v) for v in vertices)


def _successors(g: GameGraph, sigma: PositionalStrategy, tau: PositionalStrategy) -> Dict[int, int]:
    successor = {}
    for v in g.vertices:
        strategy = sigma if g.owner(v) is Owner.ALICE else tau
        if v not in strategy.choice:
            raise PreconditionError(f"no {g.owner(v).name} strategy choice for vertex {v}")
        successor[v] = strategy.choice[v]
    return successor


def _evaluate(g: GameGraph, successor: Dict[int, int], weight: Dict[tuple, int], s: int) -> Energy:
    prefix = 0
    lowest = 0
    prefix_at = {s: 0}
    cycle_closed = False
    v = s
    for _ in range(2 * g.n):
        nxt = successor[v]
        prefix += weight[(v, nxt)]
        lowest = min(lowest, prefix)
        v = nxt
        if not cycle_closed and v in prefix_at:
            cycle_closed = True
            if prefix - prefix_at[v] < 0:
                return INFINITY
        prefix_at.setdefault(v, prefix)
    return max(0, -lowest)


def evaluate_strategies(g: GameGraph, sigma: PositionalStrategy, tau: PositionalStrategy, s: int) -> Energy:
    """
    Minimum sufficient energy at s when Alice plays sigma and Bob plays tau.

    The play is a lasso. Walking 2n steps enters its cycle within n steps and
    goes around it once more, so a nonnegative cycle shows its lowest prefix
    inside the walk.

    Args:
        g (GameGraph): The game graph.
        sigma (PositionalStrategy): Alice's strategy.
        tau (PositionalStrategy): Bob's strategy.
        s (int): The start vertex.

    Returns:
        Energy: INFINITY if the lasso's cycle is negative, otherwise
        max(0, -lowest prefix weight).

    Raises:
        PreconditionError: If a strategy misses one of its player's vertices.
    """
    successor = _successors(g, sigma, tau)
    weight = {(v, x): move_weight(g, v, x) for v, x in successor.items()}
    return _evaluate(g, successor, weight, s)


def brute_force(g: GameGraph, budget: Optional[int] = None) -> EnergyFunction:
    """
    Minimum sufficient energies by exhaustive min over Alice strategies of max
    over Bob strategies.

    Args:
        g (GameGraph): A valid game graph.
        budget (Optional[int]): Largest number of strategy pairs to enumerate.
            Defaults to the configured brute-force budget.

    Returns:
        EnergyFunction: e*.

    Raises:
        BudgetExceededError: If the game has more strategy pairs than the budget.
    """
    require_valid_game(g)
    if budget is None:
        budget = SolverConfig.from_env().brute_force_budget
    pairs = strategy_count(g)
    if pairs > budget:
        raise BudgetExceededError(pairs, budget)
    logger.debug("Brute force over %d strategy pairs", pairs)

    weight = {(u, v): move_weight(g, u, v) for u in g.vertices for v in g.out_neighbors(u)}
    bob_strategies = list(enumerate_strategies(g, Owner.BOB))
    best: List[Energy] = [INFINITY] * g.n
    for sigma in enumerate_strategies(g, Owner.ALICE):
        worst: List[Energy] = [0] * g.n
        for tau in bob_strategies:
            successor = _successors(g, sigma, tau)
            for s in g.vertices:
                if worst[s - 1] is not INFINITY:
                    worst[s - 1] = max(worst[s - 1], _evaluate(g, successor, weight, s))
        best = [min(b, w) for b, w in zip(best, worst)]
    return EnergyFunction(tuple(best))


def extract_alice_strategy(g: GameGraph, e: EnergyFunction) -> PositionalStrategy:
    """
    An Alice strategy consistent with a fixpoint energy function.

    At an Alice vertex u with finite e(u) the lowest-id neighbour v with
    e(u) + w(u, v) >= e(v) is chosen; at Alice vertices with infinite energy
    the lowest-id neighbour is chosen.

    Args:
        g (GameGraph): The game graph.
        e (EnergyFunction): A fixpoint of the sweep, e.g. solve_fixpoint(g).

    Returns:
        PositionalStrategy: A strategy defined on every Alice vertex.

    Raises:
        InvariantViolationError: If a finite-valued Alice vertex has no
            qualifying neighbour, i.e. e is not a fixpoint.
    """
    choice = {}
    for u in g.vertices_of(Owner.ALICE):
        neighbours = g.out_neighbors(u)
        if e[u] is INFINITY:
            choice[u] = neighbours[0]
            continue
        qualifying = [v for v in neighbours if e[v] is not INFINITY and e[u] + move_weight(g, u, v) >= e[v]]
        if not qualifying:
            raise InvariantViolationError(f"energy {e[u]} at Alice vertex {u} is not supported by any neighbour")
        choice[u] = qualifying[0]
    return PositionalStrategy(Owner.ALICE, choice)
