"""
This module implements value iteration for energy games.

One sweep maps an energy function e to

    e'(u) = max(opt over edges (u, v) of e(v) - w(u, v), 0)

with opt = min at Alice vertices and max at Bob vertices. Starting from
e_0 = 0, the j-th iterate is the minimum sufficient energy of the j-round game.
Sweeps are synchronous: every vertex reads the previous iterate only.
"""
import logging
from typing import Iterator, Tuple

import numpy as np

from energy_games.graph.algorithms import find_negative_cycle
from energy_games.graph.game_graph import INFINITY, EnergyFunction, GameGraph, Owner, require_valid_game
from energy_games.utils.exceptions import InvariantViolationError, NegativeCycleError, PreconditionError

logger = logging.getLogger(__name__)

_UNBOUNDED = np.iinfo(np.int64).max // 4


class SweepOperator:
    """
    The one-sweep update of a game graph, vectorised over edges grouped by source.

    Attributes:
    -----------
    n : int
        Number of vertices.
    alice : np.ndarray
        Boolean mask of Alice vertices (position v - 1).
    """

    def __init__(self, g: GameGraph):
        require_valid_game(g)
        data = np.asarray(g.edges, dtype=np.int64)
        order = np.argsort(data[:, 0], kind="stable")
        self.n = g.n
        self.W = g.W
        self._targets = data[order, 1] - 1
        self._weights = data[order, 2]
        self._starts = np.searchsorted(data[order, 0], np.arange(1, g.n + 1))
        self.alice = np.array([o is Owner.ALICE for o in g.owners], dtype=bool)

    def _combine(self, candidates: np.ndarray) -> np.ndarray:
        lowest = np.minimum.reduceat(candidates, self._starts)
        highest = np.maximum.reduceat(candidates, self._starts)
        return np.where(self.alice, lowest, highest)

    def apply(self, energy: np.ndarray) -> np.ndarray:
        """One sweep on a finite energy vector (position v - 1)."""
        return np.maximum(self._combine(energy[self._targets] - self._weights), 0)

    def apply_capped(self, energy: np.ndarray, infinite: np.ndarray, cap: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        One sweep where infinite entries stay infinite and values above cap
        become infinite.
        """
        candidates = np.where(infinite[self._targets], _UNBOUNDED, energy[self._targets] - self._weights)
        updated = np.maximum(self._combine(candidates), 0)
        now_infinite = infinite | (updated > cap)
        return np.where(now_infinite, 0, updated), now_infinite


def _to_energy(values: np.ndarray, infinite=None) -> EnergyFunction:
    if infinite is None:
        return EnergyFunction(tuple(int(x) for x in values))
    return EnergyFunction(tuple(INFINITY if inf else int(x) for x, inf in zip(values, infinite)))


def value_iteration_trace(g: GameGraph, i: int) -> Iterator[EnergyFunction]:
    """
    Yields every iterate e_0, e_1, ..., e_i.

    Args:
        g (GameGraph): A valid game graph.
        i (int): Number of rounds, at least 0.

    Raises:
        PreconditionError: If i < 0.
    """
    if i < 0:
        raise PreconditionError(f"round count must be nonnegative, got {i}")
    operator = SweepOperator(g)
    energy = np.zeros(g.n, dtype=np.int64)
    yield _to_energy(energy)
    for _ in range(i):
        energy = operator.apply(energy)
        yield _to_energy(energy)


def value_iteration(g: GameGraph, i: int) -> EnergyFunction:
    """
    The minimum sufficient energy of the i-round game.

    Args:
        g (GameGraph): A valid game graph.
        i (int): Number of rounds, at least 0.

    Returns:
        EnergyFunction: e_i, computed with i synchronous sweeps.

    Raises:
        PreconditionError: If i < 0.
        ValidationError: If g is not a valid game graph.
    """
    if i < 0:
        raise PreconditionError(f"round count must be nonnegative, got {i}")
    operator = SweepOperator(g)
    energy = np.zeros(g.n, dtype=np.int64)
    for _ in range(i):
        energy = operator.apply(energy)
    return _to_energy(energy)


def solve_no_neg_cycles(g: GameGraph, verify: bool = False) -> EnergyFunction:
    """
    Minimum sufficient energies of a game graph without negative cycles,
    obtained as the n-round game value.

    Args:
        g (GameGraph): A valid game graph without negative cycles.
        verify (bool): Check the precondition with a negative-cycle search first.

    Returns:
        EnergyFunction: e*, every value finite and at most n * W.

    Raises:
        NegativeCycleError: If verify is set and g has a negative cycle.
    """
    if verify:
        witness = find_negative_cycle(g)
        if witness is not None:
            raise NegativeCycleError(witness.cycle, witness.weight)
    return value_iteration(g, g.n)


def fixpoint_with_sweeps(g: GameGraph) -> Tuple[EnergyFunction, int]:
    """
    Least fixpoint of the sweep with infinity detection, plus the number of
    sweeps it took.

    Finite minimum sufficient energies never exceed (n - 1) * W, so any value
    above that is frozen at INFINITY.

    Returns:
        Tuple[EnergyFunction, int]: e* and the sweep count.
    """
    operator = SweepOperator(g)
    cap = (g.n - 1) * g.W
    limit = g.n * (cap + 2)
    energy = np.zeros(g.n, dtype=np.int64)
    infinite = np.zeros(g.n, dtype=bool)

    sweeps = 0
    while True:
        updated, now_infinite = operator.apply_capped(energy, infinite, cap)
        sweeps += 1
        if np.array_equal(updated, energy) and np.array_equal(now_infinite, infinite):
            break
        energy, infinite = updated, now_infinite
        if sweeps > limit:
            raise InvariantViolationError(f"Value iteration did not stabilise within {limit} sweeps")

    logger.debug("Fixpoint reached after %d sweeps (%d infinite vertices)", sweeps, int(infinite.sum()))
    return _to_energy(energy, infinite), sweeps


def solve_fixpoint(g: GameGraph) -> EnergyFunction:
    """
    Minimum sufficient energies of an arbitrary game graph by value iteration
    to the fixpoint.

    Args:
        g (GameGraph): A valid game graph.

    Returns:
        EnergyFunction: e*.
    """
    energy, _ = fixpoint_with_sweeps(g)
    return energy
