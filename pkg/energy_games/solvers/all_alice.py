"""
This module solves energy games in which Alice owns every vertex.

Phase one finds the zero-energy set Z from nonnegative-prefix reachability:
v needs no initial energy iff it reaches, by a nonnegative prefix path, a
vertex u that has a non-empty nonnegative-prefix closed walk. Phase two
contracts Z into a sink t and reads the remaining energies off a single
shortest-path computation: e(v) is minus the heaviest v -> t path weight.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, Optional, Tuple

import numpy as np

from energy_games.apnp.pipeline import apnp
from energy_games.apnp.reach_matrix import ReachMatrix
from energy_games.graph.algorithms import NegativeCycle, bellman_ford
from energy_games.graph.game_graph import (
    INFINITY,
    Digraph,
    Edge,
    EnergyFunction,
    GameGraph,
    Owner,
    require_valid_game,
    reverse,
)
from energy_games.utils.exceptions import InvariantViolationError, OwnerMismatchError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZeroEnergySet:
    """The vertices where Alice wins without initial energy."""
    members: FrozenSet[int]

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def _require_all_alice(g: GameGraph) -> None:
    offending = g.vertices_of(Owner.BOB)
    if offending:
        raise OwnerMismatchError("ALICE", offending)


def zero_energy_set(g: GameGraph, reach: Optional[ReachMatrix] = None) -> ZeroEnergySet:
    """
    Z = {v : some u with (reach(v, u) or v = u) and reach(u, u)}.

    Args:
        g (GameGraph): An all-Alice game graph.
        reach (Optional[ReachMatrix]): apnp(g, g.W); computed when omitted.

    Returns:
        ZeroEnergySet: The vertices with minimum sufficient energy 0.

    Raises:
        OwnerMismatchError: If a vertex belongs to Bob.
    """
    _require_all_alice(g)
    if reach is None:
        reach = apnp(g, g.W)
    closed = reach.diagonal()
    members = closed | (reach.bits & closed[np.newaxis, :]).any(axis=1)
    return ZeroEnergySet(frozenset(int(v) + 1 for v in np.flatnonzero(members)))


def contract_to_sink(g: GameGraph, z: ZeroEnergySet) -> Tuple[Digraph, int]:
    """
    Deletes the outgoing edges of Z and merges Z into a fresh sink t = n + 1.

    Vertices outside Z keep their ids. The ids of Z stay allocated but carry no
    edges; edges into Z are redirected to t, parallel edges included.

    Args:
        g (GameGraph): The game graph.
        z (ZeroEnergySet): A nonempty zero-energy set.

    Returns:
        Tuple[Digraph, int]: The contracted graph G_t and the sink id t.

    Raises:
        PreconditionError: If z is empty.
    """
    if not len(z):
        raise PreconditionError("cannot contract an empty zero-energy set")
    t = g.n + 1
    edges = tuple(
        Edge(u, t if v in z else v, w)
        for u, v, w in g.edges
        if u not in z
    )
    return Digraph(g.n + 1, edges, g.W), t


def solve_all_alice(g: GameGraph) -> EnergyFunction:
    """
    Minimum sufficient energies of an all-Alice game graph.

    Vertices in Z get 0. For the rest, e(v) = -delta(v, t) where delta is the
    heaviest path weight to the sink of G_t, found as a shortest path from t in
    G_t reversed with weights negated. Vertices that cannot reach t get INFINITY.

    Args:
        g (GameGraph): A valid all-Alice game graph.

    Returns:
        EnergyFunction: e*.

    Raises:
        OwnerMismatchError: If a vertex belongs to Bob.
        InvariantViolationError: If G_t has a positive cycle or some
            delta(v, t) >= 0 for v outside Z.
    """
    _require_all_alice(g)
    require_valid_game(g)
    z = zero_energy_set(g)
    logger.debug("Zero-energy set has %d of %d vertices", len(z), g.n)
    if not len(z):
        return EnergyFunction((INFINITY,) * g.n)

    g_t, t = contract_to_sink(g, z)
    result = bellman_ford(reverse(g_t, negate=True), t)
    if isinstance(result, NegativeCycle):
        raise InvariantViolationError(f"G_t has a positive cycle {result.cycle} outside the zero-energy set")

    values = []
    for v in g.vertices:
        if v in z:
            values.append(0)
        elif not result.reached(v):
            values.append(INFINITY)
        else:
            needed = result.distance(v)
            if needed <= 0:
                raise InvariantViolationError(f"heaviest path from {v} to the zero-energy set has weight {-needed} >= 0")
            values.append(needed)
    return EnergyFunction(tuple(values))
