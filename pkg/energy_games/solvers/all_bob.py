"""
This module solves energy games in which Bob owns every vertex.

Bob wins exactly at the vertices that reach a negative cycle. Those are found
per strongly connected component and then closed under inward reachability.
On the rest, a zero-weight edge from every vertex to an artificial sink t gives
e(v) = max(-d(v, t), 0).
"""
import logging
from collections import defaultdict
from typing import Dict, List, Set

from energy_games.graph.algorithms import NegativeCycle, bellman_ford, find_negative_cycle, reachable_to, scc
from energy_games.graph.game_graph import (
    INFINITY,
    Digraph,
    Edge,
    EnergyFunction,
    GameGraph,
    Owner,
    induced_subgraph,
    require_valid_game,
    reverse,
)
from energy_games.utils.exceptions import InvariantViolationError, OwnerMismatchError

logger = logging.getLogger(__name__)


def _require_all_bob(g: GameGraph) -> None:
    offending = g.vertices_of(Owner.ALICE)
    if offending:
        raise OwnerMismatchError("BOB", offending)


def infinite_energy_set(g: GameGraph) -> Set[int]:
    """
    The vertices from which a path leads to a negative cycle.

    Args:
        g (GameGraph): An all-Bob game graph.

    Returns:
        Set[int]: Vertices with minimum sufficient energy INFINITY.

    Raises:
        OwnerMismatchError: If a vertex belongs to Alice.
    """
    _require_all_bob(g)
    condensation = scc(g)
    inner_edges: Dict[int, List[Edge]] = defaultdict(list)
    for edge in g.edges:
        component = condensation.component_of[edge.source - 1]
        if component == condensation.component_of[edge.target - 1]:
            inner_edges[component].append(edge)

    losing: Set[int] = set()
    negative_components = 0
    for index, edges in inner_edges.items():
        members = sorted(condensation.components[index])
        relabel = {v: i + 1 for i, v in enumerate(members)}
        component = Digraph(len(members), tuple(Edge(relabel[u], relabel[v], w) for u, v, w in edges), g.W)
        if find_negative_cycle(component) is not None:
            losing.update(members)
            negative_components += 1

    logger.debug("%d components hold a negative cycle", negative_components)
    return reachable_to(g, losing)


def solve_all_bob(g: GameGraph) -> EnergyFunction:
    """
    Minimum sufficient energies of an all-Bob game graph.

    Args:
        g (GameGraph): A valid all-Bob game graph.

    Returns:
        EnergyFunction: e*.

    Raises:
        OwnerMismatchError: If a vertex belongs to Alice.
        InvariantViolationError: If a negative cycle survives the removal of
            the infinite-energy vertices.
    """
    _require_all_bob(g)
    require_valid_game(g)
    infinite = infinite_energy_set(g)
    remaining = [v for v in g.vertices if v not in infinite]
    values: Dict[int, object] = {v: INFINITY for v in infinite}

    if remaining:
        sub, relabel = induced_subgraph(g, remaining)
        sink = sub.n + 1
        with_sink = Digraph(sub.n + 1, sub.edges + tuple(Edge(v, sink, 0) for v in sub.vertices), g.W)
        result = bellman_ford(reverse(with_sink), sink)
        if isinstance(result, NegativeCycle):
            raise InvariantViolationError(f"negative cycle {result.cycle} left after removing infinite-energy vertices")
        for v, local in relabel.items():
            values[v] = max(-result.distance(local), 0)

    return EnergyFunction.from_mapping(g.n, values)
