"""
This module solves All-Pairs Nonnegative Prefix Paths (APNP).

For weights in {-1, 0, +1}: split zero edges, compute Dyck reachability on the
split graph, build the graph G2 whose edges are nonnegative segments, and take
its transitive closure. General weights in [-W, W] are first expanded into
per-vertex gadgets with weights in {-1, 0, +1}.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from energy_games.apnp.bitset import union_of_rows
from energy_games.apnp.dyck import _require_weights, dyck_reachability, split_zero_edges
from energy_games.apnp.reach_matrix import DyckRelations, ReachMatrix
from energy_games.graph.game_graph import Digraph, Edge
from energy_games.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GadgetMap:
    """
    Correspondence between an original graph and its weight expansion.

    Attributes:
        origin (Dict[int, int]): Original vertex v -> its level-0 copy.
        level (Dict[int, Tuple[int, int]]): Expanded vertex -> (original vertex, level in [-W, W]).
    """
    origin: Dict[int, int]
    level: Dict[int, Tuple[int, int]]


def build_g2(g_original: Digraph, split: Digraph, dyck: DyckRelations) -> Digraph:
    """
    Builds G2 on the original vertices: (u, v) is an edge iff a non-empty Dyck
    path leads from u to v in the split graph or some edge (u, v) of the
    original graph has weight >= 0.

    Args:
        g_original (Digraph): The graph with weights in {-1, 0, +1}.
        split (Digraph): The graph returned by split_zero_edges.
        dyck (DyckRelations): Dyck relations of split.

    Returns:
        Digraph: An unweighted graph (all weights 0) on g_original's vertices.
    """
    if split.n < g_original.n or dyck.N.n != split.n:
        raise ValidationError([
            f"inconsistent vertex sets: original {g_original.n}, split {split.n}, dyck {dyck.N.n}"
        ])
    pairs = {(u, v) for u, v, w in g_original.edges if w >= 0}
    pairs.update((u, v) for u, v in dyck.N.pairs() if u <= g_original.n and v <= g_original.n)
    return Digraph(g_original.n, tuple(Edge(u, v, 0) for u, v in sorted(pairs)), 1)


def transitive_closure(g: Digraph) -> ReachMatrix:
    """
    Reachability by paths with at least one edge; (u, u) is set iff u lies on
    a closed walk.

    Args:
        g (Digraph): The graph; weights are ignored.

    Returns:
        ReachMatrix: The closure.
    """
    successors = [0] * g.n
    for u, v, _ in g.edges:
        successors[u - 1] |= 1 << (v - 1)

    rows = []
    for u in range(g.n):
        reach = 0
        frontier = successors[u]
        while frontier:
            reach |= frontier
            frontier = union_of_rows(successors, frontier) & ~reach
        rows.append(reach)
    return ReachMatrix.from_rows(g.n, rows)


def apnp_small(g: Digraph) -> ReachMatrix:
    """
    APNP for weights in {-1, 0, +1}.

    Args:
        g (Digraph): The graph.

    Returns:
        ReachMatrix: Entry (u, v) is set iff a non-empty nonnegative prefix path
        leads from u to v.

    Raises:
        ValidationError: If a weight lies outside {-1, 0, +1}.
    """
    _require_weights(g, {-1, 0, 1}, "apnp_small")
    split = split_zero_edges(g)
    dyck = dyck_reachability(split.graph)
    g2 = build_g2(g, split.graph, dyck)
    logger.debug("APNP on %d vertices: %d split vertices, G2 has %d edges", g.n, len(split.added), g2.m)
    return transitive_closure(g2)


def expand_weights(g: Digraph, W: int) -> Tuple[Digraph, GadgetMap]:
    """
    Expands weights in [-W, W] into {-1, 0, +1} gadgets.

    Every vertex v gets copies v^i for i in [-W, W], with v^0 keeping the id v.
    An ascending chain of +1 edges runs v^0 -> v^1 -> ... -> v^W and a
    descending chain of -1 edges runs v^0 -> v^-1 -> ... -> v^-W. An original
    edge (u, v, k) becomes the zero edge (u^k, v^0).

    Args:
        g (Digraph): The graph.
        W (int): The maximum absolute weight.

    Returns:
        Tuple[Digraph, GadgetMap]: The expanded graph on (2W + 1) * n vertices
        and the vertex correspondence.

    Raises:
        ValidationError: If some |weight| exceeds W.
    """
    if W < 0:
        raise ValidationError([f"W must be nonnegative, got {W}"])
    too_heavy = [f"edge ({u}, {v}) has weight {w} outside [-{W}, {W}]" for u, v, w in g.edges if abs(w) > W]
    if too_heavy:
        raise ValidationError(too_heavy)

    n = g.n

    def copy_of(v: int, i: int) -> int:
        if i == 0:
            return v
        slot = i if i > 0 else W - i
        return n + (v - 1) * 2 * W + slot

    level: Dict[int, Tuple[int, int]] = {}
    edges: List[Edge] = []
    for v in g.vertices:
        for i in range(-W, W + 1):
            level[copy_of(v, i)] = (v, i)
        for i in range(W):
            edges.append(Edge(copy_of(v, i), copy_of(v, i + 1), 1))
            edges.append(Edge(copy_of(v, -i), copy_of(v, -i - 1), -1))
    edges.extend(Edge(copy_of(u, k), v, 0) for u, v, k in g.edges)

    expanded = Digraph((2 * W + 1) * n, tuple(edges), 1)
    return expanded, GadgetMap(origin={v: v for v in g.vertices}, level=level)


def apnp(g: Digraph, W: int) -> ReachMatrix:
    """
    APNP for weights in [-W, W] via the gadget expansion.

    Args:
        g (Digraph): The graph.
        W (int): The maximum absolute weight.

    Returns:
        ReachMatrix: Entry (u, v) is set iff a non-empty nonnegative prefix path
        leads from u to v in g.
    """
    expanded, gadgets = expand_weights(g, W)
    closure = apnp_small(expanded)
    return closure.restrict([gadgets.origin[v] for v in g.vertices])
