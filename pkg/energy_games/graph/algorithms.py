"""
This module contains the classical graph subroutines the solvers are built on:
strongly connected components, Bellman-Ford with negative-cycle witnesses,
and inward reachability.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Set, Tuple, Union

import networkx as nx
import numpy as np

from energy_games.graph.game_graph import UNREACHABLE, Digraph, Edge, _Unreachable
from energy_games.utils.exceptions import InvariantViolationError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SsspResult:
    """
    Single-source shortest-walk distances.

    Attributes:
        source (int): The source vertex.
        dist (Tuple[Union[int, _Unreachable], ...]): Distance of vertex v at position v - 1.
        parent (Tuple[Optional[int], ...]): Predecessor of vertex v on a shortest walk.
    """
    source: int
    dist: Tuple[Union[int, _Unreachable], ...]
    parent: Tuple[Optional[int], ...]

    def distance(self, v: int) -> Union[int, _Unreachable]:
        return self.dist[v - 1]

    def predecessor(self, v: int) -> Optional[int]:
        return self.parent[v - 1]

    def reached(self, v: int) -> bool:
        return self.dist[v - 1] is not UNREACHABLE


@dataclass(frozen=True)
class NegativeCycle:
    """
    A witness cycle of negative total weight.

    Attributes:
        cycle (Tuple[int, ...]): Vertices in walk order; the last vertex has an
            edge back to the first.
        weight (int): Total weight of the cycle.
    """
    cycle: Tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class Condensation:
    """
    Strongly connected components and the DAG between them.

    Attributes:
        components (List[frozenset]): The components; they partition the vertices.
        component_of (Tuple[int, ...]): Index into components for vertex v at position v - 1.
        dag_edges (frozenset): Pairs (i, j) of component indices joined by an edge.
    """
    components: List[frozenset]
    component_of: Tuple[int, ...]
    dag_edges: frozenset


def to_networkx(g: Digraph) -> nx.DiGraph:
    """The unweighted reachability structure of g as a networkx DiGraph."""
    graph = nx.DiGraph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from((u, v) for u, v, _ in g.edges)
    return graph


def scc(g: Digraph) -> Condensation:
    """
    Decomposes g into strongly connected components.

    Args:
        g (Digraph): The graph.

    Returns:
        Condensation: Components in topological order of the component DAG,
        the component index of each vertex and the DAG edges.
    """
    condensed = nx.condensation(to_networkx(g))
    order = list(nx.topological_sort(condensed))
    position = {node: i for i, node in enumerate(order)}
    components = [frozenset(condensed.nodes[node]["members"]) for node in order]
    mapping = condensed.graph["mapping"]
    component_of = tuple(position[mapping[v]] for v in g.vertices)
    dag_edges = frozenset((position[a], position[b]) for a, b in condensed.edges)
    logger.debug("Found %d strongly connected components among %d vertices", len(components), g.n)
    return Condensation(components, component_of, dag_edges)


def _edge_arrays(g: Digraph) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    if not g.edges:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy(), empty.copy()
    data = np.asarray(g.edges, dtype=np.int64)
    return data[:, 0].copy(), data[:, 1].copy(), data[:, 2].copy()


def _parent_cycle_vertex(parent: np.ndarray) -> int:
    """
    A vertex lying on a cycle of the predecessor graph, or 0 if it is a forest.
    Index 0 is a sink that every root points to.
    """
    jump = parent.copy()
    for _ in range(max(1, math.ceil(math.log2(len(parent))) + 1)):
        jump = jump[jump]
    on_cycle = np.flatnonzero(jump[1:]) + 1
    return int(jump[on_cycle[0]]) if on_cycle.size else 0


def _walk_parent_cycle(parent: np.ndarray, parent_weight: np.ndarray, start: int) -> NegativeCycle:
    backwards = [start]
    weight = int(parent_weight[start])
    v = int(parent[start])
    while v != start:
        backwards.append(v)
        weight += int(parent_weight[v])
        v = int(parent[v])
    cycle = tuple(reversed(backwards))
    if weight >= 0:
        raise InvariantViolationError(f"Predecessor cycle {cycle} has weight {weight} >= 0")
    return NegativeCycle(cycle, weight)


def bellman_ford(g: Digraph, source: int) -> Union[SsspResult, NegativeCycle]:
    """
    Shortest-walk distances from source, or a negative cycle reachable from it.

    Passes are synchronous: pass k relaxes every edge against the distances of
    pass k - 1, so after pass k every walk of at most k edges is accounted for.
    A cycle in the predecessor graph always has negative weight, so it is
    checked after each pass and reported as soon as it appears.

    Args:
        g (Digraph): The graph.
        source (int): The source vertex.

    Returns:
        Union[SsspResult, NegativeCycle]: Exact distances when no negative cycle
        is reachable from source, otherwise a concrete negative cycle.

    Raises:
        ValidationError: If source is not a vertex of g.
    """
    if not 1 <= source <= g.n:
        raise ValidationError([f"source {source} outside [1, {g.n}]"])
    src, tgt, weight = _edge_arrays(g)
    dist = np.zeros(g.n + 1, dtype=np.int64)
    reached = np.zeros(g.n + 1, dtype=bool)
    reached[source] = True
    parent = np.zeros(g.n + 1, dtype=np.int64)
    parent_weight = np.zeros(g.n + 1, dtype=np.int64)

    for pass_number in range(1, g.n + 1):
        live = reached[src]
        cand = dist[src[live]] + weight[live]
        l_src, l_tgt, l_w = src[live], tgt[live], weight[live]
        better = ~reached[l_tgt] | (cand < dist[l_tgt])
        if not better.any():
            logger.debug("Bellman-Ford from %d converged after %d passes", source, pass_number - 1)
            break
        cand, l_src, l_tgt, l_w = cand[better], l_src[better], l_tgt[better], l_w[better]
        order = np.lexsort((cand, l_tgt))
        l_tgt, cand, l_src, l_w = l_tgt[order], cand[order], l_src[order], l_w[order]
        targets, first = np.unique(l_tgt, return_index=True)
        dist[targets] = cand[first]
        reached[targets] = True
        parent[targets] = l_src[first]
        parent_weight[targets] = l_w[first]

        on_cycle = _parent_cycle_vertex(parent)
        if on_cycle:
            logger.debug("Negative cycle found from %d after %d passes", source, pass_number)
            return _walk_parent_cycle(parent, parent_weight, on_cycle)
    else:
        # An improvement in pass n always leaves a predecessor cycle behind.
        if g.n:
            raise InvariantViolationError("Bellman-Ford still improving after n passes without a predecessor cycle")

    return SsspResult(
        source=source,
        dist=tuple(int(dist[v]) if reached[v] else UNREACHABLE for v in g.vertices),
        parent=tuple(int(parent[v]) if reached[v] and parent[v] else None for v in g.vertices),
    )


def find_negative_cycle(g: Digraph) -> Optional[NegativeCycle]:
    """
    Any negative cycle of g, searched from a super-source joined to every vertex
    by a zero-weight edge.

    Args:
        g (Digraph): The graph.

    Returns:
        Optional[NegativeCycle]: A witness, or None when every cycle is nonnegative.
    """
    if g.n == 0:
        return None
    super_source = g.n + 1
    extended = Digraph(g.n + 1, g.edges + tuple(Edge(super_source, v, 0) for v in g.vertices), g.W)
    result = bellman_ford(extended, super_source)
    return result if isinstance(result, NegativeCycle) else None


def reachable_to(g: Digraph, targets: Iterable[int]) -> Set[int]:
    """
    Every vertex with a path (possibly empty) into targets.

    Args:
        g (Digraph): The graph.
        targets (Iterable[int]): The target vertices.

    Returns:
        Set[int]: The targets and all vertices that reach one of them.
    """
    predecessors: List[List[int]] = [[] for _ in range(g.n + 1)]
    for u, v, _ in g.edges:
        predecessors[v].append(u)
    found = set(targets)
    queue = deque(found)
    while queue:
        v = queue.popleft()
        for u in predecessors[v]:
            if u not in found:
                found.add(u)
                queue.append(u)
    return found
