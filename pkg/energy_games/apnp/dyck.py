"""
This module computes one-bracket Dyck reachability on graphs with weights in
{-1, +1}, after zero-weight edges have been split away.

A +1 edge opens a bracket and a -1 edge closes one. A non-empty Dyck path is a
concatenation of arches, where an arch is an opening edge u -> x, a possibly
empty Dyck path x -> y and a closing edge y -> v. The relations are computed by
worklist saturation of exactly that grammar.
"""
import itertools
import logging
from collections import deque
from typing import Dict, FrozenSet, List, NamedTuple

from energy_games.apnp.bitset import iter_bits, union_of_rows
from energy_games.apnp.reach_matrix import DyckRelations, ReachMatrix
from energy_games.graph.game_graph import Digraph, Edge
from energy_games.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


class SplitGraph(NamedTuple):
    """
    Result of split_zero_edges.

    graph: the graph with weights in {-1, +1}; original vertices keep their ids.
    added: ids of the vertices introduced by the split.
    split_of: maps an original vertex u to its split vertex u'.
    """
    graph: Digraph
    added: FrozenSet[int]
    split_of: Dict[int, int]


def _require_weights(g: Digraph, allowed: set, name: str) -> None:
    bad = [f"edge ({u}, {v}) has weight {w}" for u, v, w in g.edges if w not in allowed]
    if bad:
        raise ValidationError([f"{name} needs weights in {sorted(allowed)}", *bad[:10]])


def split_zero_edges(g: Digraph) -> SplitGraph:
    """
    Replaces zero-weight edges by a +1/-1 detour through a shared split vertex.

    Every vertex u with at least one zero edge gets a single new vertex u' and
    the edge (u, u', +1); each zero edge (u, v) becomes (u', v, -1).

    Args:
        g (Digraph): A graph with weights in {-1, 0, +1}.

    Returns:
        SplitGraph: The split graph, the added vertices and the split map.

    Raises:
        ValidationError: If a weight lies outside {-1, 0, +1}.
    """
    _require_weights(g, {-1, 0, 1}, "split_zero_edges")
    split_of: Dict[int, int] = {}
    for u in sorted({u for u, _, w in g.edges if w == 0}):
        split_of[u] = g.n + len(split_of) + 1

    edges: List[Edge] = []
    for u, v, w in g.edges:
        if w == 0:
            edges.append(Edge(split_of[u], v, -1))
        else:
            edges.append(Edge(u, v, w))
    edges.extend(Edge(u, u_split, 1) for u, u_split in split_of.items())

    split = Digraph(g.n + len(split_of), tuple(edges), 1)
    return SplitGraph(split, frozenset(split_of.values()), split_of)


def dyck_reachability(g: Digraph) -> DyckRelations:
    """
    All-pairs Dyck reachability by worklist saturation.

    N[u] is kept as a bitset and recomputed as
    arches(u) | union of N[v] over v in arches(u), where arches(u) collects
    every v reached by +1, then a possibly empty Dyck path, then -1. A change
    to N[u] requeues the +1-predecessors of u and every row containing u.

    Args:
        g (Digraph): A graph with weights in {-1, +1}.

    Returns:
        DyckRelations: D (reflexive) and N (non-empty paths only).

    Raises:
        ValidationError: If a weight lies outside {-1, +1}.
    """
    _require_weights(g, {-1, 1}, "dyck_reachability")
    n = g.n
    opens: List[List[int]] = [[] for _ in range(n)]
    openers_of: List[List[int]] = [[] for _ in range(n)]
    closes = [0] * n
    for u, v, w in g.edges:
        if w == 1:
            opens[u - 1].append(v - 1)
            openers_of[v - 1].append(u - 1)
        else:
            closes[u - 1] |= 1 << (v - 1)

    nonempty = [0] * n
    # holders[z]: rows u with z in nonempty[u]
    holders: List[List[int]] = [[] for _ in range(n)]
    worklist = deque(u for u in range(n) if opens[u])
    queued = [bool(opens[u]) for u in range(n)]
    recomputations = 0

    while worklist:
        u = worklist.popleft()
        queued[u] = False
        recomputations += 1

        arches = 0
        for x in opens[u]:
            arches |= union_of_rows(closes, nonempty[x] | (1 << x))
        updated = nonempty[u] | arches | union_of_rows(nonempty, arches)
        gained = updated & ~nonempty[u]
        if not gained:
            continue
        nonempty[u] = updated
        for z in iter_bits(gained):
            holders[z].append(u)

        for w in itertools.chain(openers_of[u], holders[u]):
            if not queued[w]:
                queued[w] = True
                worklist.append(w)

    logger.debug("Dyck saturation on %d vertices took %d row updates", n, recomputations)
    possibly_empty = [row | (1 << u) for u, row in enumerate(nonempty)]
    return DyckRelations(D=ReachMatrix.from_rows(n, possibly_empty), N=ReachMatrix.from_rows(n, nonempty))
