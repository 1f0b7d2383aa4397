"""
This module reduces Negative Triangle detection to APNP.

The reduction graph has five layers of copies of the input vertices. For
layers i = 1, 2, 3 every input edge (u, v, w) becomes (u^i, v^(i+1), -w), and
every vertex gets a capstone edge (v^4, v^5, -1). A negative triangle through
v exists iff some query pair (v^1, v^5) is joined by a nonnegative prefix path.
"""
import logging
from typing import List, Tuple

from energy_games.apnp.pipeline import apnp
from energy_games.graph.game_graph import Digraph, Edge
from energy_games.utils.exceptions import PreconditionError

logger = logging.getLogger(__name__)

LAYERS = 5
CAPSTONE_WEIGHT = -1


def _layer_id(n: int, v: int, layer: int) -> int:
    return (layer - 1) * n + v


def neg_triangle_to_apnp(g: Digraph) -> Tuple[Digraph, List[Tuple[int, int]]]:
    """
    Builds the layered APNP instance for g.

    Args:
        g (Digraph): A weighted digraph without self-loops.

    Returns:
        Tuple[Digraph, List[Tuple[int, int]]]: The layered graph on 5n vertices,
        with W = max(|w|, 1), and the query pairs (v^1, v^5) in vertex order.

    Raises:
        PreconditionError: If g has a self-loop.
    """
    loops = sorted({u for u, v, _ in g.edges if u == v})
    if loops:
        raise PreconditionError(f"negative-triangle input must not contain self-loops (vertices {loops})")
    n = g.n
    edges = [
        Edge(_layer_id(n, u, layer), _layer_id(n, v, layer + 1), -w)
        for layer in range(1, LAYERS - 1)
        for u, v, w in g.edges
    ]
    edges.extend(Edge(_layer_id(n, v, LAYERS - 1), _layer_id(n, v, LAYERS), CAPSTONE_WEIGHT) for v in g.vertices)
    w_max = max([abs(w) for _, _, w in g.edges] + [1])
    queries = [(_layer_id(n, v, 1), _layer_id(n, v, LAYERS)) for v in g.vertices]
    return Digraph(LAYERS * n, tuple(edges), w_max), queries


def has_negative_triangle_via_apnp(g: Digraph) -> bool:
    """
    Negative-triangle detection through the APNP reduction.

    Args:
        g (Digraph): A weighted digraph without self-loops.

    Returns:
        bool: True iff some query pair of the reduction is APNP-reachable.
    """
    layered, queries = neg_triangle_to_apnp(g)
    reach = apnp(layered, layered.W)
    hits = [(s, t) for s, t in queries if reach[s, t]]
    logger.debug("Reduction on %d vertices answered %d of %d queries positively", g.n, len(hits), len(queries))
    return bool(hits)


def brute_force_neg_triangle(g: Digraph) -> bool:
    """
    Exhaustive search for vertices a, b, c with w(a, b) + w(b, c) + w(c, a) < 0.

    Parallel edges count with their lightest weight; self-loops are ignored.

    Args:
        g (Digraph): A weighted digraph.

    Returns:
        bool: True iff a negative triangle exists.
    """
    lightest = {}
    for u, v, w in g.edges:
        if u != v and ((u, v) not in lightest or w < lightest[(u, v)]):
            lightest[(u, v)] = w
    for (a, b), w_ab in lightest.items():
        for c in g.vertices:
            if c in (a, b) or (b, c) not in lightest or (c, a) not in lightest:
                continue
            if w_ab + lightest[(b, c)] + lightest[(c, a)] < 0:
                return True
    return False
