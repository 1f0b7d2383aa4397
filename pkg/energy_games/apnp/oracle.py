"""
Independent APNP oracle: breadth-first search over (vertex, energy) states.

Energy saturates at n * W. Once the energy reaches n * W every simple path
(weight at least -(n - 1) * W) keeps its prefixes nonnegative, so saturated
reachability equals plain reachability from there on.
"""
from collections import deque

import numpy as np

from energy_games.apnp.reach_matrix import ReachMatrix
from energy_games.graph.game_graph import Digraph
from energy_games.utils.exceptions import ValidationError


def apnp_oracle(g: Digraph, W: int) -> ReachMatrix:
    """
    APNP by exhaustive state search, one search per source.

    Args:
        g (Digraph): The graph.
        W (int): The maximum absolute weight.

    Returns:
        ReachMatrix: Entry (u, v) is set iff some state (v, e) is reached from
        (u, 0) by at least one transition.
    """
    too_heavy = [f"edge ({u}, {v}) has weight {w} outside [-{W}, {W}]" for u, v, w in g.edges if abs(w) > W]
    if too_heavy:
        raise ValidationError(too_heavy)
    cap = g.n * max(W, 1)
    bits = np.zeros((g.n, g.n), dtype=bool)

    for u in g.vertices:
        seen = set()
        queue = deque([(u, 0)])
        while queue:
            v, energy = queue.popleft()
            for _, x, w in g.out_edges[v]:
                if energy + w < 0:
                    continue
                state = (x, min(energy + w, cap))
                if state not in seen:
                    seen.add(state)
                    bits[u - 1, x - 1] = True
                    queue.append(state)
    return ReachMatrix(g.n, bits)
