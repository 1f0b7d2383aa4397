"""
This module generates seeded random game graphs for tests and benchmarks.

Every generator is deterministic in its seed: the same arguments always give
the same graph, edge order included.
"""
import logging
from typing import List

import numpy as np

from energy_games.graph.algorithms import find_negative_cycle
from energy_games.graph.game_graph import Digraph, Edge, GameGraph, Owner
from energy_games.utils.exceptions import InvariantViolationError, PreconditionError


logger = logging.getLogger(__name__)


def _check_parameters(n: int, m: int, W: int, owner_bias: float) -> None:
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    if m < n:
        raise PreconditionError(f"m must be at least n so every vertex gets an out-edge (m={m}, n={n})")
    if W < 1:
        raise PreconditionError(f"W must be at least 1, got {W}")
    if not 0.0 <= owner_bias <= 1.0:
        raise PreconditionError(f"owner_bias must lie in [0, 1], got {owner_bias}")


def _endpoints(rng: np.random.Generator, n: int, m: int):
    """One out-edge per vertex first, then m - n uniform edges."""
    sources = np.concatenate([np.arange(1, n + 1), rng.integers(1, n + 1, size=m - n)])
    targets = rng.integers(1, n + 1, size=m)
    return sources, targets


def _owners(rng: np.random.Generator, n: int, owner_bias: float) -> List[Owner]:
    draws = rng.random(n)
    return [Owner.ALICE if d < owner_bias else Owner.BOB for d in draws]


def gen_random(n: int, m: int, W: int, owner_bias: float, seed: int) -> GameGraph:
    """
    A random game graph with uniform weights in [-W, W].

    Args:
        n (int): Number of vertices.
        m (int): Number of edges, at least n.
        W (int): Maximum absolute weight, at least 1.
        owner_bias (float): Probability that a vertex belongs to Alice.
        seed (int): Seed of the random generator.

    Returns:
        GameGraph: A graph in which every vertex has at least one out-edge.

    Raises:
        PreconditionError: If m < n, W < 1 or owner_bias lies outside [0, 1].
    """
    _check_parameters(n, m, W, owner_bias)
    rng = np.random.default_rng(seed)
    sources, targets = _endpoints(rng, n, m)
    weights = rng.integers(-W, W + 1, size=m)
    owners = _owners(rng, n, owner_bias)
    edges = tuple(Edge(int(u), int(v), int(w)) for u, v, w in zip(sources, targets, weights))
    return GameGraph(n, edges, W, tuple(owners))


def gen_no_neg_cycle(n: int, m: int, W: int, owner_bias: float, seed: int) -> GameGraph:
    """
    A random game graph without negative cycles.

    Each vertex gets a potential p(v) in [0, W] and each edge the weight
    clamp(p(u) - p(v) + c, -W, W) with c >= 0. The clamped weight never drops
    below p(u) - p(v), so potentials telescope and every cycle weighs at least 0.

    Args:
        n (int): Number of vertices.
        m (int): Number of edges, at least n.
        W (int): Maximum absolute weight, at least 1.
        owner_bias (float): Probability that a vertex belongs to Alice.
        seed (int): Seed of the random generator.

    Returns:
        GameGraph: A graph with no negative cycle.

    Raises:
        PreconditionError: On infeasible parameters, as gen_random.
        InvariantViolationError: If the result has a negative cycle after all.
    """
    _check_parameters(n, m, W, owner_bias)
    rng = np.random.default_rng(seed)
    potential = rng.integers(0, W + 1, size=n + 1)
    sources, targets = _endpoints(rng, n, m)
    slack = np.where(rng.random(m) < 0.5, 0, rng.integers(0, W + 1, size=m))
    weights = np.clip(potential[sources] - potential[targets] + slack, -W, W)
    owners = _owners(rng, n, owner_bias)
    edges = tuple(Edge(int(u), int(v), int(w)) for u, v, w in zip(sources, targets, weights))
    graph = GameGraph(n, edges, W, tuple(owners))

    witness = find_negative_cycle(graph)
    if witness is not None:
        raise InvariantViolationError(f"Generated graph has negative cycle {witness.cycle}")
    return graph


def gen_complete(n: int, W: int, seed: int) -> Digraph:
    """
    A complete digraph without self-loops and uniform weights in [-W, W],
    the input shape of the negative-triangle reduction.

    Args:
        n (int): Number of vertices, at least 1.
        W (int): Maximum absolute weight, at least 1.
        seed (int): Seed of the random generator.

    Returns:
        Digraph: The graph with n * (n - 1) edges.
    """
    if n < 1 or W < 1:
        raise PreconditionError(f"n and W must be at least 1 (n={n}, W={W})")
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    weights = rng.integers(-W, W + 1, size=len(pairs))
    return Digraph(n, tuple(Edge(u, v, int(w)) for (u, v), w in zip(pairs, weights)), W)
