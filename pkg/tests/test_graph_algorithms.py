import pytest

from energy_games.graph.algorithms import (
    NegativeCycle,
    bellman_ford,
    find_negative_cycle,
    reachable_to,
    scc,
)
from energy_games.graph.game_graph import (
    INFINITY,
    UNREACHABLE,
    Digraph,
    Edge,
    induced_subgraph,
    reverse,
    validate_game,
)
from energy_games.graph.generators import gen_random
from energy_games.utils.exceptions import ValidationError

from oracles import cheapest_edges, game, negative_cycle_vertices, reachable_from


def digraph(n, edges):
    return Digraph(n, tuple(Edge(*e) for e in edges))


def test_infinity_ordering():
    assert INFINITY > 10 ** 30
    assert not INFINITY < 5
    assert 5 < INFINITY
    assert INFINITY == INFINITY
    assert INFINITY + 3 is INFINITY
    assert max(0, INFINITY) is INFINITY
    assert min(7, INFINITY) == 7


def test_validate_game(two_cycle):
    assert validate_game(two_cycle) == []
    isolated = game(3, [(1, 2, 0), (2, 1, 0)])
    assert validate_game(isolated) == ["vertex 3: out-degree 0"]


def test_validate_game_weight_out_of_range():
    g = game(1, [(1, 1, 0)]).with_edges([Edge(1, 1, -2)])
    violations = validate_game(g)
    assert len(violations) == 1
    assert "weight -2" in violations[0]


def test_scc_examples(two_cycle):
    assert scc(two_cycle).components == [frozenset({1, 2})]
    chain = scc(digraph(3, [(1, 2, 0), (2, 3, 0)]))
    assert sorted(map(sorted, chain.components)) == [[1], [2], [3]]
    mixed = scc(digraph(3, [(1, 2, 0), (2, 1, 0), (2, 3, 0), (3, 3, 0)]))
    assert sorted(map(sorted, mixed.components)) == [[1, 2], [3]]
    assert mixed.component_of[0] == mixed.component_of[1] != mixed.component_of[2]


@pytest.mark.parametrize("seed", range(20))
def test_scc_matches_pairwise_reachability(seed):
    g = gen_random(8, 12, 2, 0.5, seed)
    condensation = scc(g)
    reach = {v: reachable_from(g, v) for v in g.vertices}
    for u in g.vertices:
        for v in g.vertices:
            same = condensation.component_of[u - 1] == condensation.component_of[v - 1]
            assert same == (v in reach[u] and u in reach[v])
    # components come in topological order
    for a, b in condensation.dag_edges:
        assert a < b


def test_bellman_ford_chain():
    result = bellman_ford(digraph(2, [(1, 2, -3), (2, 2, 0)]), 1)
    assert result.distance(2) == -3
    assert result.predecessor(2) == 1
    assert result.predecessor(1) is None


def test_bellman_ford_negative_self_loop():
    result = bellman_ford(digraph(1, [(1, 1, -1)]), 1)
    assert isinstance(result, NegativeCycle)
    assert result.cycle == (1,)
    assert result.weight == -1


def test_bellman_ford_two_cycle(two_cycle):
    result = bellman_ford(two_cycle, 1)
    assert result.distance(2) == -1
    assert result.distance(1) == 0


def test_bellman_ford_unreached_vertex():
    result = bellman_ford(digraph(3, [(1, 2, 4), (3, 1, 0)]), 1)
    assert result.distance(3) is UNREACHABLE
    assert not result.reached(3)


def test_bellman_ford_rejects_bad_source():
    with pytest.raises(ValidationError):
        bellman_ford(digraph(2, [(1, 2, 0)]), 3)


@pytest.mark.parametrize("seed", range(40))
def test_negative_cycle_detection_matches_enumeration(seed):
    g = gen_random(6, 10, 3, 0.5, seed)
    witness = find_negative_cycle(g)
    assert (witness is not None) == bool(negative_cycle_vertices(g))
    if witness is not None:
        assert witness.weight < 0
        cheapest = cheapest_edges(g)
        cycle = list(witness.cycle)
        assert sum(cheapest[(u, v)] for u, v in zip(cycle, cycle[1:] + cycle[:1])) <= witness.weight


def test_reachable_to():
    chain = digraph(3, [(1, 2, 0), (2, 3, 0)])
    assert reachable_to(chain, {3}) == {1, 2, 3}
    assert reachable_to(chain, set()) == set()
    assert reachable_to(digraph(3, [(1, 2, 0), (3, 2, 0)]), {1}) == {1}


def test_induced_subgraph_and_reverse():
    g = digraph(4, [(1, 3, 2), (3, 4, -1), (4, 2, 5)])
    sub, relabel = induced_subgraph(g, [3, 1, 4])
    assert relabel == {1: 1, 3: 2, 4: 3}
    assert [tuple(e) for e in sub.edges] == [(1, 2, 2), (2, 3, -1)]
    assert [tuple(e) for e in reverse(g, negate=True).edges] == [(3, 1, -2), (4, 3, 1), (2, 4, -5)]
