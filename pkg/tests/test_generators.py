import pytest

from energy_games.graph.algorithms import find_negative_cycle
from energy_games.graph.game_graph import Owner, validate_game
from energy_games.graph.generators import gen_complete, gen_no_neg_cycle, gen_random
from energy_games.graph.instance_file import serialize_instance
from energy_games.utils.exceptions import PreconditionError

from oracles import simple_cycle_weights


def test_random_all_alice():
    g = gen_random(4, 4, 1, 1.0, seed=7)
    assert g.is_all_alice
    assert g.m == 4
    assert validate_game(g) == []


def test_random_all_bob_has_weights_in_range():
    g = gen_random(10, 40, 3, 0.0, seed=2)
    assert g.is_all_bob
    assert all(-3 <= w <= 3 for _, _, w in g.edges)
    assert g.W == 3


def test_same_seed_same_bytes():
    first = serialize_instance(gen_random(6, 15, 4, 0.5, seed=3))
    assert first == serialize_instance(gen_random(6, 15, 4, 0.5, seed=3))
    assert first != serialize_instance(gen_random(6, 15, 4, 0.5, seed=4))


@pytest.mark.parametrize("n, m, W, bias", [(4, 3, 1, 0.5), (0, 0, 1, 0.5), (3, 3, 0, 0.5), (3, 3, 1, 1.5)])
def test_infeasible_parameters(n, m, W, bias):
    with pytest.raises(PreconditionError):
        gen_random(n, m, W, bias, seed=0)
    with pytest.raises(PreconditionError):
        gen_no_neg_cycle(n, m, W, bias, seed=0)


def test_no_neg_cycle_small():
    g = gen_no_neg_cycle(2, 2, 1, 0.5, seed=1)
    assert validate_game(g) == []
    assert find_negative_cycle(g) is None


@pytest.mark.parametrize("seed", range(30))
def test_no_neg_cycle_every_simple_cycle_nonnegative(seed):
    g = gen_no_neg_cycle(6, 14, 3, 0.5, seed)
    assert validate_game(g) == []
    assert all(weight >= 0 for weight in simple_cycle_weights(g))


def test_owner_bias_mixes_players():
    g = gen_random(200, 400, 2, 0.5, seed=5)
    assert g.vertices_of(Owner.ALICE) and g.vertices_of(Owner.BOB)


def test_complete_digraph():
    g = gen_complete(4, 10, seed=9)
    assert g.m == 12
    assert all(u != v for u, v, _ in g.edges)
    assert len({(u, v) for u, v, _ in g.edges}) == 12
    assert all(-10 <= w <= 10 for _, _, w in g.edges)
