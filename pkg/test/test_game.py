from itertools import combinations, combinations_with_replacement

import pytest

from pycops.errors import InvalidParameterError, InvalidStateError
from pycops.game import (
    GameConfig,
    GameState,
    Phase,
    StateEncoder,
    Variant,
    cop_sub_moves,
    cop_turn_successors,
    is_capture,
    robber_moves,
    robber_turn_successors,
    sequential_cop_successors,
)
from pycops.graphs import cycle, hypercube, path, petersen, random_connected_graph

from .helpers import speed


def test_config_defaults_to_classic_game():
    config = GameConfig()
    assert (config.cop_speed, config.robber_speed, config.cop_count) == (1, 1, 1)
    assert config.variant is Variant.STANDARD
    assert config.capture_radius == 0
    assert not config.cops_must_move


def test_config_rejects_bad_parameters():
    with pytest.raises(InvalidParameterError):
        GameConfig(cop_speed=0)
    with pytest.raises(InvalidParameterError):
        GameConfig(robber_speed=0)
    with pytest.raises(InvalidParameterError):
        GameConfig(cop_count=0)
    with pytest.raises(InvalidParameterError):
        GameConfig(capture_radius=-1)


def test_config_accepts_variant_names():
    assert GameConfig(variant="active").variant is Variant.ACTIVE
    assert GameConfig(variant="active").cops_must_move
    with pytest.raises(ValueError):
        GameConfig(variant="lazy")


def test_config_key_names_every_rule():
    config = GameConfig.speed(2, 3, variant=Variant.SEMI_ACTIVE)
    assert config.key() == "s2-t2-k3-semi_active-r0"
    assert config.with_cops(1).key() == "s2-t2-k1-semi_active-r0"
    assert config.to_dict() == {
        "cop_speed": 2,
        "robber_speed": 2,
        "cop_count": 3,
        "variant": "semi_active",
        "capture_radius": 0,
    }


def test_allowed_end_distances():
    assert speed(3).allowed_end_distances == {0, 1, 2, 3}
    assert speed(3, variant=Variant.ACTIVE).allowed_end_distances == {1, 2, 3}
    assert speed(3, variant=Variant.SEMI_ACTIVE).allowed_end_distances == {1, 2, 3}
    assert speed(3, variant=Variant.RESTRICTED).allowed_end_distances == {2, 3}
    assert speed(1, variant=Variant.RESTRICTED).allowed_end_distances == {0, 1}


def test_robber_cannot_pass_through_cops():
    g = path(5)
    assert robber_moves(g, speed(2), [1], 2) == {2, 3, 4}
    assert robber_moves(g, speed(2), [3], 2) == {0, 1, 2}
    assert robber_moves(g, speed(2), [1, 3], 2) == {2}


def test_robber_must_move_in_semi_active_and_restricted_games():
    g = path(5)
    assert robber_moves(g, speed(2, variant=Variant.SEMI_ACTIVE), [1], 2) == {3, 4}
    assert robber_moves(g, speed(2, variant=Variant.RESTRICTED), [1], 2) == {3, 4}
    assert robber_moves(g, speed(2, variant=Variant.SEMI_ACTIVE), [1, 3], 2) == frozenset()


def test_robber_moves_on_cycle():
    g = cycle(6)
    assert robber_moves(g, speed(2), [1], 0) == {0, 4, 5}
    assert robber_moves(g, speed(2, variant=Variant.RESTRICTED), [1], 0) == {4, 5}


def test_restricted_moves_measure_distance_in_the_whole_graph():
    # the walk 0-4-3-2 is blocked-free but 2 is only two away from 0
    config = GameConfig(robber_speed=3, variant=Variant.RESTRICTED)
    assert robber_moves(cycle(5), config, [1], 0) == {2, 3}


def test_robber_cannot_start_on_a_cop():
    with pytest.raises(InvalidStateError):
        robber_moves(path(3), speed(1), [1], 1)


def test_can_detect_capture():
    g = path(5)
    assert is_capture(g, speed(1), [2], 2)
    assert not is_capture(g, speed(1), [1], 2)
    assert is_capture(g, GameConfig(capture_radius=1), [1], 2)
    assert not is_capture(g, GameConfig(capture_radius=1), [0, 4], 2)


def test_cop_turn_successor_counts():
    g = path(5)
    assert len(cop_turn_successors(g, speed(1), GameState.of([2], 0))) == 3
    assert len(cop_turn_successors(g, speed(1, variant=Variant.ACTIVE), GameState.of([2], 0))) == 2
    assert len(cop_turn_successors(g, speed(1, 2), GameState.of([0, 4], 2))) == 4
    assert len(cop_turn_successors(g, speed(1, 2, variant=Variant.ACTIVE), GameState.of([0, 4], 2))) == 3
    assert len(cop_turn_successors(g, speed(1, 2), GameState.of([1, 1], 4))) == 6
    assert len(cop_turn_successors(g, speed(1, 2, variant=Variant.ACTIVE), GameState.of([1, 1], 4))) == 5


def test_cop_turn_successors_are_canonical_robber_turns():
    for s in cop_turn_successors(path(5), speed(1, 2), GameState.of([4, 0], 2)):
        assert s.phase is Phase.ROBBER_TURN
        assert s.is_canonical()
        assert s.robber == 2


def test_sequential_cop_turn_reaches_the_same_states():
    g = petersen()
    for config in (speed(1, 2), speed(2, 2, variant=Variant.ACTIVE)):
        state = GameState.of([0, 7], 3)
        assert sequential_cop_successors(g, config, state) == cop_turn_successors(g, config, state)


def test_cop_sub_moves_track_whether_anyone_moved():
    state = GameState((0, 4), 2)
    moves = cop_sub_moves(path(5), speed(1, 2), state, 1)
    assert moves == {
        GameState((0, 3), 2, Phase.COP_TURN, True),
        GameState((0, 4), 2, Phase.COP_TURN, False),
    }


def test_robber_turn_successors():
    state = GameState.of([1], 2, Phase.ROBBER_TURN)
    assert robber_turn_successors(path(5), speed(2), state) == {
        GameState((1,), 2), GameState((1,), 3), GameState((1,), 4)
    }


def test_successors_check_the_phase():
    with pytest.raises(InvalidStateError):
        cop_turn_successors(path(3), speed(1), GameState.of([0], 2, Phase.ROBBER_TURN))
    with pytest.raises(InvalidStateError):
        robber_turn_successors(path(3), speed(1), GameState.of([0], 2))


def test_state_sorts_its_cops():
    s = GameState.of([3, 1, 2], 0)
    assert s.cops == (1, 2, 3)
    assert s.to_dict() == {"cops": [1, 2, 3], "robber": 0, "phase": "COP_TURN"}
    assert not GameState((2, 1), 0).is_canonical()


def test_state_space_sizes():
    assert StateEncoder(49, 2).count == 120050
    assert StateEncoder(8, 1).count == 128
    assert StateEncoder(5, 3).multiset_count == 35
    with pytest.raises(InvalidParameterError):
        StateEncoder(0, 1)


def test_encoder_is_a_bijection():
    encoder = StateEncoder(5, 2)
    seen = set()
    for i in range(encoder.count):
        state = encoder.decode(i)
        assert state.is_canonical()
        assert encoder.encode(state) == i
        seen.add(state)
    assert len(seen) == encoder.count


def test_multiset_table_is_ordered_by_rank():
    encoder = StateEncoder(hypercube(2).order, 3)
    table = encoder.multisets()
    assert table.shape == (encoder.multiset_count, 3)
    for i, row in enumerate(table):
        assert encoder.rank([int(x) for x in row]) == i
        assert encoder.unrank(i) == tuple(int(x) for x in row)


def test_encoder_rejects_bad_states():
    encoder = StateEncoder(4, 2)
    with pytest.raises(InvalidStateError):
        encoder.rank([2, 1])
    with pytest.raises(InvalidStateError):
        encoder.rank([1])
    with pytest.raises(InvalidStateError):
        encoder.rank([1, 4])
    with pytest.raises(InvalidStateError):
        encoder.encode(GameState((1, 2), 0, Phase.COP_TURN, True))
    with pytest.raises(InvalidStateError):
        encoder.encode(GameState((1, 2), 4))
    with pytest.raises(InvalidStateError):
        encoder.decode(encoder.count)


SMALL_GRAPHS = [path(5), cycle(7), hypercube(3)] + [
    random_connected_graph(n, 0.4, seed=n) for n in range(1, 9)
]


def cop_sets(graph, most=2):
    """Yields every set of at most ``most`` cop vertices"""
    for k in range(most + 1):
        yield from combinations(graph.vertices, k)


@pytest.mark.parametrize("g", SMALL_GRAPHS)
def test_speed_one_robber_moves_to_closed_neighbourhood_minus_cops(g):
    for cops in cop_sets(g):
        for v in g.vertices:
            if v in cops:
                continue
            assert robber_moves(g, GameConfig(), cops, v) == g.closed_neighborhood(v) - set(cops)


@pytest.mark.parametrize("g", SMALL_GRAPHS)
@pytest.mark.parametrize("variant", [Variant.STANDARD, Variant.ACTIVE, Variant.SEMI_ACTIVE])
def test_robber_moves_grow_with_speed(g, variant):
    for cops in cop_sets(g):
        for v in g.vertices:
            if v in cops:
                continue
            for t in range(1, 4):
                slow = robber_moves(g, GameConfig(robber_speed=t, variant=variant), cops, v)
                fast = robber_moves(g, GameConfig(robber_speed=t + 1, variant=variant), cops, v)
                assert slow <= fast


@pytest.mark.parametrize("g", SMALL_GRAPHS)
@pytest.mark.parametrize("variant", list(Variant))
def test_unblocked_robber_reaches_the_allowed_shell(g, variant):
    for t in range(1, 5):
        config = GameConfig(robber_speed=t, variant=variant)
        allowed = config.allowed_end_distances
        for v in g.vertices:
            shell = {w for w in g.ball(v, t) if g.dist(v, w) in allowed}
            assert robber_moves(g, config, (), v) == shell


@pytest.mark.parametrize("g", SMALL_GRAPHS)
@pytest.mark.parametrize("variant", list(Variant))
def test_sequential_cop_turn_matches_simultaneous_everywhere(g, variant):
    for s in (1, 2):
        for k in (1, 2):
            config = GameConfig(cop_speed=s, cop_count=k, variant=variant)
            for cops in combinations_with_replacement(g.vertices, k):
                for r in g.vertices:
                    state = GameState.of(cops, r)
                    assert sequential_cop_successors(g, config, state) == cop_turn_successors(
                        g, config, state
                    )
