"""Legal moves of the speed-(s, t) game."""

from itertools import product
from typing import FrozenSet, Iterable, Set

from ._config import GameConfig
from ._state import GameState
from ._variant import Phase
from ..errors import InvalidStateError
from ..graphs import Graph


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def robber_moves(graph: Graph, config: GameConfig, cops: Iterable[int], start: int) -> FrozenSet[int]:
    """Get the vertices the robber may end his turn on.

    The robber walks at most ``robber_speed`` edges and may not enter or pass
    through a cop's vertex. Of the vertices he can reach, those whose distance
    from ``start`` in the whole graph is an allowed end distance of the variant
    are legal.

    Args:
        graph: The graph
        config: The game config
        cops: The cop positions
        start: The robber's vertex

    Returns:
        FrozenSet[int]: The legal end vertices, possibly empty

    Raises:
        InvalidStateError: If the robber starts on a cop
    """
    blocked = _mask(cops)
    if blocked >> start & 1:
        raise InvalidStateError("The robber cannot start his turn on a cop at %d" % start)
    seen = 1 << start
    frontier = seen
    for _ in range(config.robber_speed):
        grown = 0
        for v in range(frontier.bit_length()):
            if frontier >> v & 1:
                grown |= graph.row(v)
        frontier = grown & ~seen & ~blocked
        if not frontier:
            break
        seen |= frontier
    allowed = config.allowed_end_distances
    distances = graph.distance_matrix()[start]
    return frozenset(
        w for w in range(graph.order) if seen >> w & 1 and int(distances[w]) in allowed
    )


def is_capture(graph: Graph, config: GameConfig, cops: Iterable[int], robber: int) -> bool:
    """Check whether some cop is within the capture radius of the robber."""
    distances = graph.distance_matrix()
    return any(distances[c, robber] <= config.capture_radius for c in cops)


def _assert_cop_turn(state: GameState):
    if state.phase is not Phase.COP_TURN:
        raise InvalidStateError("Expected a cop turn, got %s" % state.phase.name)


def cop_turn_successors(graph: Graph, config: GameConfig, state: GameState) -> Set[GameState]:
    """Get every state the cops can reach in one turn.

    Each cop moves independently to any vertex within ``cop_speed`` of her
    vertex; cops are never blocked. In the active variant the choice where
    every cop stays put is left out.

    Args:
        graph: The graph
        config: The game config
        state: A cop-turn state

    Returns:
        Set[GameState]: The canonical robber-turn successors

    Raises:
        InvalidStateError: If it is not the cops' turn
    """
    _assert_cop_turn(state)
    balls = [sorted(graph.ball(c, config.cop_speed)) for c in state.cops]
    out = set()
    for choice in product(*balls):
        if config.cops_must_move and choice == state.cops:
            continue
        out.add(GameState.of(choice, state.robber, Phase.ROBBER_TURN))
    return out


def cop_sub_moves(graph: Graph, config: GameConfig, state: GameState, cop: int) -> Set[GameState]:
    """Move the cop in slot ``cop`` only, keeping the other slots in place.

    The resulting states stay in the cop turn, with their cops in slot order
    rather than sorted, and ``moved`` records whether any cop has changed vertex.
    """
    _assert_cop_turn(state)
    here = state.cops[cop]
    return {
        GameState(
            state.cops[:cop] + (c,) + state.cops[cop + 1 :],
            state.robber,
            Phase.COP_TURN,
            state.moved or c != here,
        )
        for c in graph.ball(here, config.cop_speed)
    }


def sequential_cop_successors(graph: Graph, config: GameConfig, state: GameState) -> Set[GameState]:
    """Get the successors of a cop turn played as one sub-move per cop.

    The robber does not act between sub-moves, so this is the same set as
    :func:`cop_turn_successors`.
    """
    _assert_cop_turn(state)
    frontier = {GameState(state.cops, state.robber, Phase.COP_TURN, False)}
    for cop in range(len(state.cops)):
        frontier = {nxt for s in frontier for nxt in cop_sub_moves(graph, config, s, cop)}
    return {
        GameState.of(s.cops, s.robber, Phase.ROBBER_TURN)
        for s in frontier
        if s.moved or not config.cops_must_move
    }


def robber_turn_successors(graph: Graph, config: GameConfig, state: GameState) -> Set[GameState]:
    """Get every cop-turn state the robber can reach in one turn."""
    if state.phase is not Phase.ROBBER_TURN:
        raise InvalidStateError("Expected a robber turn, got %s" % state.phase.name)
    return {
        GameState(state.cops, w, Phase.COP_TURN)
        for w in robber_moves(graph, config, state.cops, state.robber)
    }
