from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence, Tuple

import numpy as np

from ._variant import Phase
from ..errors import InvalidParameterError, InvalidStateError


@dataclass(frozen=True)
class GameState:
    """A position of the game between whole turns.

    Attributes:
        cops: The cop positions as a sorted tuple (several cops may share a vertex)
        robber: The robber's vertex
        phase: Whose turn it is
        moved: During a cop turn played one cop at a time, whether some cop has already changed vertex
    """

    cops: Tuple[int, ...]
    robber: int
    phase: Phase = Phase.COP_TURN
    moved: bool = False

    @staticmethod
    def of(cops: Sequence[int], robber: int, phase: Phase = Phase.COP_TURN) -> "GameState":
        """Build a state, sorting the cop positions into canonical order."""
        return GameState(tuple(sorted(int(c) for c in cops)), int(robber), phase)

    def is_canonical(self) -> bool:
        return all(a <= b for a, b in zip(self.cops, self.cops[1:]))

    def to_dict(self) -> dict:
        return {"cops": list(self.cops), "robber": self.robber, "phase": self.phase.name}


class StateEncoder:
    """A bijection between canonical states and the integers ``0..count-1``.

    Cop multisets are ranked in the combinatorial number system: a sorted
    multiset ``a_0 <= ... <= a_{k-1}`` becomes the strictly increasing
    ``b_i = a_i + i``, whose rank is the sum of ``C(b_i, i + 1)``. A state's
    index is ``(rank * n + robber) * 2 + phase``.

    Args:
        order: The number of vertices ``n``
        cop_count: The number of cops ``k``
    """

    PHASES = 2

    def __init__(self, order: int, cop_count: int):
        if order < 1 or cop_count < 1:
            raise InvalidParameterError(
                "Need at least one vertex and one cop, got n=%d k=%d" % (order, cop_count)
            )
        self.order = order
        self.cop_count = cop_count
        self.multiset_count = comb(order + cop_count - 1, cop_count)
        self.count = self.multiset_count * order * StateEncoder.PHASES

    def rank(self, cops: Sequence[int]) -> int:
        """Get the rank of a sorted cop multiset.

        Raises:
            InvalidStateError: If the positions are unsorted, out of range or the wrong number
        """
        if len(cops) != self.cop_count:
            raise InvalidStateError("Expected %d cops, got %d" % (self.cop_count, len(cops)))
        for i, c in enumerate(cops):
            if not 0 <= c < self.order:
                raise InvalidStateError("Cop position %d is not a vertex" % c)
            if i and cops[i - 1] > c:
                raise InvalidStateError("Cop positions %s are not sorted" % (tuple(cops),))
        return sum(comb(c + i, i + 1) for i, c in enumerate(cops))

    def unrank(self, rank: int) -> Tuple[int, ...]:
        """Get the sorted cop multiset with the given rank."""
        if not 0 <= rank < self.multiset_count:
            raise InvalidStateError("Rank %d is out of range" % rank)
        out = []
        for i in range(self.cop_count, 0, -1):
            b = i - 1
            while comb(b + 1, i) <= rank:
                b += 1
            rank -= comb(b, i)
            out.append(b - (i - 1))
        return tuple(reversed(out))

    def encode(self, state: GameState) -> int:
        """Get the index of a canonical state.

        Raises:
            InvalidStateError: If the state is not canonical, is mid-way through a cop turn or its robber is not a vertex
        """
        if state.moved:
            raise InvalidStateError("States inside a cop turn are not encoded")
        if not 0 <= state.robber < self.order:
            raise InvalidStateError("Robber position %d is not a vertex" % state.robber)
        return (self.rank(state.cops) * self.order + state.robber) * 2 + state.phase.value

    def decode(self, index: int) -> GameState:
        """Get the state with the given index."""
        if not 0 <= index < self.count:
            raise InvalidStateError("Index %d is out of range" % index)
        index, phase = divmod(index, 2)
        rank, robber = divmod(index, self.order)
        return GameState(self.unrank(rank), robber, Phase(phase))

    def multisets(self) -> np.ndarray:
        """Get every sorted cop multiset as a ``(multiset_count, k)`` array, row ``i`` having rank ``i``."""
        table = np.array(
            list(combinations_with_replacement(range(self.order), self.cop_count)),
            dtype=np.int64,
        ).reshape(-1, self.cop_count)
        ranks = np.zeros(len(table), dtype=np.int64)
        for i in range(self.cop_count):
            b = table[:, i] + i
            ranks += np.array([comb(int(x), i + 1) for x in b], dtype=np.int64)
        out = np.empty_like(table)
        out[ranks] = table
        return out
