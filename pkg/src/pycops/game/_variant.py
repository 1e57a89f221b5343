from enum import Enum
from typing import FrozenSet


class Variant(Enum):
    """The rule variants the game can be played under."""

    STANDARD = "standard"
    """Every player may stay put or move up to their speed"""

    ACTIVE = "active"
    """At least one cop must end on a different vertex each cop turn, and the robber must move"""

    SEMI_ACTIVE = "semi_active"
    """The robber must move each turn; the cops may all stay put"""

    RESTRICTED = "restricted"
    """The robber must end at distance ``t - 1`` or ``t`` from where his turn started"""

    def allowed_end_distances(self, robber_speed: int) -> FrozenSet[int]:
        """Get the distances from his start at which the robber may end a turn.

        Args:
            robber_speed: The robber speed ``t``

        Returns:
            FrozenSet[int]: The allowed distances, a subset of ``0..t``
        """
        if self is Variant.STANDARD:
            return frozenset(range(robber_speed + 1))
        elif self is Variant.RESTRICTED:
            return frozenset({robber_speed - 1, robber_speed})
        return frozenset(range(1, robber_speed + 1))

    @property
    def cops_must_move(self) -> bool:
        """Whether some cop has to change vertex on every cop turn."""
        return self is Variant.ACTIVE


class Phase(Enum):
    """Whose turn it is in a game state."""

    COP_TURN = 0
    """The cops move next"""

    ROBBER_TURN = 1
    """The robber moves next"""
