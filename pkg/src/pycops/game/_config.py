from dataclasses import asdict, dataclass, replace
from typing import FrozenSet

from ._variant import Variant
from ..errors import InvalidParameterError


@dataclass(frozen=True)
class GameConfig:
    """The rules of one speed-(s, t) game.

    Args:
        cop_speed: The number of edges each cop may traverse per turn (s)
        robber_speed: The number of edges the robber may traverse per turn (t)
        cop_count: The number of cops (k)
        variant: The rule variant
        capture_radius: The cops win once a cop is within this distance of the robber. 0 means on the same vertex

    Raises:
        InvalidParameterError: If a speed or the cop count is below 1, or the radius is negative
    """

    cop_speed: int = 1
    robber_speed: int = 1
    cop_count: int = 1
    variant: Variant = Variant.STANDARD
    capture_radius: int = 0

    def __post_init__(self):
        if self.cop_speed < 1 or self.robber_speed < 1:
            raise InvalidParameterError(
                "Speeds must be at least 1, got s=%d t=%d" % (self.cop_speed, self.robber_speed)
            )
        if self.cop_count < 1:
            raise InvalidParameterError("Need at least one cop, got %d" % self.cop_count)
        if self.capture_radius < 0:
            raise InvalidParameterError(
                "Capture radius must be nonnegative, got %d" % self.capture_radius
            )
        if not isinstance(self.variant, Variant):
            object.__setattr__(self, "variant", Variant(self.variant))

    @staticmethod
    def speed(s: int, cop_count: int = 1, **kwargs) -> "GameConfig":
        """Get the config of the speed-(s, s) game."""
        return GameConfig(cop_speed=s, robber_speed=s, cop_count=cop_count, **kwargs)

    @property
    def allowed_end_distances(self) -> FrozenSet[int]:
        """The distances from his start at which the robber may end a turn."""
        return self.variant.allowed_end_distances(self.robber_speed)

    @property
    def cops_must_move(self) -> bool:
        return self.variant.cops_must_move

    def with_cops(self, cop_count: int) -> "GameConfig":
        """Get the same game with a different number of cops."""
        return replace(self, cop_count=cop_count)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["variant"] = self.variant.value
        return d

    def key(self) -> str:
        """Get a short stable string naming this config, used as a cache key."""
        return "s%d-t%d-k%d-%s-r%d" % (
            self.cop_speed,
            self.robber_speed,
            self.cop_count,
            self.variant.value,
            self.capture_radius,
        )
