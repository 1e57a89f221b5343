"""Different types of errors that are raised when invalid input is provided or a computation cannot finish."""

from typing import Optional


class PursuitError(Exception):
    """Generic error for everything raised by pycops.

    Parent class of other errors
    """

    pass


class InvalidParameterError(PursuitError, ValueError):
    """Error for when a size, speed, index, vertex or sequence passed in is out of range."""

    pass


class UnsupportedOrderError(InvalidParameterError):
    """Error for when a projective plane of an unsupported order is requested."""

    pass


class GraphParseError(PursuitError, ValueError):
    """Error for when graph6 or edge-list text is malformed.

    Args:
        message: What went wrong
        offset: The byte offset (graph6) or line number (edge list) of the problem
    """

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = "%s (at offset %d)" % (message, offset)
        super().__init__(message)
        self.offset = offset


class StructureError(PursuitError):
    """Error for when two graphs or maps do not fit together, i.e. a retraction target that is not a subgraph."""

    pass


class DomainError(PursuitError):
    """Error for when an operation is undefined for the input, i.e. the capture time of a robber-win graph."""

    pass


class InvalidStateError(PursuitError):
    """Error for when a game state is not canonical, not legal or in the wrong phase."""

    pass


class BudgetExceededError(PursuitError):
    """Error for when a game would need more states than the configured budget.

    Args:
        states: The number of canonical states the game needs
        budget: The budget that was exceeded
    """

    def __init__(self, states: int, budget: int):
        super().__init__(
            "Game needs %d states, which exceeds the budget of %d" % (states, budget)
        )
        self.states = states
        self.budget = budget


class CopNumberExceededError(DomainError):
    """Error for when no cop count up to the search limit wins.

    Args:
        k_max: The largest cop count that was tried
    """

    def __init__(self, k_max: int):
        super().__init__("The robber beats every cop count up to %d" % k_max)
        self.k_max = k_max


class PolicyError(PursuitError):
    """Error for when a strategy has no legal choice or one of its invariants fails.

    Args:
        message: What went wrong
        round_number: The round the failure happened in, if known
    """

    def __init__(self, message: str, round_number: Optional[int] = None):
        if round_number is not None:
            message = "Round %d: %s" % (round_number, message)
        super().__init__(message)
        self.round_number = round_number


class UnsolvedError(PursuitError):
    """Error for when optimal moves are requested from a solver that has not solved its game."""

    pass


class ClaimNotFoundError(PursuitError, KeyError):
    """Error for when a claim id is not in the registry."""

    pass
