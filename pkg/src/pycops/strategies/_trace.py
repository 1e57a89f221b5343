import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from ..errors import InvalidParameterError, PolicyError
from ..game import GameConfig, is_capture, robber_moves
from ..graphs import Graph


@dataclass(frozen=True)
class TraceRecord:
    """One round of a simulated game.

    Round 0 is the placement. In a later round the cops move first and then,
    unless they have caught him, the robber.

    Attributes:
        round_number: The round, 0 for the placement
        cops: The cop positions after the cop turn, in cop order
        robber: The robber's position at the end of the round
        checks: The invariant results recorded during the round, by name
    """

    round_number: int
    cops: Tuple[int, ...]
    robber: int
    checks: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "round": self.round_number,
            "cops": list(self.cops),
            "robber": self.robber,
            "checks": dict(self.checks),
        }

    @staticmethod
    def from_dict(data: dict) -> "TraceRecord":
        return TraceRecord(
            round_number=data["round"],
            cops=tuple(data["cops"]),
            robber=data["robber"],
            checks=dict(data.get("checks", {})),
        )


@dataclass
class StrategyTrace:
    """The full record of a simulated game.

    Attributes:
        records: One record per round played, placement first
        captured: Whether the robber was caught
        rounds: The round of the capture, or the horizon the robber survived to
    """

    records: List[TraceRecord] = field(default_factory=list)
    captured: bool = False
    rounds: int = 0

    @property
    def outcome(self) -> str:
        return ("captured(%d)" if self.captured else "survived(%d)") % self.rounds

    def failed_checks(self) -> List[Tuple[int, str]]:
        """Get every ``(round, check name)`` whose result was False."""
        return [
            (r.round_number, name)
            for r in self.records
            for name, ok in sorted(r.checks.items())
            if not ok
        ]

    def all_checks_hold(self, name: Optional[str] = None) -> bool:
        """Check whether every recorded check, or every check called ``name``, held."""
        return not any(name is None or n == name for _, n in self.failed_checks())

    def to_json_lines(self) -> str:
        """Serialize as JSON lines: a header line with the outcome, then one line per round."""
        header = {"captured": self.captured, "rounds": self.rounds}
        lines = [json.dumps(header)] + [json.dumps(r.to_dict()) for r in self.records]
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_json_lines(text: str) -> "StrategyTrace":
        """Read a trace written by :meth:`to_json_lines`.

        Raises:
            InvalidParameterError: If the text has no header line
        """
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise InvalidParameterError("A trace needs at least a header line")
        header = json.loads(lines[0])
        return StrategyTrace(
            records=[TraceRecord.from_dict(json.loads(line)) for line in lines[1:]],
            captured=header["captured"],
            rounds=header["rounds"],
        )


def check_cop_move(
    graph: Graph,
    config: GameConfig,
    old: Iterable[int],
    new: Iterable[int],
    round_number: int,
):
    """Check that the cops may go from ``old`` to ``new`` in one turn.

    Raises:
        PolicyError: Naming the round and the offending cop
    """
    old, new = tuple(old), tuple(new)
    if len(new) != config.cop_count:
        raise PolicyError(
            "Expected %d cops, got %d" % (config.cop_count, len(new)), round_number
        )
    distances = graph.distance_matrix()
    for i, (a, b) in enumerate(zip(old, new)):
        if not 0 <= b < graph.order:
            raise PolicyError("Cop %d moved off the graph to %d" % (i, b), round_number)
        if distances[a, b] > config.cop_speed:
            raise PolicyError(
                "Cop %d cannot move from %d to %d at speed %d"
                % (i, a, b, config.cop_speed),
                round_number,
            )
    if config.cops_must_move and old == new:
        raise PolicyError(
            "Some cop has to move in the %s variant" % config.variant.value,
            round_number,
        )


def check_robber_move(
    graph: Graph,
    config: GameConfig,
    cops: Iterable[int],
    old: int,
    new: int,
    round_number: int,
):
    """Check that the robber may go from ``old`` to ``new`` past the given cops.

    Raises:
        PolicyError: Naming the round
    """
    if new not in robber_moves(graph, config, cops, old):
        raise PolicyError(
            "The robber cannot move from %d to %d" % (old, new), round_number
        )


def replay(graph: Graph, config: GameConfig, trace: StrategyTrace) -> bool:
    """Play a trace back through the game rules, checking every move.

    Args:
        graph: The graph the trace was played on
        config: The rules it was played under

    Returns:
        bool: True if every move is legal and the recorded outcome is what the moves lead to

    Raises:
        PolicyError: Naming the first round with an illegal move or a wrong outcome
    """
    if not trace.records:
        raise PolicyError("The trace has no placement", 0)
    first = trace.records[0]
    if len(first.cops) != config.cop_count:
        raise PolicyError(
            "Expected %d cops, got %d" % (config.cop_count, len(first.cops)), 0
        )
    caught_at = 0 if is_capture(graph, config, first.cops, first.robber) else None
    previous = first
    for record in trace.records[1:]:
        if caught_at is not None:
            raise PolicyError("Play went on after the capture", record.round_number)
        check_cop_move(graph, config, previous.cops, record.cops, record.round_number)
        if robber_is_caught(graph, config, record.cops, previous.robber):
            if record.robber != previous.robber:
                raise PolicyError(
                    "The robber moved after his capture", record.round_number
                )
            caught_at = record.round_number
        else:
            check_robber_move(
                graph,
                config,
                record.cops,
                previous.robber,
                record.robber,
                record.round_number,
            )
            if is_capture(graph, config, record.cops, record.robber):
                caught_at = record.round_number
        previous = record
    if trace.captured != (caught_at is not None) or (
        caught_at is not None and caught_at != trace.rounds
    ):
        raise PolicyError(
            "The recorded outcome %s does not match the moves" % trace.outcome
        )
    return True


def robber_is_caught(graph: Graph, config: GameConfig, cops, robber: int) -> bool:
    # A robber with no legal move counts as caught
    return is_capture(graph, config, cops, robber) or not robber_moves(
        graph, config, cops, robber
    )
