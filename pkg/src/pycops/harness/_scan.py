"""Scanning graph6 catalogs for the largest speed-(s, s) capture time."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from .._solver import DEFAULT_STATE_BUDGET, capture_time
from ..errors import GraphParseError, InvalidParameterError
from ..game import GameConfig
from ..graphs import parse_graph6, power
from ..structure import capture_time_via_partition, is_dismantlable

logger = logging.getLogger(__name__)

SPOT_CHECK_EVERY = 1000
"""One cop-win graph in this many has its partition capture time checked by the solver."""

SHARD_SIZE = 5000


@dataclass
class ScanReport:
    """The extremal capture time over one catalog.

    Attributes:
        order: The order the catalog was expected to hold
        speed: The speed ``s`` of the game
        graphs: The records read, malformed ones included
        malformed: The records that could not be parsed or had another order
        disconnected: The graphs skipped for being disconnected
        cop_win: The graphs one cop wins on at speed ``s``
        max_capture_time: The largest capture time found, None if no graph is cop-win
        witnesses: The graph6 records reaching the largest capture time
        spot_checks: The number of graphs whose capture time the solver rechecked
        mismatches: The graph6 records where the solver disagreed
    """

    order: Optional[int]
    speed: int
    graphs: int = 0
    malformed: int = 0
    disconnected: int = 0
    cop_win: int = 0
    max_capture_time: Optional[int] = None
    witnesses: List[str] = field(default_factory=list)
    spot_checks: int = 0
    mismatches: List[str] = field(default_factory=list)

    def merge(self, other: "ScanReport"):
        """Add the counts and witnesses of another shard of the same scan."""
        self.graphs += other.graphs
        self.malformed += other.malformed
        self.disconnected += other.disconnected
        self.cop_win += other.cop_win
        self.spot_checks += other.spot_checks
        self.mismatches.extend(other.mismatches)
        if other.max_capture_time is None:
            return
        if self.max_capture_time is None or other.max_capture_time > self.max_capture_time:
            self.max_capture_time = other.max_capture_time
            self.witnesses = list(other.witnesses)
        elif other.max_capture_time == self.max_capture_time:
            self.witnesses.extend(other.witnesses)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "speed": self.speed,
            "graphs": self.graphs,
            "malformed": self.malformed,
            "disconnected": self.disconnected,
            "cop_win": self.cop_win,
            "max_capture_time": self.max_capture_time,
            "witnesses": self.witnesses,
            "spot_checks": self.spot_checks,
            "mismatches": self.mismatches,
        }


def _scan_shard(lines, s, n, spot_every, state_budget) -> ScanReport:
    report = ScanReport(n, s)
    for line in lines:
        report.graphs += 1
        try:
            g = parse_graph6(line)
        except GraphParseError as e:
            logger.debug("Skipping record %r: %s", line, e)
            report.malformed += 1
            continue
        if n is not None and g.order != n:
            report.malformed += 1
            continue
        if not g.is_connected():
            report.disconnected += 1
            continue
        square = power(g, s)
        if not is_dismantlable(square):
            continue
        value = capture_time_via_partition(square)
        if report.cop_win % spot_every == 0:
            report.spot_checks += 1
            solved = capture_time(g, GameConfig.speed(s), state_budget=state_budget)
            if solved != value:
                logger.error("Partition gives %d, solver %d on %s", value, solved, line)
                report.mismatches.append(line)
        report.cop_win += 1
        if report.max_capture_time is None or value > report.max_capture_time:
            report.max_capture_time = value
            report.witnesses = [line]
        elif value == report.max_capture_time:
            report.witnesses.append(line)
    return report


def _shards(lines: List[str]) -> List[List[str]]:
    return [lines[i : i + SHARD_SIZE] for i in range(0, len(lines), SHARD_SIZE)]


def scan_graph6(
    stream: Iterable[str],
    s: int,
    n: Optional[int] = None,
    workers: int = 1,
    spot_check_every: int = SPOT_CHECK_EVERY,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> ScanReport:
    """Find the largest speed-(s, s) capture time over the cop-win graphs of a catalog.

    A connected graph is cop-win at speed ``s`` exactly when its ``s``-th power
    is dismantlable, and its capture time is the classic capture time of that
    power, which the cop-win partition gives without solving. The solver
    rechecks the first cop-win graph of every ``spot_check_every``.

    Args:
        stream: Lines of graph6 records, blank lines ignored
        s: The speed, at least 1
        n: The order every record should have, if known
        workers: The number of processes to shard the catalog over
        spot_check_every: How often to recheck with the solver
        state_budget: The state budget of each recheck

    Returns:
        ScanReport: The counts, the maximum and its witnesses
    """
    if s < 1:
        raise InvalidParameterError("Speed must be at least 1, got %d" % s)
    if spot_check_every < 1:
        raise InvalidParameterError(
            "Spot checks need a positive interval, got %d" % spot_check_every
        )
    lines = [line.strip() for line in stream if line.strip()]
    report = ScanReport(n, s)
    shards = _shards(lines)
    args = (s, n, spot_check_every, state_budget)
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_shard, shard, *args) for shard in shards]
            parts = [f.result() for f in futures]
    else:
        parts = [_scan_shard(shard, *args) for shard in shards]
    for part in parts:
        report.merge(part)
    logger.info(
        "Scanned %d records at speed %d: %d cop-win, max capture time %s",
        report.graphs,
        s,
        report.cop_win,
        report.max_capture_time,
    )
    return report

