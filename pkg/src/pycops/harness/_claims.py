"""The registry of checkable claims and the machinery that runs them."""

import fnmatch
import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ._cache import SolveCache
from ._explore import explore_monotone
from ._scan import scan_graph6
from ._settings import HarnessSettings
from .._solver import DEFAULT_K_MAX, SolveResult, Solver, solve
from ..errors import (
    BudgetExceededError,
    ClaimNotFoundError,
    InvalidParameterError,
    PolicyError,
)
from ..game import GameConfig, Variant
from ..graphs import (
    Graph,
    capture_family,
    cartesian_product,
    cartesian_product_all,
    complete,
    cycle,
    cycle_strong_power_product,
    grid,
    heawood,
    hypercube,
    path,
    petersen,
    power,
    random_connected_graph,
    random_tree,
    sequence_realizer,
    subdivide,
    torus,
    write_graph6,
)
from ..strategies import (
    GreedyCop,
    GridBlockingRobber,
    GridSingleCop,
    HypercubeWeightRobber,
    OptimalRobber,
    ProjectiveProductRobber,
    RandomCop,
    TwoPhaseProductCops,
    simulate,
)
from ..structure import (
    capture_time_via_partition,
    complete_subdivision_retraction,
    cornering_vertices,
    corners,
    identity_map,
    is_dismantlable,
    is_retraction,
    product_map,
    projection_retraction,
    realizer_retraction,
)

logger = logging.getLogger(__name__)


class ClaimKind(Enum):
    """What a claim is, which decides whether its failure fails a run."""

    THEOREM = "theorem"
    """A proven statement checked at desk scale; a failure fails the run"""

    CONJECTURE = "conjecture"
    """An open statement; failures are reported as counterexamples but never fail the run"""

    BACKGROUND = "background"
    """A result from the literature the rest relies on; a failure fails the run"""

    SKIPPED = "skipped"
    """A statement too large to check at desk scale, listed so that it is reported"""


class ClaimStatus(Enum):
    """The result of running one claim."""

    HOLDS = "holds"
    FAILS = "fails"
    SKIPPED = "skipped(budget)"


@dataclass(frozen=True)
class Outcome:
    """What a claim check computed.

    Attributes:
        holds: Whether the claim held on every instance
        computed: The values computed, in a JSON-friendly form
        witness: For a failure, the graph, config and solver output that show it
    """

    holds: bool
    computed: Any
    witness: Optional[dict] = None


@dataclass(frozen=True)
class Claim:
    """One registry entry.

    Attributes:
        claim_id: The stable id
        kind: The kind of statement
        statement: The statement, in words
        expected: The relation the computed values must satisfy
        parameters: The desk-scale parameters the check runs at
        check: The check, or None for claims that are never run
        stretch: Whether the check only runs when stretch claims are included
        catalog: The order of the graph6 catalog the check reads, if any
    """

    claim_id: str
    kind: ClaimKind
    statement: str
    expected: str
    parameters: Dict[str, Any]
    check: Optional[Callable[["ClaimContext"], Outcome]] = field(default=None, compare=False)
    stretch: bool = False
    catalog: Optional[int] = None


@dataclass
class ClaimRecord:
    """The result of running one claim.

    Attributes:
        claim_id: The claim's id
        kind: The claim's kind
        status: Whether it holds, fails or was skipped
        expected: The relation checked
        computed: The values computed, None when skipped
        millis: The wall-clock time taken
        parameters: The parameters the check ran at
        witness: For a failure, the instance that shows it
        note: Why the claim was skipped, if it was
        budget_exceeded: Whether it was skipped because a game was too large
    """

    claim_id: str
    kind: ClaimKind
    status: ClaimStatus
    expected: str
    computed: Any = None
    millis: int = 0
    parameters: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[dict] = None
    note: str = ""
    budget_exceeded: bool = False

    @property
    def failed(self) -> bool:
        """Whether this record should fail a run: a failing theorem or background claim."""
        return self.status is ClaimStatus.FAILS and self.kind is not ClaimKind.CONJECTURE

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "kind": self.kind.value,
            "status": self.status.value,
            "expected": self.expected,
            "computed": self.computed,
            "millis": self.millis,
            "parameters": self.parameters,
            "witness": self.witness,
            "note": self.note,
        }

    def csv_row(self) -> Tuple[str, str, str, str, int]:
        computed = "" if self.computed is None else json.dumps(self.computed, sort_keys=True)
        return (self.claim_id, self.status.value, self.expected, computed, self.millis)


class ClaimContext:
    """Solves games for claim checks, through the cache when there is one.

    Args:
        settings: The harness settings
    """

    def __init__(self, settings: HarnessSettings):
        self.settings = settings
        self.cache = SolveCache(settings.cache_dir) if settings.cache_dir is not None else None

    def solve(self, graph: Graph, config: GameConfig) -> SolveResult:
        if self.cache is not None:
            return self.cache.solve(graph, config, self.settings.state_budget)
        return solve(graph, config, state_budget=self.settings.state_budget)

    def cop_win(self, graph: Graph, config: GameConfig) -> bool:
        return self.solve(graph, config).cop_win

    def cop_number(
        self, graph: Graph, config: GameConfig = GameConfig(), k_max: int = DEFAULT_K_MAX
    ) -> Optional[int]:
        """Get the least winning cop count up to ``k_max``, or None if the robber beats them all."""
        for k in range(1, k_max + 1):
            if self.cop_win(graph, config.with_cops(k)):
                return k
        return None

    def witness(self, graph: Graph, config: GameConfig) -> dict:
        """Get the record that shows what one game came to."""
        return {
            "graph6": write_graph6(graph),
            "config": config.to_dict(),
            "result": self.solve(graph, config).to_dict(),
        }


REGISTRY: Dict[str, Claim] = {}
"""Every registered claim, by id."""


def claim(
    claim_id: str,
    kind: ClaimKind,
    statement: str,
    expected: str,
    stretch: bool = False,
    catalog: Optional[int] = None,
    **parameters,
):
    """Register the decorated function as the check of a claim."""

    def register(check):
        if claim_id in REGISTRY:
            raise InvalidParameterError("Claim %r is registered twice" % claim_id)
        REGISTRY[claim_id] = Claim(
            claim_id, kind, statement, expected, parameters, check, stretch, catalog
        )
        return check

    return register


def _not_reproducible(claim_id: str, statement: str, expected: str, **parameters):
    REGISTRY[claim_id] = Claim(claim_id, ClaimKind.SKIPPED, statement, expected, parameters)


def _label(value: Optional[int], k_max: int):
    return value if value is not None else ">%d" % k_max


def _cop_numbers(ctx: ClaimContext, cases) -> Outcome:
    """Check ``(name, graph, config, expected)`` cases for exact cop numbers."""
    computed = {}
    witness = None
    for name, graph, config, expected in cases:
        value = ctx.cop_number(graph, config, k_max=expected)
        computed[name] = _label(value, expected)
        if value != expected and witness is None:
            count = value if value is not None else expected
            witness = ctx.witness(graph, config.with_cops(count))
    return Outcome(witness is None, computed, witness)


def _wins(ctx: ClaimContext, cases) -> Outcome:
    """Check ``(name, graph, config, cop_win)`` cases for the winner of fixed-size games."""
    computed = {}
    witness = None
    for name, graph, config, expected in cases:
        won = ctx.cop_win(graph, config)
        computed[name] = "cops" if won else "robber"
        if won != expected and witness is None:
            witness = ctx.witness(graph, config)
    return Outcome(witness is None, computed, witness)


def _at_most(a: Optional[int], b: Optional[int]) -> bool:
    # None stands for more cops than were tried
    if b is None:
        return True
    return a is not None and a <= b


def _random_graphs(count: int, low: int, high: int, p: float = 0.4):
    for i in range(count):
        yield random_connected_graph(low + i % (high - low + 1), p, seed=i)


def _play(graph, config, cops, robber, horizon=200):
    try:
        trace = simulate(graph, config, cops, robber, horizon=horizon)
    except PolicyError as e:
        return None, str(e)
    return trace, trace.outcome


# Hypercubes


@claim(
    "hypercube_speed2",
    ClaimKind.THEOREM,
    "c_{2,2}(Q_d) is 2 for d = 3 and floor(d / 2) otherwise",
    "c_{2,2}(Q_d) = 1, 2, 2, 2, 3",
    d=[2, 3, 4, 5, 6],
)
def _hypercube_speed2(ctx):
    expected = {2: 1, 3: 2, 4: 2, 5: 2, 6: 3}
    return _cop_numbers(
        ctx, [("Q%d" % d, hypercube(d), GameConfig.speed(2), k) for d, k in expected.items()]
    )


@claim(
    "hypercube_upper",
    ClaimKind.THEOREM,
    "c_{s,s}(Q_d) <= ceil((d - 2s + 3) / 2) when d >= 2s",
    "ceil((d - 2s + 3) / 2) cops win",
    instances=[[2, 4], [2, 5], [2, 6], [3, 6], [3, 7]],
)
def _hypercube_upper(ctx):
    cases = []
    for s, d in [(2, 4), (2, 5), (2, 6), (3, 6), (3, 7)]:
        k = math.ceil((d - 2 * s + 3) / 2)
        cases.append(("Q%d s=%d k=%d" % (d, s, k), hypercube(d), GameConfig.speed(s, k), True))
    return _wins(ctx, cases)


@claim(
    "q9_one_cop_escape",
    ClaimKind.THEOREM,
    "The robber evades k cops at speed s on Q_d when d > 2s + 2k + k lg(2s + 1)",
    "1 cop loses on Q_9 at s = 2",
    d=9,
    s=2,
    k=1,
)
def _q9_one_cop_escape(ctx):
    return _wins(ctx, [("Q9 s=2 k=1", hypercube(9), GameConfig.speed(2, 1), False)])


_not_reproducible(
    "hypercube_lower_bound_general",
    "The robber evades k cops at speed s on Q_d when d > 2s + 2k + k lg(2s + 1)",
    "robber wins for every such s, k, d",
    reason="only the smallest instance fits a desk budget",
)


@claim(
    "hypercube_robber_strategy",
    ClaimKind.THEOREM,
    "On Q_{2k} a speed-2 robber who weighs dimensions stays at distance 3 from k - 1 cops",
    "survived(200) with safe_vertex holding every round",
    games=["Q6 greedy k=2", "Q6 random k=2", "Q8 greedy k=3"],
)
def _hypercube_robber_strategy(ctx):
    games = [
        ("Q6 greedy k=2", 6, 2, GreedyCop()),
        ("Q6 random k=2", 6, 2, RandomCop(seed=1)),
        ("Q8 greedy k=3", 8, 3, GreedyCop()),
    ]
    computed = {}
    holds = True
    for name, d, k, cops in games:
        trace, outcome = _play(hypercube(d), GameConfig.speed(2, k), cops, HypercubeWeightRobber())
        computed[name] = outcome
        holds &= trace is not None and not trace.captured and trace.all_checks_hold("safe_vertex")
    return Outcome(holds, computed)


# Grids and products of trees


@claim(
    "grid_2d_speed2",
    ClaimKind.THEOREM,
    "c_{s,s}(T_1 □ T_2) = 1 for trees T_1, T_2 and s >= 2",
    "1 cop wins",
    instances=["P5□P5 s=2", "P7□P7 s=2", "P7□P7 s=3", "T□T s=2 (random trees)"],
)
def _grid_2d_speed2(ctx):
    cases = [
        ("P5□P5 s=2", grid(5, 5), GameConfig.speed(2), 1),
        ("P7□P7 s=2", grid(7, 7), GameConfig.speed(2), 1),
        ("P7□P7 s=3", grid(7, 7), GameConfig.speed(3), 1),
    ]
    for seed in range(3):
        trees = cartesian_product(random_tree(7, seed), random_tree(8, seed + 100))
        cases.append(("T7□T8 seed=%d s=2" % seed, trees, GameConfig.speed(2), 1))
    return _cop_numbers(ctx, cases)


@claim(
    "grid_3d_speed2",
    ClaimKind.THEOREM,
    "c_{s,s}(T_1 □ ... □ T_d) = ceil(d / 2) when every diam(T_i) >= 2s",
    "c_{2,2}(P5□P5□P5) = 2",
    sizes=[5, 5, 5],
    s=2,
)
def _grid_3d_speed2(ctx):
    return _cop_numbers(ctx, [("P5□P5□P5", grid(5, 5, 5), GameConfig.speed(2), 2)])


@claim(
    "grid_strategies",
    ClaimKind.THEOREM,
    "One cop catches the robber on P_n □ P_m; the blocking robber outruns k cops on 2k + 1 long paths",
    "single cop captures with D1 + D2 nonincreasing; blocking robber survives(200)",
    games=["P7□P7 single cop vs optimal robber", "P5□P5□P5 blocking robber vs greedy cop"],
)
def _grid_strategies(ctx):
    computed = {}
    square = grid(7, 7)
    config = GameConfig.speed(2, 1)
    solver = Solver(square, config, state_budget=ctx.settings.state_budget)
    trace, outcome = _play(square, config, GridSingleCop(2), OptimalRobber(solver))
    computed["single cop"] = outcome
    holds = (
        trace is not None
        and trace.captured
        and trace.all_checks_hold("total_distance_nonincreasing")
    )
    cube = grid(5, 5, 5)
    trace, outcome = _play(cube, config, GreedyCop(), GridBlockingRobber(2))
    computed["blocking robber"] = outcome
    holds &= trace is not None and not trace.captured and trace.all_checks_hold()
    return Outcome(holds, computed)


@claim(
    "trees_upper",
    ClaimKind.THEOREM,
    "c_{s,s}(T_1 □ ... □ T_d) <= ceil(d / 2) for d >= 3 trees and s >= 2",
    "ceil(d / 2) cops win",
    instances=["P3□P3□P3 s=2", "P3□P4□P3 s=3", "random trees d=3 s=2"],
)
def _trees_upper(ctx):
    cases = [
        ("P3□P3□P3 s=2", grid(3, 3, 3), GameConfig.speed(2, 2), True),
        ("P3□P4□P3 s=3", grid(3, 4, 3), GameConfig.speed(3, 2), True),
    ]
    for seed in range(3):
        trees = cartesian_product_all([random_tree(4, seed + 10 * j) for j in range(3)])
        cases.append(("T4^3 seed=%d s=2" % seed, trees, GameConfig.speed(2, 2), True))
    return _wins(ctx, cases)


@claim(
    "speed2_tree_lower",
    ClaimKind.THEOREM,
    "c_{2,2}(T_1 □ ... □ T_d) >= floor(d / 2) for nontrivial trees",
    "1 cop loses for d = 4",
    instances=["P2□P2□P3□P3", "Q4"],
)
def _speed2_tree_lower(ctx):
    return _wins(
        ctx,
        [
            ("P2□P2□P3□P3", grid(2, 2, 3, 3), GameConfig.speed(2, 1), False),
            ("Q4", hypercube(4), GameConfig.speed(2, 1), False),
        ],
    )


@claim(
    "torus_evidence_speed2",
    ClaimKind.THEOREM,
    "Computational evidence: the speed-2 game on C_7 □ C_7 needs three cops",
    "c_{2,2}(C7□C7) = 3",
    cycles=[7, 7],
)
def _torus_evidence_speed2(ctx):
    return _cop_numbers(ctx, [("C7□C7", torus(7, 7), GameConfig.speed(2), 3)])


@claim(
    "torus_evidence_speed2_large",
    ClaimKind.THEOREM,
    "Computational evidence: the speed-2 game on C_8 □ C_8 and C_9 □ C_9 needs three cops",
    "c_{2,2}(C8□C8) = c_{2,2}(C9□C9) = 3",
    stretch=True,
    cycles=[8, 9],
)
def _torus_evidence_speed2_large(ctx):
    return _cop_numbers(
        ctx, [("C%d□C%d" % (n, n), torus(n, n), GameConfig.speed(2), 3) for n in (8, 9)]
    )


# Cycles


@claim(
    "coprime_tori",
    ClaimKind.THEOREM,
    "c^-(C_n1 □ C_n2) = 2 for coprime n1, n2, and c_{s,s} of two coprime cycles is 2",
    "c^-(C3□C4) = c^-(C9□C10) = c_{2,2}(C9□C10) = 2",
    tori=[[3, 4], [9, 10]],
)
def _coprime_tori(ctx):
    semi_active = GameConfig(variant=Variant.SEMI_ACTIVE)
    return _cop_numbers(
        ctx,
        [
            ("c^-(C3□C4)", torus(3, 4), semi_active, 2),
            ("c^-(C9□C10)", torus(9, 10), semi_active, 2),
            ("c_22(C9□C10)", torus(9, 10), GameConfig.speed(2), 2),
        ],
    )


_not_reproducible(
    "two_cycles_large",
    "c_{s,s}(C_n1 □ ... □ C_n2k) = 2k for pairwise coprime long cycles",
    "2k for k >= 2",
    reason="the smallest k = 2 product has over 420 vertices",
)


# Projective planes


@claim(
    "projective_plane_heawood",
    ClaimKind.THEOREM,
    "For the incidence graph P of a projective plane of order q, c_{2,2}(P) = 2 but c_{2,2}(P □ P) >= q + 1",
    "c_{2,2}(P) = 2 and 2 cops lose on P□P for q = 2",
    q=2,
)
def _projective_plane_heawood(ctx):
    plane = heawood()
    first = _cop_numbers(ctx, [("c_22(P)", plane, GameConfig.speed(2), 2)])
    second = _wins(
        ctx, [("P□P k=2", cartesian_product(plane, plane), GameConfig.speed(2, 2), False)]
    )
    return Outcome(
        first.holds and second.holds,
        {**first.computed, **second.computed},
        first.witness or second.witness,
    )


@claim(
    "projective_robber_strategy",
    ClaimKind.THEOREM,
    "On P □ P the robber who plays a speed-1 game in each coordinate evades q cops",
    "survived(200) with safe_vertex holding every round",
    q=2,
    cops=["greedy", "random"],
)
def _projective_robber_strategy(ctx):
    plane = heawood()
    square = cartesian_product(plane, plane)
    computed = {}
    holds = True
    for name, cops in (("greedy", GreedyCop()), ("random", RandomCop(seed=7))):
        trace, outcome = _play(
            square, GameConfig.speed(2, 2), cops, ProjectiveProductRobber(plane)
        )
        computed[name] = outcome
        holds &= trace is not None and not trace.captured and trace.all_checks_hold("safe_vertex")
    return Outcome(holds, computed)


@claim(
    "active_and_change_instance",
    ClaimKind.THEOREM,
    "c_{s,s}(G □ H) <= c^-(G) + k when k cops win the restricted speed-s game on H",
    "c^-(Q2) = 1, one cop wins the restricted game on Q3, two cops win on Q2□Q3",
    g="Q2",
    h="Q3",
    s=2,
)
def _active_and_change_instance(ctx):
    g, h = hypercube(2), hypercube(3)
    product = cartesian_product(g, h)
    numbers = _wins(
        ctx,
        [
            ("c^-(Q2) k=1", g, GameConfig(variant=Variant.SEMI_ACTIVE), True),
            ("restricted Q3 k=1", h, GameConfig.speed(2, 1, variant=Variant.RESTRICTED), True),
            ("Q2□Q3 k=2", product, GameConfig.speed(2, 2), True),
        ],
    )
    config = GameConfig.speed(2, 2)
    solver = Solver(product, config, state_budget=ctx.settings.state_budget)
    cops = TwoPhaseProductCops(g, h, 1, 2, state_budget=ctx.settings.state_budget)
    trace, outcome = _play(product, config, cops, OptimalRobber(solver))
    computed = dict(numbers.computed)
    computed["two-phase cops vs optimal robber"] = outcome
    holds = numbers.holds and trace is not None and trace.captured
    return Outcome(holds, computed, numbers.witness)


# General results


@claim(
    "graph_power_equivalence",
    ClaimKind.THEOREM,
    "c_{s,s}(G) = c(G^s)",
    "the speed-s game with blocking and the classic game on G^s have the same winner",
    graphs=200,
    n=[4, 10],
    s=[2, 3],
    k=[1, 2],
)
def _graph_power_equivalence(ctx):
    checked = 0
    for g in _random_graphs(200, 4, 10):
        for s in (2, 3):
            for k in (1, 2):
                fast = ctx.cop_win(g, GameConfig.speed(s, k))
                classic = ctx.cop_win(power(g, s), GameConfig(cop_count=k))
                checked += 1
                if fast != classic:
                    return Outcome(
                        False, {"checked": checked}, ctx.witness(g, GameConfig.speed(s, k))
                    )
    return Outcome(True, {"checked": checked})


@claim(
    "retract_monotone",
    ClaimKind.THEOREM,
    "A retract H of G has c_{s,s}(H) <= c_{s,s}(G), and products of retractions are retractions",
    "every map is a retraction and the cop numbers do not go up",
    maps=["K4^(2) -> K3^(2)", "realizer [2,1] -> block", "P3□P2□P2 -> P3", "K4^(2)□P2 -> K3^(2)□P2"],
    s=[1, 2],
)
def _retract_monotone(ctx):
    maps = [
        ("K4^(2) -> K3^(2)", complete_subdivision_retraction(4, 2)),
        ("realizer [2,1] -> block", realizer_retraction([2, 1], 1)),
        ("P3□P2□P2 -> P3", projection_retraction([path(3), path(2), path(2)], 0, [0, 0, 0])),
        (
            "K4^(2)□P2 -> K3^(2)□P2",
            product_map(complete_subdivision_retraction(4, 2), identity_map(path(2))),
        ),
    ]
    computed = {}
    for name, vertex_map in maps:
        if not is_retraction(vertex_map):
            return Outcome(False, {name: "not a retraction"})
        for s in (1, 2):
            big = ctx.cop_number(vertex_map.source, GameConfig.speed(s))
            small = ctx.cop_number(vertex_map.target, GameConfig.speed(s))
            computed["%s s=%d" % (name, s)] = [_label(small, 4), _label(big, 4)]
            if not _at_most(small, big):
                return Outcome(
                    False, computed, ctx.witness(vertex_map.source, GameConfig.speed(s, big))
                )
    return Outcome(True, computed)


@claim(
    "subdivision_sandwich",
    ClaimKind.THEOREM,
    "c(G) <= c_{s,s}(G^(s)) <= c(G) + 1",
    "the bounds hold at s = 2 and s = 3",
    graphs=[200, 40],
    n=[[3, 6], [3, 5]],
    s=[2, 3],
)
def _subdivision_sandwich(ctx):
    checked = {}
    for s, count, high in ((2, 200, 6), (3, 40, 5)):
        for i, g in enumerate(_random_graphs(count, 3, high)):
            classic = ctx.cop_number(g)
            fast = ctx.cop_number(subdivide(g, s), GameConfig.speed(s))
            within = classic is not None and fast is not None and classic <= fast <= classic + 1
            if not within:
                return Outcome(
                    False,
                    {
                        "graph": i,
                        "s": s,
                        "c": _label(classic, DEFAULT_K_MAX),
                        "c_ss": _label(fast, DEFAULT_K_MAX),
                    },
                    {"graph6": write_graph6(g)},
                )
        checked["s=%d" % s] = count
    return Outcome(True, checked)


@claim(
    "complete_subdivision",
    ClaimKind.THEOREM,
    "c_{s,s}(K_n^(s)) = 2 for n >= 3",
    "c_{2,2}(K_n^(2)) = 2 for n = 3..6 and c_{3,3}(K_4^(3)) = 2",
    n=[3, 4, 5, 6],
)
def _complete_subdivision(ctx):
    cases = [
        ("K%d^(2)" % n, subdivide(complete(n), 2), GameConfig.speed(2), 2) for n in range(3, 7)
    ]
    cases.append(("K4^(3)", subdivide(complete(4), 3), GameConfig.speed(3), 2))
    return _cop_numbers(ctx, cases)


@claim(
    "variant_chain",
    ClaimKind.THEOREM,
    "c_{s,s}(G) <= c^-(G) <= c'(G) for s >= 2",
    "the chain holds at s = 2",
    graphs=100,
    n=[4, 9],
)
def _variant_chain(ctx):
    semi_active = GameConfig(variant=Variant.SEMI_ACTIVE)
    active = GameConfig(variant=Variant.ACTIVE)
    for i, g in enumerate(_random_graphs(100, 4, 9)):
        chain = [
            ctx.cop_number(g, GameConfig.speed(2)),
            ctx.cop_number(g, semi_active),
            ctx.cop_number(g, active),
        ]
        if not (_at_most(chain[0], chain[1]) and _at_most(chain[1], chain[2])):
            labels = [_label(c, DEFAULT_K_MAX) for c in chain]
            return Outcome(False, {"graph": i, "chain": labels}, {"graph6": write_graph6(g)})
    return Outcome(True, {"checked": 100})


@claim(
    "speed_multiple_monotone",
    ClaimKind.THEOREM,
    "c_{s,s}(G) >= c_{ks,ks}(G)",
    "holds for (s, ks) in (1, 2), (1, 3), (2, 4)",
    graphs=100,
    n=[4, 9],
)
def _speed_multiple_monotone(ctx):
    for i, g in enumerate(_random_graphs(100, 4, 9, p=0.3)):
        numbers = {s: ctx.cop_number(g, GameConfig.speed(s)) for s in (1, 2, 3, 4)}
        for s, ks in ((1, 2), (1, 3), (2, 4)):
            if not _at_most(numbers[ks], numbers[s]):
                return Outcome(
                    False,
                    {"graph": i, "s": s, "ks": ks, "numbers": numbers},
                    {"graph6": write_graph6(g)},
                )
    return Outcome(True, {"checked": 100})


@claim(
    "strong_cycle_gadget",
    ClaimKind.THEOREM,
    "The k-fold strong product of C_{2s+2} has speed-s' cop number k + 1 for s' <= s and 1 otherwise",
    "k + 1 for s' <= s, 1 for s' = s + 1",
    instances=[[1, 1], [1, 2], [1, 3], [2, 1]],
)
def _strong_cycle_gadget(ctx):
    cases = []
    for k, s in ((1, 1), (1, 2), (1, 3), (2, 1)):
        g = cycle_strong_power_product(k, s)
        for speed in range(1, s + 2):
            expected = k + 1 if speed <= s else 1
            cases.append(("k=%d s=%d s'=%d" % (k, s, speed), g, GameConfig.speed(speed), expected))
    return _cop_numbers(ctx, cases)


@claim(
    "sequence_realizer",
    ClaimKind.THEOREM,
    "Every nonincreasing sequence reaching 1 is the speed-s cop number sequence of some graph",
    "c_{s,s} of the realizer is t_s",
    sequences=[[2, 1], [2, 2, 1], [3, 3, 1]],
)
def _sequence_realizer(ctx):
    cases = []
    for sequence in ([2, 1], [2, 2, 1], [3, 3, 1]):
        g = sequence_realizer(sequence)
        for s, t in enumerate(sequence, start=1):
            cases.append(("%s s=%d" % (sequence, s), g, GameConfig.speed(s), t))
    return _cop_numbers(ctx, cases)


_not_reproducible(
    "nonincreasing_sequence_long",
    "Every nonincreasing sequence reaching 1 is the speed-s cop number sequence of some graph",
    "c_{s,s} of the realizer is t_s for long sequences",
    reason="realizers of sequences with t_1 >= 4 need 4 or more cops on hundreds of vertices",
)


@claim(
    "distance_variant",
    ClaimKind.THEOREM,
    "Cops winning the speed-(s, s) game also win the classic game with capture radius s - 1",
    "c with radius s - 1 <= c_{s,s}",
    graphs=100,
    n=[4, 9],
    s=[2, 3],
)
def _distance_variant(ctx):
    for i, g in enumerate(_random_graphs(100, 4, 9, p=0.3)):
        for s in (2, 3):
            radius = ctx.cop_number(g, GameConfig(capture_radius=s - 1))
            fast = ctx.cop_number(g, GameConfig.speed(s))
            if not _at_most(radius, fast):
                return Outcome(
                    False,
                    {"graph": i, "s": s, "radius": radius, "fast": fast},
                    {"graph6": write_graph6(g)},
                )
    return Outcome(True, {"checked": 100})


# Capture time


@claim(
    "capture_family_solver",
    ClaimKind.THEOREM,
    "capt_2(G_n) = n - 7 and c_{2,2}(G_n) = 1",
    "the solver gives capt_2(G_n) = capt(G_n^2) = n - 7 with one cop",
    n=[9, 13],
)
def _capture_family_solver(ctx):
    computed = {}
    for n in range(9, 14):
        g = capture_family(n)
        fast = ctx.solve(g, GameConfig.speed(2))
        classic = ctx.solve(power(g, 2), GameConfig())
        computed["G%d" % n] = [fast.capture_time, classic.capture_time]
        if not (fast.cop_win and fast.capture_time == n - 7 == classic.capture_time):
            return Outcome(False, computed, ctx.witness(g, GameConfig.speed(2)))
    return Outcome(True, computed)


@claim(
    "capture_family_partition",
    ClaimKind.THEOREM,
    "capt_2(G_n) = n - 7",
    "the cop-win partition of G_n^2 gives n - 7",
    n=[9, 60],
)
def _capture_family_partition(ctx):
    wrong = {}
    for n in range(9, 61):
        value = capture_time_via_partition(power(capture_family(n), 2))
        if value != n - 7:
            wrong["G%d" % n] = value
    return Outcome(len(wrong) == 0, wrong or {"checked": 52})


@claim(
    "capture_family_unique_corner",
    ClaimKind.THEOREM,
    "v_n is the unique corner of G_n^2, cornered only by v_{n-2}, and removing it lowers the capture time by 1",
    "corners(G_n^2) = {v_n}, cornered by {v_{n-2}}, capt(G_n^2) = capt(G_n^2 - v_n) + 1",
    n=[10, 60],
)
def _capture_family_unique_corner(ctx):
    wrong = {}
    for n in range(10, 61):
        square = power(capture_family(n), 2)
        v = n - 1
        ok = (
            corners(square) == {v}
            and cornering_vertices(square, v) == {n - 3}
            and capture_time_via_partition(square)
            == capture_time_via_partition(square.delete_vertex(v)) + 1
        )
        if not ok:
            wrong["G%d" % n] = sorted(corners(square))
    return Outcome(len(wrong) == 0, wrong or {"checked": 51})


@claim(
    "copwin_ordering",
    ClaimKind.BACKGROUND,
    "A graph is cop-win exactly when it is dismantlable",
    "dismantlable iff one cop wins the classic game",
    graphs=100,
    n=[4, 9],
)
def _copwin_ordering(ctx):
    wins = 0
    for i, g in enumerate(_random_graphs(100, 4, 9)):
        won = ctx.cop_win(g, GameConfig())
        wins += won
        if won != is_dismantlable(g):
            return Outcome(False, {"graph": i}, ctx.witness(g, GameConfig()))
    return Outcome(True, {"checked": 100, "cop_win": wins})


@claim(
    "capture_time_partition",
    ClaimKind.BACKGROUND,
    "The capture time of a cop-win graph is k - 1 or k for a cop-win partition of k layers",
    "partition capture time = solver capture time",
    graphs=100,
    n=[4, 9],
)
def _capture_time_partition(ctx):
    checked = 0
    for i, g in enumerate(_random_graphs(100, 4, 9, p=0.6)):
        if not is_dismantlable(g):
            continue
        checked += 1
        solved = ctx.solve(g, GameConfig()).capture_time
        if solved != capture_time_via_partition(g):
            return Outcome(False, {"graph": i}, ctx.witness(g, GameConfig()))
    return Outcome(True, {"checked": checked})


@claim(
    "maamoun_meyniel_trees",
    ClaimKind.BACKGROUND,
    "c(T_1 □ ... □ T_n) = ceil((n + 1) / 2) for trees",
    "c(P3□P3) = c(P3□P3□P3) = 2",
)
def _maamoun_meyniel_trees(ctx):
    return _cop_numbers(
        ctx,
        [
            ("P3□P3", grid(3, 3), GameConfig(), 2),
            ("P3□P3□P3", grid(3, 3, 3), GameConfig(), 2),
        ],
    )


@claim(
    "neufeld_nowakowski_cycles",
    ClaimKind.BACKGROUND,
    "c(C_n1 □ ... □ C_nk) = k + 1 for cycles of length at least 4",
    "c(C4□C4) = 3",
)
def _neufeld_nowakowski_cycles(ctx):
    return _cop_numbers(ctx, [("C4□C4", torus(4, 4), GameConfig(), 3)])


@claim(
    "tosic_product_bound",
    ClaimKind.BACKGROUND,
    "c(G □ H) <= c(G) + c(H)",
    "the bound holds",
    pairs=20,
    n=[3, 4],
)
def _tosic_product_bound(ctx):
    pairs = list(_random_graphs(40, 3, 4, p=0.6))
    for i in range(20):
        g, h = pairs[2 * i], pairs[2 * i + 1]
        bound = ctx.cop_number(g) + ctx.cop_number(h)
        if not ctx.cop_win(cartesian_product(g, h), GameConfig(cop_count=bound)):
            return Outcome(
                False, {"pair": i}, ctx.witness(cartesian_product(g, h), GameConfig(cop_count=bound))
            )
    return Outcome(True, {"checked": 20})


@claim(
    "gavenciak_capture_time",
    ClaimKind.BACKGROUND,
    "The largest classic capture time over cop-win graphs of order n is n - 4",
    "max capture time over order-7 cop-win graphs = 3",
    catalog=7,
    n=7,
)
def _gavenciak_capture_time(ctx):
    return _scan_catalog(ctx, 7, 1, 3)


def _scan_catalog(ctx, n, s, expected) -> Outcome:
    path = ctx.settings.catalog_path(n)
    with path.open(encoding="ascii") as f:
        report = scan_graph6(
            f, s, n, workers=ctx.settings.workers, state_budget=ctx.settings.state_budget
        )
    holds = report.max_capture_time == expected and not report.mismatches
    witness = {"graph6": report.witnesses[0]} if report.witnesses and not holds else None
    return Outcome(holds, report.to_dict(), witness)


# Conjectures and statements out of reach


@claim(
    "monotone_speeds",
    ClaimKind.CONJECTURE,
    "c_{s,s}(G) >= c_{s',s'}(G) whenever s < s'",
    "every speed cop number sequence is nonincreasing",
    graphs=["Petersen", "realizer [3,3,1]", "5 random trees", "30 random graphs"],
    s_max=3,
)
def _monotone_speeds(ctx):
    graphs = [("Petersen", petersen()), ("realizer [3,3,1]", sequence_realizer([3, 3, 1]))]
    graphs.extend(("tree %d" % i, random_tree(9, i)) for i in range(5))
    graphs.extend(("graph %d" % i, g) for i, g in enumerate(_random_graphs(30, 5, 8, p=0.3)))
    computed = {}
    witness = None
    for name, g in graphs:
        report = explore_monotone(
            g, 3, state_budget=ctx.settings.state_budget, solver=ctx.solve
        )
        computed[name] = report.sequence
        if not report.monotone and witness is None:
            witness = {"graph6": write_graph6(g), "report": report.to_dict()}
    return Outcome(witness is None, computed, witness)


@claim(
    "capt2_star_9",
    ClaimKind.CONJECTURE,
    "capt*_2(n) = n - 7 for n >= 9",
    "max speed-2 capture time over order-9 cop-win graphs = 2",
    catalog=9,
    n=9,
    s=2,
)
def _capt2_star_9(ctx):
    return _scan_catalog(ctx, 9, 2, 2)


_not_reproducible(
    "capt2_star_10",
    "capt*_2(n) = n - 7 for n >= 9",
    "max speed-2 capture time over order-10 cop-win graphs = 3",
    reason="the order-10 catalog holds about 12 million graphs",
)

_not_reproducible(
    "capt_s_asymptotics",
    "capt*_s(n) = n - O(1) for s >= 3",
    "asymptotic",
    reason="asymptotic statement",
)


def get_claim(claim_id: str) -> Claim:
    """Get a registered claim.

    Raises:
        ClaimNotFoundError: If no claim has the id
    """
    if claim_id not in REGISTRY:
        raise ClaimNotFoundError("No claim is registered as %r" % claim_id)
    return REGISTRY[claim_id]


def list_claims(
    kinds: Optional[Iterable[ClaimKind]] = None, pattern: Optional[str] = None
) -> List[Claim]:
    """Get the registered claims, in id order, optionally filtered by kind and by an fnmatch pattern on ids."""
    kinds = set(kinds) if kinds is not None else None
    return [
        c
        for _, c in sorted(REGISTRY.items())
        if (kinds is None or c.kind in kinds)
        and (pattern is None or fnmatch.fnmatchcase(c.claim_id, pattern))
    ]


def _skipped(c: Claim, note: str, budget: bool = False, millis: int = 0) -> ClaimRecord:
    return ClaimRecord(
        c.claim_id,
        c.kind,
        ClaimStatus.SKIPPED,
        c.expected,
        millis=millis,
        parameters=c.parameters,
        note=note,
        budget_exceeded=budget,
    )


def run_claim(claim_id: str, settings: Optional[HarnessSettings] = None) -> ClaimRecord:
    """Run one claim at its registered parameters.

    Claims that are out of reach, stretch claims when they are not included and
    catalog claims without their catalog are skipped, as is any claim that
    needs a game larger than the state budget.

    Args:
        claim_id: The claim's id
        settings: The harness settings, read from the environment by default

    Returns:
        ClaimRecord: The outcome

    Raises:
        ClaimNotFoundError: If no claim has the id
    """
    c = get_claim(claim_id)
    settings = settings if settings is not None else HarnessSettings.from_env()
    if c.check is None:
        return _skipped(c, "not reproducible at desk scale: %s" % c.parameters.get("reason"))
    if c.stretch and not settings.include_stretch:
        return _skipped(c, "stretch claim, not included")
    if c.catalog is not None and settings.catalog_path(c.catalog) is None:
        return _skipped(c, "no connected%d.g6 catalog found" % c.catalog)
    logger.info("Running claim %s", claim_id)
    started = time.perf_counter()
    try:
        outcome = c.check(ClaimContext(settings))
    except BudgetExceededError as e:
        millis = int((time.perf_counter() - started) * 1000)
        logger.warning("Claim %s skipped: %s", claim_id, e)
        return _skipped(c, str(e), budget=True, millis=millis)
    millis = int((time.perf_counter() - started) * 1000)
    status = ClaimStatus.HOLDS if outcome.holds else ClaimStatus.FAILS
    if not outcome.holds:
        logger.error("Claim %s fails: %s", claim_id, outcome.computed)
    return ClaimRecord(
        c.claim_id,
        c.kind,
        status,
        c.expected,
        computed=outcome.computed,
        millis=millis,
        parameters=c.parameters,
        witness=outcome.witness,
    )


def run_all(
    kinds: Optional[Iterable[ClaimKind]] = None,
    pattern: Optional[str] = None,
    settings: Optional[HarnessSettings] = None,
) -> List[ClaimRecord]:
    """Run every registered claim matching the filters, in id order.

    With more than one worker the claims run in a process pool.
    """
    settings = settings if settings is not None else HarnessSettings.from_env()
    ids = [c.claim_id for c in list_claims(kinds, pattern)]
    if settings.workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            return list(pool.map(run_claim, ids, [settings] * len(ids)))
    return [run_claim(claim_id, settings) for claim_id in ids]


def exit_code(records: Sequence[ClaimRecord]) -> int:
    """Get the process exit code for a run: 1 if a claim failed, 2 if one ran out of budget, else 0."""
    if any(r.failed for r in records):
        return 1
    if any(r.budget_exceeded for r in records):
        return 2
    return 0
