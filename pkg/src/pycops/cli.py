"""The ``pycops`` command line."""

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, List, Optional

from colored import fg, stylize

from . import __version__
from ._solver import DEFAULT_K_MAX, DEFAULT_STATE_BUDGET, Solver, capture_time, cop_number, solve
from .errors import (
    BudgetExceededError,
    ClaimNotFoundError,
    CopNumberExceededError,
    DomainError,
    GraphParseError,
    InvalidParameterError,
)
from .game import GameConfig, Variant, is_capture, robber_moves
from .graphs import (
    Graph,
    GraphRenderer,
    capture_family,
    complete,
    complete_bipartite,
    cycle,
    cycle_strong_power_product,
    grid,
    heawood,
    hypercube,
    incidence_graph_pg2,
    iter_graph6,
    path,
    petersen,
    power,
    random_connected_graph,
    random_tree,
    read_graph,
    sequence_realizer,
    star,
    subdivide,
    torus,
    write_edge_list,
    write_graph,
    write_graph6,
)
from .harness import (
    ClaimKind,
    ClaimStatus,
    HarnessSettings,
    exit_code,
    explore_monotone,
    list_claims,
    report_emit,
    run_all,
    run_claim,
    scan_graph6,
)
from .strategies import OptimalCop
from .structure import capture_time_via_partition, copwin_partition

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_BUDGET = 2
EXIT_INPUT_ERROR = 3

FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "complete-bipartite": complete_bipartite,
    "hypercube": hypercube,
    "grid": grid,
    "torus": torus,
    "petersen": petersen,
    "heawood": heawood,
    "projective": incidence_graph_pg2,
    "strong-cycle": cycle_strong_power_product,
    "realizer": lambda *terms: sequence_realizer(terms),
    "capture-family": capture_family,
    "random": lambda n, p=0.4, seed=None: random_connected_graph(n, p, seed),
    "random-tree": lambda n, seed=None: random_tree(n, seed),
}
"""The graph families ``gen`` and ``family:args`` graph arguments know, by name."""

STATUS_COLORS = {
    ClaimStatus.HOLDS: "green",
    ClaimStatus.FAILS: "red",
    ClaimStatus.SKIPPED: "yellow",
}


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise InvalidParameterError("Expected a number, got %r" % text)


def build_family(name: str, params: List[str]) -> Graph:
    """Build a graph of a named family from string parameters.

    Raises:
        InvalidParameterError: If the family is unknown or the parameters do not fit it
    """
    if name not in FAMILIES:
        raise InvalidParameterError(
            "Unknown family %r, expected one of %s" % (name, ", ".join(sorted(FAMILIES)))
        )
    values = [_number(p) for p in params]
    try:
        return FAMILIES[name](*values)
    except TypeError as e:
        raise InvalidParameterError("Bad parameters %s for %s: %s" % (params, name, e))


def load_graph(text: str) -> Graph:
    """Load a graph from a file, or build one from a ``family:param,param`` string such as ``hypercube:3``."""
    if os.path.exists(text):
        return read_graph(text)
    name, _, params = text.partition(":")
    if name not in FAMILIES:
        raise InvalidParameterError("%r is neither a file nor a family spec" % text)
    return build_family(name, [p for p in params.split(",") if p])


def _config(args, cop_count: Optional[int] = None) -> GameConfig:
    robber_speed = args.robber_speed if args.robber_speed is not None else args.cop_speed
    return GameConfig(
        cop_speed=args.cop_speed,
        robber_speed=robber_speed,
        cop_count=cop_count if cop_count is not None else getattr(args, "cops", 1),
        variant=Variant(args.variant),
        capture_radius=args.radius,
    )


def _print_json(data):
    print(json.dumps(data, indent=2, sort_keys=True))


def _settings(args) -> HarnessSettings:
    overrides = {}
    if getattr(args, "budget", None) is not None:
        overrides["state_budget"] = args.budget
    if getattr(args, "workers", None) is not None:
        overrides["workers"] = args.workers
    if getattr(args, "catalog_dir", None) is not None:
        overrides["catalog_dir"] = Path(args.catalog_dir)
    if getattr(args, "stretch", False):
        overrides["include_stretch"] = True
    if getattr(args, "no_cache", False):
        overrides["cache_dir"] = None
    return HarnessSettings.from_env(**overrides)


def command_gen(args) -> int:
    graph = build_family(args.family, args.params)
    if args.power is not None:
        graph = power(graph, args.power)
    if args.subdivide is not None:
        graph = subdivide(graph, args.subdivide)
    if args.out is not None:
        write_graph(graph, args.out)
        logger.info("Wrote %r to %s", graph, args.out)
    elif args.edges:
        sys.stdout.write(write_edge_list(graph))
    else:
        print(write_graph6(graph))
    if args.show:
        GraphRenderer(graph, use_color=not args.no_color).render_graph()
    return EXIT_OK


def command_solve(args) -> int:
    graph = load_graph(args.graph)
    result = solve(graph, _config(args), state_budget=args.budget)
    _print_json(result.to_dict())
    return EXIT_OK


def command_copnumber(args) -> int:
    graph = load_graph(args.graph)
    config = _config(args, cop_count=1)
    try:
        k = cop_number(graph, config, k_max=args.k_max, state_budget=args.budget)
    except CopNumberExceededError:
        _print_json({"config": config.key(), "cop_number": None, "k_max": args.k_max})
        return EXIT_OK
    _print_json({"config": config.key(), "cop_number": k, "k_max": args.k_max})
    return EXIT_OK


def command_capttime(args) -> int:
    graph = load_graph(args.graph)
    config = _config(args)
    _print_json({"config": config.key(), "capture_time": capture_time(graph, config, args.budget)})
    return EXIT_OK


def command_partition(args) -> int:
    graph = load_graph(args.graph)
    if args.speed > 1:
        graph = power(graph, args.speed)
    if graph.is_complete():
        _print_json({"layers": None, "capture_time": capture_time_via_partition(graph)})
        return EXIT_OK
    partition = copwin_partition(graph)
    if partition is None:
        _print_json({"layers": None, "capture_time": None})
        return EXIT_OK
    _print_json(partition.to_dict())
    return EXIT_OK


def _status_line(record, use_color: bool) -> str:
    status = record.status.value
    if use_color:
        status = stylize(status, fg(STATUS_COLORS[record.status]))
    line = "%-32s %-10s %s" % (record.claim_id, record.kind.value, status)
    return line + ("  (%s)" % record.note if record.note else "")


def command_verify(args) -> int:
    settings = _settings(args)
    kinds = [ClaimKind(k) for k in args.kind] if args.kind else None
    if args.claim == "all":
        records = run_all(kinds, args.pattern, settings)
    else:
        records = [run_claim(args.claim, settings)]
    use_color = not args.no_color and sys.stderr.isatty()
    for record in records:
        print(_status_line(record, use_color), file=sys.stderr)
    text = report_emit(records, args.format, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return exit_code(records)


def command_claims(args) -> int:
    kinds = [ClaimKind(k) for k in args.kind] if args.kind else None
    for c in list_claims(kinds, args.pattern):
        marker = " [stretch]" if c.stretch else ""
        print("%-32s %-10s %s%s" % (c.claim_id, c.kind.value, c.statement, marker))
    return EXIT_OK


def command_explore_monotone(args) -> int:
    settings = _settings(args)
    graphs = [load_graph(g) for g in args.graph]
    if args.g6 is not None:
        with open(args.g6, encoding="ascii") as f:
            graphs.extend(g for g in iter_graph6(f) if isinstance(g, Graph))
    reports = [
        explore_monotone(g, args.s_max, args.k_max, state_budget=settings.state_budget)
        for g in graphs
    ]
    _print_json([r.to_dict() for r in reports])
    return EXIT_OK


def command_scan(args) -> int:
    settings = _settings(args)
    if args.g6 == "-":
        report = scan_graph6(
            sys.stdin, args.speed, args.n, settings.workers, args.spot_check_every,
            settings.state_budget,
        )
    else:
        with open(args.g6, encoding="ascii") as f:
            report = scan_graph6(
                f, args.speed, args.n, settings.workers, args.spot_check_every,
                settings.state_budget,
            )
    _print_json(report.to_dict())
    return EXIT_OK


def play(
    graph: Graph,
    config: GameConfig,
    read: Callable[[str], str] = input,
    use_color: bool = True,
    state_budget: int = DEFAULT_STATE_BUDGET,
    max_rounds: int = 1000,
) -> bool:
    """Play an interactive game: the user is the robber, the solver plays the cops.

    Args:
        graph: The graph
        config: The rules
        read: How to prompt the user for a vertex
        use_color: Whether to colour the board
        state_budget: The state budget of the solve
        max_rounds: The number of rounds after which the robber has survived

    Returns:
        bool: Whether the robber was caught
    """
    solver = Solver(graph, config, state_budget=state_budget)
    result = solver.solve()
    cops_policy = OptimalCop(solver)
    renderer = GraphRenderer(graph, use_color=use_color)
    if result.cop_win:
        print("The cops win in %d turns against best play." % result.capture_time)
    else:
        print("You can escape forever. The cops play greedily.")
    cops = tuple(cops_policy.place(graph, config))
    renderer.render_graph(cops)
    robber = _ask_vertex(
        read, "Place the robber: ", lambda v: v not in cops, graph.order
    )
    for round_number in range(1, max_rounds + 1):
        cops = tuple(cops_policy.move(graph, config, cops, robber))
        renderer.render_graph(cops, robber)
        if is_capture(graph, config, cops, robber):
            print("Caught after %d cop turns." % round_number)
            return True
        moves = robber_moves(graph, config, cops, robber)
        if not moves:
            print("No move is left. Caught after %d cop turns." % round_number)
            return True
        robber = _ask_vertex(
            read,
            "Move the robber (%s): " % " ".join(str(w) for w in sorted(moves)),
            lambda v: v in moves,
            graph.order,
        )
    print("You survived %d rounds." % max_rounds)
    return False


def _ask_vertex(read, prompt, legal, order) -> int:
    while True:
        text = read(prompt).strip()
        try:
            v = int(text)
        except ValueError:
            print("%r is not a vertex" % text)
            continue
        if 0 <= v < order and legal(v):
            return v
        print("%d is not a legal choice" % v)


def command_play(args) -> int:
    graph = load_graph(args.graph)
    play(graph, _config(args), use_color=not args.no_color, state_budget=args.budget)
    return EXIT_OK


def _game_arguments(parser, cops: bool = True):
    parser.add_argument("--graph", required=True, help="A graph file or a family like hypercube:3")
    if cops:
        parser.add_argument("--cops", "-k", type=int, default=1, help="Number of cops")
    parser.add_argument("--cop-speed", "-s", type=int, default=1, help="Cop speed s")
    parser.add_argument(
        "--robber-speed", "-t", type=int, default=None, help="Robber speed t, the cop speed by default"
    )
    parser.add_argument(
        "--variant", choices=[v.value for v in Variant], default=Variant.STANDARD.value
    )
    parser.add_argument("--radius", type=int, default=0, help="Capture radius")
    parser.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET, help="State budget")


def _harness_arguments(parser):
    parser.add_argument("--budget", type=int, default=None, help="State budget of each solve")
    parser.add_argument("--workers", "-j", type=int, default=None, help="Worker processes")
    parser.add_argument("--no-cache", action="store_true", help="Solve without the cache")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pycops", description="Exact solver and claim checker for speed-(s, t) Cops and Robbers."
    )
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--no-color", action="store_true", help="Plain terminal output")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate a graph of a named family")
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("params", nargs="*")
    gen.add_argument("--power", type=int, default=None, help="Take the power G^s")
    gen.add_argument("--subdivide", type=int, default=None, help="Take the subdivision G^(s)")
    gen.add_argument("--out", default=None, help="Output file, .edges/.txt for an edge list")
    gen.add_argument("--edges", action="store_true", help="Write an edge list to stdout")
    gen.add_argument("--show", action="store_true", help="Render the graph")
    gen.set_defaults(run=command_gen)

    solve_parser = commands.add_parser("solve", help="Solve one game")
    _game_arguments(solve_parser)
    solve_parser.set_defaults(run=command_solve)

    copnumber = commands.add_parser("copnumber", help="Find the least winning number of cops")
    _game_arguments(copnumber, cops=False)
    copnumber.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    copnumber.set_defaults(run=command_copnumber)

    capttime = commands.add_parser("capttime", help="Find the optimal capture time")
    _game_arguments(capttime)
    capttime.set_defaults(run=command_capttime)

    partition = commands.add_parser("partition", help="Get the cop-win partition of G^s")
    partition.add_argument("--graph", required=True)
    partition.add_argument("--speed", "-s", type=int, default=1)
    partition.set_defaults(run=command_partition)

    verify = commands.add_parser("verify", help="Run a registered claim, or all of them")
    verify.add_argument("claim", help="A claim id, or 'all'")
    verify.add_argument("--kind", action="append", choices=[k.value for k in ClaimKind])
    verify.add_argument("--pattern", default=None, help="Only ids matching this glob")
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    verify.add_argument("--out", default=None, help="Write the report here")
    verify.add_argument("--stretch", action="store_true", help="Include stretch claims")
    verify.add_argument("--catalog-dir", default=None, help="Directory of connected<N>.g6 catalogs")
    _harness_arguments(verify)
    verify.set_defaults(run=command_verify)

    claims = commands.add_parser("claims", help="List the registered claims")
    claims.add_argument("--kind", action="append", choices=[k.value for k in ClaimKind])
    claims.add_argument("--pattern", default=None)
    claims.set_defaults(run=command_claims)

    explore = commands.add_parser("explore-monotone", help="Compute c_{s,s} for s = 1, 2, ...")
    explore.add_argument("--graph", action="append", default=[])
    explore.add_argument("--g6", default=None, help="A file of graph6 records")
    explore.add_argument("--s-max", type=int, default=3)
    explore.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    _harness_arguments(explore)
    explore.set_defaults(run=command_explore_monotone)

    scan = commands.add_parser("scan", help="Find the largest capture time over a graph6 catalog")
    scan.add_argument("--g6", required=True, help="The catalog, '-' for stdin")
    scan.add_argument("-n", type=int, default=None, help="The order of every graph")
    scan.add_argument("--speed", "-s", type=int, default=1)
    scan.add_argument("--spot-check-every", type=int, default=1000)
    _harness_arguments(scan)
    scan.set_defaults(run=command_scan)

    play_parser = commands.add_parser("play", help="Play the robber against optimal cops")
    _game_arguments(play_parser)
    play_parser.set_defaults(run=command_play)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the command line and get its exit code: 0 ok, 1 claim failed, 2 budget exceeded, 3 bad input."""
    args = build_parser().parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.run(args)
    except BudgetExceededError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidParameterError, GraphParseError, DomainError, ClaimNotFoundError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INPUT_ERROR
