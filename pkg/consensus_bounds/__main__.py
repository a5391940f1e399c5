"""Command line: ``python -m consensus_bounds <command> ...``.

Exit codes: 0 on success, 1 for unreadable input or bad parameters, 2 for well-formed input
the analysis cannot handle (a disconnected graph, for instance) and for a failing check suite.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from dependency_injector.wiring import Provide, inject

from .analyzers import NetworkAnalyzer
from .containers import Container, create_container
from .entities import Network
from .errors import DomainError, InputError, InvalidParamsError, ParseError
from .finders import GraphFinder, dumps_edge_list, dumps_json
from .generators import FAMILIES, GraphGenerator
from .metrics import write_metrics
from .reports import FORMATS, render_check, render_eep, render_lower_bound, render_rank, render_report
from .sim import ConsensusSimulator, InputSchedule, Trajectory

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@inject
def read_network(
        args: argparse.Namespace,
        json_finder: Callable[..., GraphFinder] = Provide[Container.json_finder.provider],
        edge_list_finder: Callable[..., GraphFinder] = Provide[Container.edge_list_finder.provider],
        stdin_finder: Callable[..., GraphFinder] = Provide[Container.stdin_finder.provider],
) -> Network:
    if args.stdin:
        return stdin_finder().find()
    if Path(args.input).suffix.lower() == ".json":
        return json_finder(path=args.input).find()
    return edge_list_finder(path=args.input).find()


@inject
def cmd_analyze(args: argparse.Namespace, analyzer: NetworkAnalyzer = Provide[Container.analyzer]) -> int:
    sys.stdout.write(render_report(analyzer.analyze(read_network(args)), args.format))
    return EXIT_OK


@inject
def cmd_rank(args: argparse.Namespace, analyzer: NetworkAnalyzer = Provide[Container.analyzer]) -> int:
    sys.stdout.write(render_rank(analyzer.rank(read_network(args)), args.format))
    return EXIT_OK


@inject
def cmd_eep(args: argparse.Namespace, analyzer: NetworkAnalyzer = Provide[Container.analyzer]) -> int:
    sys.stdout.write(render_eep(analyzer.eep(read_network(args)), args.format))
    return EXIT_OK


@inject
def cmd_lower_bound(args: argparse.Namespace, analyzer: NetworkAnalyzer = Provide[Container.analyzer]) -> int:
    length, witness = analyzer.lower_bound(read_network(args))
    sys.stdout.write(render_lower_bound(length, witness, args.format))
    return EXIT_OK


@inject
def cmd_check(args: argparse.Namespace, analyzer: NetworkAnalyzer = Provide[Container.analyzer]) -> int:
    suite = analyzer.check(read_network(args))
    sys.stdout.write(render_check(suite, args.format))
    return EXIT_OK if suite.passed else EXIT_DOMAIN


def _parse_floats(text: str, what: str) -> List[float]:
    try:
        return [float(token) for token in text.split(",")]
    except ValueError as e:
        raise InvalidParamsError(f"{what}: {e}") from e


def _read_schedule(path: Optional[str]) -> InputSchedule:
    if path is None:
        return InputSchedule()
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"schedule {path}: {e}") from e
    return InputSchedule.from_json(data)


@inject
def cmd_simulate(args: argparse.Namespace, simulator: ConsensusSimulator = Provide[Container.simulator]) -> int:
    net = read_network(args)
    if args.cell_convergence:
        gap = simulator.cell_convergence(net, seed=args.seed, t_end=args.t_end, dt=args.dt)
        t_end = simulator.t_end if args.t_end is None else args.t_end
        if args.format == "json":
            sys.stdout.write(json.dumps({"max_same_cell_gap": gap}) + "\n")
        else:
            sys.stdout.write(f"max same-cell gap at t={t_end}: {gap:.3e}\n")
        return EXIT_OK

    x0 = simulator.random_state(net, args.seed) if args.x0 == "random" else _parse_floats(args.x0, "--x0")
    trajectory: Trajectory = simulator.run(net, x0, _read_schedule(args.u), t_end=args.t_end, dt=args.dt)
    if args.format == "json":
        sys.stdout.write(json.dumps({"times": trajectory.times.tolist(), "states": trajectory.states.tolist()}) + "\n")
    else:
        trajectory.to_csv(sys.stdout)
    return EXIT_OK


def _parse_leaders(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",")]
    except ValueError as e:
        raise InvalidParamsError(f"--leaders: {e}") from e


@inject
def cmd_gen(args: argparse.Namespace, generator: GraphGenerator = Provide[Container.generator]) -> int:
    net = generator.generate(args.family, args.n, leaders=_parse_leaders(args.leaders), p=args.p, cols=args.cols,
                             seed=args.seed, random_leaders=args.random_leaders)
    sys.stdout.write(dumps_edge_list(net) if args.edge_list else dumps_json(net))
    return EXIT_OK


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="consensus_bounds",
                            description="Controllability bounds for leader-follower consensus networks.")
    parser.add_argument("--metrics", action="store_true",
                        help="write the recorded operation metrics to stderr when the command ends")
    commands = parser.add_subparsers(dest="command", required=True)

    def graph_command(name: str, handler, help_text: str) -> ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--input", metavar="PATH",
                            help="graph file; .json is read as JSON, anything else as an edge list")
        source.add_argument("--stdin", action="store_true", help="read the graph (either format) from standard input")
        sub.add_argument("--format", choices=FORMATS, default="text")
        sub.set_defaults(handler=handler)
        return sub

    graph_command("analyze", cmd_analyze, "lower bound, exact rank and upper bound with witnesses")
    graph_command("rank", cmd_rank, "exact rank of the controllability matrix")
    graph_command("eep", cmd_eep, "maximal leader-invariant external equitable partition")
    graph_command("lower-bound", cmd_lower_bound, "longest distance-vector sequence and a witness")
    graph_command("check", cmd_check, "run the property checks; exit 2 if any fails")

    simulate = graph_command("simulate", cmd_simulate, "integrate x' = -Lx + Bu (CSV on stdout)")
    simulate.add_argument("--t-end", type=float, default=None, help="end time (default from config)")
    simulate.add_argument("--dt", type=float, default=None, help="step size (default from config)")
    simulate.add_argument("--x0", default="random", help='comma-separated initial state, or "random"')
    simulate.add_argument("--u", metavar="PATH", default=None,
                          help='JSON schedule [{"t": 0, "u": [...]}, ...]; zero input when omitted')
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--cell-convergence", action="store_true",
                          help="report the largest end-time gap inside an EEP cell over random trials")

    gen = commands.add_parser("gen", help="emit a graph of a standard family")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True, help="node count (grid: rows)")
    gen.add_argument("--cols", type=int, default=None, help="grid columns (default n)")
    gen.add_argument("--p", type=float, default=None, help="edge probability for the random family")
    gen.add_argument("--leaders", default="0",
                     help="comma-separated leader ids, for every family; a leader count goes to --random-leaders")
    gen.add_argument("--random-leaders", type=int, default=None, metavar="K",
                     help="draw K distinct leaders with --seed instead of using --leaders")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--edge-list", action="store_true", help="emit the edge-list format instead of JSON")
    gen.set_defaults(handler=cmd_gen)
    return parser


def run(argv: Optional[Sequence[str]] = None, container: Optional[Container] = None) -> int:
    container = container or create_container()
    logging.basicConfig(level=container.config.logging.level(),
                        format="%(asctime)s %(levelname)s %(name)s %(message)s")
    args = build_parser().parse_args(argv)
    container.wire(modules=[__name__])
    try:
        return args.handler(args)
    except (InputError, OSError) as e:
        logger.error(f"[ERROR] {args.command}: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except DomainError as e:
        logger.error(f"[ERROR] {args.command}: {type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    finally:
        if args.metrics:
            write_metrics(sys.stderr)
        container.unwire()


if __name__ == '__main__':
    sys.exit(run())
