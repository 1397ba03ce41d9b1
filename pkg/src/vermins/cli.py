"""Command-line entry point: ``vermins <command> ...``.

Exit codes: 0 ok, 2 bad input or flags, 3 no effective route / invalid route,
4 route budget exceeded, 5 oracle needs coordinates, 10 counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import dot
from .engine import (
    DEFAULT_MAX_ROUTES,
    InvalidRouteError,
    NoEffectiveRouteError,
    RouteBudgetExceededError,
    VerminsResult,
    dominates,
    vermins_solve,
)
from .lab import GeneratorConfig, compare, real, search_counterexamples
from .network import Network, NetworkError, connectivity_matrix, format_matrix, load_network, with_direction
from .oracle import OracleRequiresCoordinatesError, brute_force_shortest, exact_shortest_route

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_NO_ROUTE = 3
EXIT_BUDGET = 4
EXIT_NEEDS_COORDS = 5
EXIT_COUNTEREXAMPLE = 10


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(doc: Any) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _num(x: float) -> str:
    return f"{x:.12g}"


def _vec(values: Sequence[float]) -> str:
    return "[" + " ".join(_num(v) for v in values) + "]"


def _arrow(path: Sequence[int]) -> str:
    return " -> ".join(str(i) for i in path)


def _load(args: argparse.Namespace) -> Network:
    try:
        network = load_network(args.network)
        if args.directed is not None:
            network = with_direction(network, args.directed)
    except NetworkError as exc:
        raise CommandError(EXIT_BAD_INPUT, f"cannot load network: {exc}") from exc
    return network


def solve_to_dict(result: VerminsResult) -> dict[str, Any]:
    return {
        "winner": list(result.winner.path),
        "winner_incidence": list(result.winner.incidence),
        "criterion_value": real(result.criterion_value),
        "q": result.q,
        "h": result.h,
        "weights": [real(w) for w in result.weights.weights],
        "survivors": [
            {"path": list(v.path), "incidence": list(v.incidence), "criterion": real(c)}
            for v, c in result.survivors
        ],
        "eliminated": [
            {"path": list(v.path), "incidence": list(v.incidence)} for v in result.eliminated
        ],
        "ties": [list(v.path) for v in result.ties],
    }


def solve_table(result: VerminsResult) -> str:
    scored = {id(v): c for v, c in result.survivors}
    survivors = [v for v, _ in result.survivors]
    ordered = sorted(list(survivors) + list(result.eliminated), key=lambda v: v.path)
    label = {id(v): f"P{k}" for k, v in enumerate(ordered, start=1)}
    lines = [f"W = {_vec(result.weights.weights)}^T", f"route vectors extracted: q = {result.q}"]
    for v in ordered:
        row = f"  {label[id(v)]} = {_vec(v.incidence)}  path {_arrow(v.path)}"
        if id(v) in scored:
            row += f"  P.W = {_num(scored[id(v)])}"
        else:
            by = next(s for s in survivors if dominates(s, v))
            row += f"  eliminated ({label[id(by)]} dominates)"
        lines.append(row)
    lines.append(f"eliminated by dominance: h = {result.h}")
    lines.append(
        f"W* = Min_t [P_t . W] = {_num(result.criterion_value)}  "
        f"winner {label[id(result.winner)]}: {_arrow(result.winner.path)}"
    )
    if len(result.ties) > 1:
        lines.append("ties: " + "; ".join(_arrow(v.path) for v in result.ties))
    return "\n".join(lines) + "\n"


def cmd_solve(args: argparse.Namespace) -> int:
    network = _load(args)
    result = vermins_solve(network, args.max_routes)
    if args.table or args.format == "table":
        sys.stdout.write(solve_table(result))
    else:
        _emit(solve_to_dict(result))
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    network = _load(args)
    matrix = connectivity_matrix(network, symmetric=args.undirected_view)
    if args.format == "json":
        _emit({"matrix": matrix.tolist()})
    else:
        sys.stdout.write(format_matrix(matrix))
    return EXIT_OK


def cmd_exact(args: argparse.Namespace) -> int:
    network = _load(args)
    if args.brute_force:
        result = brute_force_shortest(network, args.max_routes)
    else:
        result = exact_shortest_route(network)
    if args.format == "table":
        sys.stdout.write(
            f"route: {_arrow(result.route.path)}\nlength: {_num(result.length)}\n"
            f"method: {result.method}\n"
        )
    else:
        _emit({"route": list(result.route.path), "length": real(result.length), "method": result.method})
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    network = _load(args)
    record = compare(network, args.max_routes)
    if args.format == "table":
        d = record.to_dict()
        sys.stdout.write("".join(f"{k}: {v}\n" for k, v in d.items()))
    else:
        _emit(record.to_dict())
    return EXIT_OK if record.agree else EXIT_COUNTEREXAMPLE


def cmd_search(args: argparse.Namespace) -> int:
    try:
        config = GeneratorConfig(
            n=args.n,
            dim=args.dim,
            connect_radius=args.radius,
            directed_layered=args.directed_layered,
            seed=args.seed,
        )
        if args.trials < 1 or args.max_routes < 1 or args.workers < 1:
            raise ValueError("trials, max-routes and workers must be positive")
    except ValueError as exc:
        raise CommandError(EXIT_BAD_INPUT, str(exc)) from exc
    report = search_counterexamples(config, args.trials, args.max_routes, workers=args.workers)
    if args.out:
        Path(args.out).write_text(report.to_json(), encoding="utf-8")
    sys.stdout.write(report.summary() + "\n")
    if report.skipped:
        print(f"skipped {len(report.skipped)} trials (see report)", file=sys.stderr)
    return EXIT_OK if report.counterexamples == 0 else EXIT_COUNTEREXAMPLE


def _parse_route(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"route must be comma-separated integers: {text!r}") from exc


def cmd_dot(args: argparse.Namespace) -> int:
    network = _load(args)
    sys.stdout.write(dot.to_dot(network, route=args.route))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vermins", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-routes", type=int, default=DEFAULT_MAX_ROUTES)
    common.add_argument("--format", choices=("json", "table"), default=None)
    direction = common.add_mutually_exclusive_group()
    direction.add_argument("--directed", dest="directed", action="store_true", default=None)
    direction.add_argument("--undirected", dest="directed", action="store_false")

    with_file = argparse.ArgumentParser(add_help=False, parents=[common])
    with_file.add_argument("network", help="network file in canonical JSON format")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[with_file], help="run the heuristic")
    p.add_argument("--table", action="store_true", help="human-readable table")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("matrix", parents=[with_file], help="print the connectivity matrix")
    p.add_argument("--undirected-view", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("exact", parents=[with_file], help="exact Euclidean shortest route")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("compare", parents=[with_file], help="heuristic vs exact route")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("dot", parents=[with_file], help="export Graphviz DOT")
    p.add_argument("--route", type=_parse_route, default=None, help="comma-separated path to highlight")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("search", parents=[common], help="random counterexample search")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--radius", type=float, default=0.6)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--directed-layered", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default=None, help="write the full report here")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except NetworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (NoEffectiveRouteError, InvalidRouteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ROUTE
    except RouteBudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OracleRequiresCoordinatesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEEDS_COORDS


if __name__ == "__main__":
    sys.exit(main())
