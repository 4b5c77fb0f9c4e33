"""Command-line front end.

stdout carries machine-readable payloads only: a profile for `solve`
and `oracle`, a game file for `generate`, a tree dump for `decompose`,
and the deviation table for `verify`.  Progress notes and hints go to
stderr.  Exit statuses: 0 solved/accepted, 1 internal contract
violation or rejected profile, 2 unsupported graph class, 3 usage or
parse failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .digraph import find_digon
from .errors import (
    GuaranteeViolation,
    ParseError,
    ShapeMismatch,
    TooLarge,
    UnsupportedComponent,
    WinLoseError,
)
from .fileio import format_fraction, parse_game, parse_profile, write_game, write_profile
from .game import WinLoseGame, build_graph, verify_nash
from .generate import CLASSES, generate
from .oracle import solve_bruteforce
from .pipeline import solve_game
from .solvers import classify
from .tricon import decompose, orient_and_subdivide, serialize_tree


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="winlose", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find a Nash equilibrium via decomposition")
    p.add_argument("game", type=Path)
    p.add_argument("--dump-cycle", action="store_true",
                   help="also print the equilibrium cycle's vertex labels")

    p = sub.add_parser("verify", help="check a profile for the Nash property")
    p.add_argument("game", type=Path)
    p.add_argument("profile", type=Path)

    p = sub.add_parser("generate", help="emit a random in-class game file")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--size", type=int, required=True,
                   help="vertex count of the planar core")
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("decompose", help="dump the triconnected decomposition")
    p.add_argument("game", type=Path)

    p = sub.add_parser("oracle", help="brute-force a Nash equilibrium")
    p.add_argument("game", type=Path)
    p.add_argument("--dump-cycle", action="store_true",
                   help="also print the cycle's vertex labels when one is used")
    return parser


def _load_game(path: Path) -> WinLoseGame:
    try:
        text = path.read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    return parse_game(text)


def _dump_cycle(game: WinLoseGame, cycle) -> None:
    graph = build_graph(game)
    labels = " ".join(graph.label(x) for x in cycle.vertices)
    print(f"cycle: {labels}", file=sys.stderr)


def cmd_solve(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    try:
        result = solve_game(game)
    except UnsupportedComponent as exc:
        print(f"unsupported class: {exc}", file=sys.stderr)
        print("hint: the `oracle` command brute-forces small games",
              file=sys.stderr)
        return 2
    sys.stdout.write(write_profile(result.profile))
    if result.pure is not None:
        print(f"pure equilibrium: row {result.pure[0] + 1}, "
              f"column {result.pure[1] + 1}", file=sys.stderr)
    else:
        print(f"components: {', '.join(result.kinds)}", file=sys.stderr)
        print(f"cycle of length {len(result.cycle)}", file=sys.stderr)
    if args.dump_cycle and result.cycle is not None:
        _dump_cycle(game, result.cycle)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    try:
        text = args.profile.read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.profile}: {exc}") from exc
    profile = parse_profile(text)
    profile.validate(game)
    report = verify_nash(game, profile)
    print(f"row value: {format_fraction(report.row_value)}")
    print(f"column value: {format_fraction(report.col_value)}")
    graph = build_graph(game)
    for i, payoff in enumerate(report.row_deviation_payoffs):
        beats = "  beats value" if payoff > report.row_value else ""
        print(f"deviation {graph.label(i)}: {format_fraction(payoff)}{beats}")
    for j, payoff in enumerate(report.col_deviation_payoffs):
        beats = "  beats value" if payoff > report.col_value else ""
        print(f"deviation {graph.label(game.rows + j)}: "
              f"{format_fraction(payoff)}{beats}")
    if report.accept:
        print("accepted", file=sys.stderr)
        return 0
    print("rejected", file=sys.stderr)
    return 1


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        game = generate(args.cls, args.size, args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    sys.stdout.write(write_game(game))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    graph = build_graph(game)
    digon = find_digon(graph)
    if digon is not None:
        print(f"DIGON {graph.label(digon[0])} {graph.label(digon[1])}")
        return 0
    tree = decompose(graph)
    tree = orient_and_subdivide(tree, graph)
    kinds = {c.cid: classify(c) for c in tree.components}
    sys.stdout.write(serialize_tree(tree, kinds))
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    game = _load_game(args.game)
    result = solve_bruteforce(game)
    if result is None:
        print("no equilibrium found by the available methods", file=sys.stderr)
        return 1
    sys.stdout.write(write_profile(result.profile))
    print(f"method: {result.method}", file=sys.stderr)
    if args.dump_cycle and result.cycle is not None:
        _dump_cycle(game, result.cycle)
    return 0


_COMMANDS = {
    "solve": cmd_solve,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "decompose": cmd_decompose,
    "oracle": cmd_oracle,
}


def run(argv: list[str] | None = None) -> int:
    """Dispatch and map failures to the exit-status contract."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ShapeMismatch, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except WinLoseError as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
