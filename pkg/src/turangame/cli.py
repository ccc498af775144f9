"""Command-line entry points: play, solve, simulate, verify, serve.

Exit codes: 0 success, 2 usage error, 3 rule violation or failed check,
4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import constraints as _c
from . import harness
from .engine import (EngineError, ForfeitError, GameConfig, Player, RuleViolation,
                     play_game, replay_transcript, write_transcript)
from .solver import CapacityError, solve_exact
from .strategies import StrategyConfigError, make_strategy, strategy_names

EXIT_OK, EXIT_USAGE, EXIT_RULE, EXIT_CAPACITY = 0, 2, 3, 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turangame",
        description="Constructor-Blocker triangle games: engine, strategies, solver, harness",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_play = sub.add_parser("play", help="run one game and print its transcript")
    p_play.add_argument("--n", type=int, required=True)
    p_play.add_argument("--constraint", default="none")
    p_play.add_argument("--constructor", default="random", metavar="STRATEGY")
    p_play.add_argument("--blocker", default="random", metavar="STRATEGY")
    p_play.add_argument("--seed", type=int, default=0)
    p_play.add_argument("--target", choices=("K3", "K4"), default="K3")
    p_play.add_argument("--first", choices=("C", "B"), default="C")
    p_play.add_argument("--stop-on-pass", action="store_true",
                        help="end the game when Constructor passes instead of filling")

    p_solve = sub.add_parser("solve", help="exact game value by minimax (small n)")
    p_solve.add_argument("--n", type=int, required=True)
    p_solve.add_argument("--constraint", default="none")
    p_solve.add_argument("--target", choices=("K3", "K4"), default="K3")
    p_solve.add_argument("--first", choices=("C", "B"), default="C")
    p_solve.add_argument("--canonicalize", action="store_true")

    p_sim = sub.add_parser("simulate", help="strategy-vs-strategy series with bound checks")
    p_sim.add_argument("--family", required=True, choices=sorted(harness.FAMILIES))
    p_sim.add_argument("--n", required=True, help="comma-separated board sizes")
    p_sim.add_argument("--seeds", type=int, default=1)
    p_sim.add_argument("--constructor", default=None)
    p_sim.add_argument("--blockers", default=None, help="comma-separated blocker ids")
    p_sim.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p_sim.add_argument("--summary", action="store_true", help="print the recap table")

    p_verify = sub.add_parser("verify", help="replay a transcript and audit it")
    p_verify.add_argument("--transcript", required=True)
    p_verify.add_argument("--checks", default="score-in-range",
                          help=f"comma-separated from: {', '.join(harness.KNOWN_CHECKS)}")

    p_serve = sub.add_parser("serve", help="HTTP session service for the browser UI")
    p_serve.add_argument("--addr", default=None,
                         help="bind address host:port (default TURANGAME_ADDR or 127.0.0.1:8321)")

    p_list = sub.add_parser("strategies", help="list strategy selection strings")
    del p_list
    return parser


def cmd_play(args) -> int:
    config = GameConfig(
        n=args.n,
        target=args.target,
        constraint=_c.parse_constraint(args.constraint, n=args.n),
        first_player=Player(args.first),
        seed=args.seed,
        stop_on_pass=args.stop_on_pass,
    )
    constructor = make_strategy(args.constructor, Player.CONSTRUCTOR, config)
    blocker = make_strategy(args.blocker, Player.BLOCKER, config)
    result = play_game(config, constructor, blocker)
    sys.stdout.write(write_transcript(result))
    return EXIT_OK


def cmd_solve(args) -> int:
    config = GameConfig(
        n=args.n,
        target=args.target,
        constraint=_c.parse_constraint(args.constraint, n=args.n),
        first_player=Player(args.first),
    )
    report = solve_exact(config, canonicalize=args.canonicalize)
    print(f"g({args.n},{args.target},{config.constraint.name}) = {report.value}")
    print(f"# nodes={report.nodes} table={report.table_size}")
    from .engine import GameState
    state = GameState(config)
    for eid in report.principal_variation:
        u, v = state.edge(eid)
        print(f"{state.turn.value} {u} {v}")
        state.apply_move(eid)
    print(f"score {state.score()}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    n_list = [int(tok) for tok in args.n.split(",") if tok]
    blockers = args.blockers.split(",") if args.blockers else None
    constructors = [args.constructor] if args.constructor else None
    series = harness.run_series(args.family, n_list, seeds=args.seeds,
                                constructors=constructors, blockers=blockers)
    csv_text = series.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.summary:
        print(harness.recap_table())
    return EXIT_OK if series.all_pass() else EXIT_RULE


def cmd_verify(args) -> int:
    with open(args.transcript) as fh:
        text = fh.read()
    result = replay_transcript(text)
    checks = [tok for tok in args.checks.split(",") if tok]
    outcomes = harness.audit_game(result, checks)
    failed = False
    for oc in outcomes:
        status = "pass" if oc.passed else f"FAIL ({oc.witness})"
        print(f"{oc.name}: {status}")
        failed = failed or not oc.passed
    return EXIT_RULE if failed else EXIT_OK


def cmd_serve(args) -> int:
    from .server import serve
    addr = args.addr or os.environ.get("TURANGAME_ADDR", "127.0.0.1:8321")
    serve(addr)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        if args.command == "play":
            return cmd_play(args)
        if args.command == "solve":
            return cmd_solve(args)
        if args.command == "simulate":
            return cmd_simulate(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "serve":
            return cmd_serve(args)
        if args.command == "strategies":
            print("\n".join(strategy_names()))
            return EXIT_OK
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (RuleViolation, ForfeitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RULE
    except (StrategyConfigError, _c.ConstraintError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RULE
    parser.error("unknown command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
