"""Command line front end.

Exit codes: 0 success (and true verdicts), 1 false verdicts or an empty
search, 2 usage or input errors, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .capacities import PossibilityCapacity
from .fileio import (
    dump_capacity,
    format_value,
    load_capacity,
    load_function,
    load_game,
    save_json,
)
from .games import (
    SearchBudgetExceeded,
    StrategyProfile,
    best_response,
    search_equilibria,
    verify_capacity_nash,
    verify_equilibrium,
)
from .integrals import FuzzyFunction, tnormed_integral
from .tensors import tensor_density, tensor_general
from .tnorms import tnorm
from .worked_examples import reference_report


def _add_common(sub, *, numeric=True, fmt=True):
    if numeric:
        sub.add_argument(
            "--numeric",
            choices=("rational", "float"),
            default="rational",
            help="exact fractions (default) or binary floats with 1e-9 tolerance",
        )
    if fmt:
        sub.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="human-readable text (default) or JSON",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzygames",
        description=(
            "t-normed integrals against capacities, capacity tensor products, "
            "and equilibrium checks for finite games with possibility or "
            "necessity beliefs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "integrate",
        help="integrate a function, or a game's payoff tables, against a capacity",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--game", help="game file; integrates full payoff tables")
    src.add_argument("--function", help="pointwise function file")
    p.add_argument("--capacity", required=True, help="capacity file")
    p.add_argument("--tnorm", required=True, help="min, prod or luk")
    p.add_argument(
        "--player",
        type=int,
        help="with --game: only this player (1-based)",
    )
    _add_common(p)

    p = sub.add_parser("tensor", help="tensor product of capacities")
    p.add_argument(
        "--capacities", nargs="+", required=True, help="two or more capacity files"
    )
    p.add_argument("--tnorm", required=True, help="min, prod or luk")
    p.add_argument(
        "--form",
        choices=("auto", "density", "general"),
        default="auto",
        help="density form (possibility inputs), general slice form, or auto",
    )
    p.add_argument("--out", help="write the resulting capacity to this file")
    _add_common(p)

    p = sub.add_parser(
        "best-response", help="a player's best responses against a belief"
    )
    p.add_argument("--game", required=True)
    p.add_argument("--player", type=int, required=True, help="player, 1-based")
    p.add_argument("--belief", required=True, help="capacity on the opponent space")
    p.add_argument("--tnorm", required=True, help="min, prod or luk")
    _add_common(p)

    p = sub.add_parser(
        "verify", help="check the equilibrium condition for a belief profile"
    )
    p.add_argument("--game", required=True)
    p.add_argument(
        "--beliefs",
        nargs="+",
        required=True,
        help="one capacity file per player, on the opponent spaces",
    )
    p.add_argument("--payoff-tnorm", required=True, help="min, prod or luk")
    _add_common(p)

    p = sub.add_parser(
        "search", help="enumerate strategy profiles and report the equilibria"
    )
    p.add_argument("--game", required=True)
    p.add_argument("--payoff-tnorm", required=True, help="min, prod or luk")
    p.add_argument("--tensor-tnorm", required=True, help="min, prod or luk")
    p.add_argument(
        "--mode",
        default="indicator",
        help="indicator, grid:<g> (default g=4), or necessity",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=10_000_000,
        help="largest candidate count the search may enumerate",
    )
    _add_common(p)

    p = sub.add_parser(
        "nash-verify",
        help="capacity equilibrium check for a possibility strategy profile",
    )
    p.add_argument("--game", required=True)
    p.add_argument(
        "--profile",
        nargs="+",
        required=True,
        help="one possibility capacity file per player, on own strategy spaces",
    )
    p.add_argument("--payoff-tnorm", required=True, help="min, prod or luk")
    p.add_argument("--tensor-tnorm", required=True, help="min, prod or luk")
    _add_common(p)

    p = sub.add_parser(
        "reproduce-paper",
        help="recompute the built-in worked examples and check their known values",
    )
    _add_common(p)

    return parser


def _tol(numeric: str) -> float:
    return 1e-9 if numeric == "float" else 0


def _cmd_integrate(args) -> int:
    star = tnorm(args.tnorm)
    cap = load_capacity(args.capacity, args.numeric)
    if args.function:
        if args.player is not None:
            print("error: --player only applies with --game", file=sys.stderr)
            return 2
        f = load_function(args.function, args.numeric)
        value = tnormed_integral(f, cap, star)
        if args.format == "json":
            print(json.dumps({"value": format_value(value)}))
        else:
            print(format_value(value))
        return 0
    game = load_game(args.game, args.numeric)
    players = range(game.players)
    if args.player is not None:
        idx = args.player - 1
        game.check_player(idx)
        players = [idx]
    results = {}
    for i in players:
        f = FuzzyFunction(game.product.space, game.payoffs[i])
        results[i] = tnormed_integral(f, cap, star)
    if args.format == "json":
        print(
            json.dumps(
                {f"player {i + 1}": format_value(v) for i, v in results.items()}
            )
        )
    else:
        for i, v in results.items():
            print(f"player {i + 1}: {format_value(v)}")
    return 0


def _cmd_tensor(args) -> int:
    ast = tnorm(args.tnorm)
    caps = [load_capacity(p, args.numeric) for p in args.capacities]
    if len(caps) < 2:
        print("error: tensor needs at least two capacities", file=sys.stderr)
        return 2
    all_poss = all(isinstance(c, PossibilityCapacity) for c in caps)
    form = args.form
    if form == "auto":
        form = "density" if all_poss else "general"
    if form == "density":
        if not all_poss:
            print(
                "error: density form needs possibility capacities; "
                "use --form general",
                file=sys.stderr,
            )
            return 2
        result = caps[0]
        for nxt in caps[1:]:
            result = tensor_density(result, nxt, ast)
    else:
        result = caps[0]
        for nxt in caps[1:]:
            result = tensor_general(result, nxt, ast, tol=_tol(args.numeric))
    doc = dump_capacity(result)
    if args.out:
        save_json(doc, args.out)
        print(f"wrote {args.out}")
    elif args.format == "json":
        print(json.dumps(doc))
    else:
        print(json.dumps(doc, indent=2))
    return 0


def _cmd_best_response(args) -> int:
    star = tnorm(args.tnorm)
    game = load_game(args.game, args.numeric)
    i = args.player - 1
    game.check_player(i)
    belief = load_capacity(args.belief, args.numeric)
    responses = best_response(game, i, belief, star, tol=_tol(args.numeric))
    if args.format == "json":
        print(json.dumps({"player": args.player, "best_responses": list(responses)}))
    else:
        print(" ".join(responses))
    return 0


def _certificate_doc(cert) -> dict:
    return {
        "verdict": cert.verdict,
        "best_responses": [list(r) for r in cert.best_responses],
        "residuals": [format_value(r) for r in cert.residuals],
        "payoff_tnorm": cert.payoff_tnorm,
        "tensor_tnorm": cert.tensor_tnorm,
    }


def _print_certificate(cert) -> None:
    print(f"verdict: {'equilibrium' if cert.verdict else 'not an equilibrium'}")
    for i, (resp, res) in enumerate(zip(cert.best_responses, cert.residuals)):
        print(
            f"player {i + 1}: best responses {{{','.join(resp)}}}, "
            f"residual {format_value(res)}"
        )


def _cmd_verify(args) -> int:
    star = tnorm(args.payoff_tnorm)
    game = load_game(args.game, args.numeric)
    beliefs = [load_capacity(p, args.numeric) for p in args.beliefs]
    cert = verify_equilibrium(game, beliefs, star, tol=_tol(args.numeric))
    if args.format == "json":
        print(json.dumps(_certificate_doc(cert)))
    else:
        _print_certificate(cert)
    return 0 if cert.verdict else 1


def _profile_doc(profile) -> list:
    return [
        {
            "kind": cap.kind,
            "density": {
                name: format_value(v)
                for name, v in zip(
                    cap.space.labels,
                    cap.density
                    if isinstance(cap, PossibilityCapacity)
                    else cap.conjugate.density,
                )
            },
        }
        for cap in profile
    ]


def _cmd_search(args) -> int:
    star = tnorm(args.payoff_tnorm)
    ast = tnorm(args.tensor_tnorm)
    game = load_game(args.game, args.numeric)
    found = search_equilibria(
        game,
        star,
        ast,
        mode=args.mode,
        budget=args.budget,
        tol=_tol(args.numeric),
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "mode": args.mode,
                    "found": len(found),
                    "equilibria": [
                        {
                            "profile": _profile_doc(profile),
                            "certificate": _certificate_doc(cert),
                        }
                        for profile, cert in found
                    ],
                }
            )
        )
    elif not found:
        print(
            "no equilibrium found at this resolution "
            f"(mode {args.mode}); finer grids or the continuum are not ruled out"
        )
    else:
        print(f"{len(found)} equilibrium profile(s), mode {args.mode}")
        for k, (profile, cert) in enumerate(found, 1):
            parts = []
            for cap in profile:
                dens = (
                    cap.density
                    if isinstance(cap, PossibilityCapacity)
                    else cap.conjugate.density
                )
                tag = "" if isinstance(cap, PossibilityCapacity) else "dual "
                parts.append(
                    tag
                    + "("
                    + ",".join(format_value(v) for v in dens)
                    + ")"
                )
            print(f"  {k}. " + " x ".join(parts))
    return 0 if found else 1


def _cmd_nash_verify(args) -> int:
    star = tnorm(args.payoff_tnorm)
    ast = tnorm(args.tensor_tnorm)
    game = load_game(args.game, args.numeric)
    caps = [load_capacity(p, args.numeric) for p in args.profile]
    profile = StrategyProfile(game, caps)
    report = verify_capacity_nash(game, profile, star, ast, tol=_tol(args.numeric))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "verdict": report.verdict,
                    "payoffs": [format_value(v) for v in report.payoffs],
                    "deviation_bounds": [
                        format_value(v) for v in report.deviation_bounds
                    ],
                    "gaps": [format_value(v) for v in report.gaps],
                    "payoff_tnorm": report.payoff_tnorm,
                    "tensor_tnorm": report.tensor_tnorm,
                }
            )
        )
    else:
        print(
            "verdict: "
            + (
                "capacity equilibrium"
                if report.verdict
                else "not a capacity equilibrium"
            )
        )
        for i in range(len(report.payoffs)):
            print(
                f"player {i + 1}: payoff {format_value(report.payoffs[i])}, "
                f"deviation bound {format_value(report.deviation_bounds[i])}, "
                f"gap {format_value(report.gaps[i])}"
            )
    return 0 if report.verdict else 1


def _cmd_reproduce(args) -> int:
    rows = reference_report(numeric=args.numeric)
    ok = all(r.passed for r in rows)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "passed": ok,
                    "checks": [
                        {
                            "name": r.name,
                            "expected": r.expected,
                            "computed": r.computed,
                            "passed": r.passed,
                        }
                        for r in rows
                    ],
                }
            )
        )
    else:
        width = max(len(r.name) for r in rows)
        for r in rows:
            mark = "pass" if r.passed else "FAIL"
            print(
                f"{r.name.ljust(width)}  expected {r.expected:>16}  "
                f"computed {r.computed:>16}  {mark}"
            )
        print(f"{len(rows)} checks, {sum(r.passed for r in rows)} passed")
    return 0 if ok else 1


_HANDLERS = {
    "integrate": _cmd_integrate,
    "tensor": _cmd_tensor,
    "best-response": _cmd_best_response,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "nash-verify": _cmd_nash_verify,
    "reproduce-paper": _cmd_reproduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except SearchBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
