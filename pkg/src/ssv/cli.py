"""Batch verification CLI.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad usage or
input.  With --json each check emits one object per line in a fixed key
order, so identical configurations produce byte-identical output up to the
elapsed_ms field regardless of --threads.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import campaigns
from .algebra import Context
from .errors import InputError
from .pfaffian import ORACLE_LIMIT_DEFAULT, pfaffian_minus_one
from .vacuum import LevelPolicy


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    toks = [t.strip() for t in text.split(",")]
    try:
        return [int(t) for t in toks if t != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_common(sub: argparse.ArgumentParser, figures: bool = False) -> None:
    sub.add_argument("--n", type=_positive_int, default=2, help="algebra size parameter (indices run 1..2n)")
    sub.add_argument("--threads", type=_positive_int, default=1, help="worker processes for independent checks")
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized property sampling")
    sub.add_argument("--json", action="store_true", help="newline-delimited JSON reports")
    if figures:
        sub.add_argument(
            "--figures",
            type=Path,
            default=None,
            metavar="DIR",
            help="also render outcome figures and report.ndjson into DIR",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssv",
        description="Exact verification of the Pfaffian central element of the even orthogonal affine algebra.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("matchings", help="list signed perfect matchings of 1..2n")
    _add_common(p)
    p.add_argument("--count", action="store_true", help="print only the matching count")
    p.set_defaults(func=cmd_matchings)

    p = subs.add_parser("pfaffian", help="print the Pfaffian of the mode -1 generator matrix")
    _add_common(p)
    p.set_defaults(func=cmd_pfaffian)

    p = subs.add_parser("verify-center", help="annihilation sweep of the Pfaffian by nonnegative modes")
    _add_common(p, figures=True)
    p.add_argument("--level", choices=["critical", "symbolic"], default="critical")
    p.add_argument("--modes", type=_int_list, default=[0, 1], help="nonnegative modes to sweep (default 0,1)")
    p.set_defaults(func=cmd_verify_center)

    p = subs.add_parser("residual", help="closed-form check of the mode-1 action at symbolic charge")
    _add_common(p)
    p.set_defaults(func=cmd_residual)

    p = subs.add_parser("oracle-compare", help="matching sum vs full permutation-sum oracle")
    _add_common(p)
    p.add_argument("--oracle-limit", type=_positive_int, default=ORACLE_LIMIT_DEFAULT)
    p.set_defaults(func=cmd_oracle_compare)

    p = subs.add_parser("sugawara", help="series-coefficient center and commutation grids")
    _add_common(p, figures=True)
    p.add_argument("--p", type=_int_list, default=[-2, -1, 0], help="series coefficient indices")
    p.add_argument("--modes", type=_int_list, default=[0, 1, 2], help="annihilation modes for the plus-part check")
    p.add_argument("--gen-modes", type=_int_list, default=[-1, 0, 1], help="generator modes for the commutation grid")
    p.set_defaults(func=cmd_sugawara)

    p = subs.add_parser("selftest", help="run the seeded property suites")
    _add_common(p, figures=True)
    p.add_argument("--cases", type=_positive_int, default=200, help="random cases per suite")
    p.set_defaults(func=cmd_selftest)

    return parser


def _emit(result: campaigns.CampaignResult, args) -> int:
    for line in result.warnings:
        print(f"warning: {line}", file=sys.stderr)
    for report in result.reports:
        print(report.to_json() if args.json else report.text_line())
    figures_dir = getattr(args, "figures", None)
    if figures_dir is not None:
        from . import figures  # matplotlib import deferred to the figure path

        figures_dir.mkdir(parents=True, exist_ok=True)
        (figures_dir / "report.ndjson").write_text(
            "".join(r.to_json() + "\n" for r in result.reports)
        )
        figures.render_grids(figures_dir, result.grids)
    return 0 if result.ok else 1


def cmd_matchings(args) -> int:
    ms = campaigns.matchings_listing(args.n)
    if args.count:
        print(json.dumps({"n": args.n, "count": len(ms)}) if args.json else len(ms))
        return 0
    for m in ms:
        if args.json:
            print(json.dumps({"pairs": [list(p) for p in m.pairs], "sign": m.sign}, separators=(",", ":")))
        else:
            print(m)
    return 0


def cmd_pfaffian(args) -> int:
    pf = pfaffian_minus_one(Context(args.n))
    if args.json:
        print(
            json.dumps(
                {"n": args.n, "terms": pf.num_terms, "element": str(pf)},
                separators=(",", ":"),
            )
        )
    else:
        print(pf)
    return 0


def cmd_verify_center(args) -> int:
    result = campaigns.verify_center(args.n, LevelPolicy.parse(args.level), args.modes, args.threads)
    return _emit(result, args)


def cmd_residual(args) -> int:
    return _emit(campaigns.residual_campaign(args.n), args)


def cmd_oracle_compare(args) -> int:
    return _emit(campaigns.oracle_compare(args.n, args.oracle_limit), args)


def cmd_sugawara(args) -> int:
    result = campaigns.sugawara_campaign(args.n, args.p, args.modes, args.gen_modes, args.threads)
    return _emit(result, args)


def cmd_selftest(args) -> int:
    result = campaigns.selftest_campaign(args.seed, args.cases, extra_n=args.n)
    return _emit(result, args)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
