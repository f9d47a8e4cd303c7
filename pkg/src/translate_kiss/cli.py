"""Command-line entry point.

Subcommands: build, verify, render, lemma1, lemma2.  Exit codes: 0 for
success/PASS, 1 for a verification FAIL, 2 for usage or parameter errors,
3 for I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from .disk import build_disk
from .errors import ParameterError
from .placement import check_lemma2_exhaustive, place_translates
from .render import render_svg
from .ruler import PrefixTable, check_lemma1_exhaustive
from .serial import serialize
from .verify import verify_construction

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _write_out(data: bytes, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _say(args: argparse.Namespace, msg: str) -> None:
    if not args.quiet:
        print(msg)


def _cmd_build(args: argparse.Namespace) -> int:
    shape = build_disk(args.m, args.n)
    _write_out(serialize(shape), args.out)
    if args.out not in (None, "-"):
        _say(args, f"wrote shape m={args.m} n={args.n} to {args.out}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    cert = verify_construction(args.m, args.n)
    if args.json is not None:
        _write_out(serialize(cert), args.json)
    verdict = "PASS" if cert.ok else "FAIL"
    _say(
        args,
        f"{verdict} m={cert.m} n={cert.n}: "
        f"{len(cert.pair_verdicts)} pairs checked, "
        f"{cert.touching_count}/{cert.n} translates touch A0",
    )
    return EXIT_OK if cert.ok else EXIT_FAIL


def _cmd_render(args: argparse.Namespace) -> int:
    if args.shape:
        obj = build_disk(args.m, args.n)
    else:
        obj = place_translates(args.m, args.n)
    _write_out(render_svg(obj, unit_px=args.unit_px), args.out)
    if args.out not in (None, "-"):
        _say(args, f"wrote SVG to {args.out}")
    return EXIT_OK


def _cmd_lemma1(args: argparse.Namespace) -> int:
    table = PrefixTable.build(args.r_max)
    failure = check_lemma1_exhaustive(args.k_max, args.r_max, table)
    if failure is None:
        _say(
            args,
            f"PASS: all windows with k <= {args.k_max} and "
            f"r + k - 1 <= {args.r_max} have sum >= prefix sum",
        )
        return EXIT_OK
    print(f"FAIL: window k={failure[0]}, r={failure[1]} beats the prefix")
    return EXIT_FAIL


def _cmd_lemma2(args: argparse.Namespace) -> int:
    failure = check_lemma2_exhaustive(args.m, args.n)
    if failure is None:
        _say(args, f"PASS: all cases for m={args.m}, n={args.n} are disjoint")
        return EXIT_OK
    print(
        f"FAIL: overlap at r={failure.r}, xstar={failure.xstar}, "
        f"ystar={failure.ystar} (m={args.m}, n={args.n})"
    )
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="translate-kiss",
        description="Build and verify the unbounded-kissing disk construction.",
    )
    parser.add_argument("--quiet", action="store_true", help="suppress summary output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a disk and write it as JSON")
    p_build.add_argument("-m", type=int, required=True)
    p_build.add_argument("-n", type=int, required=True)
    p_build.add_argument("--out", default=None, help="output path (default stdout)")
    p_build.set_defaults(func=_cmd_build)

    p_verify = sub.add_parser("verify", help="verify the full construction")
    p_verify.add_argument("-m", type=int, required=True)
    p_verify.add_argument("-n", type=int, required=True)
    p_verify.add_argument("--json", default=None, help="write the certificate here")
    p_verify.set_defaults(func=_cmd_verify)

    p_render = sub.add_parser("render", help="render a disk or scene as SVG")
    p_render.add_argument("-m", type=int, required=True)
    p_render.add_argument("-n", type=int, required=True)
    group = p_render.add_mutually_exclusive_group()
    group.add_argument("--scene", action="store_true", help="render all translates (default)")
    group.add_argument("--shape", action="store_true", help="render the bare disk")
    p_render.add_argument("--unit-px", type=int, default=10)
    p_render.add_argument("--out", default=None, help="output path (default stdout)")
    p_render.set_defaults(func=_cmd_render)

    p_l1 = sub.add_parser("lemma1", help="exhaustively check the prefix-sum property")
    p_l1.add_argument("--k-max", type=int, required=True)
    p_l1.add_argument("--r-max", type=int, required=True)
    p_l1.set_defaults(func=_cmd_lemma1)

    p_l2 = sub.add_parser("lemma2", help="exhaustively check stepped translates stay disjoint")
    p_l2.add_argument("-m", type=int, required=True)
    p_l2.add_argument("-n", type=int, required=True)
    p_l2.add_argument(
        "--exhaustive",
        action="store_true",
        help="accepted for compatibility; the check is always exhaustive",
    )
    p_l2.set_defaults(func=_cmd_lemma2)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
