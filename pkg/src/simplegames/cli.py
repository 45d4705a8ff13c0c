"""Command-line entry point.

Exit status: 0 when the input was analysed, 1 when an ``--assert``ed
property does not hold, 2 for unreadable or invalid input.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import gamefile
from .census import census, kernel_from_table, parse_filter, regular_decisive_census, stream_tables
from .core import GroundSetTooLarge, NotAntichain, SimpleGame, is_antichain, minimize
from .families import NAMES, UnknownFamily, family
from .oracles import oracle_report
from .reduction import reduce_game
from .report import PROPERTIES, analyze, dualize

EXIT_OK, EXIT_ASSERT, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str, raw: bool = False):
    try:
        h = gamefile.read(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except gamefile.ParseError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if raw:
        return minimize(h)
    if not is_antichain(h):
        raise InputError(f"{path}: rows are not an antichain (pass --raw to minimise)")
    return h


def _assertion(text: str) -> tuple[str, bool]:
    want = not text.startswith("!")
    name = text.lstrip("!")
    if name not in PROPERTIES:
        raise InputError(f"unknown property {name!r} for --assert; choose from {', '.join(PROPERTIES)}")
    return name, want


def cmd_analyze(args) -> int:
    checks = [_assertion(a) for a in args.assert_ or ()]
    h = _load(args.file, args.raw)
    rep = analyze(
        h,
        mode=args.mode,
        emit_dual=args.emit_dual,
        emit_shift_kernel=args.emit_shift_kernel,
        certify=args.certify,
        max_certificate_total=args.max_total,
        limit=args.limit,
    )
    sys.stdout.write(rep.format(kv=args.kv))
    failed = [name for name, want in checks if getattr(rep, name) != want]
    for name in failed:
        print(f"assertion failed: {name}", file=sys.stderr)
    return EXIT_ASSERT if failed else EXIT_OK


def cmd_dual(args) -> int:
    h = _load(args.file, raw=True)
    k, method = dualize(h)
    sys.stdout.write(gamefile.serialize(k, [f"minimal transversals ({method})"]))
    return EXIT_OK


def cmd_reduce(args) -> int:
    h = _load(args.file, args.raw)
    hp = reduce_game(SimpleGame(h), minimize=args.minimize)
    sys.stdout.write(gamefile.serialize(hp, ["shift-order specification over 2n players"]))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.regular_decisive:
        res = regular_decisive_census(args.n, checkpoint=args.checkpoint)
        print("\n".join(res.lines()))
        return EXIT_OK
    try:
        lits = parse_filter(args.filter)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.list:
        count = 0
        for t, _ in stream_tables(args.n, lits, args.allow_long_running):
            k = kernel_from_table(t, args.n)
            print(" ".join(k.rows()) if k.edges else "-")
            count += 1
        print(f"matched={count}")
        return EXIT_OK
    res = census(args.n, args.filter, args.allow_long_running)
    print("\n".join(res.lines()))
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        h = family(args.name, args.m)
    except UnknownFamily as exc:
        raise InputError(exc.args[0]) from exc
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    label = args.name if args.m is None else f"{args.name} m={args.m}"
    sys.stdout.write(gamefile.serialize(h, [label]))
    return EXIT_OK


def cmd_oracle(args) -> int:
    h = _load(args.file, args.raw)
    fast = analyze(h)
    slow = oracle_report(h, args.limit)
    disagreements = 0
    for name, expected in slow.verdicts().items():
        got = getattr(fast, name)
        mark = "ok" if got == expected else "MISMATCH"
        disagreements += got != expected
        print(f"{name}={str(got).lower()} oracle={str(expected).lower()} {mark}")
    dual, method = dualize(h)
    same = dual == slow.dual
    disagreements += not same
    print(f"dual_size={len(dual)} oracle={len(slow.dual)} {'ok' if same else 'MISMATCH'} ({method})")
    print(f"disagreements={disagreements}")
    return EXIT_OK if not disagreements else EXIT_ASSERT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simplegames", description="Decide properties of simple games.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="decide every property of a game file")
    a.add_argument("file")
    a.add_argument("--mode", choices=("simple", "regular"), default="simple")
    a.add_argument("--emit-dual", action="store_true")
    a.add_argument("--emit-shift-kernel", action="store_true")
    a.add_argument("--certify", action="store_true", help="search a non-weightedness certificate")
    a.add_argument("--max-total", type=int, default=4, help="largest certificate total tried")
    a.add_argument("--assert", dest="assert_", action="append", metavar="PROP", help="exit 1 unless PROP (or !PROP) holds")
    a.add_argument("--kv", "--json-like", action="store_true", help="key=value output")
    a.add_argument("--raw", action="store_true", help="minimise rows instead of rejecting non-antichains")
    a.add_argument("--limit", type=int, default=20, help="largest n for exhaustive steps")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("dual", help="print the minimal transversals")
    d.add_argument("file")
    d.set_defaults(func=cmd_dual)

    r = sub.add_parser("reduce", help="embed a simple game as a regular one over 2n players")
    r.add_argument("file")
    r.add_argument("--minimize", action="store_true", help="drop shift-dominated edges")
    r.add_argument("--raw", action="store_true")
    r.set_defaults(func=cmd_reduce)

    e = sub.add_parser("enumerate", help="census of all antichains over n players")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--filter", default="")
    e.add_argument("--allow-long-running", action="store_true")
    e.add_argument("--list", action="store_true", help="print every matching kernel")
    e.add_argument("--regular-decisive", action="store_true", help="regular decisive census (long running for n >= 9)")
    e.add_argument("--checkpoint", help="resume file for --regular-decisive")
    e.set_defaults(func=cmd_enumerate)

    f = sub.add_parser("family", help="print a named instance")
    f.add_argument("name", help=", ".join(NAMES))
    f.add_argument("--m", type=int)
    f.set_defaults(func=cmd_family)

    o = sub.add_parser("oracle", help="cross-check against exhaustive evaluation")
    o.add_argument("file")
    o.add_argument("--raw", action="store_true")
    o.add_argument("--limit", type=int, default=20)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, NotAntichain, GroundSetTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
