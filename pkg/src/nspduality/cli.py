"""Command-line entry point: ``nspduality <command> ...``.

Objects travel one per line in their text encoding. Exit status is 0 on
success, 1 on a malformed input line or a failed verification, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import sys

from . import bijections, dualities, verify
from .decomp import SCHEMES
from .enumeration import ORACLE_CEILING, brute_force, count_report, generate, report_json, report_tsv
from .model import CLASSES, ParseError, ValidationError, decode, encode
from .stats import stats, to_json

# name -> (input class, function)
FUNCTIONS = {
    "T": ("map", bijections.map_to_deco),
    "T-inv": ("deco", bijections.deco_to_map),
    "I": ("deco", bijections.deco_to_interval),
    "I-inv": ("interval", bijections.interval_to_deco),
    "varphiT": ("deco", bijections.deco_to_beta_direct),
    "dual": ("map", dualities.dual),
    "NR": ("map", dualities.next_root),
    "h": ("beta", dualities.h_beta),
    "hT": ("deco", dualities.h_deco),
    "mir": ("interval", dualities.mir_interval),
}


class UsageError(Exception):
    pass


def resolve(name):
    """Input class and callable for an ``--fn`` value."""
    if name in FUNCTIONS:
        return FUNCTIONS[name]
    parts = name.split(":")
    if parts[0] == "transport" and len(parts) in (3, 4):
        src, dst = parts[1], parts[2]
        scheme = parts[3] if len(parts) == 4 else "parallel"
        if src in CLASSES and dst in CLASSES and scheme in SCHEMES:
            return src, lambda x: bijections.transport(x, dst, scheme)
    raise UsageError(f"unknown function {name!r}")


def _stream(cls, lines, emit, out):
    for number, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            x = decode(cls, text)
        except (ParseError, ValidationError) as exc:
            print(f"line {number}: {exc}", file=sys.stderr)
            return 1
        out.write(emit(x) + "\n")
    return 0


def cmd_enumerate(args, out):
    if args.oracle:
        if args.scheme != "parallel":
            raise UsageError("--oracle does not take a scheme")
        if args.size > ORACLE_CEILING[args.cls]:
            raise UsageError(f"oracle for {args.cls} stops at size {ORACLE_CEILING[args.cls]}")
        objs = brute_force(args.cls, args.size)
    else:
        objs = generate(args.cls, args.size, args.scheme if args.cls == "map" else "parallel")
    for x in objs:
        out.write(encode(x) + "\n")
    return 0


def cmd_apply(args, out):
    cls, fn = resolve(args.fn)
    if args.cls and args.cls != cls:
        raise UsageError(f"{args.fn} acts on {cls}, not {args.cls}")
    return _stream(cls, args.input, lambda x: encode(fn(x)), out)


def cmd_stats(args, out):
    return _stream(args.cls, args.input, lambda x: to_json(stats(x)), out)


def cmd_count(args, out):
    rows = count_report(args.max_size, args.max_map_size)
    out.write(report_json(rows) + "\n" if args.format == "json" else report_tsv(rows))
    return 0 if all(row["ok"] for row in rows) else 1


def cmd_verify(args, out):
    report = verify.run(args.suite, args.max_size, seed=args.seed, jobs=args.jobs)
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        out.write("\n".join(report.lines()) + "\n")
    return 0 if report.ok else 1


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def parser():
    p = argparse.ArgumentParser(prog="nspduality", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="write every object of one size as JSONL")
    e.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    e.add_argument("--size", type=_positive, required=True)
    e.add_argument("--oracle", action="store_true", help="use the brute-force generator")
    e.add_argument("--scheme", choices=SCHEMES, default="parallel")
    e.set_defaults(run=cmd_enumerate)

    a = sub.add_parser("apply", help="map each input line through a bijection or involution")
    a.add_argument("--fn", required=True,
                   help="T, T-inv, I, I-inv, varphiT, dual, NR, h, hT, mir or transport:SRC:DST[:series]")
    a.add_argument("--class", dest="cls", choices=CLASSES)
    a.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)
    a.set_defaults(run=cmd_apply)

    s = sub.add_parser("stats", help="one JSON statistics record per input line")
    s.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    s.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)
    s.set_defaults(run=cmd_stats)

    c = sub.add_parser("count", help="cardinality and fixed-point table")
    c.add_argument("--max-size", type=_positive, required=True)
    c.add_argument("--max-map-size", type=_positive, default=None)
    c.add_argument("--format", choices=("tsv", "json"), default="tsv")
    c.set_defaults(run=cmd_count)

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    v.add_argument("--max-size", type=_positive, required=True)
    v.add_argument("--jobs", type=_positive, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true", help="emit the report as one JSON object")
    v.set_defaults(run=cmd_verify)
    return p


def main(argv=None, out=None):
    p = parser()
    args = p.parse_args(argv)
    out = sys.stdout if out is None else out
    try:
        return args.run(args, out)
    except UsageError as exc:
        p.print_usage(sys.stderr)
        print(f"{p.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
