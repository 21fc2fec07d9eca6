"""Command-line interface.

    pellcubic test <n> [--mode linear|strong|drop-fourth]
    pellcubic scan <lo> <hi> [--mode ...] [--jobs N] [--checkpoint FILE]
    pellcubic r-stats <bound>
    pellcubic bench --bits b1,b2,... [--samples S] [--compare-backends]

Exit status: 0 prime / clean scan, 1 composite / disagreements, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import _backend
from .harness import bench, default_jobs, r_stats, scan
from .modmath import MAX_MODULUS, MulCounter
from .primality import MODES, run

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_POWER = re.compile(r"^(\d+)\s*(?:\^|\*\*)\s*(\d+)$")


def parse_number(text: str) -> int:
    """Decimal integer, or ``a^b`` as shorthand. Values >= 2**64 are rejected."""
    text = text.strip()
    m = _POWER.match(text)
    if m:
        base, exp = int(m.group(1)), int(m.group(2))
        if exp > 64 and base > 1:
            raise argparse.ArgumentTypeError(f"{text} exceeds 2**64")
        value = base**exp
    elif text.isdigit():
        value = int(text)
    else:
        raise argparse.ArgumentTypeError(f"not a non-negative decimal integer: {text!r}")
    if value > MAX_MODULUS:
        raise argparse.ArgumentTypeError(f"{text} is >= 2**64")
    return value


def parse_bits(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if not part.isdigit() or not 3 <= int(part) <= 64:
            raise argparse.ArgumentTypeError(f"bit sizes must be integers in [3, 64]: {part!r}")
        out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pellcubic", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("test", help="test a single odd integer")
    p.add_argument("n", type=parse_number)
    p.add_argument("--mode", choices=list(MODES), default="linear")

    p = sub.add_parser("scan", help="compare a test against the oracle over a range")
    p.add_argument("lo", type=parse_number)
    p.add_argument("hi", type=parse_number)
    p.add_argument("--mode", choices=list(MODES), default="linear")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $PELLCUBIC_JOBS or 1)")
    p.add_argument("--checkpoint", metavar="FILE", default=None)

    p = sub.add_parser("r-stats", help="distribution of the chosen parameter r")
    p.add_argument("bound", type=parse_number)

    p = sub.add_parser("bench", help="mulmod counts per bit length")
    p.add_argument("--bits", type=parse_bits, default=[16, 24, 32, 48, 63])
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--compare-backends", action="store_true", help="also time each available kernel backend")
    return parser


def cmd_test(args, out) -> int:
    minimum = 2 if args.mode == "strong" else 3
    n = args.n
    if n % 2 == 0 or n <= minimum:
        print(f"error: n must be odd and > {minimum}, got {n}", file=sys.stderr)
        return EXIT_USAGE
    counter = MulCounter()
    t0 = time.perf_counter_ns()
    verdict = run(n, args.mode, counter)
    elapsed = time.perf_counter_ns() - t0
    r = "-" if verdict.r_used is None else verdict.r_used
    print(
        f"{n} {verdict.outcome.value} {verdict.reason.value} r={r}"
        f" elapsed_ns={elapsed} mulmods={counter.count}",
        file=out,
    )
    return EXIT_OK if verdict.is_prime else EXIT_FAIL


def cmd_scan(args, out) -> int:
    if args.lo < 5:
        print(f"error: lo must be >= 5, got {args.lo}", file=sys.stderr)
        return EXIT_USAGE
    if args.lo > args.hi:
        print(f"error: lo > hi ({args.lo} > {args.hi})", file=sys.stderr)
        return EXIT_USAGE
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE

    def emit(rec):
        print(json.dumps(rec), file=out, flush=True)

    summary = scan(args.lo, args.hi, args.mode, jobs, args.checkpoint, emit)
    print(summary.line(), file=out)
    return EXIT_OK if summary.disagreements == 0 else EXIT_FAIL


def cmd_rstats(args, out) -> int:
    if args.bound < 7:
        print("error: bound must be >= 7", file=sys.stderr)
        return EXIT_USAGE
    stats = r_stats(args.bound)
    print("r\tcount\tpercent", file=out)
    for r, count in stats.counts.items():
        print(f"{r}\t{count}\t{stats.percent(r):.4f}", file=out)
    print(f"not_found\t{stats.not_found}\t{100.0 * stats.not_found / max(stats.total, 1):.4f}", file=out)
    print(f"total\t{stats.total}\t100.0000", file=out)
    return EXIT_OK


def cmd_bench(args, out) -> int:
    backends = _backend.available() if args.compare_backends else []
    rows = bench(args.bits, args.samples, args.seed, backends)
    header = ["bits", "samples", "mean_mulmods", "mulmods_per_bit"]
    header += [f"ns_per_test_{b}" for b in backends]
    print("\t".join(header), file=out)
    for row in rows:
        cells = [str(row.bits), str(row.samples), f"{row.mean_mulmods:.2f}", f"{row.ratio:.4f}"]
        cells += [f"{row.ns_per_test[b]:.0f}" for b in backends]
        print("\t".join(cells), file=out)
    return EXIT_OK


COMMANDS = {"test": cmd_test, "scan": cmd_scan, "r-stats": cmd_rstats, "bench": cmd_bench}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
