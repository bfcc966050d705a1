"""Command-line frontend.

Subcommands: build, query, sweep, bmm. Thin wrappers over the library —
no algorithmic logic lives here. Machine-readable results go to stdout,
diagnostics to stderr. Exit codes: 0 success, 1 usage or I/O error,
2 resource-guard rejection, 3 self-check failure.

Indices on this surface are 0-based, like the library (classic
presentations of these structures are usually 1-based).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench, bmm
from .oracle import CellBudgetError, OracleFormatError, OracleParams, build, deserialize, serialize
from .text import Text, ingest_bytes, ingest_tokens
from .ttp import EngineConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_SELFCHECK = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_text(path: str, fmt: str) -> Text:
    data = Path(path).read_bytes()
    if fmt == "raw":
        return ingest_bytes(data)
    return ingest_tokens(data.decode("ascii"))


def _cmd_build(args) -> int:
    if args.x < 1:
        print("error: --x must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    s = _read_text(args.s, args.format)
    t = _read_text(args.t, args.format)
    params = OracleParams(block=args.x, engine=EngineConfig(engine=args.engine))
    counters = bench.WorkCounters()
    try:
        oracle = build(s, t, params, counters=counters)
    except CellBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    Path(args.out).write_bytes(serialize(oracle))
    print(f"n={len(s)}")
    print(f"m={len(t)}")
    print(f"x={args.x}")
    print(f"rows_built={counters.rows_built}")
    print(f"cells_stored={counters.cells_stored}")
    return EXIT_OK


def _cmd_query(args) -> int:
    oracle = deserialize(Path(args.oracle).read_bytes())
    if args.suffix is not None:
        i, j = args.suffix
        result = oracle.suffix_query(i, j)
    else:
        i, j, length = args.sub
        result = oracle.substring_query(i, j, length)
    print(result)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    s = _read_text(args.s, args.format)
    t = _read_text(args.t, args.format)
    xs = [int(v) for v in args.xs.split(",") if v != ""]
    if not xs or any(x < 1 for x in xs):
        print("error: --xs must be comma-separated integers >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        records = bench.sweep(s, t, xs, args.queries, args.seed,
                              inject_fault=args.inject_fault)
    except bench.CrossCheckError as exc:
        print(f"error: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_SELFCHECK
    with open(args.csv, "w", newline="") as fh:
        bench.write_csv(records, fh)
    print(f"rows={len(records)}")
    return EXIT_OK


def _cmd_bmm(args) -> int:
    a = bmm.parse_matrix(Path(args.a).read_text())
    b = bmm.parse_matrix(Path(args.b).read_text())
    variant = bmm.VARIANTS[args.variant]
    params = None
    if args.x_oracle is not None:
        if args.x_oracle < 1:
            print("error: --x-oracle must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        params = OracleParams(block=args.x_oracle)
    product = bmm.bmm_via_oracle(a, b, variant, params)
    reference = bmm.bmm_naive(a, b)
    mismatches = int((product.bits != reference.bits).sum())
    Path(args.out).write_text(bmm.format_matrix(product))
    print(f"mismatches_vs_naive={mismatches}")
    if mismatches:
        print("error: oracle product disagrees with direct product", file=sys.stderr)
        return EXIT_SELFCHECK
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hdoracle",
                     description="Substring Hamming-distance oracle toolkit",
                     epilog="All indices are 0-based; classical presentations of"
                            " these structures count from 1, so shift by one when"
                            " comparing against textbook examples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="preprocess two texts into a serialized oracle")
    p.add_argument("--s", required=True, help="path of the first text")
    p.add_argument("--t", required=True, help="path of the second text")
    p.add_argument("--format", choices=["raw", "tokens"], default="raw",
                   help="raw bytes or whitespace-separated decimal symbol codes")
    p.add_argument("--x", type=int, required=True, help="block size (row sampling stride)")
    p.add_argument("--engine", choices=["naive", "per_symbol", "hybrid", "auto"],
                   default="auto")
    p.add_argument("--out", required=True, help="output oracle file")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("query", help="answer one query from a serialized oracle")
    p.add_argument("--oracle", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--suffix", nargs=2, type=int, metavar=("I", "J"),
                       help="distance of the suffixes starting at i and j")
    group.add_argument("--sub", nargs=3, type=int, metavar=("I", "J", "LEN"),
                       help="distance of the length-LEN substrings at i and j")
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("sweep", help="counter sweep across block sizes, with cross-check")
    p.add_argument("--s", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--format", choices=["raw", "tokens"], default="raw")
    p.add_argument("--xs", required=True, help="comma-separated block sizes")
    p.add_argument("--queries", type=int, default=256, help="random queries per block size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--inject-fault", action="store_true",
                   help="corrupt the table after build (self-test of the cross-check)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bmm", help="boolean matrix product via the oracle, self-checked")
    p.add_argument("--a", required=True, help="left matrix file")
    p.add_argument("--b", required=True, help="right matrix file")
    p.add_argument("--variant", choices=["ternary", "binary"], default="ternary")
    p.add_argument("--x-oracle", type=int, default=None,
                   help="oracle block size (default: one encoded row/column block)")
    p.add_argument("--out", required=True, help="output matrix file")
    p.set_defaults(func=_cmd_bmm)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CellBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError, IndexError, OracleFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
