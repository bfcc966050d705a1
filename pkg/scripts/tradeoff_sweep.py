#!/usr/bin/env python3
"""Sweep block sizes on a random instance and print the trade-off table.

The stored-cell count falls as ~n*m/x while the average query walk grows
as ~x/2, which is the whole point of sampling every x-th row. Writes the
full counter CSV and prints a condensed view.

Example:
    python scripts/tradeoff_sweep.py --n 4096 --m 4096 --alphabet 4 \
        --xs 1,4,16,64,256,1024 --queries 512 --csv sweep.csv
"""

from __future__ import annotations

import argparse

import numpy as np

from hdoracle.bench import sweep, write_csv
from hdoracle.text import Text


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, default=4096)
    ap.add_argument("--m", type=int, default=4096)
    ap.add_argument("--alphabet", type=int, default=4)
    ap.add_argument("--xs", default="1,4,16,64,256,1024")
    ap.add_argument("--queries", type=int, default=512)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--engine", default="auto",
                    choices=["naive", "per_symbol", "hybrid", "auto"])
    ap.add_argument("--csv", default=None, help="also write the full CSV here")
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    s = Text(rng.integers(0, args.alphabet, size=args.n).astype(np.uint32))
    t = Text(rng.integers(0, args.alphabet, size=args.m).astype(np.uint32))
    xs = [int(v) for v in args.xs.split(",")]

    from hdoracle.ttp import EngineConfig
    records = sweep(s, t, xs, args.queries, args.seed,
                    engine=EngineConfig(engine=args.engine))

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)

    print(f"{'x':>6} {'cells':>12} {'transform_len':>14} {'marking':>10} "
          f"{'avg_query_cmp':>14} {'build_ms':>9}")
    for r in records:
        print(f"{r.x:>6} {r.build.cells_stored:>12} "
              f"{r.build.conv_transform_length_total:>14} {r.build.marking_ops:>10} "
              f"{r.avg_query_char_comparisons:>14.2f} {r.build_wall_ns / 1e6:>9.1f}")


if __name__ == "__main__":
    main()
