#!/usr/bin/env python3
"""Boolean matrix product through distance queries, checked against the
direct product.

Encodes A's rows and B's columns as strings over {match, zero-left,
zero-right} symbols (or their 3-bit codewords), builds the oracle, and
decides each product entry by one thresholded substring query.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hdoracle.bmm import BINARY, TERNARY, BooleanMatrix, bmm_naive, bmm_via_oracle


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=48, help="rows of A")
    ap.add_argument("--x", type=int, default=32, help="inner dimension")
    ap.add_argument("--q", type=int, default=48, help="columns of B")
    ap.add_argument("--density", type=float, default=0.15)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    a = BooleanMatrix((rng.random((args.p, args.x)) < args.density).astype(np.uint8))
    b = BooleanMatrix((rng.random((args.x, args.q)) < args.density).astype(np.uint8))
    expected = bmm_naive(a, b)

    for variant in (TERNARY, BINARY):
        t0 = time.perf_counter()
        got = bmm_via_oracle(a, b, variant)
        dt = time.perf_counter() - t0
        ok = got == expected
        ones = int(got.bits.sum())
        print(f"{variant.kind:>7}: {args.p}x{args.x} * {args.x}x{args.q} "
              f"-> {ones} ones, matches direct product: {ok} ({dt * 1e3:.1f} ms)")
        if not ok:
            raise SystemExit(1)


if __name__ == "__main__":
    main()
