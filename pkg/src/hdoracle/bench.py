"""Trade-off sweeps driven by work counters.

A sweep builds the oracle for each requested block size, records the
build counters, then runs a batch of seeded random suffix queries whose
answers are cross-checked against the direct per-query computation. Any
mismatch aborts the sweep. Counters, not wall-clock, are the signal;
wall-clock is recorded for curiosity only.

Sweep points are independent (each gets its own RNG stream derived from
the seed and its x), so the records are reproducible per x regardless of
ordering.
"""

from __future__ import annotations

import csv
import logging
import time
from dataclasses import dataclass

import numpy as np

from .counters import WorkCounters
from .oracle import CellBudgetError, OracleParams, build, naive_suffix_hd
from .text import Text
from .ttp import EngineConfig

log = logging.getLogger(__name__)

CSV_HEADER = ("x,rows_built,cells_stored,conv_transform_length_total,marking_ops,"
              "build_char_comparisons,avg_query_char_comparisons,build_wall_ns,avg_query_wall_ns")


class CrossCheckError(RuntimeError):
    """An oracle answer disagreed with the direct computation."""


@dataclass
class SweepRecord:
    x: int
    build: WorkCounters
    avg_query_char_comparisons: float
    build_wall_ns: int
    avg_query_wall_ns: int


def _run_queries(oracle, rng: np.random.Generator, count: int) -> tuple[float, int, int]:
    """Returns (avg comparisons, total wall ns, max comparisons)."""
    n = len(oracle.s)
    m = len(oracle.t)
    total_cmp = 0
    max_cmp = 0
    t0 = time.perf_counter_ns()
    for _ in range(count):
        i = int(rng.integers(0, n))
        j = int(rng.integers(0, m))
        c = WorkCounters()
        got = oracle.suffix_query(i, j, counters=c)
        assert c.char_comparisons <= min(oracle.table.block, m)
        expected = naive_suffix_hd(oracle.s, oracle.t, i, j)
        if got != expected:
            raise CrossCheckError(
                f"suffix_query({i}, {j}) = {got}, direct count = {expected}")
        total_cmp += c.char_comparisons
        max_cmp = max(max_cmp, c.char_comparisons)
    wall = time.perf_counter_ns() - t0
    avg = total_cmp / count if count else 0.0
    return avg, wall, max_cmp


def sweep(s: Text, t: Text, xs: list[int], queries_per_x: int, seed: int,
          engine: EngineConfig | None = None,
          max_cells: int | None = None,
          inject_fault: bool = False) -> list[SweepRecord]:
    """Build + query one oracle per block size in xs.

    Block sizes rejected by the cell budget are logged and skipped; a
    cross-check failure raises CrossCheckError and aborts. inject_fault
    perturbs the answers to exercise the cross-check path itself.
    """
    if not xs:
        raise ValueError("xs must be nonempty")
    if any(x < 1 for x in xs):
        raise ValueError("all block sizes must be >= 1")
    engine = engine or EngineConfig()
    records: list[SweepRecord] = []
    for x in xs:
        kwargs = {} if max_cells is None else {"max_cells": max_cells}
        params = OracleParams(block=x, engine=engine, **kwargs)
        counters = WorkCounters()
        t0 = time.perf_counter_ns()
        try:
            oracle = build(s, t, params, counters=counters)
        except CellBudgetError as exc:
            log.warning("x=%d rejected: %s", x, exc)
            continue
        build_wall = time.perf_counter_ns() - t0
        if inject_fault and oracle.table.rows.size:
            oracle.table.rows += 1  # deliberate corruption: exercises the cross-check

        rng = np.random.default_rng([seed, x])
        avg_cmp, query_wall, _ = _run_queries(oracle, rng, queries_per_x)
        avg_wall = query_wall // queries_per_x if queries_per_x else 0
        records.append(SweepRecord(
            x=x,
            build=counters,
            avg_query_char_comparisons=avg_cmp,
            build_wall_ns=build_wall,
            avg_query_wall_ns=avg_wall,
        ))
    return records


def write_csv(records: list[SweepRecord], fileobj) -> None:
    writer = csv.writer(fileobj, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for r in records:
        writer.writerow([
            r.x,
            r.build.rows_built,
            r.build.cells_stored,
            r.build.conv_transform_length_total,
            r.build.marking_ops,
            r.build.char_comparisons,
            f"{r.avg_query_char_comparisons:.6f}",
            r.build_wall_ns,
            r.avg_query_wall_ns,
        ])
