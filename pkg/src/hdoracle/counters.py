"""Instrumented work counters.

Counters are the primary acceptance signal for cost behavior; wall-clock
time is too noisy at desk scale. Every counter is a plain nonnegative
integer and merging is elementwise addition, so sub-task counters can be
accumulated in any order.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


@dataclass
class WorkCounters:
    """Additive operation counters.

    char_comparisons: individual symbol-pair comparisons (naive scans,
        query walks).
    conv_transform_length_total: summed lengths of all FFT/NTT passes
        executed by convolutions (0 for schoolbook).
    marking_ops: per-position increments executed by the infrequent-symbol
        marking branch.
    conv_handled_occurrences / marking_handled_occurrences: partition of
        pattern positions between the convolution and marking branches of
        one text-to-pattern invocation; they must sum to the pattern length.
    rows_built / cells_stored: block-table construction totals.
    """

    char_comparisons: int = 0
    conv_transform_length_total: int = 0
    marking_ops: int = 0
    conv_handled_occurrences: int = 0
    marking_handled_occurrences: int = 0
    rows_built: int = 0
    cells_stored: int = 0

    def add(self, other: "WorkCounters") -> None:
        for f in dataclasses.fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def copy(self) -> "WorkCounters":
        return dataclasses.replace(self)
