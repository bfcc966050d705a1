"""Text-to-pattern Hamming distances.

For a pattern of length x and a text of length m, every engine returns an
int64 array ``dists`` of length m where ``dists[j]`` is the number of
mismatches between the pattern and the text window starting at j,
restricted to the overlapping positions: windows running past the right
end of the text count only ``m - j`` positions. This matches the
shorter-prefix convention the suffix oracle is built on.

Engines:

* ``ttp_naive``     reference scan, O(m*x);
* ``ttp_per_symbol`` one mask correlation per distinct pattern symbol;
* ``ttp_hybrid``     frequent symbols by correlation, infrequent ones by
                     direct marking of their few pattern positions;
* ``ttp_auto``       dispatch between the two by pattern alphabet size.

The convolution branches pad the text with ``x`` sentinel symbols so every
window is full-width; sentinels mismatch everything, and the per-position
overlap length ``min(x, m - j)`` restores the overhang-free count.

All engines are pure functions over immutable Texts and may be invoked
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .convolution import _correlate_mask_rows
from .counters import WorkCounters
from .text import SENTINEL, Text

# Batched mask correlations above this many rows are chunked to bound
# scratch memory (rows x transform-length complex doubles).
_MASK_BATCH = 64


@dataclass
class EngineConfig:
    """Engine selection and its thresholds.

    frequent_threshold None means: choose max(1, floor(sqrt(x*ln(x+1))))
    per invocation, balancing correlation work against marking work.
    """

    engine: str = "auto"  # naive | per_symbol | hybrid | auto
    frequent_threshold: int | None = None
    small_alphabet_cutoff: int = 16

    def __post_init__(self) -> None:
        if self.engine not in ("naive", "per_symbol", "hybrid", "auto"):
            raise ValueError(f"unknown engine: {self.engine}")
        if self.frequent_threshold is not None and self.frequent_threshold < 1:
            raise ValueError("frequent_threshold must be >= 1")


def auto_threshold(x: int) -> int:
    return max(1, int(math.sqrt(x * math.log(x + 1))))


def _overlap_lengths(m: int, x: int) -> np.ndarray:
    return np.minimum(x, m - np.arange(m, dtype=np.int64))


def ttp_naive(text: Text, pattern: Text, *, counters: WorkCounters | None = None) -> np.ndarray:
    """Reference engine: direct comparison at every alignment."""
    x = len(pattern)
    if x == 0:
        raise ValueError("empty pattern")
    m = len(text)
    t = text.codes
    p = pattern.codes
    dists = np.zeros(m, dtype=np.int64)
    for j in range(m):
        k = min(x, m - j)
        dists[j] = np.count_nonzero(p[:k] != t[j : j + k])
    if counters is not None:
        counters.char_comparisons += int(_overlap_lengths(m, x).sum())
    return dists


def _correlate_symbols(padded_text: np.ndarray, pattern: np.ndarray,
                       symbols: np.ndarray, m: int,
                       counters: WorkCounters | None) -> np.ndarray:
    """Summed match counts of the given symbols, via mask correlations."""
    matches = np.zeros(m, dtype=np.int64)
    for lo in range(0, symbols.size, _MASK_BATCH):
        chunk = symbols[lo : lo + _MASK_BATCH]
        tmasks = (padded_text[None, :] == chunk[:, None]).astype(np.int64)
        pmasks = (pattern[None, :] == chunk[:, None]).astype(np.int64)
        corr = _correlate_mask_rows(tmasks, pmasks, counters)
        matches += corr[:, :m].sum(axis=0)
    return matches


def ttp_per_symbol(text: Text, pattern: Text, *, counters: WorkCounters | None = None) -> np.ndarray:
    """One mask correlation per distinct pattern symbol (small alphabets)."""
    x = len(pattern)
    if x == 0:
        raise ValueError("empty pattern")
    m = len(text)
    if counters is not None:
        counters.conv_handled_occurrences += x
    if m == 0:
        return np.zeros(0, dtype=np.int64)
    padded = np.concatenate([text.codes, np.full(x, SENTINEL, dtype=np.uint32)])
    symbols = np.unique(pattern.codes)
    matches = _correlate_symbols(padded, pattern.codes, symbols, m, counters)
    return _overlap_lengths(m, x) - matches


def ttp_hybrid(text: Text, pattern: Text, threshold: int, *,
               counters: WorkCounters | None = None) -> np.ndarray:
    """Frequent/infrequent split.

    A pattern symbol is frequent iff it occurs >= threshold times in the
    pattern (so there are at most x/threshold of them); those go through
    mask correlations. Each occurrence of an infrequent symbol at text
    position j marks matches[j - k] for every pattern position k holding
    the symbol.
    """
    x = len(pattern)
    if x == 0:
        raise ValueError("empty pattern")
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    m = len(text)

    symbols, occ = np.unique(pattern.codes, return_counts=True)
    frequent = symbols[occ >= threshold]
    infrequent = symbols[occ < threshold]
    if counters is not None:
        counters.conv_handled_occurrences += int(occ[occ >= threshold].sum())
        counters.marking_handled_occurrences += int(occ[occ < threshold].sum())
    if m == 0:
        return np.zeros(0, dtype=np.int64)

    matches = np.zeros(m, dtype=np.int64)
    if frequent.size:
        padded = np.concatenate([text.codes, np.full(x, SENTINEL, dtype=np.uint32)])
        matches += _correlate_symbols(padded, pattern.codes, frequent, m, counters)

    if infrequent.size:
        infreq_set = set(int(c) for c in infrequent)
        positions_of: dict[int, list[int]] = {}
        for k, c in enumerate(pattern.codes):
            ci = int(c)
            if ci in infreq_set:
                positions_of.setdefault(ci, []).append(k)
        tcodes = text.codes
        for c, ks in positions_of.items():
            j_hits = np.nonzero(tcodes == np.uint32(c))[0]
            if j_hits.size == 0:
                continue
            for k in ks:
                idx = j_hits[j_hits >= k] - k
                matches[idx] += 1
                if counters is not None:
                    counters.marking_ops += int(idx.size)

    return _overlap_lengths(m, x) - matches


def ttp_auto(text: Text, pattern: Text, cfg: EngineConfig | None = None, *,
             counters: WorkCounters | None = None) -> np.ndarray:
    """Dispatch: per_symbol for small pattern alphabets, hybrid otherwise."""
    cfg = cfg or EngineConfig()
    x = len(pattern)
    if x == 0:
        raise ValueError("empty pattern")
    distinct = int(np.unique(pattern.codes).size)
    if distinct <= cfg.small_alphabet_cutoff:
        return ttp_per_symbol(text, pattern, counters=counters)
    threshold = cfg.frequent_threshold if cfg.frequent_threshold is not None else auto_threshold(x)
    return ttp_hybrid(text, pattern, threshold, counters=counters)


def run_engine(text: Text, pattern: Text, cfg: EngineConfig, *,
               counters: WorkCounters | None = None) -> np.ndarray:
    """Run the engine named by cfg.engine."""
    if cfg.engine == "naive":
        return ttp_naive(text, pattern, counters=counters)
    if cfg.engine == "per_symbol":
        return ttp_per_symbol(text, pattern, counters=counters)
    if cfg.engine == "hybrid":
        threshold = cfg.frequent_threshold if cfg.frequent_threshold is not None else auto_threshold(len(pattern))
        return ttp_hybrid(text, pattern, threshold, counters=counters)
    return ttp_auto(text, pattern, cfg, counters=counters)
