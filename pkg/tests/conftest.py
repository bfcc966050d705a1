"""Shared test helpers: independent reference computations.

These deliberately avoid the library's fast paths — the DP table uses the
diagonal recursion directly, convolution is schoolbook, distances are
slice comparisons — so they can serve as oracles for the implementations.
"""

from __future__ import annotations

import numpy as np

from hdoracle.text import Text


def random_text(rng: np.random.Generator, length: int, alphabet: int) -> Text:
    return Text(rng.integers(0, alphabet, size=length, dtype=np.int64).astype(np.uint32))


def suffix_table(s: Text, t: Text) -> np.ndarray:
    """Full suffix-distance matrix via the diagonal recursion
    D[i, j] = [s[i] != t[j]] + D[i+1, j+1], zero beyond either end."""
    n, m = len(s), len(t)
    mism = (s.codes[:, None] != t.codes[None, :]).astype(np.int64)
    full = np.zeros((n + 1, m + 1), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        full[i, :m] = mism[i] + full[i + 1, 1 : m + 1]
    return full[:n, :m]


def substring_hd(s: Text, t: Text, i: int, j: int, length: int) -> int:
    return int(np.count_nonzero(s.codes[i : i + length] != t.codes[j : j + length]))


def schoolbook_convolve(a, b) -> list[int]:
    a = [int(v) for v in a]
    b = [int(v) for v in b]
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        for j, bv in enumerate(b):
            out[i + j] += av * bv
    return out


def sliding_matches(text_mask, pattern_mask) -> list[int]:
    t = [int(v) for v in text_mask]
    p = [int(v) for v in pattern_mask]
    out = []
    for j in range(len(t)):
        acc = 0
        for k, pv in enumerate(p):
            if j + k < len(t):
                acc += t[j + k] * pv
        out.append(acc)
    return out


def ttp_reference(text: Text, pattern: Text) -> list[int]:
    """Pure-Python double loop; overlap-only windows."""
    m, x = len(text), len(pattern)
    out = []
    for j in range(m):
        k = min(x, m - j)
        out.append(sum(1 for d in range(k) if pattern[d] != text[j + d]))
    return out
