"""Exact nonnegative-integer convolution and cross-correlation.

Three strategies, all bit-exact:

* schoolbook (``numpy.convolve`` over int64) when the result is short;
* double-precision FFT when a conservative rounding-error bound for the
  instance stays below 0.25, so nearest-integer rounding is provably
  safe;
* otherwise a number-theoretic transform modulo one or more primes below
  2**31 (modular products then fit in 62 bits, safe in int64), with CRT
  recombination of the residues.

All functions are pure: scratch buffers are per-call, so concurrent
invocation is safe.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .counters import WorkCounters

SCHOOLBOOK_CUTOFF = 64  # result lengths up to this use the direct path
MAX_ENTRY = 1 << 20
MAX_ACCUM = 1 << 63  # coefficient bound above which 64-bit accumulation may overflow
MAX_TRANSFORM = 1 << 26

# NTT-friendly primes p = odd * 2^k + 1 with p < 2^31, paired with a
# primitive root. 2-adic valuations are 27, 26, 26, so transforms up to
# 2^26 work for every prime; the three-prime CRT modulus is ~2^90.5.
NTT_PRIMES = ((2013265921, 31), (1811939329, 13), (469762049, 3))


def _as_counts(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    if arr.size == 0:
        raise ValueError(f"{name} must be nonempty")
    if int(arr.min()) < 0:
        raise ValueError(f"{name} entries must be nonnegative")
    if int(arr.max()) > MAX_ENTRY:
        raise ValueError(f"{name} entries must be <= {MAX_ENTRY}")
    return arr


def _coefficient_bound(a: np.ndarray, b: np.ndarray) -> int:
    amax = int(a.max())
    bmax = int(b.max())
    return min(a.size, b.size) * amax * bmax


def choose_method(la: int, lb: int, amax: int, bmax: int) -> str:
    """Decide the execution strategy for one convolution instance.

    Exposed so tests can probe the float/modular boundary directly.
    """
    n_out = la + lb - 1
    if n_out <= SCHOOLBOOK_CUTOFF:
        return "schoolbook"
    n = 1 << (n_out - 1).bit_length()
    # Conservative double-precision error bound: the true bound is
    # O(|a|_2 |b|_2 eps log N); the factor 16*log2(N)+16 leaves a wide
    # margin over known constants. Nearest-integer rounding is exact
    # whenever this stays below 0.25.
    err_scale = amax * bmax * math.isqrt(la * lb) + amax * bmax  # ceil-ish sqrt
    if err_scale * (16 * n.bit_length() + 16) < (1 << 51):
        return "fft"
    return "ntt"


def _schoolbook(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.convolve(a, b)


def _fft_convolve(a: np.ndarray, b: np.ndarray, counters: WorkCounters | None) -> np.ndarray:
    n_out = a.size + b.size - 1
    n = 1 << (n_out - 1).bit_length()
    fa = np.fft.rfft(a, n)
    fb = np.fft.rfft(b, n)
    out = np.fft.irfft(fa * fb, n)[:n_out]
    if counters is not None:
        counters.conv_transform_length_total += 3 * n
    return np.rint(out).astype(np.int64)


@functools.lru_cache(maxsize=64)
def _bit_reverse(n: int) -> np.ndarray:
    rev = np.zeros(n, dtype=np.int64)
    bits = n.bit_length() - 1
    for i in range(1, n):
        rev[i] = (rev[i >> 1] >> 1) | ((i & 1) << (bits - 1))
    rev.setflags(write=False)
    return rev


@functools.lru_cache(maxsize=256)
def _stage_roots(p: int, g: int, length: int, invert: bool) -> np.ndarray:
    w = pow(g, (p - 1) // length, p)
    if invert:
        w = pow(w, p - 2, p)
    half = length // 2
    ws = np.empty(half, dtype=np.int64)
    acc = 1
    for i in range(half):
        ws[i] = acc
        acc = acc * w % p
    ws.setflags(write=False)
    return ws


def _ntt(x: np.ndarray, p: int, g: int, invert: bool) -> np.ndarray:
    n = x.size
    a = x[_bit_reverse(n)].copy()
    length = 2
    while length <= n:
        ws = _stage_roots(p, g, length, invert)
        half = length // 2
        blocks = a.reshape(-1, length)
        lo = blocks[:, :half]
        hi = (blocks[:, half:] * ws) % p
        blocks[:, half:] = (lo - hi) % p
        blocks[:, :half] = (lo + hi) % p
        length *= 2
    if invert:
        a = a * pow(n, p - 2, p) % p
    return a


def _select_primes(bound: int) -> list[tuple[int, int]]:
    """Smallest prefix of NTT_PRIMES whose product exceeds the bound."""
    primes: list[tuple[int, int]] = []
    product = 1
    for p, g in NTT_PRIMES:
        primes.append((p, g))
        product *= p
        if product > bound:
            return primes
    raise ValueError(f"coefficient bound {bound} exceeds CRT capacity")


def _ntt_convolve(a: np.ndarray, b: np.ndarray, counters: WorkCounters | None,
                  force_primes: int | None = None) -> np.ndarray:
    if force_primes is not None:
        primes = list(NTT_PRIMES[:force_primes])
    else:
        primes = _select_primes(_coefficient_bound(a, b))
    n_out = a.size + b.size - 1
    n = 1 << (n_out - 1).bit_length()
    if n > MAX_TRANSFORM:
        raise ValueError(f"transform length {n} exceeds supported maximum {MAX_TRANSFORM}")

    residues = []
    for p, g in primes:
        fa = np.zeros(n, dtype=np.int64)
        fa[: a.size] = a % p
        fb = np.zeros(n, dtype=np.int64)
        fb[: b.size] = b % p
        ta = _ntt(fa, p, g, invert=False)
        tb = _ntt(fb, p, g, invert=False)
        residues.append(_ntt((ta * tb) % p, p, g, invert=True)[:n_out])
    if counters is not None:
        counters.conv_transform_length_total += 3 * n * len(primes)

    if len(primes) == 1:
        return residues[0]
    p1, p2 = primes[0][0], primes[1][0]
    inv12 = pow(p1, p2 - 2, p2)
    # r1 + p1*t with t < p2: everything stays below p1*p2 < 2^62.
    x12 = residues[0] + p1 * (((residues[1] - residues[0]) * inv12) % p2)
    if len(primes) == 2:
        return x12
    # Third prime is only engaged near the 2^63 guard; lift through Python
    # ints to avoid any intermediate overflow.
    p3 = primes[2][0]
    inv123 = pow(p1 * p2 % p3, p3 - 2, p3)
    t = ((residues[2] - x12 % p3) * inv123) % p3
    full = x12.astype(object) + (p1 * p2) * t.astype(object)
    out = np.array([int(v) for v in full], dtype=np.int64)
    return out


def convolve(a, b, *, counters: WorkCounters | None = None) -> np.ndarray:
    """Exact convolution: result[k] = sum_{i+j=k} a[i]*b[j].

    Entries must be nonnegative and at most 2**20; instances whose
    coefficient bound would overflow 64-bit accumulation are rejected.
    """
    av = _as_counts(a, "a")
    bv = _as_counts(b, "b")
    if _coefficient_bound(av, bv) >= MAX_ACCUM:
        raise ValueError("instance exceeds 64-bit accumulation guard")
    method = choose_method(av.size, bv.size, int(av.max()), int(bv.max()))
    if method == "schoolbook":
        return _schoolbook(av, bv)
    if method == "fft":
        return _fft_convolve(av, bv, counters)
    return _ntt_convolve(av, bv, counters)


def correlate_matches(text_mask, pattern_mask, *, counters: WorkCounters | None = None) -> np.ndarray:
    """Sliding dot product of a 0/1 pattern mask over a 0/1 text mask.

    result[j] = sum_k text_mask[j+k] * pattern_mask[k], with positions past
    the right end of the text contributing zero. Result length equals the
    text length.
    """
    tv = _as_counts(text_mask, "text_mask")
    pv = _as_counts(pattern_mask, "pattern_mask")
    if int(tv.max()) > 1 or int(pv.max()) > 1:
        raise ValueError("masks must be 0/1")
    if pv.size > tv.size:
        raise ValueError("pattern mask longer than text mask")
    conv = convolve(tv, pv[::-1], counters=counters)
    return conv[pv.size - 1 : pv.size - 1 + tv.size]


def _correlate_mask_rows(text_masks: np.ndarray, pattern_masks: np.ndarray,
                         counters: WorkCounters | None = None) -> np.ndarray:
    """Row-wise correlate_matches over stacked 0/1 masks (batched FFTs).

    Same arithmetic and counter accounting as one correlate_matches call
    per row; batching just amortizes transform overhead.
    """
    k, lt = text_masks.shape
    if pattern_masks.ndim != 2 or pattern_masks.shape[0] != k:
        raise ValueError("mask row counts differ")
    lp = pattern_masks.shape[1]
    if lp > lt:
        raise ValueError("pattern mask longer than text mask")
    n_out = lt + lp - 1
    method = choose_method(lt, lp, 1, 1)
    if method == "schoolbook":
        out = np.empty((k, lt), dtype=np.int64)
        for r in range(k):
            conv = np.convolve(text_masks[r], pattern_masks[r][::-1])
            out[r] = conv[lp - 1 : lp - 1 + lt]
        return out
    # 0/1 masks always satisfy the float-error guard at supported sizes.
    assert method == "fft"
    n = 1 << (n_out - 1).bit_length()
    fa = np.fft.rfft(text_masks, n, axis=1)
    fb = np.fft.rfft(pattern_masks[:, ::-1], n, axis=1)
    conv = np.fft.irfft(fa * fb, n, axis=1)[:, lp - 1 : lp - 1 + lt]
    if counters is not None:
        counters.conv_transform_length_total += 3 * n * k
    return np.rint(conv).astype(np.int64)
