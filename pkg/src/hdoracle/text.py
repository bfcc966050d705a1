"""Immutable symbol sequences and file ingestion.

Symbols are 32-bit codes. The top value ``2**32 - 1`` is reserved as an
internal padding sentinel that is guaranteed to mismatch every legal
symbol; ingested text may never contain it. All indices are 0-based
(much of the string-processing literature counts from 1).
"""

from __future__ import annotations

import re

import numpy as np

SENTINEL = 2**32 - 1
MAX_SYMBOL = SENTINEL - 1

_TOKEN_RE = re.compile(r"^[0-9]+$")


class Text:
    """Immutable sequence of 32-bit symbol codes.

    Safe to share across any number of concurrent readers: the backing
    array is frozen at construction.
    """

    __slots__ = ("codes",)

    def __init__(self, codes) -> None:
        raw = np.asarray(codes)
        if raw.ndim != 1:
            raise ValueError("text must be one-dimensional")
        if raw.size:
            # Validate before the uint32 cast: ndarray casts wrap silently.
            if raw.dtype.kind not in "ui":
                raise ValueError("symbol codes must be integers")
            if int(raw.min()) < 0:
                raise ValueError("symbol codes must be nonnegative")
            if int(raw.max()) > MAX_SYMBOL:
                raise ValueError(f"symbol code >= {SENTINEL} is reserved")
        arr = raw.astype(np.uint32)
        arr.setflags(write=False)
        object.__setattr__(self, "codes", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Text is immutable")

    def __len__(self) -> int:
        return int(self.codes.size)

    def __getitem__(self, index: int) -> int:
        return int(self.codes[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Text):
            return NotImplemented
        return np.array_equal(self.codes, other.codes)

    def __repr__(self) -> str:
        head = ",".join(str(c) for c in self.codes[:8])
        tail = ",..." if len(self) > 8 else ""
        return f"Text([{head}{tail}], len={len(self)})"


def ingest_bytes(raw: bytes) -> Text:
    """Build a Text whose i-th symbol is byte value i of ``raw``."""
    return Text(np.frombuffer(raw, dtype=np.uint8).astype(np.uint32))


def ingest_tokens(textual: str) -> Text:
    """Parse whitespace-separated decimal symbol codes into a Text.

    Rejects non-numeric tokens and codes >= 2**32 - 1 (the sentinel
    reservation).
    """
    values = []
    for tok in textual.split():
        if not _TOKEN_RE.match(tok):
            raise ValueError(f"malformed token: {tok!r}")
        v = int(tok)
        if v > MAX_SYMBOL:
            raise ValueError(f"symbol code {v} exceeds maximum {MAX_SYMBOL}")
        values.append(v)
    return Text(np.array(values, dtype=np.uint32))


def to_bytes(t: Text) -> bytes:
    """Inverse of ingest_bytes; requires all codes < 256."""
    if len(t) and int(t.codes.max()) > 0xFF:
        raise ValueError("text contains symbols outside byte range")
    return t.codes.astype(np.uint8).tobytes()


def to_tokens(t: Text) -> str:
    """Render as space-separated decimals, the inverse of ingest_tokens."""
    return " ".join(str(int(c)) for c in t.codes)


def distinct_symbols(t: Text, start: int, stop: int) -> int:
    """Number of distinct symbol codes in ``t[start:stop)``."""
    if not (0 <= start <= stop <= len(t)):
        raise IndexError(f"range [{start}, {stop}) out of bounds for length {len(t)}")
    return int(np.unique(t.codes[start:stop]).size)
