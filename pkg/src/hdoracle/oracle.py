"""Suffix and substring Hamming-distance oracle.

Preprocessing samples every x-th row of the suffix-distance matrix
``D[i, j] = HD(s[i:], t[j:])`` (distances between suffixes use the
shorter suffix's length). Each stored row is obtained from one
text-to-pattern invocation over a length-x block of s, chained to the
next stored row:

    D[a, j] = dists_block_a[j] + D[a + x, j + x]        (0 past the table)

A suffix query walks at most x characters to the next stored row and adds
one table cell, so query cost is O(min(x, m)); substring queries are the
difference of two suffix queries. Stored rows start at 0-based positions
x, 2x, ..., floor(n/x)*x.

A built Oracle is immutable: queries are safe from any number of
concurrent readers. The per-row distance computations in build are
independent of each other (only the final chaining pass is sequential).
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .counters import WorkCounters
from .text import SENTINEL, Text
from .ttp import EngineConfig, run_engine

MAGIC = b"HDO1"
FORMAT_VERSION = 1
DEFAULT_CELL_BUDGET = 1 << 28


class CellBudgetError(RuntimeError):
    """Table would exceed the configured cell budget."""


class OracleFormatError(ValueError):
    """Serialized oracle is malformed or fails invariant checks."""


@dataclass
class OracleParams:
    block: int
    engine: EngineConfig = field(default_factory=EngineConfig)
    max_cells: int = DEFAULT_CELL_BUDGET

    def __post_init__(self) -> None:
        if self.block < 1:
            raise ValueError("block size must be >= 1")


@dataclass
class BlockTable:
    """Stored rows of the suffix-distance matrix.

    rows[r-1][j] = HD(s[r*x:], t[j:]) for r in 1..floor(n/x). When x does
    not divide n the final block of s is shorter than x; when r*x == n the
    suffix is empty and the row is all zeros.
    """

    s_len: int
    t_len: int
    block: int
    rows: np.ndarray  # shape (row_count, t_len), int64

    @property
    def row_count(self) -> int:
        return self.rows.shape[0]


@dataclass
class Oracle:
    s: Text
    t: Text
    params: OracleParams
    table: BlockTable

    def suffix_query(self, i: int, j: int, *, counters: WorkCounters | None = None) -> int:
        """HD(s[i:], t[j:]) over the shorter suffix's length."""
        n = len(self.s)
        m = len(self.t)
        if not (0 <= i < n):
            raise IndexError(f"i={i} out of range [0, {n})")
        if not (0 <= j < m):
            raise IndexError(f"j={j} out of range [0, {m})")
        x = self.table.block
        a = ((max(i, 1) + x - 1) // x) * x  # next stored-row start at or after i
        steps = min(a - i, n - i, m - j)
        total = int(np.count_nonzero(self.s.codes[i : i + steps] != self.t.codes[j : j + steps]))
        if counters is not None:
            counters.char_comparisons += steps
        r = a // x
        col = j + (a - i)
        if r <= self.table.row_count and col < m:
            total += int(self.table.rows[r - 1, col])
        return total

    def substring_query(self, i: int, j: int, length: int, *,
                        counters: WorkCounters | None = None) -> int:
        """HD(s[i:i+length], t[j:j+length]), as a difference of suffix queries."""
        n = len(self.s)
        m = len(self.t)
        if length < 1:
            raise ValueError("length must be >= 1")
        if i < 0 or i + length > n:
            raise IndexError(f"s-range [{i}, {i + length}) out of bounds for length {n}")
        if j < 0 or j + length > m:
            raise IndexError(f"t-range [{j}, {j + length}) out of bounds for length {m}")
        head = self.suffix_query(i, j, counters=counters)
        if i + length == n or j + length == m:
            return head
        return head - self.suffix_query(i + length, j + length, counters=counters)


def naive_suffix_hd(s: Text, t: Text, i: int, j: int) -> int:
    """Direct mismatch count over min(n-i, m-j) positions; the per-query
    reference the oracle is checked against."""
    n = len(s)
    m = len(t)
    if not (0 <= i < n):
        raise IndexError(f"i={i} out of range [0, {n})")
    if not (0 <= j < m):
        raise IndexError(f"j={j} out of range [0, {m})")
    k = min(n - i, m - j)
    return int(np.count_nonzero(s.codes[i : i + k] != t.codes[j : j + k]))


def build(s: Text, t: Text, params: OracleParams, *,
          counters: WorkCounters | None = None) -> Oracle:
    """Preprocess s and t into a blocked suffix-distance oracle.

    One text-to-pattern invocation per stored row (text t, pattern = the
    length-x block of s), then a chaining pass adds the shifted next row.
    Works for either orientation of |s| vs |t|; blocks are always taken
    from s.
    """
    n = len(s)
    m = len(t)
    if n == 0 or m == 0:
        raise ValueError("both texts must be nonempty")
    x = params.block
    row_count = n // x
    if row_count * m > params.max_cells:
        raise CellBudgetError(
            f"table of {row_count} x {m} cells exceeds budget {params.max_cells}")

    # Per-row distances are independent (any order / concurrently); the
    # chaining below is the only sequential phase.
    per_row: list[np.ndarray] = []
    for r in range(1, row_count + 1):
        a = r * x
        block = Text(s.codes[a : min(a + x, n)])
        if len(block) == 0:  # x divides n: the suffix at n is empty
            per_row.append(np.zeros(m, dtype=np.int64))
        else:
            per_row.append(run_engine(t, block, params.engine, counters=counters))

    rows = np.zeros((row_count, m), dtype=np.int64)
    for r in range(row_count, 0, -1):
        rows[r - 1] = per_row[r - 1]
        if r < row_count and x < m:
            rows[r - 1, : m - x] += rows[r, x:]

    if counters is not None:
        counters.rows_built += row_count
        counters.cells_stored += row_count * m

    table = BlockTable(s_len=n, t_len=m, block=x, rows=rows)
    return Oracle(s=s, t=t, params=params, table=table)


def serialize(o: Oracle) -> bytes:
    """Little-endian layout: magic, u16 version, u16 reserved, u64 n/m/x/
    row_count, rows ascending (row_count*m u64), then each text as u64
    length + u32 codes."""
    head = MAGIC + struct.pack("<HHQQQQ", FORMAT_VERSION, 0,
                               len(o.s), len(o.t), o.table.block, o.table.row_count)
    rows = o.table.rows.astype("<u8").tobytes()
    s_part = struct.pack("<Q", len(o.s)) + o.s.codes.astype("<u4").tobytes()
    t_part = struct.pack("<Q", len(o.t)) + o.t.codes.astype("<u4").tobytes()
    return head + rows + s_part + t_part


def _take(buf: bytes, offset: int, count: int) -> tuple[bytes, int]:
    if offset + count > len(buf):
        raise OracleFormatError("truncated payload")
    return buf[offset : offset + count], offset + count


def deserialize(data: bytes) -> Oracle:
    """Parse serialize() output, checking structure and table invariants."""
    raw, off = _take(data, 0, 4)
    if raw != MAGIC:
        raise OracleFormatError("bad magic")
    raw, off = _take(data, off, struct.calcsize("<HHQQQQ"))
    version, _reserved, n, m, x, row_count = struct.unpack("<HHQQQQ", raw)
    if version != FORMAT_VERSION:
        raise OracleFormatError(f"unsupported format version {version}")
    if n < 1 or m < 1 or x < 1:
        raise OracleFormatError("invalid dimensions")
    if row_count != n // x:
        raise OracleFormatError("row count inconsistent with n and x")

    raw, off = _take(data, off, 8 * row_count * m)
    rows = np.frombuffer(raw, dtype="<u8").astype(np.int64).reshape(row_count, m)

    raw, off = _take(data, off, 8)
    (s_len,) = struct.unpack("<Q", raw)
    if s_len != n:
        raise OracleFormatError("s length mismatch")
    raw, off = _take(data, off, 4 * s_len)
    s_codes = np.frombuffer(raw, dtype="<u4")

    raw, off = _take(data, off, 8)
    (t_len,) = struct.unpack("<Q", raw)
    if t_len != m:
        raise OracleFormatError("t length mismatch")
    raw, off = _take(data, off, 4 * t_len)
    t_codes = np.frombuffer(raw, dtype="<u4")

    if off != len(data):
        raise OracleFormatError("trailing data")
    if (s_codes == SENTINEL).any() or (t_codes == SENTINEL).any():
        raise OracleFormatError("text contains reserved sentinel symbol")

    _check_table_invariants(n, m, x, rows)

    s = Text(s_codes)
    t = Text(t_codes)
    table = BlockTable(s_len=n, t_len=m, block=x, rows=rows)
    return Oracle(s=s, t=t, params=OracleParams(block=x), table=table)


def _check_table_invariants(n: int, m: int, x: int, rows: np.ndarray) -> None:
    row_count = rows.shape[0]
    if row_count == 0:
        return
    if (rows < 0).any():
        raise OracleFormatError("negative cell")
    caps_cols = (m - np.arange(m, dtype=np.int64))[None, :]
    caps_rows = (n - x * np.arange(1, row_count + 1, dtype=np.int64))[:, None]
    if (rows > np.minimum(caps_cols, caps_rows)).any():
        raise OracleFormatError("cell exceeds suffix-length bound")
    if row_count > 1 and x < m:
        diff = rows[:-1, : m - x] - rows[1:, x:]
        if (diff < 0).any() or (diff > x).any():
            raise OracleFormatError("diagonal chaining violated")
