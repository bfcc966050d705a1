"""Boolean matrix product computed through the distance oracle.

Rows of A and columns of B are encoded as strings so that one thresholded
substring-distance query decides each product entry: over the ternary
alphabet, entry (i, j) is 1 iff the distance between A's encoded row i
and B's encoded column j is strictly below the inner dimension x (a match
can only happen where both sides encode a 1). The binary variant replaces
each ternary symbol with a 3-bit codeword; any two distinct codewords
differ in exactly 2 positions, so the threshold becomes 2x.

This is primarily an end-to-end correctness harness: the oracle-computed
product is always comparable against the direct product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .oracle import OracleParams, build
from .text import Text

# Ternary alphabet: shared match symbol, plus one zero-marker per side so
# that zeros never match anything.
SYM_ONE = 1
SYM_ZERO_A = 2
SYM_ZERO_B = 3

# 3-bit codewords for (one, zero_a, zero_b); pairwise Hamming distance 2.
BINARY_CODEWORDS = {
    SYM_ONE: (0, 1, 1),
    SYM_ZERO_A: (1, 0, 1),
    SYM_ZERO_B: (1, 1, 0),
}


@dataclass(frozen=True)
class EncodingVariant:
    kind: str  # "ternary" | "binary"
    per_symbol_hd: int  # codeword distance contributed by one mismatching cell


TERNARY = EncodingVariant(kind="ternary", per_symbol_hd=1)
BINARY = EncodingVariant(kind="binary", per_symbol_hd=2)

VARIANTS = {"ternary": TERNARY, "binary": BINARY}


class BooleanMatrix:
    """Dense 0/1 matrix, row-major."""

    def __init__(self, bits) -> None:
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError("matrix must be two-dimensional")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        self.bits = arr
        self.rows = arr.shape[0]
        self.cols = arr.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BooleanMatrix):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool((self.bits == other.bits).all())

    def __repr__(self) -> str:
        return f"BooleanMatrix({self.rows}x{self.cols})"


def parse_matrix(content: str) -> BooleanMatrix:
    """Parse the line format: "R C" header, then R lines of C chars in {0,1}."""
    lines = content.splitlines()
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("header must be 'R C'")
    try:
        r, c = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ValueError("header must be 'R C' decimals") from exc
    if r < 0 or c < 0:
        raise ValueError("negative dimensions")
    body = [ln for ln in lines[1:] if ln.strip() != ""]
    if len(body) != r:
        raise ValueError(f"expected {r} rows, found {len(body)}")
    out = np.zeros((r, c), dtype=np.uint8)
    for i, ln in enumerate(body):
        row = ln.strip()
        if len(row) != c or any(ch not in "01" for ch in row):
            raise ValueError(f"row {i} is not {c} chars of 0/1")
        out[i] = [1 if ch == "1" else 0 for ch in row]
    return BooleanMatrix(out)


def format_matrix(mat: BooleanMatrix) -> str:
    lines = [f"{mat.rows} {mat.cols}"]
    for i in range(mat.rows):
        lines.append("".join("1" if v else "0" for v in mat.bits[i]))
    return "\n".join(lines) + "\n"


def _encode_cells(cells: np.ndarray, zero_symbol: int, variant: EncodingVariant) -> np.ndarray:
    """Map a flat 0/1 cell sequence to symbol codes under the variant."""
    ternary = np.where(cells == 1, SYM_ONE, zero_symbol).astype(np.uint32)
    if variant.kind == "ternary":
        return ternary
    codeword_table = np.zeros((4, 3), dtype=np.uint32)
    for sym, word in BINARY_CODEWORDS.items():
        codeword_table[sym] = word
    return codeword_table[ternary].reshape(-1)


def encode_strings(a: BooleanMatrix, b: BooleanMatrix,
                   variant: EncodingVariant = TERNARY) -> tuple[Text, Text, int]:
    """Encode A's rows into one string and B's columns into another.

    Returns (S, T, width): each matrix row/column occupies one width-sized
    block (width = inner dimension for ternary, 3x that for binary).
    """
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    if variant.kind not in VARIANTS:
        raise ValueError(f"unknown encoding variant: {variant.kind}")
    x = a.cols
    width = x * (3 if variant.kind == "binary" else 1)
    s = _encode_cells(a.bits.reshape(-1), SYM_ZERO_A, variant)
    t = _encode_cells(b.bits.T.reshape(-1), SYM_ZERO_B, variant)
    return Text(s), Text(t), width


def bmm_naive(a: BooleanMatrix, b: BooleanMatrix) -> BooleanMatrix:
    """Reference product: (AB)_{ij} = OR_k (a[i,k] AND b[k,j])."""
    if a.cols != b.rows:
        raise ValueError(f"inner dimensions differ: {a.cols} vs {b.rows}")
    prod = a.bits.astype(np.int64) @ b.bits.astype(np.int64)
    return BooleanMatrix((prod > 0).astype(np.uint8))


def bmm_via_oracle(a: BooleanMatrix, b: BooleanMatrix,
                   variant: EncodingVariant = TERNARY,
                   params: OracleParams | None = None) -> BooleanMatrix:
    """Boolean product where each entry is one thresholded substring query.

    Entry (i, j) is 1 iff the distance between row-block i of the encoded
    S and column-block j of the encoded T is < width * per-cell mismatch
    distance (x for ternary, 2x for binary).
    """
    if a.cols != b.rows or a.cols < 1:
        raise ValueError("inner dimensions must match and be >= 1")
    if a.rows == 0 or b.cols == 0:
        return BooleanMatrix(np.zeros((a.rows, b.cols), dtype=np.uint8))
    s, t, width = encode_strings(a, b, variant)
    if params is None:
        params = OracleParams(block=width)
    oracle = build(s, t, params)
    x = a.cols
    threshold = x * variant.per_symbol_hd
    out = np.zeros((a.rows, b.cols), dtype=np.uint8)
    for i in range(a.rows):
        for j in range(b.cols):
            d = oracle.substring_query(i * width, j * width, width)
            out[i, j] = 1 if d < threshold else 0
    return BooleanMatrix(out)
