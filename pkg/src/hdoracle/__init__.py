"""Substring Hamming-distance oracle.

Preprocess two symbol sequences into a blocked suffix-distance table so
that the Hamming distance between any equal-length substring pair (or
suffix pair) is answered in time proportional to the block size. The
table rows come from exact text-to-pattern distance engines built on
exact integer convolution; a boolean-matrix-product reduction doubles as
an end-to-end cross-check.
"""

from .bench import CrossCheckError, SweepRecord, sweep, write_csv
from .bmm import (BINARY, TERNARY, BooleanMatrix, EncodingVariant, bmm_naive,
                  bmm_via_oracle, encode_strings, format_matrix, parse_matrix)
from .convolution import convolve, correlate_matches
from .counters import WorkCounters
from .oracle import (BlockTable, CellBudgetError, Oracle, OracleFormatError,
                     OracleParams, build, deserialize, naive_suffix_hd, serialize)
from .text import (SENTINEL, Text, distinct_symbols, ingest_bytes,
                   ingest_tokens, to_bytes, to_tokens)
from .ttp import (EngineConfig, auto_threshold, run_engine, ttp_auto,
                  ttp_hybrid, ttp_naive, ttp_per_symbol)

__version__ = "0.1.0"

__all__ = [
    "BINARY", "BlockTable", "BooleanMatrix", "CellBudgetError",
    "CrossCheckError", "EncodingVariant", "EngineConfig", "Oracle",
    "OracleFormatError", "OracleParams", "SENTINEL", "SweepRecord",
    "TERNARY", "Text", "WorkCounters", "auto_threshold", "bmm_naive",
    "bmm_via_oracle", "build", "convolve", "correlate_matches",
    "deserialize", "distinct_symbols", "encode_strings", "format_matrix",
    "ingest_bytes", "ingest_tokens", "naive_suffix_hd", "parse_matrix",
    "run_engine", "serialize", "sweep", "to_bytes", "to_tokens",
    "ttp_auto", "ttp_hybrid", "ttp_naive", "ttp_per_symbol", "write_csv",
]
