"""Maximal-frequent-set mining and 012e-row compression."""

from ._core import (
    CompressedComplex,
    ParseError,
    Row012e,
    TransactionDb,
    brute_force_frequent,
    facets_to_faces,
    max_sieve,
    min_sieve,
    mine_facets,
    minimal_transversals,
    parse_transactions,
    support,
    threshold_delta,
    verify_partition,
)

__all__ = [
    "CompressedComplex",
    "ParseError",
    "Row012e",
    "TransactionDb",
    "brute_force_frequent",
    "facets_to_faces",
    "max_sieve",
    "min_sieve",
    "mine_facets",
    "minimal_transversals",
    "parse_transactions",
    "support",
    "threshold_delta",
    "verify_partition",
]
