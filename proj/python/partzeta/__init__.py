"""Check linear relations among products of multiple zeta functions."""

from ._core import (
    CanonicalForm,
    Expression,
    PartzetaError,
    __version__,
    eval_expression,
    eval_zeta_truncated,
    fubini_count,
    hoffman_identity,
    is_partition_identity,
    is_zero_combination,
    normalize,
    ordered_set_partitions,
    parse_expression,
    probabilistic_zero_test,
    rational_terms,
    residual_report,
    run_cli,
    stuffle_identity,
    stuffle_product,
    stuffle_size,
    unordered_set_partitions,
    verify,
)

__all__ = [
    "CanonicalForm",
    "Expression",
    "PartzetaError",
    "eval_expression",
    "eval_zeta_truncated",
    "fubini_count",
    "hoffman_identity",
    "is_partition_identity",
    "is_zero_combination",
    "normalize",
    "ordered_set_partitions",
    "parse_expression",
    "probabilistic_zero_test",
    "rational_terms",
    "residual_report",
    "run_cli",
    "stuffle_identity",
    "stuffle_product",
    "stuffle_size",
    "unordered_set_partitions",
    "verify",
]
