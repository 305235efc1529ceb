"""Weighted integral means of mixed areas and lengths of disk images."""

from ._mixedmeans import (
    AREA,
    LENGTH,
    MixedMeansError,
    area,
    delta,
    delta_limit,
    examples,
    f_lambda,
    length,
    mean_at_one,
    mean_indicator,
    means_table,
    mixed_ratio,
    nu_alpha,
    parse_function,
    scan,
    univalence,
    verify,
    weighted_mean,
    weighted_mean_monomial,
)

__all__ = [
    "AREA",
    "LENGTH",
    "MixedMeansError",
    "area",
    "delta",
    "delta_limit",
    "examples",
    "f_lambda",
    "length",
    "mean_at_one",
    "mean_indicator",
    "means_table",
    "mixed_ratio",
    "nu_alpha",
    "parse_function",
    "scan",
    "univalence",
    "verify",
    "weighted_mean",
    "weighted_mean_monomial",
]
