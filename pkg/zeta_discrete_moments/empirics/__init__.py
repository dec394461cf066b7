"""Empirical discrete moments over tables of zeta zeros."""

from .cache import DerivativeCache
from .emit import CSV_HEADER, PlotMode, emit_csv, emit_svg, read_csv
from .sums import (
    ComparisonRow,
    DerivativeEvaluator,
    asymptotic_value,
    checkpoint_heights,
    comparison_series,
    discrete_sum,
    leading_only_value,
    reflection_discrepancy,
    relative,
)

__all__ = [
    "CSV_HEADER",
    "ComparisonRow",
    "DerivativeCache",
    "DerivativeEvaluator",
    "PlotMode",
    "asymptotic_value",
    "checkpoint_heights",
    "comparison_series",
    "discrete_sum",
    "emit_csv",
    "emit_svg",
    "leading_only_value",
    "read_csv",
    "reflection_discrepancy",
    "relative",
]
