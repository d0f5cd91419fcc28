"""Exact solution-class counts and extremal-coloring search over [1, n]."""

from ._schurlab import (
    BudgetExceeded,
    SchurlabError,
    block_sweep,
    canonical_coloring,
    count,
    exhaustive,
    local_search,
    mono_delta,
    predicted_min,
    total_count,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "SchurlabError",
    "block_sweep",
    "canonical_coloring",
    "count",
    "exhaustive",
    "local_search",
    "mono_delta",
    "predicted_min",
    "total_count",
    "verify",
]

__version__ = "0.1.0"
