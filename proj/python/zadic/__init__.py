"""Exact base-k digit-map dynamics.

A natural number is expanded into its base-k digits, each digit is pushed
through a piecewise map keyed by its residue mod p, and the results are
summed. Iterating that transformation sends every orbit into a limit
cycle; for conforming (k, p) the cycle is always {1, 2}. This package
exposes the transformation itself plus trajectory, catalog, verification,
and grid-sweep tooling, all in exact integer arithmetic.
"""

from zadic._core import (
    AssumptionReport,
    CatalogResult,
    CycleRecord,
    GridCell,
    InvalidDigit,
    InvalidInput,
    InvalidParameter,
    Parameters,
    RangeReport,
    TheoremViolation,
    Trajectory,
    __version__,
    check_assumptions,
    cycle_catalog,
    decompose,
    digit_map,
    digits_of,
    grid_sweep,
    contraction_bound_holds,
    trajectory,
    value_of,
    verify_range,
    z_transform,
)

__all__ = [
    "AssumptionReport",
    "CatalogResult",
    "CycleRecord",
    "GridCell",
    "InvalidDigit",
    "InvalidInput",
    "InvalidParameter",
    "Parameters",
    "RangeReport",
    "TheoremViolation",
    "Trajectory",
    "__version__",
    "check_assumptions",
    "cycle_catalog",
    "decompose",
    "digit_map",
    "digits_of",
    "grid_sweep",
    "contraction_bound_holds",
    "trajectory",
    "value_of",
    "verify_range",
    "z_transform",
]
