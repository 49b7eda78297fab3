"""Order-preserving periods of integer sequences.

Two sequences are order-equivalent when their elements compare the same way
at every pair of indices.  An op-period cuts a sequence into blocks of one
length that are pairwise order-equivalent.
"""

from .intervals import IntervalSet, complement, intersect, mod_batch, normalize
from .lce import LceIndex, build
from .opcore import is_equivalent, op_encode, shape, trace
from .periods import (
    MonotonePeriods,
    PeriodReport,
    ShiftsTable,
    all_op_periods,
    analyze,
    full_periods,
    initial_periods,
    monotone_periods,
    smallest_initial,
)
from .prefix import PrefTables, compute_op_pref, op_lpp
from .sliding import PerColumn, per_column_update, sliding_periods
from .squares import SquareSets, op_squares_all

__all__ = [
    "IntervalSet",
    "LceIndex",
    "MonotonePeriods",
    "PerColumn",
    "PeriodReport",
    "PrefTables",
    "ShiftsTable",
    "SquareSets",
    "all_op_periods",
    "analyze",
    "build",
    "complement",
    "compute_op_pref",
    "full_periods",
    "initial_periods",
    "intersect",
    "is_equivalent",
    "mod_batch",
    "monotone_periods",
    "normalize",
    "op_encode",
    "op_lpp",
    "op_squares_all",
    "per_column_update",
    "shape",
    "sliding_periods",
    "smallest_initial",
    "trace",
]
