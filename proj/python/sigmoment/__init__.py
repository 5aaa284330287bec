"""Exact schedulability analysis for periodic task sets.

Times are exact rationals: pass ints, ``fractions.Fraction`` or ``"p/q"``
strings; results come back as ``Fraction`` or, inside report dicts, as
JSON-style ints and ``"p/q"`` strings.
"""

from ._core import (
    SigmomentError,
    TaskSet,
    TaskSpec,
    bounds,
    check,
    compare,
    ll_bound,
    minimize_ubar,
    occupancy,
    op1_max,
    op_highest_closed,
    op_second_closed,
    phase_sweep,
    simulate,
    trace_csv,
    ubar_two,
    worst_case,
    worst_deadline_set_highest,
)

__all__ = [
    "SigmomentError",
    "TaskSet",
    "TaskSpec",
    "bounds",
    "check",
    "compare",
    "ll_bound",
    "minimize_ubar",
    "occupancy",
    "op1_max",
    "op_highest_closed",
    "op_second_closed",
    "phase_sweep",
    "simulate",
    "trace_csv",
    "ubar_two",
    "worst_case",
    "worst_deadline_set_highest",
]
