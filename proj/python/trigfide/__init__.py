"""Trigonometric interpolation and collocation solver for second-order FIDEs."""

import json

from ._core import (
    CSV_HEADER,
    Solution,
    StageError,
    TrigfideError,
    boundary_matrix,
    format_value,
    interp2d_errors,
    sine_coeffs,
    solve_case_json,
)

__all__ = [
    "CSV_HEADER",
    "Solution",
    "StageError",
    "TrigfideError",
    "boundary_matrix",
    "format_value",
    "interp2d_errors",
    "sine_coeffs",
    "solve_case",
]


def solve_case(case, q=None):
    """Solve a manufactured case given as a dict (same fields as the JSON case files)."""
    text = case if isinstance(case, str) else json.dumps(case)
    return solve_case_json(text, q)
