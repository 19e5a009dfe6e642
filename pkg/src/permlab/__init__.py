"""permlab: a verification laboratory for pattern-avoiding permutation classes.

The package cross-checks, on the same objects, four independent roads to
the refined large Schroeder numbers: exhaustive enumeration of the
avoidance classes, dynamic programs for their counting recurrences, an
explicit bijection between two of the classes, and exact truncated power
series for every closed-form generating function.
"""

from __future__ import annotations

from .bijection import forward, inverse
from .perms import (
    Pair,
    Perm,
    avoids,
    contains,
    count_avoiders,
    enumerate_avoiders,
    first_letter_distribution,
    parse_pair,
    parse_permutation,
)
from .schroeder import schroeder_number, schroeder_numbers, triangle_row, triangle_rows

__version__ = "0.1.0"

__all__ = [
    "Pair",
    "Perm",
    "__version__",
    "avoids",
    "contains",
    "count_avoiders",
    "enumerate_avoiders",
    "first_letter_distribution",
    "forward",
    "inverse",
    "parse_pair",
    "parse_permutation",
    "schroeder_number",
    "schroeder_numbers",
    "triangle_row",
    "triangle_rows",
]
