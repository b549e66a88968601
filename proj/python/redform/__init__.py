"""Reduced-form implementability checker for two-person bargaining problems.

Instances travel as JSON strings in the same format the CLI reads; see
`generate` for examples of the layout.
"""

from ._redform import (
    AssumptionViolated,
    EnumerationBudgetExceeded,
    InstanceError,
    ParseError,
    check,
    fuzz,
    generate,
    implement,
    lattice_verify,
    oracle,
)

__all__ = [
    "AssumptionViolated",
    "EnumerationBudgetExceeded",
    "InstanceError",
    "ParseError",
    "check",
    "fuzz",
    "generate",
    "implement",
    "lattice_verify",
    "oracle",
]
