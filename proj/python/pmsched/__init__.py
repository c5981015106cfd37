"""Exact solvers for Pm||sum w_j C_j (total weighted completion time on
identical parallel machines)."""

from ._core import (
    check_identities,
    evaluate,
    format_instance,
    generate,
    load_balance,
    parse_instance,
    solve,
    wspt_order,
)

__all__ = [
    "check_identities",
    "evaluate",
    "format_instance",
    "generate",
    "load_balance",
    "parse_instance",
    "solve",
    "wspt_order",
]
