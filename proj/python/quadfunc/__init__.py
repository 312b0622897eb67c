"""Exact verification toolkit for arithmetic functions satisfying
f(u^2 + k*v^2) = f^2(u) + k*f^2(v).

Thin python surface over the C++ core; rationals cross the boundary as
strings ("p/q") to keep everything exact.
"""

from ._quadfunc import (  # noqa: F401
    DegreeError,
    DomainError,
    SideConditionError,
    abcd_instance,
    audit_recurrences,
    certify,
    collisions,
    derive_table,
    family_value,
    recurrence_for,
    representations,
    solve_base,
    threshold_A,
    verify_family,
    __version__,
)

__all__ = [
    "DegreeError",
    "DomainError",
    "SideConditionError",
    "abcd_instance",
    "audit_recurrences",
    "certify",
    "collisions",
    "derive_table",
    "family_value",
    "recurrence_for",
    "representations",
    "solve_base",
    "threshold_A",
    "verify_family",
    "__version__",
]
