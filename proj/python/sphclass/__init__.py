"""Spherical subgroups of simple algebraic groups."""

from ._core import (
    AmbiguousDescriptor,
    DatasetIntegrityError,
    OutOfScope,
    ParseError,
    SphclassError,
    audit,
    check_eq2,
    dim,
    dim_flag,
    normalize,
    orbit_filter,
    query,
    run_cli,
    weyl_dim,
    weyl_orbit_size,
    weyl_order,
)

__all__ = [
    "AmbiguousDescriptor",
    "DatasetIntegrityError",
    "OutOfScope",
    "ParseError",
    "SphclassError",
    "audit",
    "check_eq2",
    "dim",
    "dim_flag",
    "normalize",
    "orbit_filter",
    "query",
    "run_cli",
    "weyl_dim",
    "weyl_orbit_size",
    "weyl_order",
]
