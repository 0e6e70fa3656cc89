"""Weyl alternation sets, basic allowable subwords and type A enumeration."""

from ._core import (
    DomainError,
    alternation_set,
    alternation_set_json,
    bas,
    catalog_bas,
    count_sweep,
    fibonacci,
    h_value,
    independent_subsets,
    kostant_partition,
    lucas,
    multiplicity,
    p_value,
    psi,
    q_multiplicity,
    verify,
    x_sequences,
)

__all__ = [
    "DomainError",
    "alternation_set",
    "alternation_set_json",
    "bas",
    "catalog_bas",
    "count_sweep",
    "fibonacci",
    "h_value",
    "independent_subsets",
    "kostant_partition",
    "lucas",
    "multiplicity",
    "p_value",
    "psi",
    "q_multiplicity",
    "verify",
    "x_sequences",
]
