"""Test helpers: independent oracles for cross-checking ginarl."""
from .oracles import (
    brute_force_arl,
    brute_force_strongly_stable,
    from_expr,
    standard_monomial_count,
    sympy_reduced_basis,
    to_expr,
)

__all__ = [
    "brute_force_arl",
    "brute_force_strongly_stable",
    "from_expr",
    "standard_monomial_count",
    "sympy_reduced_basis",
    "to_expr",
]
