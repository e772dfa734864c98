"""Higher-order Euler totients phi_k, Menon-type identities and summatory functions."""

from ._phik import (
    BudgetExceeded,
    error_table,
    euler_constant,
    factorize,
    g_k,
    jordan,
    menon_lhs,
    menon_rhs,
    n_k,
    phi_k,
    phi_k_nm,
    phi_k_nm_recursion,
    phi_k_oracle,
    sum_phi_k,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "error_table",
    "euler_constant",
    "factorize",
    "g_k",
    "jordan",
    "menon_lhs",
    "menon_rhs",
    "n_k",
    "phi_k",
    "phi_k_nm",
    "phi_k_nm_recursion",
    "phi_k_oracle",
    "sum_phi_k",
    "verify",
]
