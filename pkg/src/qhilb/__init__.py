"""Exact counts for Hilbert schemes of points on P1 x P1 and a linear-algebra oracle."""
from .bn_combinatorics import chi_BN, chi_S, chi_T, k_max, xi
from .euler_series import chi_hilb
from .flag_euler import chi_flag, chi_flag_linear, emit_tables
from .partitions import bipartition_count, enumerate_partitions

__version__ = "0.1.0"

__all__ = [
    "bipartition_count",
    "chi_BN",
    "chi_S",
    "chi_T",
    "chi_flag",
    "chi_flag_linear",
    "chi_hilb",
    "emit_tables",
    "enumerate_partitions",
    "k_max",
    "xi",
]
