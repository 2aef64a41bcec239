"""Exact generalized Daehee/Changhee numbers and identity verification."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # local builds put _core next to the package on PYTHONPATH
    from _core import *  # noqa: F401,F403

__all__ = [
    "daehee_numbers",
    "daehee_polynomials",
    "changhee_numbers",
    "changhee_polynomials",
    "family_values",
    "theorem_registry",
    "verify_grid",
    "verify_point",
    "mahler_integral",
    "witt_report",
    "integral_rep_check",
]
