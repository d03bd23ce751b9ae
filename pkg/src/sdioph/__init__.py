"""Search, verification and bound calculus for S-Diophantine tuples."""

from .errors import BudgetExceeded, DigitBudgetExceeded, SDiophError
from .smooth import PrimeSet, SUnitValue, enumerate_smooth, factor_over, is_smooth, new_prime_set, s_free_part
from .tuples import SearchConfig, brute_force_tuples, build_edges, find_tuples, is_s_diophantine

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DigitBudgetExceeded",
    "SDiophError",
    "PrimeSet",
    "SUnitValue",
    "SearchConfig",
    "brute_force_tuples",
    "build_edges",
    "enumerate_smooth",
    "factor_over",
    "find_tuples",
    "is_s_diophantine",
    "is_smooth",
    "new_prime_set",
    "s_free_part",
]
