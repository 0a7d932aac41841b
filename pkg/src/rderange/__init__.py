"""Exact counts of block derangements, r-derangements and their parity and
cycle-count refinements, with a brute-force oracle to check them."""

from .condition import SplitCondition
from .oracle import ClassSpec, ClassStats, Family, brute_count, classify, enumerate_class
from .permutation import Permutation, from_cycles, from_one_line, identity, parse_permutation
from .sequences import (
    big_d, big_d_k, big_d_k_parity, big_d_parity, c_r, count, d_r, d_r_parity_explicit,
    d_r_parity_recurrence, d_rum, d_rum_parity, derangement, f_value, stirling_first,
)
from .splitting import fiber, fiber_size_formula, glue, split

__version__ = "0.1.0"
