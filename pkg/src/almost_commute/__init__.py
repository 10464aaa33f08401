"""Exact counting and enumeration of words that almost commute with a conjugate."""

from .counting import (
    count_lyndon_in_h,
    count_powers,
    count_primitive,
    even_lower_bound,
    h_exactly_one,
    h_new,
    h_overlap,
    h_pairs,
    h_prime_closed_form,
    h_shift,
    h_total,
    mobius,
)
from .enumeration import (
    BudgetExceededError,
    enumerate_exactly_one,
    enumerate_h,
    enumerate_h_shift,
    enumerate_intersection,
)
from .finewilf import agreement_prefix_length, is_fine_wilf_pair, search_fine_wilf_pairs
from .oracle import oracle_h_census, oracle_shift_members
from .words import ShiftProfile, Word, commutes, hamming, is_lyndon, is_primitive, rotate, shift_profile, word

__version__ = "0.1.0"
