"""Exact cyclotomic arithmetic, Galois action, and the number-theoretic checks."""

from .checks import RootSumResult, SiegelResult, p_power_root_sum_check, siegel_bound_check
from .embedding import IdealEmbedding, ideal_embed
from .field import (
    ONE,
    ZERO,
    Cyclotomic,
    DivisionByZero,
    average_of_conjugates,
    conj,
    cyc_sum,
    galois,
    galois_conjugates,
    is_algebraic_integer,
    is_rational_integer,
    is_real,
    is_root_of_unity,
    norm_abs_squared,
    parse_cyclotomic,
    root_of_unity,
    root_of_unity_order,
    serialize,
    totient,
    trace_to_rationals,
)
from .intervals import abs_enclosure, is_totally_nonnegative, is_totally_positive, real_sign

__all__ = [
    "ONE", "ZERO", "Cyclotomic", "DivisionByZero", "IdealEmbedding", "RootSumResult",
    "SiegelResult", "abs_enclosure", "average_of_conjugates", "conj", "cyc_sum", "galois",
    "galois_conjugates", "ideal_embed", "is_algebraic_integer", "is_rational_integer",
    "is_real", "is_root_of_unity", "is_totally_nonnegative", "is_totally_positive",
    "norm_abs_squared", "p_power_root_sum_check", "parse_cyclotomic", "real_sign",
    "root_of_unity", "root_of_unity_order", "serialize", "siegel_bound_check", "totient",
    "trace_to_rationals",
]
