"""Hilbert symbols, their brute-force oracles and local invariant vectors."""

from .cubic import (
    CubicSymbolValue,
    UnsupportedArgumentError,
    cubic_symbol,
    cubic_symbol_legendre,
    cubic_symbol_one_unit,
    legendre_parameter,
    norm_oracle_cubic,
    unit_norm_group,
    unit_norm_group_exhaustive,
)
from .invariants import INF, InvariantVector, ProductFormulaError, quaternion_invariants
from .oracle import norm_oracle_quadratic
from .quadratic import hilbert_odd, hilbert_real, hilbert_symbol, hilbert_two, legendre

__all__ = [
    "CubicSymbolValue", "UnsupportedArgumentError", "cubic_symbol", "cubic_symbol_legendre",
    "cubic_symbol_one_unit", "legendre_parameter", "norm_oracle_cubic", "unit_norm_group",
    "unit_norm_group_exhaustive", "INF", "InvariantVector", "ProductFormulaError",
    "quaternion_invariants", "norm_oracle_quadratic", "hilbert_odd", "hilbert_real",
    "hilbert_symbol", "hilbert_two", "legendre",
]
