"""Exact and finite-precision arithmetic."""

from .cyclotomic import (
    CyclotomicElement,
    characteristic_polynomial,
    coset_periods,
    gaussian_periods,
    period_minimal_polynomial,
    trace_pi_power,
    trace_pi_power_closed_form,
    trace_pi_power_oracle,
)
from .log import padic_log, trace_log_over_three
from .padic import InsufficientPrecisionError, PAdicValue, rational_to_padic, valuation
from .zeta3 import ZetaThreeLocal

__all__ = [
    "CyclotomicElement", "characteristic_polynomial", "coset_periods", "gaussian_periods", "period_minimal_polynomial", "trace_pi_power",
    "trace_pi_power_closed_form", "trace_pi_power_oracle", "padic_log", "trace_log_over_three",
    "InsufficientPrecisionError", "PAdicValue", "rational_to_padic", "valuation",
    "ZetaThreeLocal",
]
