"""Exact computations around the Brauer group of the moduli stack of elliptic curves."""

__version__ = "0.1.0"
