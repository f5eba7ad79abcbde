"""Exact verification of reciprocal binomial sums in almost closed form."""

__version__ = "0.1.0"
