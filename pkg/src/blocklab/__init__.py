"""Exact character theory and p-block verification toolkit."""

__version__ = "0.1.0"
