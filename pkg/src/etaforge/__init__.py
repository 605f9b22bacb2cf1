"""Exact partition combinatorics and truncated q-series identity checking."""

__version__ = "0.1.0"
