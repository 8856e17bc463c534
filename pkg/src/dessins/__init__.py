"""Exact combinatorics and algebra of dessins on modular curves."""

__version__ = "0.1.0"
