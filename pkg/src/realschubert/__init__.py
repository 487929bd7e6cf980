"""Tableau combinatorics for real one-dimensional Schubert problems."""

__version__ = "0.1.0"
