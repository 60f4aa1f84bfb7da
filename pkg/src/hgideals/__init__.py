"""Determinantal hypergraph ideals, line arrangements and their verification suites."""

__version__ = "0.1.0"
