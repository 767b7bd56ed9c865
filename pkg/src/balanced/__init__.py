"""Balanced probability measures on finite connected graphs, in exact arithmetic."""

__version__ = "0.1.0"
