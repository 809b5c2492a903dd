"""Simulation laboratory for pattern recognition with conditionally i.i.d. data."""

__version__ = "0.1.0"
