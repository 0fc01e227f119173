"""Finite analogues of partition rank and crank moments, computed exactly."""

__version__ = "0.1.0"
