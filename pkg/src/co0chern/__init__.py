"""Exact characteristic-class arithmetic for Conway's group Co0 and its subgroups."""

__version__ = "0.1.0"
