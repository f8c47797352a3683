"""Numerical conditions on cubic fourfold discriminants and their lattice certificates."""

__version__ = "0.1.0"
