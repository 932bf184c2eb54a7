"""Designs in the shells of extended quadratic residue codes over small fields."""

__version__ = "0.1.0"
