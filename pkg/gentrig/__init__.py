"""Generalized p-trigonometric and p-hyperbolic functions with an inequality scanner."""

__version__ = "0.1.0"
