"""Finite inverse semigroup actions, etale groupoids, and the functors between them."""

__version__ = "0.1.0"
