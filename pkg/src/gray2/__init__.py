"""Exact finite computations with strict 2-categories, Gray tensor products of
Theta_2 cells, and the mate calculus."""

__version__ = "0.1.0"
