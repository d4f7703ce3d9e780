"""Exact constants and numerical verification for Wehrl-type inequalities
on weighted Bergman spaces and compact groups."""

__version__ = "0.1.0"
