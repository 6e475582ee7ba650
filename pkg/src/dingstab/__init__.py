"""Uniform relative Ding stability of toric Fano manifolds, in exact arithmetic."""

__version__ = "0.1.0"
