"""Twisted pivotal structures and sphere string-net dimensions for (generalized) Taft algebras."""

__version__ = "0.1.0"
