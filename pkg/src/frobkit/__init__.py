"""Exact Hilbert-Kunz, F-signature and dual F-signature computations in characteristic p."""

__version__ = "0.1.0"
