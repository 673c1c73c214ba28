"""Exact q-expansion algebra for quasimodular forms, Jacobi-like forms and
pseudodifferential operators."""

__version__ = "0.1.0"
