"""Exact toolkit for Magic Star projections, spinor-extended graded algebras
and Vinberg special T-algebras, all over rational arithmetic."""

__version__ = "0.1.0"
