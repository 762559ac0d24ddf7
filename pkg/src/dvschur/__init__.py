"""Exact cohomology of Schur functors of the quotient bundle on the very
general Debarre-Voisin fourfold."""

__version__ = "0.1.0"
