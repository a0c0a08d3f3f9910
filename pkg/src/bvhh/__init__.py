"""Hochschild (co)homology of finite-dimensional graded algebras with exact
arithmetic: cup product, Gerstenhaber bracket, the BV operator coming from a
symmetric Frobenius form, and the cyclic layer on top."""

__version__ = "0.1.0"
