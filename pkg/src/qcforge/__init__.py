"""Quasi-cyclic and Construction X linear codes over GF(2), GF(3), GF(4) and GF(5)."""

__version__ = "0.1.0"
