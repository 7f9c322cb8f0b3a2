"""Quasi-shuffle algebras on words, the block shuffle, and multiple zeta value relations."""
from .ncpoly import NCPoly, ParseError, parse_word_expr
from .products import ADDITIVE, ZERO, DiamondProduct, block_shuffle, gen_quasi_shuffle, hoffman_quasi_shuffle, shuffle

__all__ = [
    "ADDITIVE",
    "ZERO",
    "DiamondProduct",
    "NCPoly",
    "ParseError",
    "block_shuffle",
    "gen_quasi_shuffle",
    "hoffman_quasi_shuffle",
    "parse_word_expr",
    "shuffle",
]
