"""Rhombic alternative tableaux, assemblées, signed permutations and marked
Laguerre histories, with the bijections between them and an exact
verification harness."""

from . import assemblee, bijections, laguerre, render, shapes, tableaux, verify
from .assemblee import Assemblee, SignedPerm, parse_assemblee, parse_signed
from .bijections import fusion_exchange, insertion, insertion_inverse, zeta, zeta_inverse
from .laguerre import mlh_to_sp, parse_mlh, parse_mlh_star, sp_to_mlh
from .shapes import Eps, ShapeWord, parse_shape_word
from .tableaux import RAT, compute_stats, format_rat, parse_rat
from .verify import check_identity

__all__ = [
    "assemblee", "bijections", "laguerre", "render", "shapes", "tableaux", "verify",
    "Assemblee", "SignedPerm", "parse_assemblee", "parse_signed",
    "fusion_exchange", "insertion", "insertion_inverse", "zeta", "zeta_inverse",
    "mlh_to_sp", "parse_mlh", "parse_mlh_star", "sp_to_mlh",
    "Eps", "ShapeWord", "parse_shape_word",
    "RAT", "compute_stats", "format_rat", "parse_rat",
    "check_identity",
]

__version__ = "0.1.0"
