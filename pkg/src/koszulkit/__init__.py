"""Exact commutative algebra for quadric ideals: Gröbner bases, minimal free
resolutions, Betti tables, Hilbert invariants and Koszul necessary conditions."""

from .field import GF, QQ
from .ideal import Ideal
from .invariants import hilbert_report, socle_degrees
from .kernels import BACKEND
from .koszul_checks import (classify_ht2_mult2, g_quadratic_witness, is_one_generic,
                            koszul_necessary_battery, main_theorem_membership)
from .parse import parse_ideal_text, parse_polynomial
from .poly import PolyRing, Polynomial
from .resolution import BettiTable, betti_table, minimal_free_resolution

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BettiTable", "GF", "Ideal", "PolyRing", "Polynomial", "QQ",
    "betti_table", "classify_ht2_mult2", "g_quadratic_witness", "hilbert_report",
    "is_one_generic", "koszul_necessary_battery", "main_theorem_membership",
    "minimal_free_resolution", "parse_ideal_text", "parse_polynomial", "socle_degrees",
]
