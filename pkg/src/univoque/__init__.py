"""Univoque Pisot numbers: exact beta-expansions, Pisot/Salem enumeration and
k-parametric expansion patterns for regular Pisot families."""

from .algebraic_core import AlgebraicReal, FieldElement, IntPolynomial, is_pisot, is_salem, unit_disk_counts
from .beta_expansion import classify_beta, greedy_expand, lazy_expand, star_expand
from .word_engine import DigitWord

__version__ = "0.1.0"

__all__ = [
    "AlgebraicReal",
    "FieldElement",
    "IntPolynomial",
    "DigitWord",
    "is_pisot",
    "is_salem",
    "unit_disk_counts",
    "greedy_expand",
    "lazy_expand",
    "star_expand",
    "classify_beta",
]
