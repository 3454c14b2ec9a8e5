"""Exact polynomial oracle: fields, orders, Buchberger, ideal operations."""

from .field import GF, QQ, PrimeField, RationalField, is_prime
from .groebner import groebner_basis, normal_form, spolynomial
from .ideal import (
    Ideal,
    NonTermImage,
    colon,
    eliminate,
    exact_divide,
    intersect,
    ring_map_kernel,
    saturate,
)
from .order import DEGREVLEX, LEX, BlockElimination, DegRevLex, Lex, MonomialOrder, WeightedDegree
from .poly import Polynomial, render

__all__ = [
    "GF",
    "QQ",
    "PrimeField",
    "RationalField",
    "is_prime",
    "groebner_basis",
    "normal_form",
    "spolynomial",
    "Ideal",
    "NonTermImage",
    "colon",
    "eliminate",
    "exact_divide",
    "intersect",
    "ring_map_kernel",
    "saturate",
    "DEGREVLEX",
    "LEX",
    "BlockElimination",
    "DegRevLex",
    "Lex",
    "MonomialOrder",
    "WeightedDegree",
    "Polynomial",
    "render",
]
