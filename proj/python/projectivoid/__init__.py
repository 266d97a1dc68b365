"""Exact arithmetic in perfectoid Tate algebras and bundle transition matrices."""

from ._core import (
    Exponent,
    Matrix,
    ProjectivoidError,
    Series,
    act,
    bundle_degree,
    degree,
    degree_one_family,
    det,
    dominant_terms,
    enumerate_antidiagonal,
    enumerate_calkin_wilf,
    gauss_valuation,
    invert,
    is_transition,
    is_unit,
    monomial_factor,
    random_automorphism,
    reduce,
    split,
    validate_automorphism,
    verify_split,
)

__all__ = [
    "Exponent",
    "Matrix",
    "ProjectivoidError",
    "Series",
    "act",
    "bundle_degree",
    "degree",
    "degree_one_family",
    "det",
    "dominant_terms",
    "enumerate_antidiagonal",
    "enumerate_calkin_wilf",
    "gauss_valuation",
    "invert",
    "is_transition",
    "is_unit",
    "monomial_factor",
    "random_automorphism",
    "reduce",
    "split",
    "validate_automorphism",
    "verify_split",
]
