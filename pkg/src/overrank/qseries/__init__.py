"""Exact q-series engine: rings, truncated series, rank generating functions, dissection."""

from .dissection import cross_validate, dissection_series, dissection_table
from .rank import overpartition_series, pbar, rank_series, rank_table
from .rings import (
    ComplexRing,
    CyclotomicInt,
    CyclotomicRing,
    IntegerRing,
    LaurentPoly,
    LaurentRing,
    cyclotomic_poly,
)
from .series import FormalSeries, pochhammer_series

__all__ = [
    "ComplexRing",
    "CyclotomicInt",
    "CyclotomicRing",
    "FormalSeries",
    "IntegerRing",
    "LaurentPoly",
    "LaurentRing",
    "cross_validate",
    "cyclotomic_poly",
    "dissection_series",
    "dissection_table",
    "overpartition_series",
    "pbar",
    "pochhammer_series",
    "rank_series",
    "rank_table",
]
