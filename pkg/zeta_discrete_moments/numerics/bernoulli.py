"""Exact Bernoulli ratios B_2j / (2j)! shared by the Euler-Maclaurin evaluators."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath


@lru_cache(maxsize=None)
def bernoulli_ratio(j: int) -> Fraction:
    """B_{2j} / (2j)! as an exact fraction (j >= 1).

    The cache only ever grows and every entry is a pure function of ``j``, so
    concurrent first use just fills the same value twice.
    """
    numerator, denominator = mpmath.bernfrac(2 * j)
    return Fraction(numerator, denominator * math.factorial(2 * j))
