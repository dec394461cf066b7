"""Truncated Laurent series about s = 1 over a coefficient ring.

A series with ``pole_order`` P and coefficients a_0..a_M stands for

    sum_{j=0}^{M} a_j (s-1)^(j-P)  +  O((s-1)^(M-P+1)),

so ``trunc_order`` M counts terms relative to the leading power. A negative
pole order is a zero at s = 1 (the reciprocal of a series with a pole).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..errors import (
    InvalidArgumentError,
    RingMismatchError,
    SeriesDivisionByZeroError,
)
from .rings import EXACT, Ring


@dataclass(frozen=True, eq=False)
class LaurentSeries:
    """Immutable truncated Laurent expansion about s = 1."""

    ring: Ring
    pole_order: int
    coeffs: tuple[Any, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidArgumentError("a Laurent series needs a coefficient")
        for value in self.coeffs:
            self.ring.check(value)
        # Exact leading zeros are stripped; numeric series keep their declared order.
        if self.ring.is_exact and self.ring.is_exact_zero(self.coeffs[0]):
            coeffs = list(self.coeffs)
            pole = self.pole_order
            while len(coeffs) > 1 and self.ring.is_exact_zero(coeffs[0]):
                coeffs.pop(0)
                pole -= 1
            object.__setattr__(self, "coeffs", tuple(coeffs))
            object.__setattr__(self, "pole_order", pole)

    @classmethod
    def build(
        cls, ring: Ring, pole_order: int, coeffs: Sequence[Any]
    ) -> LaurentSeries:
        return cls(ring=ring, pole_order=pole_order, coeffs=tuple(coeffs))

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Any:
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return all(self.ring.is_exact_zero(c) for c in self.coeffs)

    def coefficient(self, power: int) -> Any:
        """Coefficient of ``(s-1)^power``; raises beyond the truncation order."""
        index = power + self.pole_order
        if index > self.trunc_order:
            raise InvalidArgumentError(
                f"coefficient of (s-1)^{power} lies beyond truncation order "
                f"(known through (s-1)^{self.trunc_order - self.pole_order})"
            )
        if index < 0:
            return self.ring.zero
        return self.coeffs[index]

    def truncate(self, trunc_order: int) -> LaurentSeries:
        """Keep only the first ``trunc_order + 1`` coefficients."""
        if trunc_order < 0 or trunc_order > self.trunc_order:
            raise InvalidArgumentError(
                f"cannot truncate order {self.trunc_order} series to {trunc_order}"
            )
        return LaurentSeries.build(
            self.ring, self.pole_order, self.coeffs[: trunc_order + 1]
        )

    def map_coefficients(self, ring: Ring, fn: Callable[[Any], Any]) -> LaurentSeries:
        """Map every coefficient into ``ring`` (e.g. evaluate symbols numerically)."""
        return LaurentSeries.build(ring, self.pole_order, [fn(c) for c in self.coeffs])

    def _aligned(self, other: LaurentSeries) -> tuple[int, list[Any], list[Any]]:
        _require_same_ring(self, other)
        pole = max(self.pole_order, other.pole_order)
        top = min(
            self.trunc_order - self.pole_order, other.trunc_order - other.pole_order
        )
        left = [self.coefficient(p) for p in range(-pole, top + 1)]
        right = [other.coefficient(p) for p in range(-pole, top + 1)]
        return pole, left, right

    def __add__(self, other: LaurentSeries) -> LaurentSeries:
        pole, left, right = self._aligned(other)
        return LaurentSeries.build(
            self.ring, pole, [a + b for a, b in zip(left, right, strict=True)]
        )

    def __sub__(self, other: LaurentSeries) -> LaurentSeries:
        pole, left, right = self._aligned(other)
        return LaurentSeries.build(
            self.ring, pole, [a - b for a, b in zip(left, right, strict=True)]
        )

    def scale(self, factor: int | Fraction) -> LaurentSeries:
        return LaurentSeries.build(
            self.ring,
            self.pole_order,
            [self.ring.scale(c, factor) for c in self.coeffs],
        )

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:4])
        more = ", ..." if len(self.coeffs) > 4 else ""
        return (
            f"LaurentSeries(ring={self.ring!r}, pole_order={self.pole_order}, "
            f"trunc_order={self.trunc_order}, coeffs=[{shown}{more}])"
        )


def _require_same_ring(a: LaurentSeries, b: LaurentSeries) -> None:
    if a.ring != b.ring:
        raise RingMismatchError(f"cannot combine {a.ring!r} with {b.ring!r} series")


def zeta_series(trunc_order: int, ring: Ring = EXACT) -> LaurentSeries:
    """Expansion of zeta(s) about s = 1 through ``trunc_order`` relative terms.

    1/(s-1) + gamma_0 - gamma_1 (s-1) + gamma_2/2! (s-1)^2 - ..., the coefficient of
    (s-1)^n being (-1)^n gamma_n / n!.
    """
    if trunc_order < 1:
        raise InvalidArgumentError(f"trunc_order must be >= 1, got {trunc_order}")
    coeffs = [ring.one]
    for n in range(trunc_order):
        sign = -1 if n % 2 else 1
        coeffs.append(ring.scale(ring.gamma(n), Fraction(sign, math.factorial(n))))
    return LaurentSeries.build(ring, 1, coeffs)


def inv_s_series(trunc_order: int, ring: Ring = EXACT) -> LaurentSeries:
    """Expansion of 1/s = 1/(1 + (s-1)) about s = 1."""
    if trunc_order < 0:
        raise InvalidArgumentError(f"trunc_order must be >= 0, got {trunc_order}")
    coeffs = [ring.from_fraction(-1 if n % 2 else 1) for n in range(trunc_order + 1)]
    return LaurentSeries.build(ring, 0, coeffs)


def differentiate(series: LaurentSeries, times: int = 1) -> LaurentSeries:
    """Term-wise derivative in s, applied ``times`` times."""
    if times < 0:
        raise InvalidArgumentError(f"times must be >= 0, got {times}")
    ring = series.ring
    result = series
    for _ in range(times):
        pole = result.pole_order
        coeffs = [
            ring.scale(c, j - pole) if j != pole else ring.zero
            for j, c in enumerate(result.coeffs)
        ]
        result = LaurentSeries.build(ring, pole + 1, coeffs)
    return result


def _power_product(a: Sequence[Any], b: Sequence[Any], length: int, zero: Any) -> list:
    out = []
    for n in range(length):
        total = zero
        for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
            total = total + a[i] * b[n - i]
        out.append(total)
    return out


def multiply(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product; valid to ``min(M_a, M_b)`` relative terms."""
    _require_same_ring(a, b)
    length = min(a.trunc_order, b.trunc_order) + 1
    coeffs = _power_product(a.coeffs, b.coeffs, length, a.ring.zero)
    return LaurentSeries.build(a.ring, a.pole_order + b.pole_order, coeffs)


def multiply_all(first: LaurentSeries, *rest: LaurentSeries) -> LaurentSeries:
    """Left-to-right product of one or more series."""
    result = first
    for factor in rest:
        result = multiply(result, factor)
    return result


def reciprocal(a: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse by Newton iteration on the coefficient list.

    Writing a = (s-1)^(-P) A(s-1) with A(0) = a_0, the inverse power series B of A
    is refined by B <- B (2 - A B), each step doubling the number of correct
    coefficients; the result has pole order -P.
    """
    ring = a.ring
    if a.is_zero:
        raise SeriesDivisionByZeroError("reciprocal of an identically zero series")
    length = a.trunc_order + 1
    inverse = [ring.inverse(a.leading)]
    valid = 1
    while valid < length:
        valid = min(2 * valid, length)
        ab = _power_product(a.coeffs, inverse, valid, ring.zero)
        correction = [-c for c in ab]
        correction[0] = correction[0] + ring.from_fraction(2)
        inverse = _power_product(inverse, correction, valid, ring.zero)
    return LaurentSeries.build(ring, -a.pole_order, inverse)
