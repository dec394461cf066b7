"""Laurent coefficients c_j and d_j about s = 1 that feed the moment polynomial.

    c_j^(mu,k):  (zeta'/zeta)(s) zeta^(mu)(s) zeta^(k)(s) / s,   pole order mu+k+3
    d_j^(nu,k):  zeta^(nu)(s) zeta^(k)(s) / s,                    pole order nu+k+2
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any

from ..errors import InvalidArgumentError, OutOfRangeError
from ..series import (
    EXACT,
    LaurentSeries,
    Ring,
    differentiate,
    inv_s_series,
    multiply_all,
    reciprocal,
    zeta_series,
)

logger = logging.getLogger(__name__)

# Extra relative terms carried beyond the requested count.
GUARD_TERMS = 4


class CoefficientKind(str, Enum):
    C = "c"
    D = "d"


@dataclass(frozen=True)
class CoefficientSet:
    """Leading Laurent coefficients of one c- or d-series."""

    kind: CoefficientKind
    order: int
    k: int
    ring: Ring
    pole_order: int
    values: tuple[Any, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, j: int) -> Any:
        if not 0 <= j < len(self.values):
            raise OutOfRangeError(
                f"{self.kind.value}_{j}^({self.order},{self.k}) not computed "
                f"(have j < {len(self.values)})"
            )
        return self.values[j]

    def matches(self, kind: CoefficientKind, order: int, k: int) -> bool:
        return (self.kind, self.order, self.k) == (kind, order, k)


@lru_cache(maxsize=256)
def _derivative_series(order: int, trunc_order: int, ring: Ring) -> LaurentSeries:
    return differentiate(zeta_series(trunc_order, ring), order)


@lru_cache(maxsize=64)
def _log_derivative_series(trunc_order: int, ring: Ring) -> LaurentSeries:
    zeta = zeta_series(trunc_order, ring)
    return multiply_all(differentiate(zeta), reciprocal(zeta))


def _check_indices(name: str, order: int, k: int) -> None:
    if order < 1:
        raise InvalidArgumentError(
            f"{name}: derivative order must be >= 1, got {order}"
        )
    if k < 0:
        raise InvalidArgumentError(f"{name}: k must be >= 0, got {k}")


def _certified(
    series: LaurentSeries, count: int, expected_pole: int, name: str
) -> tuple[Any, ...]:
    if series.pole_order != expected_pole or series.trunc_order < count:
        raise InvalidArgumentError(
            f"{name}: truncation too short to certify {count} coefficients "
            f"(pole order {series.pole_order}, trunc order {series.trunc_order})"
        )
    first_dropped = series.coeffs[count]
    if not series.ring.is_exact and not series.ring.ctx.isfinite(abs(first_dropped)):
        raise InvalidArgumentError(f"{name}: series coefficients are not finite")
    return series.coeffs[:count]


@lru_cache(maxsize=512)
def c_coefficients(
    mu: int, k: int, count: int, ring: Ring = EXACT
) -> CoefficientSet:
    """c_0..c_{count-1} of (zeta'/zeta) zeta^(mu) zeta^(k) / s about s = 1."""
    _check_indices("c_coefficients", mu, k)
    pole = mu + k + 3
    if count < pole:
        raise InvalidArgumentError(
            f"c_coefficients: count must be >= mu+k+3 = {pole}, got {count}"
        )
    trunc = count + GUARD_TERMS
    series = multiply_all(
        _log_derivative_series(trunc, ring),
        _derivative_series(mu, trunc, ring),
        _derivative_series(k, trunc, ring),
        inv_s_series(trunc, ring),
    )
    values = _certified(series, count, pole, "c_coefficients")
    logger.debug("[c_coefficients] mu=%d k=%d count=%d in %r", mu, k, count, ring)
    return CoefficientSet(
        kind=CoefficientKind.C,
        order=mu,
        k=k,
        ring=ring,
        pole_order=pole,
        values=values,
    )


@lru_cache(maxsize=512)
def d_coefficients(
    nu: int, k: int, count: int, ring: Ring = EXACT
) -> CoefficientSet:
    """d_0..d_{count-1} of zeta^(nu) zeta^(k) / s about s = 1."""
    _check_indices("d_coefficients", nu, k)
    pole = nu + k + 2
    if count < pole:
        raise InvalidArgumentError(
            f"d_coefficients: count must be >= nu+k+2 = {pole}, got {count}"
        )
    trunc = count + GUARD_TERMS
    series = multiply_all(
        _derivative_series(nu, trunc, ring),
        _derivative_series(k, trunc, ring),
        inv_s_series(trunc, ring),
    )
    values = _certified(series, count, pole, "d_coefficients")
    logger.debug("[d_coefficients] nu=%d k=%d count=%d in %r", nu, k, count, ring)
    return CoefficientSet(
        kind=CoefficientKind.D,
        order=nu,
        k=k,
        ring=ring,
        pole_order=pole,
        values=values,
    )
