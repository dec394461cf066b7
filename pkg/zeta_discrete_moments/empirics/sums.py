"""Discrete sums over zeta zeros and their comparison with the moment polynomial.

The sum over 0 < gamma <= T of zeta^(mu)(rho) zeta^(nu)(1 - rho) is evaluated with
rho = 1/2 + i gamma and, by Schwarz reflection, zeta^(nu)(1 - rho) =
conj(zeta^(nu)(rho)). Per-zero values are computed in a process pool but always
accumulated in table order, so the result does not depend on the worker count.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path
from typing import Any

from ..errors import (
    EvaluationError,
    InvalidArgumentError,
    OutOfRangeError,
    ZetaMomentsError,
)
from ..moments import MomentPolynomial, assemble_polynomial
from ..numerics.zeta import DerivativeMethod, EvalConfig, zeta_deriv
from ..zeros import ZeroTable, as_decimal, midpoint_heights
from .cache import DerivativeCache, RawComplex

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 1000


def _derivative_at_zero(
    job: tuple[str, int, EvalConfig, DerivativeMethod, bool],
) -> RawComplex:
    ordinate, order, cfg, method, mirrored = job
    ctx = cfg.ctx
    height = ctx.mpf(ordinate)
    point = ctx.mpc(ctx.mpf(1) / 2, -height if mirrored else height)
    try:
        value = zeta_deriv(point, order, cfg, method)
    except ZetaMomentsError as exc:
        raise EvaluationError(ordinate, exc) from exc
    return value._mpc_


class DerivativeEvaluator:
    """zeta^(order) at 1/2 + i gamma (or 1/2 - i gamma) for many ordinates."""

    def __init__(
        self,
        cfg: EvalConfig,
        method: DerivativeMethod = DerivativeMethod.MPMATH,
        workers: int = 1,
        cache_dir: Path | None = None,
    ) -> None:
        if workers < 1:
            raise InvalidArgumentError(f"workers must be >= 1, got {workers}")
        self.cfg = cfg
        self.method = method
        self.workers = workers
        self.cache_dir = cache_dir
        self._caches: dict[tuple[int, bool], DerivativeCache] = {}

    def _cache(self, order: int, mirrored: bool) -> DerivativeCache:
        key = (order, mirrored)
        if key not in self._caches:
            self._caches[key] = DerivativeCache(
                self.cache_dir,
                order=order,
                precision_bits=self.cfg.precision_bits,
                method=self.method,
                mirrored=mirrored,
            )
        return self._caches[key]

    def values(
        self, ordinates: Sequence[Decimal], order: int, mirrored: bool = False
    ) -> list[Any]:
        """Derivative values in the order of ``ordinates``."""
        cache = self._cache(order, mirrored)
        keys = [str(gamma) for gamma in ordinates]
        missing = [key for key in dict.fromkeys(keys) if key not in cache]
        if missing:
            logger.info(
                "[DerivativeEvaluator] order %d: %d of %d values to compute",
                order,
                len(missing),
                len(keys),
            )
            jobs = [(key, order, self.cfg, self.method, mirrored) for key in missing]
            if self.workers > 1 and len(jobs) > 1:
                chunk = max(1, len(jobs) // (self.workers * 8))
                with ProcessPoolExecutor(max_workers=self.workers) as pool:
                    results = pool.map(_derivative_at_zero, jobs, chunksize=chunk)
                    for done, (key, raw) in enumerate(zip(missing, results), 1):
                        cache.put(key, raw)
                        if done % PROGRESS_EVERY == 0:
                            logger.info("[DerivativeEvaluator] %d/%d", done, len(jobs))
            else:
                for done, job in enumerate(jobs, 1):
                    cache.put(job[0], _derivative_at_zero(job))
                    if done % PROGRESS_EVERY == 0:
                        logger.info("[DerivativeEvaluator] %d/%d", done, len(jobs))
            cache.save()
        ctx = self.cfg.ctx
        return [ctx.make_mpc(cache.get(key)) for key in keys]


def _check_height(zeros: ZeroTable, height: Any) -> Decimal:
    value = as_decimal(height)
    top = zeros.max_ordinate
    if top is None or value > top:
        raise OutOfRangeError(
            f"height {value} exceeds the largest ordinate in the table ({top})"
        )
    return value


def _products(
    evaluator: DerivativeEvaluator,
    mu: int,
    nu: int,
    ordinates: Sequence[Decimal],
    reflection: bool,
) -> list[Any]:
    left = evaluator.values(ordinates, mu)
    if reflection:
        right = evaluator.values(ordinates, nu)
        return [a * b.conjugate() for a, b in zip(left, right, strict=True)]
    right = evaluator.values(ordinates, nu, mirrored=True)
    return [a * b for a, b in zip(left, right, strict=True)]


def discrete_sum(
    mu: int,
    nu: int,
    zeros: ZeroTable,
    height: Any,
    cfg: EvalConfig,
    *,
    reflection: bool = True,
    evaluator: DerivativeEvaluator | None = None,
) -> Any:
    """Sum of zeta^(mu)(rho) zeta^(nu)(1 - rho) over table zeros with gamma <= height."""
    if mu < 1 or nu < 1:
        raise InvalidArgumentError(
            f"mu and nu must be positive integers, got ({mu}, {nu})"
        )
    limit = _check_height(zeros, height)
    evaluator = evaluator or DerivativeEvaluator(cfg)
    ordinates = zeros.upto(limit).ordinates
    ctx = cfg.ctx
    total = ctx.mpc(0)
    for term in _products(evaluator, mu, nu, ordinates, reflection):
        total += term
    return total


def reflection_discrepancy(
    order: int,
    zeros: ZeroTable,
    height: Any,
    cfg: EvalConfig,
    evaluator: DerivativeEvaluator | None = None,
) -> Any:
    """Largest |zeta^(order)(1/2 - i gamma) - conj(zeta^(order)(1/2 + i gamma))|."""
    limit = _check_height(zeros, height)
    evaluator = evaluator or DerivativeEvaluator(cfg)
    ordinates = zeros.upto(limit).ordinates
    upper = evaluator.values(ordinates, order)
    lower = evaluator.values(ordinates, order, mirrored=True)
    return max(
        (abs(b - a.conjugate()) for a, b in zip(upper, lower, strict=True)),
        default=cfg.ctx.zero,
    )


def _log_height(height: Any, ctx: Any) -> tuple[Any, Any]:
    t = ctx.convert(str(as_decimal(height)))
    ratio = t / (2 * ctx.pi)
    if ratio <= 1:
        raise InvalidArgumentError(f"height must exceed 2*pi, got {ctx.nstr(t, 15)}")
    return ratio, ctx.log(ratio)


def asymptotic_value(poly: MomentPolynomial, height: Any, ctx: Any) -> Any:
    """(T/2pi) P(log T/2pi)."""
    ratio, x = _log_height(height, ctx)
    return ratio * poly.evaluated(ctx).evaluate(x, ctx)


def leading_only_value(poly: MomentPolynomial, height: Any, ctx: Any) -> Any:
    """(T/2pi) A_D (log T/2pi)^D for the top coefficient A_D."""
    ratio, x = _log_height(height, ctx)
    numeric = poly.evaluated(ctx)
    return ratio * ctx.convert(numeric.leading) * x**numeric.degree


def checkpoint_heights(
    zeros: ZeroTable, every: int, limit: int | None = None
) -> list[Decimal]:
    """Midpoints after the every-th, 2*every-th, ... zero, up to zero ``limit``.

    The midpoint after zero k needs zero k+1, so ``limit`` may be at most
    ``len(zeros) - 1``.
    """
    top = len(zeros) - 1 if limit is None else limit
    if top > len(zeros) - 1:
        raise OutOfRangeError(
            f"a checkpoint after zero {top} needs {top + 1} zeros, "
            f"table has {len(zeros)}"
        )
    return midpoint_heights(zeros.head(top + 1), every)


@dataclass(frozen=True)
class ComparisonRow:
    """Empirical sum and asymptotic predictions at one height."""

    height: Any
    empirical: Any
    leading_only: Any
    full_asymptotic: Any
    zero_count: int | None = None

    @property
    def empirical_re(self) -> Any:
        return self.empirical.real

    @property
    def empirical_im(self) -> Any:
        return self.empirical.imag

    @property
    def residual_leading(self) -> Any:
        return self.empirical.real - self.leading_only

    @property
    def residual_full(self) -> Any:
        return self.empirical.real - self.full_asymptotic


def comparison_series(
    mu: int,
    nu: int,
    zeros: ZeroTable,
    checkpoints: Sequence[Any],
    cfg: EvalConfig,
    *,
    poly: MomentPolynomial | None = None,
    evaluator: DerivativeEvaluator | None = None,
) -> list[ComparisonRow]:
    """One row per checkpoint; every zero's contribution is computed once."""
    heights = [as_decimal(h) for h in checkpoints]
    if any(b <= a for a, b in zip(heights, heights[1:])):
        raise InvalidArgumentError("checkpoints must be strictly ascending")
    if not heights:
        return []
    _check_height(zeros, heights[-1])
    ctx = cfg.ctx
    poly = (poly or assemble_polynomial(mu, nu)).evaluated(ctx)
    evaluator = evaluator or DerivativeEvaluator(cfg)
    ordinates = zeros.upto(heights[-1]).ordinates
    terms = _products(evaluator, mu, nu, ordinates, reflection=True)

    rows: list[ComparisonRow] = []
    total = ctx.mpc(0)
    index = 0
    for height in heights:
        while index < len(ordinates) and ordinates[index] <= height:
            total += terms[index]
            index += 1
        rows.append(
            ComparisonRow(
                height=ctx.convert(str(height)),
                empirical=total,
                leading_only=leading_only_value(poly, height, ctx),
                full_asymptotic=asymptotic_value(poly, height, ctx),
                zero_count=index,
            )
        )
    logger.info(
        "[comparison_series] mu=%d nu=%d: %d rows over %d zeros",
        mu,
        nu,
        len(rows),
        len(ordinates),
    )
    return rows


def relative(value: Any, reference: Any) -> float:
    """|value / reference| as a float, infinite for a zero reference."""
    if reference == 0:
        return math.inf
    return float(abs(value / reference))
