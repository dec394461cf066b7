"""Arbitrary-precision zeta(s) and its derivatives for complex s.

``zeta`` uses Euler-Maclaurin summation with a Backlund remainder bound and the
functional equation for Re(s) < 0. ``zeta_deriv`` differentiates through the
Cauchy integral on a circle around s, discretized by the trapezoid rule with
node doubling until two successive results agree.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Any

from ..errors import InvalidArgumentError, PoleError, PrecisionError
from ..precision import MIN_PRECISION_BITS, mp_context
from .bernoulli import bernoulli_ratio

logger = logging.getLogger(__name__)

GUARD_BITS = 24
MAX_EM_DOUBLINGS = 6


class DerivativeMethod(str, Enum):
    """How derivatives of zeta are evaluated."""

    CAUCHY = "cauchy"
    MPMATH = "mpmath"


@dataclass(frozen=True)
class EvalConfig:
    """Numerical settings for zeta evaluation.

    ``em_terms`` and ``bernoulli_terms`` of 0 select the adaptive defaults
    N = max(20, 2|Im s|) and J = max(8, precision_bits / 4).
    """

    precision_bits: int = 128
    em_terms: int = 0
    bernoulli_terms: int = 0
    deriv_circle_radius: Fraction = field(default=Fraction(1, 2))
    deriv_nodes: int = 64
    max_deriv_nodes: int = 4096

    def __post_init__(self) -> None:
        if self.precision_bits < MIN_PRECISION_BITS:
            raise InvalidArgumentError(
                f"precision_bits must be >= {MIN_PRECISION_BITS}, "
                f"got {self.precision_bits}"
            )
        if self.em_terms < 0 or self.bernoulli_terms < 0:
            raise InvalidArgumentError("em_terms and bernoulli_terms must be >= 0")
        radius = Fraction(self.deriv_circle_radius)
        if radius <= 0:
            raise InvalidArgumentError(
                f"deriv_circle_radius must be positive, got {radius}"
            )
        object.__setattr__(self, "deriv_circle_radius", radius)
        nodes = self.deriv_nodes
        if nodes < 16 or nodes & (nodes - 1):
            raise InvalidArgumentError(
                f"deriv_nodes must be a power of two >= 16, got {nodes}"
            )
        if self.max_deriv_nodes < nodes:
            raise InvalidArgumentError("max_deriv_nodes must be >= deriv_nodes")

    @property
    def ctx(self) -> Any:
        return mp_context(self.precision_bits)

    def with_precision(self, precision_bits: int) -> EvalConfig:
        return replace(self, precision_bits=precision_bits)

    def with_radius(self, radius: Fraction | int | str) -> EvalConfig:
        return replace(self, deriv_circle_radius=Fraction(radius))


def _target(ctx: Any, bits: int, value: Any) -> Any:
    return ctx.ldexp(1, -bits) * max(ctx.one, abs(value))


def _em_sum(ctx: Any, s: Any, cfg: EvalConfig, target_bits: int) -> tuple[Any, Any]:
    """Euler-Maclaurin for Re(s) >= 0, s != 1; returns (value, error bound)."""
    sigma = s.real
    n_terms = cfg.em_terms or max(20, math.ceil(2 * float(abs(s.imag))))
    j_terms = cfg.bernoulli_terms or max(8, cfg.precision_bits // 4)
    bound = ctx.inf
    for _ in range(MAX_EM_DOUBLINGS):
        big_n = ctx.mpf(n_terms)
        direct = ctx.fsum(ctx.power(n, -s) for n in range(1, n_terms))
        n_pow = ctx.power(big_n, -s)
        value = direct + big_n * n_pow / (s - 1) + n_pow / 2
        rising = s * n_pow / big_n
        for j in range(1, j_terms + 1):
            if j > 1:
                rising *= (s + 2 * j - 3) * (s + 2 * j - 2) / (big_n * big_n)
            ratio = bernoulli_ratio(j)
            value += rising * ratio.numerator / ratio.denominator
        # Backlund: |R_J| <= |s + 2J + 1| / (sigma + 2J + 1) * |T_{J+1}|
        nxt = rising * (s + 2 * j_terms - 1) * (s + 2 * j_terms) / (big_n * big_n)
        ratio = bernoulli_ratio(j_terms + 1)
        tail = abs(nxt * ratio.numerator / ratio.denominator)
        bound = tail * abs(s + 2 * j_terms + 1) / (sigma + 2 * j_terms + 1)
        if bound <= _target(ctx, target_bits, value):
            return value, bound
        logger.debug(
            "[zeta] N=%d J=%d insufficient at s=%s, doubling N",
            n_terms,
            j_terms,
            ctx.nstr(s, 10),
        )
        n_terms *= 2
    achieved = -float(ctx.log(bound, 2)) if bound else float(target_bits)
    raise PrecisionError(
        f"Euler-Maclaurin could not certify zeta({ctx.nstr(s, 15)})",
        achieved_bits=achieved,
    )


def zeta_with_bound(s: Any, cfg: EvalConfig) -> tuple[Any, Any]:
    """zeta(s) together with its certified absolute error bound."""
    out = cfg.ctx
    work = mp_context(cfg.precision_bits + GUARD_BITS)
    w = work.mpc(work.convert(s))
    if w == 1:
        raise PoleError("zeta has a pole at s = 1")
    target_bits = cfg.precision_bits - 16
    if w.real >= 0:
        value, bound = _em_sum(work, w, cfg, target_bits)
    else:
        # zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
        factor = (
            work.power(2, w)
            * work.power(work.pi, w - 1)
            * work.sin(work.pi * w / 2)
            * work.gamma(1 - w)
        )
        reflected, bound = _em_sum(work, 1 - w, cfg, target_bits)
        value = factor * reflected
        bound *= abs(factor)
    return out.mpc(value), out.mpf(bound)


def zeta(s: Any, cfg: EvalConfig | None = None) -> Any:
    """zeta(s) for complex s != 1 to the configured precision."""
    value, _ = zeta_with_bound(s, cfg or EvalConfig())
    return value


def _cauchy_derivative(s: Any, order: int, cfg: EvalConfig) -> Any:
    out = cfg.ctx
    radius = cfg.deriv_circle_radius
    inflation = math.log2(math.factorial(order)) + order * math.log2(1 / radius)
    inner = cfg.with_precision(cfg.precision_bits + math.ceil(inflation) + 8)
    work = inner.ctx
    center = work.mpc(work.convert(s))
    r = work.mpf(radius.numerator) / radius.denominator
    if abs(center - 1) <= r:
        raise PoleError(
            f"derivative circle of radius {radius} about {out.nstr(center, 15)} "
            f"reaches the pole at s = 1; shrink deriv_circle_radius"
        )
    scale = work.factorial(order) / r**order

    def node_sum(count: int, start: int, step: int) -> Any:
        # sum over k of zeta(s + r e^{i theta_k}) e^{-i order theta_k}, theta_k = 2 pi k / count
        return work.fsum(
            zeta(center + r * work.expjpi(work.mpf(2 * k) / count), inner)
            * work.expjpi(-work.mpf(2 * k * order) / count)
            for k in range(start, count, step)
        )

    nodes = cfg.deriv_nodes
    total = node_sum(nodes, 0, 1)
    estimate = scale * total / nodes
    change = work.inf
    while nodes < cfg.max_deriv_nodes:
        total += node_sum(2 * nodes, 1, 2)
        nodes *= 2
        refined = scale * total / nodes
        change = abs(refined - estimate)
        estimate = refined
        if change <= _target(work, cfg.precision_bits - 20, refined):
            return out.mpc(estimate)
    achieved = -float(work.log(change / max(work.one, abs(estimate)), 2))
    raise PrecisionError(
        f"Cauchy differentiation of order {order} at {out.nstr(center, 15)} did not "
        f"converge within {cfg.max_deriv_nodes} nodes",
        achieved_bits=achieved,
    )


def zeta_deriv(
    s: Any,
    order: int,
    cfg: EvalConfig | None = None,
    method: DerivativeMethod = DerivativeMethod.CAUCHY,
) -> Any:
    """The ``order``-th derivative of zeta at s.

    ``DerivativeMethod.MPMATH`` delegates to mpmath's own evaluator (used for bulk
    sums over many zeros); the default Cauchy method certifies its result by node
    doubling.
    """
    cfg = cfg or EvalConfig()
    if order < 0:
        raise InvalidArgumentError(f"order must be >= 0, got {order}")
    if method is DerivativeMethod.MPMATH:
        work = mp_context(cfg.precision_bits + GUARD_BITS)
        w = work.mpc(work.convert(s))
        if w == 1:
            raise PoleError("zeta has a pole at s = 1")
        return cfg.ctx.mpc(work.zeta(w, 1, order))
    if order == 0:
        return zeta(s, cfg)
    return _cauchy_derivative(s, order, cfg)


def conjugate_reflection_check(
    s: Any,
    order: int,
    cfg: EvalConfig | None = None,
    method: DerivativeMethod = DerivativeMethod.CAUCHY,
) -> bool:
    """Check zeta^(order)(conj s) == conj(zeta^(order)(s)) to working precision."""
    cfg = cfg or EvalConfig()
    ctx = cfg.ctx
    point = ctx.mpc(ctx.convert(s))
    direct = zeta_deriv(point, order, cfg, method)
    mirrored = zeta_deriv(ctx.conj(point), order, cfg, method)
    return abs(mirrored - ctx.conj(direct)) <= _target(
        ctx, cfg.precision_bits - 24, direct
    )


def hardy_z(t: Any, cfg: EvalConfig | None = None) -> Any:
    """Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t."""
    cfg = cfg or EvalConfig()
    work = mp_context(cfg.precision_bits + GUARD_BITS)
    height = work.convert(t)
    rotated = work.expj(work.siegeltheta(height)) * zeta(
        work.mpc(work.mpf(1) / 2, height), cfg.with_precision(cfg.precision_bits + 8)
    )
    return cfg.ctx.mpf(rotated.real)
