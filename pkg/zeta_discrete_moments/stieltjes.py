"""Stieltjes constants gamma_n: bundled reference values and an independent computation."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from functools import lru_cache
from importlib import resources
from typing import Any

from .errors import DataError, InvalidArgumentError, OutOfRangeError, PrecisionError
from .models import StieltjesCheckEntry, StieltjesCheckReport, TableSource
from .numerics.bernoulli import bernoulli_ratio
from .precision import digits_to_bits, mp_context, require_precision

logger = logging.getLogger(__name__)

BUNDLE_NAME = "stieltjes.tsv"
SPOT_CHECK_BITS = 96
SPOT_CHECK_TOLERANCE = Decimal("1e-20")


@dataclass(frozen=True)
class StieltjesTable:
    """Contiguous constants gamma_0..gamma_K as decimal strings."""

    entries: tuple[str, ...]
    source: TableSource
    precision_bits: int

    @property
    def max_index(self) -> int:
        return len(self.entries) - 1

    def get(self, n: int) -> str:
        if not 0 <= n <= self.max_index:
            raise OutOfRangeError(
                f"gamma_{n} not in table (available 0..{self.max_index})"
            )
        return self.entries[n]

    def value(self, n: int, ctx: Any) -> Any:
        """gamma_n as an mpf of the context ``ctx``."""
        return ctx.mpf(self.get(n))

    def as_mapping(self, ctx: Any) -> dict[int, Any]:
        """All constants as ``{n: mpf}``, ready for ``ExactPoly.evaluate``."""
        return {n: ctx.mpf(text) for n, text in enumerate(self.entries)}


@lru_cache(maxsize=1)
def _read_bundle() -> tuple[tuple[str, ...], int]:
    path = resources.files("zeta_discrete_moments") / "data" / BUNDLE_NAME
    entries: list[str] = []
    places: list[int] = []
    for number, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            index_text, value_text = line.split("\t")
            index = int(index_text)
            Decimal(value_text)
        except (ValueError, InvalidOperation) as exc:
            raise DataError(
                f"malformed line {line!r}", path=str(path), line=number
            ) from exc
        if index != len(entries):
            raise DataError(
                f"expected index {len(entries)}, found {index}",
                path=str(path),
                line=number,
            )
        entries.append(value_text)
        places.append(len(value_text.partition(".")[2]))
    _spot_check(entries, str(path))
    return tuple(entries), min(places, default=0)


def _spot_check(entries: list[str], path: str) -> None:
    """Re-derive gamma_0 and gamma_1 at low precision before trusting the bundle."""
    for n in range(min(2, len(entries))):
        computed = Decimal(
            mp_context(SPOT_CHECK_BITS).nstr(compute_gamma(n, SPOT_CHECK_BITS), 30)
        )
        if abs(computed - Decimal(entries[n])) > SPOT_CHECK_TOLERANCE:
            raise DataError(
                f"bundled gamma_{n} disagrees with recomputation ({computed})",
                path=path,
            )
    logger.debug("[_spot_check] bundled gamma_0, gamma_1 confirmed")


def bundled_limit() -> int:
    """Largest index available in the bundled table."""
    entries, _ = _read_bundle()
    return len(entries) - 1


def load_bundled(max_index: int) -> StieltjesTable:
    """Return gamma_0..gamma_max_index from the bundled reference table."""
    if max_index < 0:
        raise InvalidArgumentError(f"max_index must be >= 0, got {max_index}")
    entries, places = _read_bundle()
    if max_index >= len(entries):
        raise OutOfRangeError(
            f"bundle holds gamma_0..gamma_{len(entries) - 1}, requested {max_index}"
        )
    return StieltjesTable(
        entries=entries[: max_index + 1],
        source=TableSource.BUNDLED,
        precision_bits=digits_to_bits(places),
    )


def _log_power_derivative(poly: list[int], r: int) -> list[int]:
    """Coefficients in log x of x^(r+2) d/dx [x^(-1-r) sum_i poly[i] (log x)^i]."""
    nxt = [0] * len(poly)
    for i, c in enumerate(poly):
        if c:
            nxt[i] += -(r + 1) * c
            if i:
                nxt[i - 1] += i * c
    return nxt


def compute_gamma(n: int, precision_bits: int) -> Any:
    """gamma_n by Euler-Maclaurin acceleration of its defining limit.

    gamma_n = sum_{k<m} f(k) - (log m)^(n+1)/(n+1) + f(m)/2
              - sum_j B_2j/(2j)! f^(2j-1)(m),   f(x) = (log x)^n / x.

    The tail series is summed until its terms fall below the target; if the
    terms turn around first the cut-off m is doubled and the sum redone.
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    require_precision(precision_bits)
    target_bits = precision_bits + 4
    cutoff = max(32, precision_bits // 2)
    best_bits = 0.0
    for _ in range(4):
        log_m = math.log(cutoff)
        guard = 32 + math.ceil((n + 1) * math.log2(log_m + 1))
        ctx = mp_context(precision_bits + guard)
        value, achieved = _gamma_em(ctx, n, cutoff, target_bits)
        best_bits = max(best_bits, achieved)
        if achieved >= target_bits:
            logger.debug(
                "[compute_gamma] gamma_%d at %d bits with cut-off %d",
                n,
                precision_bits,
                cutoff,
            )
            return mp_context(precision_bits).convert(value)
        cutoff *= 2
    raise PrecisionError(
        f"could not certify gamma_{n} to {precision_bits} bits",
        achieved_bits=best_bits,
    )


def _gamma_em(ctx: Any, n: int, cutoff: int, target_bits: int) -> tuple[Any, float]:
    log_m = ctx.log(cutoff)
    direct = ctx.fsum(ctx.log(k) ** n / k for k in range(2, cutoff))
    if n == 0:
        direct += 1
    value = direct - log_m ** (n + 1) / (n + 1) + log_m**n / (2 * cutoff)
    powers = [log_m**i for i in range(n + 1)]
    poly = [0] * n + [1]
    scale = ctx.mpf(1) / cutoff
    previous = None
    r = 0
    while True:
        poly = _log_power_derivative(poly, r)
        r += 1
        scale /= cutoff
        if r % 2 == 0:
            continue
        ratio = bernoulli_ratio((r + 1) // 2)
        derivative = scale * ctx.fsum(c * powers[i] for i, c in enumerate(poly) if c)
        term = ctx.mpf(ratio.numerator) / ratio.denominator * derivative
        size = abs(term)
        if size == 0 or size < ctx.ldexp(1, -target_bits):
            return value - term, float(target_bits)
        if previous is not None and size > previous:
            return value, -float(ctx.log(previous, 2))
        value -= term
        previous = size


def compute_table(max_index: int, precision_bits: int) -> StieltjesTable:
    """gamma_0..gamma_max_index from ``compute_gamma`` alone."""
    if max_index < 0:
        raise InvalidArgumentError(f"max_index must be >= 0, got {max_index}")
    ctx = mp_context(precision_bits)
    digits = max(20, math.floor(precision_bits * math.log10(2)))
    entries = tuple(
        ctx.nstr(
            compute_gamma(n, precision_bits),
            digits,
            min_fixed=-math.inf,
            max_fixed=math.inf,
        )
        for n in range(max_index + 1)
    )
    return StieltjesTable(
        entries=entries, source=TableSource.COMPUTED, precision_bits=precision_bits
    )


def cross_check(
    max_index: int = 10, precision_bits: int = 256, tolerance: float = 1e-30
) -> StieltjesCheckReport:
    """Compare bundled constants with the independent computation."""
    table = load_bundled(max_index)
    ctx = mp_context(precision_bits)
    report = StieltjesCheckReport(precision_bits=precision_bits, tolerance=tolerance)
    for n in range(max_index + 1):
        computed = compute_gamma(n, precision_bits)
        diff = abs(computed - table.value(n, ctx))
        report.entries.append(
            StieltjesCheckEntry(
                n=n,
                bundled=table.get(n),
                computed=ctx.nstr(computed, 40),
                abs_diff=float(diff),
                ok=diff < tolerance,
            )
        )
    if not report.passed:
        logger.warning("[cross_check] %s", report)
    return report
