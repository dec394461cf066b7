"""Private mpmath contexts, one per working precision."""

from __future__ import annotations

import math
from functools import lru_cache

from mpmath.ctx_mp import MPContext

from .errors import InvalidArgumentError

MIN_PRECISION_BITS = 64

# bits per decimal digit
LOG2_10 = math.log2(10)


@lru_cache(maxsize=None)
def mp_context(precision_bits: int) -> MPContext:
    """Return a shared mpmath context fixed at ``precision_bits``.

    The global ``mpmath.mp`` precision is never read or changed.
    """
    if precision_bits < 1:
        raise InvalidArgumentError(
            f"precision_bits must be positive, got {precision_bits}"
        )
    ctx = MPContext()
    ctx.prec = precision_bits
    return ctx


def require_precision(precision_bits: int) -> None:
    """Reject working precisions below the supported minimum."""
    if precision_bits < MIN_PRECISION_BITS:
        raise InvalidArgumentError(
            f"precision_bits must be >= {MIN_PRECISION_BITS}, got {precision_bits}"
        )


def digits_to_bits(digits: int) -> int:
    """Bits needed to hold ``digits`` significant decimal digits."""
    return math.ceil(digits * LOG2_10)


def bits_to_digits(bits: float) -> int:
    """Decimal digits certified by ``bits`` binary digits."""
    return max(0, math.floor(bits / LOG2_10))
