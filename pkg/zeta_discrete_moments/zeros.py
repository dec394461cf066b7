"""Tables of nontrivial zero ordinates: loading, export, refinement and counting.

All zeros are taken on the critical line: an ordinate gamma stands for the zero
1/2 + i gamma.
"""

from __future__ import annotations

import bisect
import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from decimal import Decimal, InvalidOperation
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import DataError, InvalidArgumentError, PrecisionError, RefinementError
from .models import RefinementEntry, RefinementReport, ZeroCountReport
from .numerics.zeta import EvalConfig, hardy_z, zeta, zeta_deriv
from .precision import bits_to_digits

logger = logging.getLogger(__name__)

BUNDLED_ZEROS = "zeros.txt"
BUNDLED_DIGITS = 9
FIRST_ORDINATE_FLOOR = Decimal(14)
MAX_NEWTON_STEPS = 30
MAX_DRIFT = Decimal("0.01")
COUNT_TOLERANCE = 2.0


def as_decimal(value: Any) -> Decimal:
    """Exact-enough decimal form of an int, float, string, Decimal or mpf."""
    if isinstance(value, Decimal):
        return value
    if hasattr(value, "_mpf_"):
        return Decimal(
            value.context.nstr(value, 50, min_fixed=-math.inf, max_fixed=math.inf)
        )
    try:
        return Decimal(str(value))
    except InvalidOperation as exc:
        raise InvalidArgumentError(f"not a real number: {value!r}") from exc


@dataclass(frozen=True)
class ZeroTable:
    """Strictly increasing positive ordinates of zeta zeros."""

    ordinates: tuple[Decimal, ...]
    input_digits: int
    refined: bool = False

    def __post_init__(self) -> None:
        if self.input_digits < 1:
            raise InvalidArgumentError(
                f"input_digits must be >= 1, got {self.input_digits}"
            )
        if self.ordinates and self.ordinates[0] <= FIRST_ORDINATE_FLOOR:
            raise DataError(
                f"ordinate {self.ordinates[0]} lies below the first nontrivial zero"
            )
        for i in range(1, len(self.ordinates)):
            if self.ordinates[i] <= self.ordinates[i - 1]:
                raise DataError(
                    f"ordinates not strictly increasing at position {i + 1}"
                )

    def __len__(self) -> int:
        return len(self.ordinates)

    def __getitem__(self, index: int) -> Decimal:
        return self.ordinates[index]

    @property
    def max_ordinate(self) -> Decimal | None:
        return self.ordinates[-1] if self.ordinates else None

    def count_upto(self, height: Any) -> int:
        """Number of ordinates gamma with 0 < gamma <= height."""
        return bisect.bisect_right(self.ordinates, as_decimal(height))

    def head(self, count: int) -> ZeroTable:
        """The first ``count`` ordinates."""
        if count < 0:
            raise InvalidArgumentError(f"count must be >= 0, got {count}")
        return replace(self, ordinates=self.ordinates[:count])

    def upto(self, height: Any) -> ZeroTable:
        """Ordinates not exceeding ``height``."""
        return self.head(self.count_upto(height))

    def as_mpf(self, ctx: Any) -> list[Any]:
        return [ctx.mpf(str(gamma)) for gamma in self.ordinates]


def _parse_ordinates(
    lines: Iterable[str], path: Path | str
) -> tuple[Decimal, ...]:
    ordinates: list[Decimal] = []
    previous: Decimal | None = None
    for number, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = Decimal(line)
        except InvalidOperation as exc:
            raise DataError(f"unparsable ordinate {line!r}", path=path, line=number) from exc
        if not value.is_finite() or value <= FIRST_ORDINATE_FLOOR:
            raise DataError(
                f"ordinate {line} is not above the first nontrivial zero",
                path=path,
                line=number,
            )
        if previous is not None and value <= previous:
            kind = "duplicate" if value == previous else "out-of-order"
            raise DataError(
                f"{kind} ordinate {line} (previous {previous})",
                path=path,
                line=number,
            )
        ordinates.append(value)
        previous = value
    return tuple(ordinates)


def load_zeros(path: Path | str, declared_digits: int) -> ZeroTable:
    """Read one decimal ordinate per line; ``#`` lines and blank lines are skipped."""
    if declared_digits < 1:
        raise InvalidArgumentError(
            f"declared_digits must be >= 1, got {declared_digits}"
        )
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read zero table: {exc.strerror}", path=file_path) from exc
    ordinates = _parse_ordinates(text.splitlines(), file_path)
    logger.info("[load_zeros] %d ordinates from %s", len(ordinates), file_path)
    return ZeroTable(ordinates=ordinates, input_digits=declared_digits)


@lru_cache(maxsize=1)
def _bundled_ordinates() -> tuple[Decimal, ...]:
    resource = resources.files("zeta_discrete_moments") / "data" / BUNDLED_ZEROS
    return _parse_ordinates(
        resource.read_text(encoding="utf-8").splitlines(), str(resource)
    )


def load_bundled_zeros(limit: int | None = None) -> ZeroTable:
    """The shipped table of the first 100,000 ordinates (9 decimal places)."""
    table = ZeroTable(ordinates=_bundled_ordinates(), input_digits=BUNDLED_DIGITS)
    return table if limit is None else table.head(limit)


def write_zeros(
    table: ZeroTable,
    path: Path | str,
    header: Sequence[str] = (),
) -> Path:
    """Export ``table`` in the ``load_zeros`` format."""
    file_path = Path(path)
    lines = [f"# {line}" for line in header]
    lines.append(f"# {len(table)} ordinates, {table.input_digits} digits")
    lines.extend(str(gamma) for gamma in table.ordinates)
    try:
        file_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot write zero table: {exc.strerror}", path=file_path) from exc
    return file_path


def refine_zero(gamma_approx: Any, cfg: EvalConfig, target_digits: int) -> Any:
    """Newton iteration on t -> zeta(1/2 + it) until |zeta| < 10^-target_digits.

    The step is Re(zeta / (i zeta')), keeping t real (zeros on the critical line).
    """
    if target_digits < 1:
        raise InvalidArgumentError(f"target_digits must be >= 1, got {target_digits}")
    reachable = bits_to_digits(cfg.precision_bits - 24)
    if target_digits > reachable:
        raise PrecisionError(
            f"{target_digits} digits need more than {cfg.precision_bits} bits",
            achieved_bits=float(cfg.precision_bits - 24),
        )
    ctx = cfg.ctx
    start = as_decimal(gamma_approx)
    t = ctx.mpf(str(start))
    threshold = ctx.mpf(10) ** (-target_digits)
    residual = ctx.inf
    for step in range(MAX_NEWTON_STEPS):
        point = ctx.mpc(ctx.mpf(1) / 2, t)
        value = zeta(point, cfg)
        residual = abs(value)
        if residual < threshold:
            logger.debug("[refine_zero] %s converged after %d steps", start, step)
            return t
        slope = zeta_deriv(point, 1, cfg)
        if slope == 0:
            break
        t -= (value / (ctx.j * slope)).real
        if abs(as_decimal(t) - start) > MAX_DRIFT:
            raise RefinementError(
                f"Newton iteration from {start} drifted away",
                last_iterate=ctx.nstr(t, 20),
                residual=ctx.nstr(residual, 5),
                iterations=step + 1,
            )
    raise RefinementError(
        f"Newton iteration from {start} did not converge",
        last_iterate=ctx.nstr(t, 20),
        residual=ctx.nstr(residual, 5),
        iterations=MAX_NEWTON_STEPS,
    )


def _refine_one(args: tuple[str, EvalConfig, int]) -> tuple[str, float]:
    text, cfg, target_digits = args
    ctx = cfg.ctx
    refined = refine_zero(text, cfg, target_digits)
    # |Z(t)| = |zeta(1/2 + it)| for real t
    residual = abs(hardy_z(refined, cfg))
    shown = ctx.nstr(refined, target_digits + 6, min_fixed=-math.inf, max_fixed=math.inf)
    return shown, float(residual)


def refine_table(
    table: ZeroTable, cfg: EvalConfig, target_digits: int, workers: int = 1
) -> tuple[ZeroTable, RefinementReport]:
    """Refine every ordinate; work is spread over ``workers`` processes."""
    jobs = [(str(gamma), cfg, target_digits) for gamma in table.ordinates]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_refine_one, jobs, chunksize=8))
    else:
        results = [_refine_one(job) for job in jobs]

    report = RefinementReport(
        target_digits=target_digits, precision_bits=cfg.precision_bits
    )
    refined: list[Decimal] = []
    for index, (gamma, (shown, residual)) in enumerate(
        zip(table.ordinates, results, strict=True), 1
    ):
        value = Decimal(shown)
        refined.append(value)
        report.entries.append(
            RefinementEntry(
                index=index,
                original=str(gamma),
                refined=shown,
                shift=float(value - gamma),
                residual=residual,
            )
        )
    digits = max(table.input_digits, target_digits)
    return (
        ZeroTable(ordinates=tuple(refined), input_digits=digits, refined=True),
        report,
    )


def smooth_count(height: float) -> float:
    """Riemann-von Mangoldt main terms (T/2pi) log(T/2pi) - T/2pi + 7/8."""
    if height <= 0:
        return 0.0
    x = height / (2 * math.pi)
    return x * math.log(x) - x + 7 / 8


def validate_count(table: ZeroTable, height: Any) -> ZeroCountReport:
    """Compare the number of ordinates up to ``height`` with the smooth count."""
    count = table.count_upto(height)
    t = float(as_decimal(height))
    expected = smooth_count(t)
    deviation = count - expected
    within = table.max_ordinate is not None and as_decimal(height) <= table.max_ordinate
    report = ZeroCountReport(
        height=t,
        count=count,
        expected=expected,
        deviation=deviation,
        flagged=abs(deviation) > COUNT_TOLERANCE,
        within_table=within,
    )
    if report.flagged:
        logger.warning("[validate_count] %s", report)
    return report


def midpoint_heights(table: ZeroTable, every: int) -> list[Decimal]:
    """Midpoints between zero k and k+1 for k = every, 2*every, ... (1-based)."""
    if every < 1:
        raise InvalidArgumentError(f"every must be >= 1, got {every}")
    return [
        (table.ordinates[k - 1] + table.ordinates[k]) / 2
        for k in range(every, len(table), every)
    ]


def validate_prefixes(table: ZeroTable, every: int = 250) -> list[ZeroCountReport]:
    """``validate_count`` at the midpoint after every ``every``-th zero."""
    return [validate_count(table, height) for height in midpoint_heights(table, every)]
