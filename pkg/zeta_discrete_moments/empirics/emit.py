"""CSV and SVG output for comparison series."""

from __future__ import annotations

import csv
import logging
from collections.abc import Sequence
from enum import Enum
from pathlib import Path
from typing import Any

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402

from ..errors import DataError, InvalidArgumentError  # noqa: E402
from .sums import ComparisonRow  # noqa: E402

logger = logging.getLogger(__name__)

CSV_HEADER = (
    "T",
    "empirical_re",
    "empirical_im",
    "leading_only",
    "full_asymptotic",
    "residual_leading",
    "residual_full",
)

# |Im| below this fraction of |Re| is not drawn
IMAGINARY_NEGLIGIBLE = 1e-20


class PlotMode(str, Enum):
    """Which quantity an SVG plot shows against T."""

    TRUTH = "truth"
    MINUS_LEADING = "minus_leading"
    MINUS_FULL = "minus_full"
    ALL = "all"


def _fields(row: ComparisonRow, ctx: Any, digits: int) -> list[str]:
    values = (
        row.height,
        row.empirical_re,
        row.empirical_im,
        row.leading_only,
        row.full_asymptotic,
        row.residual_leading,
        row.residual_full,
    )
    return [ctx.nstr(v, digits) for v in values]


def emit_csv(
    rows: Sequence[ComparisonRow], path: Path | str, ctx: Any, digits: int = 30
) -> Path:
    """Write ``rows`` with ``CSV_HEADER`` and ``digits`` significant digits."""
    file_path = Path(path)
    try:
        with file_path.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(_fields(row, ctx, digits))
    except OSError as exc:
        raise DataError(f"cannot write CSV: {exc.strerror}", path=file_path) from exc
    logger.info("[emit_csv] %d rows to %s", len(rows), file_path)
    return file_path


def read_csv(path: Path | str, ctx: Any) -> list[ComparisonRow]:
    """Parse a file written by ``emit_csv``; values are converted in ``ctx``."""
    file_path = Path(path)
    rows = []
    try:
        with file_path.open(newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if tuple(header or ()) != CSV_HEADER:
                raise DataError(f"unexpected CSV header {header}", path=file_path, line=1)
            for number, fields in enumerate(reader, 2):
                try:
                    height, real, imag, leading, full = (ctx.mpf(f) for f in fields[:5])
                except (ValueError, TypeError) as exc:
                    raise DataError(
                        f"malformed row {fields}", path=file_path, line=number
                    ) from exc
                rows.append(
                    ComparisonRow(
                        height=height,
                        empirical=ctx.mpc(real, imag),
                        leading_only=leading,
                        full_asymptotic=full,
                    )
                )
    except OSError as exc:
        raise DataError(f"cannot read CSV: {exc.strerror}", path=file_path) from exc
    return rows


def _series(rows: Sequence[ComparisonRow], mode: PlotMode) -> tuple[str, list[float]]:
    if mode is PlotMode.TRUTH:
        return "sum", [float(r.empirical_re) for r in rows]
    if mode is PlotMode.MINUS_LEADING:
        return "sum - leading term", [float(r.residual_leading) for r in rows]
    return "sum - full asymptotic", [float(r.residual_full) for r in rows]


def _imaginary_visible(rows: Sequence[ComparisonRow]) -> bool:
    top_re = max(abs(float(r.empirical_re)) for r in rows)
    top_im = max(abs(float(r.empirical_im)) for r in rows)
    return top_im > IMAGINARY_NEGLIGIBLE * max(top_re, 1.0)


def _plot(
    rows: Sequence[ComparisonRow], path: Path, mode: PlotMode, title: str | None
) -> Path:
    heights = [float(r.height) for r in rows]
    label, values = _series(rows, mode)
    figure = Figure(figsize=(8, 5))
    axes = figure.add_subplot()
    axes.plot(heights, values, linewidth=1.0, label=label)
    if mode is PlotMode.TRUTH:
        axes.plot(
            heights,
            [float(r.full_asymptotic) for r in rows],
            linewidth=1.0,
            linestyle="--",
            label="(T/2pi) P(log T/2pi)",
        )
    if mode is PlotMode.MINUS_FULL and _imaginary_visible(rows):
        axes.plot(
            heights,
            [float(r.empirical_im) for r in rows],
            linewidth=1.0,
            linestyle=":",
            label="Im(sum)",
        )
    axes.set_xlabel("T")
    axes.axhline(0.0, color="grey", linewidth=0.5)
    axes.legend()
    if title:
        axes.set_title(title)
    try:
        figure.savefig(path, format="svg", bbox_inches="tight")
    except OSError as exc:
        raise DataError(f"cannot write SVG: {exc.strerror}", path=path) from exc
    return path


def emit_svg(
    rows: Sequence[ComparisonRow],
    path: Path | str,
    mode: PlotMode = PlotMode.MINUS_FULL,
    title: str | None = None,
) -> list[Path]:
    """Plot the selected column against T; ``PlotMode.ALL`` writes three files."""
    if not rows:
        raise InvalidArgumentError("cannot plot an empty comparison series")
    file_path = Path(path)
    if mode is not PlotMode.ALL:
        return [_plot(rows, file_path, mode, title)]
    written = []
    for single in (PlotMode.TRUTH, PlotMode.MINUS_LEADING, PlotMode.MINUS_FULL):
        target = file_path.with_name(f"{file_path.stem}-{single.value}{file_path.suffix}")
        written.append(_plot(rows, target, single, title))
    logger.info("[emit_svg] wrote %s", ", ".join(str(p) for p in written))
    return written
