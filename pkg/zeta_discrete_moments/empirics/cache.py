"""On-disk cache of per-zero derivative values.

One file per (precision, derivative order, method, side of the critical line),
mapping the ordinate's decimal text to the raw mpmath representation of
zeta^(order)(1/2 +- i gamma). Raw tuples keep values bit-exact across runs.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any

import dill

from ..errors import DataError
from ..numerics.zeta import DerivativeMethod

logger = logging.getLogger(__name__)

RawComplex = tuple[tuple[Any, ...], tuple[Any, ...]]


class DerivativeCache:
    """Dictionary of raw derivative values, persisted with dill when a directory is set."""

    def __init__(
        self,
        cache_dir: Path | None,
        *,
        order: int,
        precision_bits: int,
        method: DerivativeMethod,
        mirrored: bool = False,
    ) -> None:
        self.order = order
        self.precision_bits = precision_bits
        self.method = method
        self.mirrored = mirrored
        self.path = (
            Path(cache_dir) / self.file_name() if cache_dir is not None else None
        )
        self._values: dict[str, RawComplex] = {}
        self._dirty = False
        self._load()

    def file_name(self) -> str:
        side = "lower" if self.mirrored else "upper"
        return (
            f"zeta-d{self.order}-{self.precision_bits}bit-"
            f"{self.method.value}-{side}.dill"
        )

    def _load(self) -> None:
        if self.path is None or not self.path.exists():
            return
        try:
            with self.path.open("rb") as handle:
                stored = dill.load(handle)
        except (OSError, EOFError, dill.UnpicklingError) as exc:
            raise DataError(f"unreadable derivative cache: {exc}", path=self.path) from exc
        if not isinstance(stored, dict):
            raise DataError("derivative cache does not hold a mapping", path=self.path)
        self._values = stored
        logger.info("[DerivativeCache] %d values from %s", len(stored), self.path)

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, ordinate: str) -> bool:
        return ordinate in self._values

    def get(self, ordinate: str) -> RawComplex | None:
        return self._values.get(ordinate)

    def put(self, ordinate: str, raw: RawComplex) -> None:
        self._values[ordinate] = raw
        self._dirty = True

    def save(self) -> None:
        """Write the mapping if it changed; the file is replaced atomically."""
        if self.path is None or not self._dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        partial = self.path.with_suffix(".tmp")
        try:
            with partial.open("wb") as handle:
                dill.dump(self._values, handle)
            os.replace(partial, self.path)
        except OSError as exc:
            raise DataError(f"cannot write derivative cache: {exc}", path=self.path) from exc
        self._dirty = False
        logger.info("[DerivativeCache] saved %d values to %s", len(self), self.path)
