"""Exception hierarchy for zeta-discrete-moments.

Every error carries an ``exit_code`` so the CLI can map failures onto its
documented exit statuses without inspecting messages.
"""

from __future__ import annotations

from pathlib import Path


def _rebuild(cls: type, args: tuple, kwargs: dict) -> Exception:
    # errors with keyword-only fields cross process boundaries through here
    return cls(*args, **kwargs)


class ZetaMomentsError(Exception):
    """Base class for all errors raised by this package."""

    exit_code: int = 1


class InvalidArgumentError(ZetaMomentsError, ValueError):
    """An argument violates an operation's precondition."""

    exit_code = 4


class RingMismatchError(InvalidArgumentError):
    """Two series or values from different coefficient rings were combined."""


class PoleError(InvalidArgumentError):
    """Evaluation at, or a contour around, the pole of zeta at s = 1."""


class OutOfRangeError(InvalidArgumentError):
    """An index or height lies outside the supported or available range."""


class UnsupportedOperationError(ZetaMomentsError):
    """The operation is not defined for the given ring element."""

    exit_code = 4


class SeriesDivisionByZeroError(ZetaMomentsError, ZeroDivisionError):
    """Reciprocal of an identically zero series."""

    exit_code = 4


class DataError(ZetaMomentsError):
    """Malformed input data or an unreadable/unwritable file."""

    exit_code = 2

    def __init__(
        self,
        message: str,
        *,
        path: Path | str | None = None,
        line: int | None = None,
    ) -> None:
        self.message = message
        self.path = Path(path) if path is not None else None
        self.line = line
        location = ""
        if self.path is not None:
            location = f"{self.path}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")

    def __reduce__(self) -> tuple:
        fields = {"path": self.path, "line": self.line}
        return (_rebuild, (type(self), (self.message,), fields))


class PrecisionError(ZetaMomentsError):
    """The requested precision could not be certified."""

    exit_code = 3

    def __init__(self, message: str, *, achieved_bits: float | None = None) -> None:
        self.message = message
        self.achieved_bits = achieved_bits
        if achieved_bits is not None:
            message = f"{message} (achieved about {achieved_bits:.1f} bits)"
        super().__init__(message)

    def __reduce__(self) -> tuple:
        return (
            _rebuild,
            (type(self), (self.message,), {"achieved_bits": self.achieved_bits}),
        )


class RefinementError(PrecisionError):
    """Newton refinement of a zero ordinate did not converge."""

    def __init__(
        self,
        message: str,
        *,
        last_iterate: str,
        residual: str,
        iterations: int,
        achieved_bits: float | None = None,
    ) -> None:
        self.reason = message
        self.last_iterate = last_iterate
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"{message}: last iterate {last_iterate}, |zeta| = {residual} "
            f"after {iterations} iterations",
            achieved_bits=achieved_bits,
        )

    def __reduce__(self) -> tuple:
        fields = {
            "last_iterate": self.last_iterate,
            "residual": self.residual,
            "iterations": self.iterations,
            "achieved_bits": self.achieved_bits,
        }
        return (_rebuild, (type(self), (self.reason,), fields))


class EvaluationError(ZetaMomentsError):
    """A per-zero evaluation failed; records the offending ordinate."""

    def __init__(self, ordinate: str, cause: ZetaMomentsError) -> None:
        self.ordinate = ordinate
        self.cause = cause
        self.exit_code = cause.exit_code
        super().__init__(f"evaluation failed at gamma = {ordinate}: {cause}")

    def __reduce__(self) -> tuple:
        # raised inside worker processes; rebuilt in the parent from its fields
        return (type(self), (self.ordinate, self.cause))
