"""Coefficient rings for Laurent series about s = 1.

A ring supplies the constants, conversions and inverses that series arithmetic
needs, plus the Stieltjes constants in its own representation. Elements
themselves are plain Python objects (``ExactPoly`` or mpmath numbers) and use
their native operators.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any

from ..errors import RingMismatchError, UnsupportedOperationError
from ..precision import mp_context, require_precision
from .exact_poly import ExactPoly


class Ring(ABC):
    """Common interface of the exact and numeric coefficient rings."""

    is_exact: bool = False

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def from_fraction(self, value: int | Fraction) -> Any:
        """Embed an exact rational into the ring."""

    @abstractmethod
    def gamma(self, n: int) -> Any:
        """The Stieltjes constant gamma_n as a ring element."""

    @abstractmethod
    def inverse(self, value: Any) -> Any:
        """Multiplicative inverse; unsupported elements raise."""

    @abstractmethod
    def contains(self, value: Any) -> bool:
        """Whether ``value`` is an element of this ring."""

    def scale(self, value: Any, factor: int | Fraction) -> Any:
        """Multiply an element by an exact rational factor."""
        return value * self.from_fraction(factor)

    def is_exact_zero(self, value: Any) -> bool:
        """True only for values that are exactly zero, never for near-zeros."""
        return False

    def check(self, value: Any) -> Any:
        if not self.contains(value):
            raise RingMismatchError(
                f"{type(value).__name__} value is not an element of {self}"
            )
        return value


class ExactRing(Ring):
    """Polynomials in the Stieltjes symbols with rational coefficients."""

    is_exact = True

    @property
    def zero(self) -> ExactPoly:
        return ExactPoly()

    @property
    def one(self) -> ExactPoly:
        return ExactPoly.constant(1)

    def from_fraction(self, value: int | Fraction) -> ExactPoly:
        return ExactPoly.constant(value)

    def gamma(self, n: int) -> ExactPoly:
        return ExactPoly.symbol(n)

    def inverse(self, value: ExactPoly) -> ExactPoly:
        if value.is_zero:
            raise UnsupportedOperationError("zero has no inverse in the exact ring")
        if not value.is_constant:
            raise UnsupportedOperationError(
                f"non-constant leading coefficient {value} is not invertible"
            )
        return ExactPoly.constant(1 / value.constant_term)

    def contains(self, value: Any) -> bool:
        return isinstance(value, ExactPoly)

    def scale(self, value: ExactPoly, factor: int | Fraction) -> ExactPoly:
        return value.scale(factor)

    def is_exact_zero(self, value: ExactPoly) -> bool:
        return value.is_zero

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactRing)

    def __hash__(self) -> int:
        return hash(ExactRing)

    def __repr__(self) -> str:
        return "ExactRing()"


class RealRing(Ring):
    """Arbitrary-precision reals at a fixed working precision."""

    def __init__(self, precision_bits: int) -> None:
        require_precision(precision_bits)
        self.precision_bits = precision_bits
        self.ctx = mp_context(precision_bits)

    @property
    def zero(self) -> Any:
        return self.ctx.mpf(0)

    @property
    def one(self) -> Any:
        return self.ctx.mpf(1)

    def from_fraction(self, value: int | Fraction) -> Any:
        q = Fraction(value)
        return self.ctx.mpf(q.numerator) / q.denominator

    def gamma(self, n: int) -> Any:
        from ..stieltjes import load_bundled

        return self.ctx.convert(load_bundled(n).value(n, self.ctx))

    def inverse(self, value: Any) -> Any:
        if value == 0:
            raise UnsupportedOperationError("zero has no inverse")
        return 1 / value

    def contains(self, value: Any) -> bool:
        return isinstance(value, self.ctx.mpf)

    def is_exact_zero(self, value: Any) -> bool:
        return value == 0

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is type(self)
            and other.precision_bits == self.precision_bits  # type: ignore[attr-defined]
        )

    def __hash__(self) -> int:
        return hash((type(self), self.precision_bits))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.precision_bits})"


class ComplexRing(RealRing):
    """Arbitrary-precision complex numbers at a fixed working precision."""

    @property
    def zero(self) -> Any:
        return self.ctx.mpc(0)

    @property
    def one(self) -> Any:
        return self.ctx.mpc(1)

    def from_fraction(self, value: int | Fraction) -> Any:
        return self.ctx.mpc(super().from_fraction(value))

    def gamma(self, n: int) -> Any:
        return self.ctx.mpc(super().gamma(n))

    def contains(self, value: Any) -> bool:
        return isinstance(value, self.ctx.mpc)


EXACT = ExactRing()


def ring_for(name: str, precision_bits: int = 128) -> Ring:
    """Look a ring up by its CLI name: ``exact``, ``real`` or ``complex``."""
    if name == "exact":
        return EXACT
    if name == "real":
        return RealRing(precision_bits)
    if name == "complex":
        return ComplexRing(precision_bits)
    raise UnsupportedOperationError(f"unknown ring {name!r}")
