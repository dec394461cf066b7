"""Sparse multivariate polynomials over the rationals in the Stieltjes symbols.

An ``ExactPoly`` is a map from exponent vectors over ``g0, g1, ...`` (standing for
the Stieltjes constants gamma_0, gamma_1, ...) to ``Fraction`` coefficients in
lowest terms. Exponent vectors are stored with trailing zeros trimmed so equal
monomials always share one key.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from types import MappingProxyType
from typing import Any

from ..errors import InvalidArgumentError

Monomial = tuple[int, ...]
Scalar = int | Fraction

_SYMBOL = re.compile(r"^g(\d+)(?:\^(\d+))?$")
_RATIONAL = re.compile(r"^(\d+)(?:/(\d+))?$")


def _trim(exponents: Iterable[int]) -> Monomial:
    exps = list(exponents)
    while exps and exps[-1] == 0:
        exps.pop()
    if any(e < 0 for e in exps):
        raise InvalidArgumentError(f"negative exponent in monomial {tuple(exps)}")
    return tuple(exps)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _sort_key(mono: Monomial) -> tuple[int, Monomial]:
    # total degree, then higher powers of lower-index symbols first
    return sum(mono), tuple(-e for e in mono)


class ExactPoly:
    """Immutable polynomial in ``g0..gK`` with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | None = None) -> None:
        collected: dict[Monomial, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            if not isinstance(coeff, int | Fraction):
                raise InvalidArgumentError(
                    f"ExactPoly coefficients must be int or Fraction, "
                    f"got {type(coeff).__name__}"
                )
            mono = _trim(exponents)
            collected[mono] = collected.get(mono, Fraction(0)) + Fraction(coeff)
        self._terms: dict[Monomial, Fraction] = {
            mono: coeff for mono, coeff in collected.items() if coeff != 0
        }
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar) -> ExactPoly:
        """The constant polynomial ``value``."""
        return cls({(): value})

    @classmethod
    def symbol(cls, index: int, power: int = 1) -> ExactPoly:
        """The monomial ``g{index}^power``."""
        if index < 0:
            raise InvalidArgumentError(f"symbol index must be >= 0, got {index}")
        return cls({(0,) * index + (power,): 1})

    @classmethod
    def _from_clean(cls, terms: dict[Monomial, Fraction]) -> ExactPoly:
        poly = cls.__new__(cls)
        poly._terms = {m: c for m, c in terms.items() if c != 0}
        poly._hash = None
        return poly

    @classmethod
    def parse(cls, text: str) -> ExactPoly:
        """Parse the canonical text form (and hand-written variants of it).

        Accepts sums of terms such as ``-10/3*g0^2*g1 + 4/45 - g2``. Whitespace
        is ignored; a coefficient may appear anywhere among the factors.
        """
        compact = "".join(text.split())
        if not compact:
            raise InvalidArgumentError("cannot parse an empty polynomial")
        if compact == "0":
            return cls()
        pieces = re.findall(r"[+-]?[^+-]+", compact)
        if "".join(pieces) != compact:
            raise InvalidArgumentError(f"malformed polynomial text: {text!r}")

        terms: dict[Monomial, Fraction] = {}
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            if not body:
                raise InvalidArgumentError(f"dangling sign in polynomial: {text!r}")
            coeff = Fraction(sign)
            exponents: dict[int, int] = {}
            for factor in body.split("*"):
                if match := _RATIONAL.match(factor):
                    num, den = match.groups()
                    if den is not None and int(den) == 0:
                        raise InvalidArgumentError(f"zero denominator in {text!r}")
                    coeff *= Fraction(int(num), int(den) if den else 1)
                elif match := _SYMBOL.match(factor):
                    index, power = int(match.group(1)), int(match.group(2) or 1)
                    exponents[index] = exponents.get(index, 0) + power
                else:
                    raise InvalidArgumentError(
                        f"unrecognized factor {factor!r} in {text!r}"
                    )
            width = max(exponents, default=-1) + 1
            mono = _trim(exponents.get(i, 0) for i in range(width))
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return cls._from_clean(terms)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        """Read-only view of the monomial-to-coefficient map."""
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def symbols(self) -> set[int]:
        """Indices of the Stieltjes symbols that occur with nonzero exponent."""
        return {i for mono in self._terms for i, e in enumerate(mono) if e}

    def weight_homogeneous(self) -> bool:
        """Whether every monomial has the same weight, g_n counting as n + 1."""
        weights = {sum((i + 1) * e for i, e in enumerate(m)) for m in self._terms}
        return len(weights) <= 1

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        for mono in sorted(self._terms, key=_sort_key):
            yield mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> ExactPoly | None:
        if isinstance(other, ExactPoly):
            return other
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return ExactPoly.constant(other)
        return None

    def __add__(self, other: Any) -> ExactPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return ExactPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> ExactPoly:
        return ExactPoly._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> ExactPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Any) -> ExactPoly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Any) -> ExactPoly:
        if isinstance(other, int | Fraction) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return ExactPoly._from_clean(out)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> ExactPoly:
        """Multiply every coefficient by the rational ``factor``."""
        q = Fraction(factor)
        if q == 0:
            return ExactPoly()
        return ExactPoly._from_clean({m: c * q for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation and text ----------------------------------------------

    def evaluate(self, values: Mapping[int, Any] | Sequence[Any], ctx: Any) -> Any:
        """Evaluate at numeric symbol values inside the mpmath context ``ctx``.

        Rational coefficients are converted exactly (numerator / denominator in
        ``ctx``), so the only rounding is that of ``ctx`` itself.
        """
        total = ctx.zero
        for mono, coeff in self._terms.items():
            term = ctx.mpf(coeff.numerator) / coeff.denominator
            for index, exp in enumerate(mono):
                if exp:
                    try:
                        value = values[index]
                    except (KeyError, IndexError) as exc:
                        raise InvalidArgumentError(
                            f"no numeric value supplied for g{index}"
                        ) from exc
                    term *= ctx.convert(value) ** exp
            total += term
        return total

    def to_canonical(self) -> str:
        """Canonical text with monomials ordered by total degree.

        Within one degree, higher powers of lower-index symbols come first, so
        ``1 - 2*g0 - 2*g1 + g0^2``. Tokens read ``num/den*g0^a*g1^b``.
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in self:
            factors = [
                f"g{i}" if e == 1 else f"g{i}^{e}" for i, e in enumerate(mono) if e
            ]
            magnitude = abs(coeff)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            token = "*".join(factors)
            if not parts:
                parts.append(f"-{token}" if coeff < 0 else token)
            else:
                parts.append(f"- {token}" if coeff < 0 else f"+ {token}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_canonical()

    def __repr__(self) -> str:
        return f"ExactPoly({self.to_canonical()!r})"
