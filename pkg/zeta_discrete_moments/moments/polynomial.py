"""The moment polynomial P_{mu,nu}(x) of the discrete mixed second moment.

For 1 <= mu, nu the sum over zeros 0 < gamma <= T of zeta^(mu)(rho) zeta^(nu)(1-rho)
is asymptotic to (T/2pi) P_{mu,nu}(log T/2pi), where P has degree mu+nu+2 and

    A_m = sum_{k=0}^{nu} (-1)^nu C(nu,k) C1^(mu,nu)(m,k)
        + sum_{k=0}^{mu} (-1)^mu C(mu,k) (C1^(nu,mu)(m,k) + C2^(mu,nu)(m,k)).

C1 and C2 are finite combinations of the Laurent coefficients c_j and d_j; every
factorial and binomial factor is an exact rational, so the only ring operations
are rational scaling and addition.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any

from ..errors import InvalidArgumentError, OutOfRangeError
from ..series import EXACT, ExactPoly, LaurentSeries, RealRing, Ring
from ..stieltjes import StieltjesTable, load_bundled
from .coefficients import (
    CoefficientKind,
    CoefficientSet,
    c_coefficients,
    d_coefficients,
)

logger = logging.getLogger(__name__)


class BranchPolicy(str, Enum):
    """Which of the two C1/C2 formula branches to use."""

    STATED = "stated"
    FIRST = "first"
    SECOND = "second"


def _inv_factorial(n: int) -> Fraction:
    """1/n!, with 1/n! = 0 for negative n."""
    return Fraction(0) if n < 0 else Fraction(1, math.factorial(n))


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _use_first_branch(policy: BranchPolicy, stated: bool) -> bool:
    if policy is BranchPolicy.FIRST:
        return True
    if policy is BranchPolicy.SECOND:
        return False
    return stated


def _branch_sum(
    values: CoefficientSet,
    mu: int,
    nu: int,
    upper: int,
    shift: int,
) -> Any:
    """sum_{j=0}^{upper} (-1)^(mu+nu-j) (mu+nu+1-j)!/(shift-j)! v_j."""
    if upper > mu + nu + 1:
        raise InvalidArgumentError(
            f"branch sum to j = {upper} passes mu + nu + 1 = {mu + nu + 1}"
        )
    ring = values.ring
    total = ring.zero
    for j in range(upper + 1):
        factor = (
            _sign(mu + nu - j)
            * math.factorial(mu + nu + 1 - j)
            * _inv_factorial(shift - j)
        )
        if factor:
            total = total + ring.scale(values[j], factor)
    return total


def _check_m(name: str, mu: int, nu: int, m: int) -> None:
    if mu < 1 or nu < 1:
        raise InvalidArgumentError(f"{name}: mu and nu must be >= 1, got ({mu}, {nu})")
    if not 0 <= m <= mu + nu + 2:
        raise OutOfRangeError(f"{name}: m must lie in 0..{mu + nu + 2}, got {m}")


def C1(
    mu: int,
    nu: int,
    m: int,
    k: int,
    c_set: CoefficientSet,
    policy: BranchPolicy = BranchPolicy.STATED,
) -> Any:
    """C1^(mu,nu)(m, k) from c^(mu,k).

    For m >= nu-k the j-sum runs to mu+nu+1-m and the term
    c_{mu+nu+2-m}/(k+m-nu)! is added; for m <= nu-k-1 it runs to mu+k+2.
    """
    _check_m("C1", mu, nu, m)
    if not 0 <= k <= nu:
        raise OutOfRangeError(f"C1: k must lie in 0..{nu}, got {k}")
    if not c_set.matches(CoefficientKind.C, mu, k):
        raise InvalidArgumentError(
            f"C1 needs c^({mu},{k}), got {c_set.kind.value}^({c_set.order},{c_set.k})"
        )
    first = _use_first_branch(policy, m >= nu - k)
    upper = mu + nu + 1 - m if first else mu + k + 2
    ring = c_set.ring
    value = ring.scale(
        _branch_sum(c_set, mu, nu, upper, mu + k + 2),
        Fraction(_sign(m) * (nu - k), math.factorial(m)),
    )
    if first:
        extra = _inv_factorial(k + m - nu)
        if extra:
            value = value + ring.scale(c_set[mu + nu + 2 - m], extra)
    return value


def C2(
    mu: int,
    nu: int,
    m: int,
    k: int,
    d_set: CoefficientSet,
    policy: BranchPolicy = BranchPolicy.STATED,
) -> Any:
    """C2^(mu,nu)(m, k) from d^(nu,k).

    For m >= mu-k+1 the j-sum runs to mu+nu+1-m and the term
    d_{mu+nu+2-m}/(k+m-mu-1)! is added; otherwise it runs to nu+k+1.
    """
    _check_m("C2", mu, nu, m)
    if not 0 <= k <= mu:
        raise OutOfRangeError(f"C2: k must lie in 0..{mu}, got {k}")
    if not d_set.matches(CoefficientKind.D, nu, k):
        raise InvalidArgumentError(
            f"C2 needs d^({nu},{k}), got {d_set.kind.value}^({d_set.order},{d_set.k})"
        )
    first = _use_first_branch(policy, m >= mu - k + 1)
    upper = mu + nu + 1 - m if first else nu + k + 1
    ring = d_set.ring
    value = ring.scale(
        _branch_sum(d_set, mu, nu, upper, nu + k + 1),
        Fraction(_sign(m) * (mu - k + 1), math.factorial(m)),
    )
    if first:
        extra = _inv_factorial(k + m - mu - 1)
        if extra:
            value = value + ring.scale(d_set[mu + nu + 2 - m], extra)
    return value


@dataclass(frozen=True)
class MomentPolynomial:
    """Coefficients A_0..A_D of P_{mu,nu}; ``coeffs[m]`` multiplies x^m."""

    mu: int
    nu: int
    ring: Ring
    coeffs: tuple[Any, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise InvalidArgumentError("a moment polynomial needs a coefficient")
        for value in self.coeffs:
            self.ring.check(value)

    @property
    def degree(self) -> int:
        for m in range(len(self.coeffs) - 1, 0, -1):
            if not self.ring.is_exact_zero(self.coeffs[m]):
                return m
        return 0

    @property
    def leading(self) -> Any:
        return self.coeffs[self.degree]

    def __getitem__(self, m: int) -> Any:
        return self.coeffs[m]

    def __len__(self) -> int:
        return len(self.coeffs)

    def derivative(self) -> MomentPolynomial:
        """d/dx P."""
        shifted = [
            self.ring.scale(self.coeffs[m], m) for m in range(1, len(self.coeffs))
        ]
        return MomentPolynomial(
            mu=self.mu,
            nu=self.nu,
            ring=self.ring,
            coeffs=tuple(shifted) or (self.ring.zero,),
        )

    def evaluated(
        self, ctx: Any, table: StieltjesTable | None = None
    ) -> MomentPolynomial:
        """Numeric coefficients in ``ctx``; exact ones are evaluated at gamma_n."""
        ring = RealRing(ctx.prec)
        if not self.ring.is_exact:
            return MomentPolynomial(
                self.mu, self.nu, ring, tuple(ring.ctx.mpf(c) for c in self.coeffs)
            )
        needed = max((max(c.symbols(), default=0) for c in self.coeffs), default=0)
        gammas = (table or load_bundled(needed)).as_mapping(ring.ctx)
        return MomentPolynomial(
            self.mu,
            self.nu,
            ring,
            tuple(c.evaluate(gammas, ring.ctx) for c in self.coeffs),
        )

    def evaluate(self, x: Any, ctx: Any, table: StieltjesTable | None = None) -> Any:
        """P(x) by Horner's rule inside ``ctx``."""
        numeric = self.evaluated(ctx, table) if self.ring.is_exact else self
        point = ctx.convert(x)
        total = ctx.zero
        for coeff in reversed(numeric.coeffs):
            total = total * point + ctx.convert(coeff)
        return total

    def to_canonical_lines(self, digits: int = 30) -> list[str]:
        """One ``x^m: coefficient`` line per power, highest power first."""
        lines = []
        for m in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[m]
            if isinstance(coeff, ExactPoly):
                shown = coeff.to_canonical()
            else:
                shown = self.ring.ctx.nstr(coeff, digits)
            lines.append(f"x^{m}: {shown}")
        return lines


def _check_orders(mu: int, nu: int) -> None:
    if mu < 1 or nu < 1:
        raise InvalidArgumentError(
            f"mu and nu must be positive integers, got ({mu}, {nu})"
        )


@lru_cache(maxsize=128)
def assemble_polynomial(
    mu: int,
    nu: int,
    ring: Ring = EXACT,
    policy: BranchPolicy = BranchPolicy.STATED,
) -> MomentPolynomial:
    """P_{mu,nu} with coefficients in ``ring``."""
    _check_orders(mu, nu)
    count = mu + nu + 3
    c_mu = [c_coefficients(mu, k, count, ring) for k in range(nu + 1)]
    c_nu = [c_coefficients(nu, k, count, ring) for k in range(mu + 1)]
    d_nu = [d_coefficients(nu, k, count, ring) for k in range(mu + 1)]
    coeffs = []
    for m in range(mu + nu + 3):
        total = ring.zero
        for k in range(nu + 1):
            weight = _sign(nu) * math.comb(nu, k)
            total = total + ring.scale(C1(mu, nu, m, k, c_mu[k], policy), weight)
        for k in range(mu + 1):
            weight = _sign(mu) * math.comb(mu, k)
            inner = C1(nu, mu, m, k, c_nu[k], policy) + C2(
                mu, nu, m, k, d_nu[k], policy
            )
            total = total + ring.scale(inner, weight)
        coeffs.append(total)
    logger.debug("[assemble_polynomial] built P_{%d,%d} in %r", mu, nu, ring)
    return MomentPolynomial(mu=mu, nu=nu, ring=ring, coeffs=tuple(coeffs))


@lru_cache(maxsize=32)
def second_moment_polynomial(nu: int, ring: Ring = EXACT) -> MomentPolynomial:
    """P_{nu,nu} written as sum_k (-1)^nu C(nu,k) (2 C1(m,k) + C2(m,k))."""
    _check_orders(nu, nu)
    count = 2 * nu + 3
    c_sets = [c_coefficients(nu, k, count, ring) for k in range(nu + 1)]
    d_sets = [d_coefficients(nu, k, count, ring) for k in range(nu + 1)]
    coeffs = []
    for m in range(count):
        total = ring.zero
        for k in range(nu + 1):
            inner = ring.scale(C1(nu, nu, m, k, c_sets[k]), 2) + C2(
                nu, nu, m, k, d_sets[k]
            )
            total = total + ring.scale(inner, _sign(nu) * math.comb(nu, k))
        coeffs.append(total)
    return MomentPolynomial(mu=nu, nu=nu, ring=ring, coeffs=tuple(coeffs))


def density_polynomial(poly: MomentPolynomial) -> MomentPolynomial:
    """P + P', the integrand with (T/2pi) P(log T/2pi) = (1/2pi) int (P+P')(log t/2pi) dt."""
    derivative = poly.derivative().coeffs
    coeffs = tuple(
        c + derivative[m] if m < len(derivative) else c
        for m, c in enumerate(poly.coeffs)
    )
    return MomentPolynomial(mu=poly.mu, nu=poly.nu, ring=poly.ring, coeffs=coeffs)


def leading_coeff_closed_form(mu: int, nu: int) -> Fraction:
    """(-1)^(mu+nu) (1/(mu+nu+1) - 1/((mu+1)(nu+1)))."""
    _check_orders(mu, nu)
    return _sign(mu + nu) * (
        Fraction(1, mu + nu + 1) - Fraction(1, (mu + 1) * (nu + 1))
    )


def equal_order_closed_form(nu: int) -> Fraction:
    """nu^2 / ((2 nu + 1)(nu + 1)^2), the leading coefficient of P_{nu,nu}."""
    _check_orders(nu, nu)
    return Fraction(nu * nu, (2 * nu + 1) * (nu + 1) ** 2)


def residue_log_polynomial(series: LaurentSeries) -> list[Any]:
    """Coefficients b_n of Res_{s=1} series(s) Y^s = Y sum_n b_n (log Y)^n.

    With pole order P and leading coefficients a_j, b_{P-1-j} = a_j / (P-1-j)!.
    A series without a pole has zero residue and yields an empty list.
    """
    pole = series.pole_order
    if pole <= 0:
        return []
    if series.trunc_order < pole - 1:
        raise InvalidArgumentError(
            f"series known to {series.trunc_order} terms, residue needs {pole}"
        )
    ring = series.ring
    out: list[Any] = [ring.zero] * pole
    for j in range(pole):
        n = pole - 1 - j
        out[n] = ring.scale(series.coeffs[j], Fraction(1, math.factorial(n)))
    return out


def polynomial_from_strings(
    mu: int, nu: int, coeffs: Sequence[str]
) -> MomentPolynomial:
    """Exact polynomial from canonical coefficient strings, lowest power first."""
    return MomentPolynomial(
        mu=mu, nu=nu, ring=EXACT, coeffs=tuple(ExactPoly.parse(c) for c in coeffs)
    )
