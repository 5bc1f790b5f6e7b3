"""Generating functions and q-series identities, all as truncated series.

Every infinite product here is a finite product of sparse binomial
factors once truncated at order N, so expansions go through the
O(N)-per-factor passes of TruncSeries.mul_binomial.  The module is
self-contained on the series side; cross-checks against the partition
sums live in the verification suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .arith import rep_count
from .cyclotomic import laurent_eval_at_root
from .errors import TheoremViolation
from .laurent import LaurentPoly, Q, QINV, geometric_sum
from .series import TruncSeries, binomial_product

_QM1SQ = LaurentPoly((1, -2, 1), 0)  # (q-1)^2


# -- the three ideal-count generating functions ---------------------------------

def gf_C(order: int) -> TruncSeries:
    """prod (1-t^i)^2 / ((1-q t^i)(1-1/q t^i)); [t^n] is poly_C(n)/q^n."""
    s = TruncSeries.one(order)
    for i in range(1, order + 1):
        s = s.mul_binomial(1, i, 2).mul_binomial(Q, i, -1).mul_binomial(QINV, i, -1)
    return s


def gf_B(order: int) -> TruncSeries:
    """prod (1-t^i)/(1-q t^i); [t^n] is (q-1) * poly_Bcirc(n)."""
    s = TruncSeries.one(order)
    for i in range(1, order + 1):
        s = s.mul_binomial(1, i, 1).mul_binomial(Q, i, -1)
    return s


def gf_A(order: int) -> TruncSeries:
    """prod 1/(1 - q^(i+1) s^i); [s^n] is poly_A(n)."""
    s = TruncSeries.one(order)
    for i in range(1, order + 1):
        s = s.mul_binomial(LaurentPoly.term(1, i + 1), i, -1)
    return s


def gf_rect_factor(i: int, order: int) -> tuple[TruncSeries, TruncSeries]:
    """Both sides of the one-variable factor of the cell product formula.

    Left: 1 + sum_e (q-1)^2 q^(e(i-1)) (1 + q^2 + ... + q^(2e-2)) s^e,
    the cell counts of the rectangular partitions with part size i.
    Right: (1 - q^i s)^2 / ((1 - q^(i+1) s)(1 - q^(i-1) s)).
    The full multivariate identity is the product of these over
    independent variables s_i, so factorwise equality is equivalent.
    """
    if i < 1:
        raise ValueError("part size must be >= 1")
    lhs = TruncSeries.one(order)
    for e in range(1, order + 1):
        coeff = _QM1SQ * geometric_sum(e, step=2).shift(e * (i - 1))
        lhs = lhs + TruncSeries.term(coeff, e, order)
    rhs = binomial_product(
        [
            (LaurentPoly.term(1, i), 1, 2),
            (LaurentPoly.term(1, i + 1), 1, -1),
            (LaurentPoly.term(1, i - 1), 1, -1),
        ],
        order,
    )
    return lhs, rhs


# -- closed-form coefficient series ---------------------------------------------

def gf_a(i: int, order: int) -> TruncSeries:
    """sum_k (-1)^(k-1) t^(k(k+1)/2 + ki) / (1 - t^k); [t^n] = coeff_a(n, i)."""
    if i < 0:
        raise ValueError("i must be >= 0")
    coeffs = [0] * (order + 1)
    k = 1
    while k * (k + 1) // 2 + k * i <= order:
        sign = 1 if k % 2 else -1
        e = k * (k + 1) // 2 + k * i
        while e <= order:
            coeffs[e] += sign
            e += k
        k += 1
    return TruncSeries(coeffs, order)


def gf_c(i: int, order: int) -> TruncSeries:
    """Closed-form series with [t^n] = coeff_c(n, i)."""
    if i < 0:
        raise ValueError("i must be >= 0")
    coeffs = [0] * (order + 1)
    if i == 0:
        k = 1
        while k * (k + 1) // 2 <= order:
            coeffs[k * (k + 1) // 2] += 2 * (1 if k % 2 == 0 else -1)
            k += 1
    else:
        k = 1
        while k * (k + 2 * i - 1) // 2 <= order:
            sign = 1 if k % 2 == 0 else -1
            up = k * (k + 2 * i + 1) // 2
            dn = k * (k + 2 * i - 1) // 2
            if up <= order:
                coeffs[up] += sign
            coeffs[dn] -= sign
            k += 1
    return TruncSeries(coeffs, order)


def gf_P_closed(order: int) -> TruncSeries:
    """sum_k (-1)^(k-1) t^T (1+t^k) / ((1-q t^k)(1-t^k/q)), T = k(k+1)/2.

    [t^n] equals poly_P(n)/q^(n-1).
    """
    total = TruncSeries.zero(order)
    k = 1
    while k * (k + 1) // 2 <= order:
        T = k * (k + 1) // 2
        piece = TruncSeries.term(1, T, order) + TruncSeries.term(1, T + k, order)
        piece = piece.mul_binomial(Q, k, -1).mul_binomial(QINV, k, -1)
        total = total + (piece if k % 2 else -piece)
        k += 1
    return total


# -- classical identities ---------------------------------------------------------

def gauss_product(order: int) -> TruncSeries:
    """prod (1-t^i)/(1+t^i)."""
    s = TruncSeries.one(order)
    for i in range(1, order + 1):
        s = s.mul_binomial(1, i, 1).mul_binomial(-1, i, -1)
    return s


def gauss_theta(order: int) -> TruncSeries:
    """sum over all integers k of (-1)^k t^(k^2)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    k = 1
    while k * k <= order:
        coeffs[k * k] = 2 * (1 if k % 2 == 0 else -1)
        k += 1
    return TruncSeries(coeffs, order)


def euler_odd_product(order: int) -> TruncSeries:
    """prod 1/(1 - s^(2m-1))."""
    s = TruncSeries.one(order)
    for m in range(1, (order + 1) // 2 + 1):
        s = s.mul_binomial(1, 2 * m - 1, -1)
    return s


def euler_distinct_product(order: int) -> TruncSeries:
    """prod (1 + s^i)."""
    s = TruncSeries.one(order)
    for i in range(1, order + 1):
        s = s.mul_binomial(-1, i, 1)
    return s


# -- theta functions ---------------------------------------------------------------

def theta_phi(order: int) -> TruncSeries:
    """sum over all integers n of t^(n^2)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= order:
        coeffs[n * n] = 2
        n += 1
    return TruncSeries(coeffs, order)


def theta_phi_signed(order: int) -> TruncSeries:
    """phi(-t): sum of (-1)^n t^(n^2)."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    n = 1
    while n * n <= order:
        coeffs[n * n] = 2 * (1 if n % 2 == 0 else -1)
        n += 1
    return TruncSeries(coeffs, order)


def theta_psi(order: int) -> TruncSeries:
    """sum over n >= 0 of t^(n(n+1)/2)."""
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        coeffs[n * (n + 1) // 2] = 1
        n += 1
    return TruncSeries(coeffs, order)


# -- eta quotients ------------------------------------------------------------------

@dataclass(frozen=True)
class EtaQuotient:
    """prod over (m, e) of eta(t^m)^e with eta(t) = t^(1/24) prod (1 - t^n)."""

    factors: tuple[tuple[int, int], ...]

    @property
    def prefactor_numerator(self) -> int:
        return sum(m * e for m, e in self.factors)

    @property
    def prefactor(self) -> int:
        num = self.prefactor_numerator
        if num % 24 or num < 0:
            raise ValueError(f"prefactor exponent {num}/24 is not a nonnegative integer")
        return num // 24


def eta_quotient_expand(spec: EtaQuotient, order: int) -> TruncSeries:
    """Integer q-expansion of an eta quotient with integral prefactor."""
    shift = spec.prefactor
    s = TruncSeries.one(order)
    for m, e in spec.factors:
        for k in range(1, order // m + 1):
            s = s.mul_binomial(1, m * k, e)
    return s.shift(shift) if shift else s


#: the eta quotient equal to 1 + sum C_n(w)/w^n t^n at a root of unity of order d
ETA_BY_ORDER: dict[int, EtaQuotient] = {
    2: EtaQuotient(((1, 4), (2, -2))),
    3: EtaQuotient(((1, 3), (3, -1))),
    4: EtaQuotient(((1, 2), (2, 1), (4, -1))),
    6: EtaQuotient(((1, 1), (2, 1), (3, 1), (6, -1))),
}


def _specialize_at_order(c, d: int, n: int) -> int:
    """Value of a t^n coefficient of gf_C at a root of unity of order d."""
    poly = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
    if d == 2:
        return poly(-1)
    value = laurent_eval_at_root(poly, d)
    if not value.is_rational():
        raise TheoremViolation(
            f"[t^{n}] specialized at a root of order {d} is not an integer: {value}"
        )
    return value.rational_part()


def gf_root_of_unity(d: int, order: int) -> TruncSeries:
    """Integer series 1 + sum a_d(n) t^n, with the eta quotient asserted equal.

    The coefficients come from specializing gf_C at a root of unity of
    order d (exact cyclotomic arithmetic for d in {3,4,6}, q = -1 for
    d = 2); a non-integer coefficient raises TheoremViolation.
    """
    if d not in (2, 3, 4, 6):
        raise ValueError(f"order must be one of 2, 3, 4, 6, got {d}")
    base = gf_C(order)
    ints = TruncSeries([_specialize_at_order(c, d, n) for n, c in enumerate(base.coeffs)], order)
    eta = eta_quotient_expand(ETA_BY_ORDER[d], order)
    if ints != eta:
        mismatch = next(i for i in range(order + 1) if ints.coeffs[i] != eta.coeffs[i])
        raise TheoremViolation(f"eta quotient mismatch for d={d} at t^{mismatch}")
    return ints


# -- identity reports ------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    name: str
    order: int
    ok: bool
    first_mismatch: int | None = None


def _compare(name: str, order: int, lhs: TruncSeries, rhs: TruncSeries) -> IdentityReport:
    for i in range(order + 1):
        if lhs.coeffs[i] != rhs.coeffs[i]:
            return IdentityReport(name, order, False, i)
    return IdentityReport(name, order, True)


def somos_identity_check(order: int) -> list[IdentityReport]:
    """The two theta-product identities for the order-4 values, plus the
    representation-count and sign-rule consequences."""
    a4 = gf_root_of_unity(4, order)
    phi_signed = theta_phi_signed(order)
    phi2_signed = phi_signed.scale_variable(2)
    phi = theta_phi(order)
    phi2 = phi.scale_variable(2)

    reports = [
        _compare("a4-series = phi(-q) phi(-q^2)", order, a4, phi_signed * phi2_signed),
        _compare(
            "|a4|-series = phi(q) phi(q^2)",
            order,
            a4.map_coeffs(abs),
            phi * phi2,
        ),
    ]

    rep_mismatch = next(
        (n for n in range(1, order + 1) if abs(a4.coeffs[n]) != rep_count("x2+2y2", n)),
        None,
    )
    reports.append(IdentityReport("|a4(n)| = #(x^2 + 2y^2 = n)", order, rep_mismatch is None, rep_mismatch))

    sign_mismatch = next(
        (
            n
            for n in range(1, order + 1)
            if a4.coeffs[n] != (-1) ** ((n + 1) // 2) * abs(a4.coeffs[n])
        ),
        None,
    )
    reports.append(IdentityReport("a4 sign rule (-1)^floor((n+1)/2)", order, sign_mismatch is None, sign_mismatch))
    return reports


def phi_psi_splitting(order: int) -> IdentityReport:
    """phi(t^4) + 2 t psi(t^8) = phi(t)."""
    lhs = theta_phi(order).scale_variable(4) + theta_psi(order).scale_variable(8).shift(1) * 2
    return _compare("phi(t^4) + 2t psi(t^8) = phi(t)", order, lhs, theta_phi(order))


def a6_support_scan(order: int) -> list[int]:
    """Indices n <= order with a6(n) != 0 although n is not a sum of two squares.

    Empirical observation only; expected to come back empty.
    """
    a6 = gf_root_of_unity(6, order)
    return [
        n
        for n in range(1, order + 1)
        if a6.coeffs[n] != 0 and rep_count("x2+y2", n) == 0
    ]
