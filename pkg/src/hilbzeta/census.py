"""Cell cardinalities and the ideal-counting polynomial families.

Five families are exposed, all exact polynomials in q:

* poly_A(n): ideals of codimension n in the polynomial ring k[x,y]
* poly_B(n): same for the partial localization k[x,y,1/y]
* poly_Bcirc(n): the reduced form with B_n = (q-1) q^n Bcirc_n
* poly_C(n): same for the Laurent ring k[x,y,1/x,1/y] (the torus)
* poly_P(n): the reduced form with C_n = (q-1)^2 P_n

Each family is a sum of per-partition cell cardinalities; the sums are
evaluated by grouping partitions with equal multiplicity signature,
which the cell formulas cannot distinguish.  Independent closed-form
routes (poly_C_from_c, poly_P_from_a, poly_P_even_form) are provided so
the package can cross-check itself; they share no code with the sums.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .laurent import LaurentPoly, Q, geometric_sum
from .partitions import Partition, length_distribution, signature_tally

_QM1 = LaurentPoly((-1, 1), 0)  # q - 1
_Q2M1 = LaurentPoly((-1, 0, 1), 0)  # q^2 - 1


@functools.lru_cache(maxsize=None)
def _qm1_pow(k: int) -> LaurentPoly:
    return _QM1**k


@functools.lru_cache(maxsize=None)
def _even_geometric(d: int) -> LaurentPoly:
    """(q^(2d) - 1)/(q^2 - 1), computed by exact division (aborts if inexact)."""
    return (LaurentPoly.term(1, 2 * d) - 1).divexact(_Q2M1)


@functools.lru_cache(maxsize=None)
def _invertible_core(sig: tuple[int, ...]) -> LaurentPoly:
    """prod over d in sig of (q-1)^2 (q^(2d)-1)/(q^2-1), shared across cells."""
    if len(sig) > 1:
        acc = _invertible_core(sig[:-1])
    else:
        acc = LaurentPoly((1,), 0)
    return acc * (_qm1_pow(2) * _even_geometric(sig[-1]))


# -- per-cell cardinalities ---------------------------------------------------

def cell_card_affine(lam: Partition) -> LaurentPoly:
    """Points of the affine cell: q^(n + ell)."""
    return LaurentPoly.term(1, lam.n + lam.ell)


def cell_card_semi_invertible(lam: Partition) -> LaurentPoly:
    """Points of the cell with y acting invertibly: (q-1)^v q^(n+ell-v)."""
    return _qm1_pow(lam.v).shift(lam.n + lam.ell - lam.v)


def cell_card_invertible(lam: Partition) -> LaurentPoly:
    """Points of the cell with x and y acting invertibly.

    (q-1)^(2v) q^(n-ell) prod over d_i >= 1 of (q^(2 d_i) - 1)/(q^2 - 1);
    each quotient is an exact division and aborts loudly otherwise.
    """
    sig = tuple(sorted(d for d in lam.d if d >= 1))
    return _invertible_core(sig).shift(lam.n - lam.ell)


# -- partition-sum routes -----------------------------------------------------

def _accumulated_sum(n: int, card_of_cell) -> LaurentPoly:
    """Sum card_of_cell over all partitions of n, grouped by signature."""
    span: list[int] = [0] * (2 * n + 1)
    for count, rep in signature_tally(n).values():
        for e, c in card_of_cell(rep).items():
            span[e] += count * c
    return LaurentPoly(span, 0)


def poly_A(n: int) -> LaurentPoly:
    """Codimension-n ideal count for k[x,y]: sum of q^(n+ell) over partitions."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    dist = length_distribution(n)
    return LaurentPoly(dist, 0).shift(n)


def poly_B(n: int) -> LaurentPoly:
    """Codimension-n ideal count for k[x,y,1/y]."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _accumulated_sum(n, cell_card_semi_invertible)


def poly_Bcirc(n: int) -> LaurentPoly:
    """Reduced count: sum of (q-1)^(v-1) q^(ell-v) over partitions of n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    span: list[int] = [0] * n
    for count, rep in signature_tally(n).values():
        for e, c in _qm1_pow(rep.v - 1).shift(rep.ell - rep.v).items():
            span[e] += count * c
    return LaurentPoly(span, 0)


def poly_C(n: int) -> LaurentPoly:
    """Codimension-n ideal count for the Laurent ring, summed over cells."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _accumulated_sum(n, cell_card_invertible)


def poly_P(n: int) -> LaurentPoly:
    """poly_C(n) / (q-1)^2, the division being exact by construction."""
    return poly_C(n).divexact(_QM1 * _QM1)


# -- closed-form coefficient routes --------------------------------------------

def is_trapezoidal(n: int, i: int) -> int | None:
    """The k >= 1 with n = (i+1) + (i+2) + ... + (i+k), if one exists.

    Integer-exact: n is i-trapezoidal iff 8n + (2i+1)^2 is a perfect
    square, necessarily odd.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    disc = 8 * n + (2 * i + 1) ** 2
    s = math.isqrt(disc)
    if s * s != disc:
        return None
    return (s - (2 * i + 1)) // 2


def coeff_c(n: int, i: int) -> int:
    """Coefficient of q^(n+i) (and of q^(n-i)) in poly_C(n), in {-2,...,2}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= i <= n:
        raise ValueError(f"i must be in [0, {n}], got {i}")
    if i == 0:
        k = is_trapezoidal(n, 0)
        return 2 * (-1) ** k if k else 0
    k_up = is_trapezoidal(n, i)  # n = k(k + 2i + 1)/2
    k_dn = is_trapezoidal(n, i - 1)  # n = k(k + 2i - 1)/2
    if k_up and k_dn:
        raise AssertionError(f"trapezoidal cases not exclusive at (n={n}, i={i})")
    if k_up:
        return (-1) ** k_up
    if k_dn:
        return (-1) ** (k_dn - 1)
    return 0


def coeff_a(n: int, i: int) -> int:
    """Number of divisors d of n with (i + sqrt(2n+i^2))/2 < d <= i + sqrt(2n+i^2).

    The radical comparisons are carried out on squared integers:
    the lower bound is 2d - i > 0 and 2d(d - i) > n, the upper bound is
    d <= i or d(d - 2i) <= 2n.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if i >= n:
        return 0
    count = 0
    for d in range(1, n + 1):
        if n % d:
            continue
        if 2 * d - i > 0 and 2 * d * (d - i) > n and (d <= i or d * (d - 2 * i) <= 2 * n):
            count += 1
    return count


def poly_C_from_c(n: int) -> LaurentPoly:
    """Assemble poly_C(n) from the coefficient rule; palindromic around q^n."""
    items = {n: coeff_c(n, 0)}
    for i in range(1, n + 1):
        c = coeff_c(n, i)
        if c:
            items[n + i] = c
            items[n - i] = c
    return LaurentPoly.from_coeff_map(items)


def poly_P_from_a(n: int) -> LaurentPoly:
    """Assemble poly_P(n) from the divisor counts; palindromic around q^(n-1)."""
    items = {n - 1: coeff_a(n, 0)}
    for i in range(1, n):
        a = coeff_a(n, i)
        if a:
            items[n - 1 + i] = a
            items[n - 1 - i] = a
    return LaurentPoly.from_coeff_map(items)


def poly_P_even_form(n: int) -> LaurentPoly:
    """poly_P(n) via the signed interval sums for P_n(q^2).

    P_n(q^2) is the sum over factorizations k*m = 2n with k < m of
    opposite parity of (-1)^(k-1) * (q^lo + q^(lo+2) + ... + q^hi) with
    lo = 2n-1+k-m and hi = 2n-3+m-k; compressing q^2 -> q recovers P_n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    acc = LaurentPoly()
    two_n = 2 * n
    for k in range(1, two_n + 1):
        if two_n % k:
            continue
        m = two_n // k
        if k >= m or (k - m) % 2 == 0:
            continue
        lo = two_n - 1 + k - m
        hi = two_n - 3 + m - k
        block = geometric_sum((hi - lo) // 2 + 1, step=2, start=lo)
        acc = acc + ((-1) ** (k - 1)) * block
    return acc.compress_power(2)


# -- valuation word -------------------------------------------------------------

def conjectured_valuation_word(length: int) -> str:
    """Prefix of the word 0 (0 1^(2n) 0 2^n) for n = 1, 2, ..."""
    pieces = ["0"]
    total = 1
    block = 1
    while total < length:
        piece = "0" + "1" * (2 * block) + "0" + "2" * block
        pieces.append(piece)
        total += len(piece)
        block += 1
    return "".join(pieces)[:length]


@dataclass(frozen=True)
class ValuationWordReport:
    word: str
    conjecture: str
    agrees: bool
    first_mismatch: int | None  # 1-based index


def valuation_word(limit: int) -> ValuationWordReport:
    """Lowest exponents of poly_Bcirc(n) for n <= limit, as a word over {0,1,2}.

    The agreement flag against the conjectured word is empirical data,
    not a theorem.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    vals = []
    for n, coeff in enumerate(_bcirc_polys(limit), start=1):
        vals.append(str(coeff.valuation))
    word = "".join(vals)
    conj = conjectured_valuation_word(limit)
    mismatch = next((i + 1 for i in range(limit) if word[i] != conj[i]), None)
    return ValuationWordReport(word, conj, mismatch is None, mismatch)


def _bcirc_polys(limit: int) -> list[LaurentPoly]:
    """poly_Bcirc(1..limit) via the product expansion of the generating series.

    Equivalent to the partition sums (cross-checked in the test suite)
    but usable far beyond the range where enumerating partitions is sane.
    """
    from .series import TruncSeries

    series = TruncSeries.one(limit)
    for i in range(1, limit + 1):
        series = series.mul_binomial(1, i, 1).mul_binomial(Q, i, -1)
    out = []
    for n in range(1, limit + 1):
        c = series.coeffs[n]
        poly = c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
        out.append(poly.divexact(_QM1))
    return out


# -- growth -------------------------------------------------------------------

def growth_gap(n: int) -> LaurentPoly:
    """poly_A(n) - poly_C(n); degree 2n-1 with leading coefficient 2."""
    return poly_A(n) - poly_C(n)
