"""Power series in t truncated at a fixed order, over a pluggable exact ring.

Coefficients may be Python ints, fractions.Fraction, LaurentPoly or
CyclotomicInt; plain ints 0 and 1 interoperate with every ring through
the rings' coercing operators, so a freshly built series starts with int
coefficients and densifies only as needed.

Besides generic ring operations the module provides the sparse-factor
helpers used by every infinite-product expansion in the package:
multiplying or dividing by (1 - c*t^m) is a single O(order) pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence


def _unit_inverse(c: Any):
    if isinstance(c, int):
        if c in (1, -1):
            return c
        raise ArithmeticError(f"integer {c} is not invertible")
    if isinstance(c, Fraction):
        if c == 0:
            raise ArithmeticError("zero constant term")
        return Fraction(1) / c
    inv = c.unit_inverse()
    if inv is None:
        raise ArithmeticError(f"constant term {c!r} is not a unit")
    return inv


class TruncSeries:
    """Coefficients of t^0 .. t^order; everything beyond is discarded."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Any], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = list(coeffs)[: order + 1]
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs: list[Any] = cs

    # -- constructors --------------------------------------------------------
    @staticmethod
    def one(order: int) -> "TruncSeries":
        return TruncSeries([1], order)

    @staticmethod
    def zero(order: int) -> "TruncSeries":
        return TruncSeries([], order)

    @staticmethod
    def term(c: Any, k: int, order: int) -> "TruncSeries":
        """c * t^k."""
        cs = [0] * (order + 1)
        if 0 <= k <= order:
            cs[k] = c
        return TruncSeries(cs, order)

    def copy(self) -> "TruncSeries":
        return TruncSeries(list(self.coeffs), self.order)

    # -- ring operations -----------------------------------------------------
    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError("mixed truncation orders")

    def __add__(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncSeries(cs, self.order)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: Any) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            self._check(other)
            return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)
        return self + (-other)

    def __rsub__(self, other: Any) -> "TruncSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        self._check(other)
        n = self.order
        a = self.coeffs
        b = other.coeffs
        out: list[Any] = [0] * (n + 1)
        for i, ai in enumerate(a):
            if isinstance(ai, int) and ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if isinstance(bj, int) and bj == 0:
                    continue
                out[i + j] = out[i + j] + ai * bj
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; the constant term must be a unit."""
        c0inv = _unit_inverse(self.coeffs[0])
        n = self.order
        out: list[Any] = [0] * (n + 1)
        out[0] = c0inv
        for k in range(1, n + 1):
            acc: Any = 0
            for j in range(1, k + 1):
                fj = self.coeffs[j]
                if isinstance(fj, int) and fj == 0:
                    continue
                acc = acc + fj * out[k - j]
            out[k] = -(c0inv * acc)
        return TruncSeries(out, n)

    def __pow__(self, e: int) -> "TruncSeries":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = TruncSeries.one(self.order)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:  # pragma: no cover - not used as dict key
        return hash((self.order, tuple(map(repr, self.coeffs))))

    # -- sparse-factor passes --------------------------------------------------
    def mul_binomial(self, c: Any, m: int, e: int = 1) -> "TruncSeries":
        """Multiply by (1 - c*t^m)^e for any integer e, in O(|e| * order) ring ops."""
        if m < 1:
            raise ValueError("m must be >= 1")
        cs = list(self.coeffs)
        n = self.order
        for _ in range(abs(e)):
            if e > 0:
                for k in range(n, m - 1, -1):
                    cs[k] = cs[k] - c * cs[k - m]
            else:
                for k in range(m, n + 1):
                    cs[k] = cs[k] + c * cs[k - m]
        return TruncSeries(cs, n)

    def div_quadratic(self, c: Any, m: int) -> "TruncSeries":
        """Divide by (1 - c*t^m + t^(2m))."""
        cs = list(self.coeffs)
        n = self.order
        for k in range(m, n + 1):
            cs[k] = cs[k] + c * cs[k - m]
            if k >= 2 * m:
                cs[k] = cs[k] - cs[k - 2 * m]
        return TruncSeries(cs, n)

    # -- reindexing and mapping -------------------------------------------------
    def scale_variable(self, k: int) -> "TruncSeries":
        """t -> t^k, same truncation order."""
        if k < 1:
            raise ValueError("k must be >= 1")
        out: list[Any] = [0] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * k > self.order:
                break
            out[i * k] = c
        return TruncSeries(out, self.order)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by t^k (k >= 0)."""
        if k < 0:
            raise ValueError("k must be >= 0")
        return TruncSeries([0] * k + self.coeffs[: self.order + 1 - k], self.order)

    def map_coeffs(self, f: Callable[[Any], Any]) -> "TruncSeries":
        return TruncSeries([f(c) for c in self.coeffs], self.order)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.coeffs[: order + 1], order)

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term, over Fraction coefficients.

        Uses the derivative recurrence k*f_k = sum_j j*g_j*f_(k-j); all
        divisions are exact rationals.
        """
        if self.coeffs[0] != 0:
            raise ArithmeticError("exp needs zero constant term")
        n = self.order
        g = [Fraction(c) for c in self.coeffs]
        out = [Fraction(0)] * (n + 1)
        out[0] = Fraction(1)
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                if g[j]:
                    acc += j * g[j] * out[k - j]
            out[k] = acc / k
        return TruncSeries(out, n)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if isinstance(c, int) and c == 0:
                continue
            parts.append(f"({c})*t^{i}" if i else f"({c})")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, {self})"

    def to_json(self) -> dict:
        def enc(c: Any):
            return c.to_json() if hasattr(c, "to_json") else c

        return {"var": "t", "order": self.order, "coeffs": [enc(c) for c in self.coeffs]}


def series_product(factors: Sequence[tuple[TruncSeries, int]], order: int) -> TruncSeries:
    """Truncated product of series^exponent factors; empty product is 1.

    Factors with negative exponent must have a unit constant term (their
    inverse() raises otherwise).
    """
    result = TruncSeries.one(order)
    for series, e in factors:
        if series.order < order:
            raise ValueError("factor truncated below the requested order")
        base = series.truncate(order) if series.order > order else series
        result = result * base**e
    return result


def binomial_product(terms: Iterable[tuple[Any, int, int]], order: int) -> TruncSeries:
    """prod over (c, m, e) of (1 - c*t^m)^e, truncated; the package workhorse."""
    result = TruncSeries.one(order)
    for c, m, e in terms:
        if m <= order and e:
            result = result.mul_binomial(c, m, e)
    return result
