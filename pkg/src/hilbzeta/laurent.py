"""Exact Laurent polynomials in one variable q over the big integers.

Stored as (offset, coeffs) with ascending coefficients and both ends
trimmed, so q^-2 + 3 is ``LaurentPoly((1, 0, 0, 3), offset=-2)``.  All
arithmetic is integer-exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Union

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("offset", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), offset: int = 0):
        cs = list(coeffs)
        lo = 0
        while cs and cs[-1] == 0:
            cs.pop()
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        self.coeffs: tuple[int, ...] = tuple(cs[lo:])
        self.offset: int = offset + lo if self.coeffs else 0

    # -- constructors ------------------------------------------------------
    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly((c,), 0)

    @staticmethod
    def term(c: int, k: int) -> "LaurentPoly":
        """c * q^k."""
        return LaurentPoly((c,), k)

    @staticmethod
    def from_coeff_map(items: dict[int, int]) -> "LaurentPoly":
        if not items:
            return LaurentPoly()
        lo = min(items)
        hi = max(items)
        cs = [0] * (hi - lo + 1)
        for k, c in items.items():
            cs[k - lo] = c
        return LaurentPoly(cs, lo)

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Largest exponent with nonzero coefficient; -1 shorthand for zero poly."""
        if not self.coeffs:
            return -1
        return self.offset + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient (0 for the zero poly)."""
        return self.offset

    def coeff(self, k: int) -> int:
        i = k - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def items(self) -> Iterable[tuple[int, int]]:
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.offset + i, c

    # -- ring operations ---------------------------------------------------
    def _coerce(self, other: Any) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly((other,), 0)
        return None

    def __add__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs:
            return o
        if not o.coeffs:
            return self
        lo = min(self.offset, o.offset)
        hi = max(self.offset + len(self.coeffs), o.offset + len(o.coeffs))
        cs = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            cs[self.offset - lo + i] = c
        for i, c in enumerate(o.coeffs):
            cs[o.offset - lo + i] += c
        return LaurentPoly(cs, lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple(-c for c in self.coeffs), self.offset)

    def __sub__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return LaurentPoly()
        cs = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        cs[i + j] += a * b
        return LaurentPoly(cs, self.offset + o.offset)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            inv = self.unit_inverse()
            if inv is None:
                raise ValueError("negative power of a non-unit Laurent polynomial")
            return inv ** (-e)
        result = LaurentPoly((1,), 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def unit_inverse(self) -> "LaurentPoly | None":
        """Inverse if this is a unit (single term with coefficient +-1)."""
        if len(self.coeffs) == 1 and self.coeffs[0] in (1, -1):
            return LaurentPoly((self.coeffs[0],), -self.offset)
        return None

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs and self.offset == o.offset

    def __hash__(self) -> int:
        return hash((self.offset, self.coeffs))

    # -- substitutions and evaluation ---------------------------------------
    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return LaurentPoly(self.coeffs, self.offset + k)

    def subst_power(self, k: int) -> "LaurentPoly":
        """q -> q^k for k >= 1."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        if k == 1 or not self.coeffs:
            return self
        cs = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            cs[i * k] = c
        return LaurentPoly(cs, self.offset * k)

    def compress_power(self, k: int) -> "LaurentPoly":
        """Inverse of subst_power: require all exponents divisible by k."""
        items = {}
        for e, c in self.items():
            if e % k:
                raise ValueError(f"exponent {e} not divisible by {k}")
            items[e // k] = c
        return LaurentPoly.from_coeff_map(items)

    def reverse(self) -> "LaurentPoly":
        """q -> 1/q."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -(self.offset + len(self.coeffs) - 1)) if self.coeffs else self

    def is_palindromic(self) -> bool:
        """p(q) == q^(deg+val) p(1/q), i.e. the coefficient list is symmetric."""
        return self.coeffs == tuple(reversed(self.coeffs))

    def __call__(self, x):
        """Exact evaluation; x may be int, Fraction or any exact ring element.

        Negative exponents require x to be invertible (nonzero Fraction, or
        +-1 for int).
        """
        if not self.coeffs:
            return 0
        if self.offset < 0:
            if isinstance(x, int):
                if x in (1, -1):
                    inv = x
                else:
                    raise ValueError("integer evaluation needs Fraction for q^-k terms")
            elif isinstance(x, Fraction):
                inv = Fraction(1) / x
            else:
                raise TypeError("cannot invert evaluation point")
        # Horner on ascending coefficients, then multiply by x^offset
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        k = self.offset
        if k >= 0:
            return acc * x**k
        return acc * inv ** (-k)

    # -- exact division ------------------------------------------------------
    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError when the remainder is nonzero.

        The divisor must have invertible leading integer coefficient (+-1),
        which covers every divisor used here ((q-1)^2, q^2-1, units).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ArithmeticError("divisor leading coefficient must be a unit")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        qlen = len(rem) - len(dcs) + 1
        if qlen <= 0:
            raise ArithmeticError("inexact Laurent division (degree too small)")
        quot = [0] * qlen
        for i in range(qlen - 1, -1, -1):
            c = rem[i + len(dcs) - 1]
            if c == 0:
                continue
            f = c * lead  # lead is +-1
            quot[i] = f
            for j, dc in enumerate(dcs):
                rem[i + j] -= f * dc
        if any(rem):
            raise ArithmeticError("inexact Laurent division (nonzero remainder)")
        return LaurentPoly(quot, self.offset - divisor.offset)

    # -- rendering and JSON --------------------------------------------------
    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self.items(), reverse=True):
            if e == 0:
                body = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> dict:
        return {"var": "q", "offset": self.offset, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> "LaurentPoly":
        if obj.get("var") != "q":
            raise ValueError("expected a polynomial in q")
        return LaurentPoly(obj["coeffs"], obj["offset"])


#: the generator q as a LaurentPoly
Q = LaurentPoly((1,), 1)
#: q^-1
QINV = LaurentPoly((1,), -1)
ONE = LaurentPoly((1,), 0)


def geometric_sum(k: int, step: int = 1, start: int = 0) -> LaurentPoly:
    """q^start + q^(start+step) + ... with k terms (1 + q^2 + ... for step 2)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    cs = [0] * ((k - 1) * step + 1) if k else []
    for i in range(k):
        cs[i * step] = 1
    return LaurentPoly(cs, start)
