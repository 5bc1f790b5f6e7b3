"""Cyclotomic integers a + b*w for a root of unity w of order 3, 4 or 6.

Order 4 gives the Gaussian integers.  In each case w satisfies a monic
quadratic over Z, so products reduce to the (a, b) representation with
exact integer arithmetic:

    order 3:  w^2 = -1 - w        order 4:  w^2 = -1
    order 6:  w^2 = w - 1

w is a unit, hence dividing by any power of w is always exact.
"""

from __future__ import annotations

import math
from typing import Any

from .laurent import LaurentPoly

#: order -> (r, s) with w^2 = r + s*w
_REDUCTION = {3: (-1, -1), 4: (-1, 0), 6: (-1, 1)}

#: order -> w + conj(w)  (the trace of w)
_TRACE = {3: -1, 4: 0, 6: 1}


class CyclotomicInt:
    __slots__ = ("d", "a", "b")

    def __init__(self, d: int, a: int, b: int = 0):
        if d not in _REDUCTION:
            raise ValueError(f"order must be 3, 4 or 6, got {d}")
        self.d = d
        self.a = a
        self.b = b

    @staticmethod
    def omega(d: int) -> "CyclotomicInt":
        return CyclotomicInt(d, 0, 1)

    def _coerce(self, other: Any) -> "CyclotomicInt | None":
        if isinstance(other, CyclotomicInt):
            if other.d != self.d:
                raise ValueError("mixed root-of-unity orders")
            return other
        if isinstance(other, int):
            return CyclotomicInt(self.d, other, 0)
        return None

    def __add__(self, other: Any) -> "CyclotomicInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicInt(self.d, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInt":
        return CyclotomicInt(self.d, -self.a, -self.b)

    def __sub__(self, other: Any) -> "CyclotomicInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "CyclotomicInt":
        return (-self) + other

    def __mul__(self, other: Any) -> "CyclotomicInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r, s = _REDUCTION[self.d]
        # (a + bw)(c + ew) = ac + (ae + bc) w + be w^2
        ac = self.a * o.a
        cross = self.a * o.b + self.b * o.a
        be = self.b * o.b
        return CyclotomicInt(self.d, ac + r * be, cross + s * be)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CyclotomicInt":
        if e < 0:
            return self.unit_inverse() ** (-e)
        result = CyclotomicInt(self.d, 1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CyclotomicInt":
        """Complex conjugate, expressed back in the (1, w) basis."""
        tr = _TRACE[self.d]
        # conj(w) = tr - w
        return CyclotomicInt(self.d, self.a + self.b * tr, -self.b)

    def norm(self) -> int:
        """z * conj(z) as a rational integer (= |z|^2)."""
        z = self * self.conjugate()
        assert z.b == 0
        return z.a

    def abs_exact(self) -> int:
        """|z| when it is an integer; raises otherwise."""
        n = self.norm()
        r = math.isqrt(n)
        if r * r != n:
            raise ArithmeticError(f"|z| is irrational (|z|^2 = {n})")
        return r

    def unit_inverse(self) -> "CyclotomicInt":
        if self.norm() != 1:
            raise ArithmeticError("not a unit")
        return self.conjugate()

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_part(self) -> int:
        if self.b != 0:
            raise ArithmeticError(f"{self} is not a rational integer")
        return self.a

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.d, self.a, self.b))

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        w = "w" if self.b == 1 else ("-w" if self.b == -1 else f"{self.b}w")
        if self.a == 0:
            return w
        return f"{self.a}{'+' if self.b > 0 and w[0] != '-' else ''}{w}"

    def __repr__(self) -> str:
        return f"CyclotomicInt(d={self.d}, {self.a}, {self.b})"


def laurent_eval_at_root(p: LaurentPoly, d: int) -> CyclotomicInt:
    """Exact value p(w) for a primitive root of unity w of order d in {3,4,6}.

    Exponents are reduced mod d, so negative powers need no inversion.
    """
    if d not in _REDUCTION:
        raise ValueError(f"order must be 3, 4 or 6, got {d}")
    powers = [CyclotomicInt.omega(d) ** k for k in range(d)]
    acc = CyclotomicInt(d, 0, 0)
    for e, c in p.items():
        acc = acc + c * powers[e % d]
    return acc
