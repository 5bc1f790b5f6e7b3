"""Dense univariate polynomials over a prime field F_q.

The brute-force enumerations do millions of tiny polynomial operations,
so the arithmetic core works on plain tuples of residues (ascending,
trimmed) via module-level functions; the FqPoly class is a thin wrapper
providing the ergonomic surface.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Coeffs = tuple[int, ...]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def fq_trim(cs: list[int]) -> Coeffs:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def fq_add(a: Coeffs, b: Coeffs, q: int) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    cs = list(a)
    for i, c in enumerate(b):
        cs[i] = (cs[i] + c) % q
    return fq_trim(cs)


def fq_neg(a: Coeffs, q: int) -> Coeffs:
    return tuple((-c) % q for c in a)


def fq_sub(a: Coeffs, b: Coeffs, q: int) -> Coeffs:
    return fq_add(a, fq_neg(b, q), q)


def fq_mul(a: Coeffs, b: Coeffs, q: int) -> Coeffs:
    if not a or not b:
        return ()
    cs = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    cs[i + j] = (cs[i + j] + x * y) % q
    return fq_trim(cs)


def fq_scale(a: Coeffs, s: int, q: int) -> Coeffs:
    s %= q
    if s == 0:
        return ()
    if s == 1:
        return a
    return fq_trim([(c * s) % q for c in a])


def fq_divmod(a: Coeffs, b: Coeffs, q: int) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    inv_lead = pow(b[-1], q - 2, q)
    rem = list(a)
    quot = [0] * (len(a) - len(b) + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c:
            f = (c * inv_lead) % q
            quot[i] = f
            for j, bc in enumerate(b):
                if bc:
                    rem[i + j] = (rem[i + j] - f * bc) % q
    return fq_trim(quot), fq_trim(rem[: len(b) - 1])


def fq_monic(a: Coeffs, q: int) -> Coeffs:
    if not a or a[-1] == 1:
        return a
    return fq_scale(a, pow(a[-1], q - 2, q), q)


def fq_gcd(a: Coeffs, b: Coeffs, q: int) -> Coeffs:
    """Monic gcd by the Euclidean algorithm (gcd(0,0) = 0)."""
    while b:
        a, b = b, fq_divmod(a, b, q)[1]
    return fq_monic(a, q)


def fq_coprime(a: Coeffs, b: Coeffs, q: int) -> bool:
    return fq_gcd(a, b, q) == (1,)


def fq_gcd_list(polys: Iterable[Coeffs], q: int) -> Coeffs:
    g: Coeffs = ()
    for p in polys:
        g = fq_gcd(g, p, q)
        if g == (1,):
            return g
    return g


def all_polys_below_degree(d: int, q: int) -> Iterator[Coeffs]:
    """All q^d polynomials of degree < d, in lexicographic coefficient order."""
    if d == 0:
        yield ()
        return
    for code in range(q**d):
        cs = []
        rest = code
        for _ in range(d):
            cs.append(rest % q)
            rest //= q
        yield fq_trim(cs)


class FqPoly:
    """A polynomial over F_q, q prime; coefficients ascending."""

    __slots__ = ("q", "coeffs")

    def __init__(self, coeffs: Iterable[int], q: int, *, check_prime: bool = True):
        if check_prime and not _is_prime(q):
            raise ValueError(f"modulus {q} is not prime")
        self.q = q
        self.coeffs: Coeffs = fq_trim([c % q for c in coeffs])

    @staticmethod
    def from_raw(coeffs: Coeffs, q: int) -> "FqPoly":
        p = FqPoly.__new__(FqPoly)
        p.q = q
        p.coeffs = coeffs
        return p

    def _check(self, other: "FqPoly") -> None:
        if self.q != other.q:
            raise ValueError("mixed moduli")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly.from_raw(fq_add(self.coeffs, other.coeffs, self.q), self.q)

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly.from_raw(fq_sub(self.coeffs, other.coeffs, self.q), self.q)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly.from_raw(fq_mul(self.coeffs, other.coeffs, self.q), self.q)

    def __divmod__(self, other: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        self._check(other)
        quot, rem = fq_divmod(self.coeffs, other.coeffs, self.q)
        return FqPoly.from_raw(quot, self.q), FqPoly.from_raw(rem, self.q)

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def gcd(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        return FqPoly.from_raw(fq_gcd(self.coeffs, other.coeffs, self.q), self.q)

    def is_coprime(self, other: "FqPoly") -> bool:
        self._check(other)
        return fq_coprime(self.coeffs, other.coeffs, self.q)

    def monic(self) -> "FqPoly":
        return FqPoly.from_raw(fq_monic(self.coeffs, self.q), self.q)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.q, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "y" if e == 1 else f"y^{e}"
                parts.append(var if c == 1 else f"{c}{var}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FqPoly('{self}', q={self.q})"
