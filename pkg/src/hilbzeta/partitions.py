"""Integer partitions with the column profile used by the cell formulas.

A partition of n is stored as its weakly decreasing parts.  The derived
profile reads the Ferrers diagram column by column from right to left:
``m[i]`` is the height of the i-th column counted from the right, so the
m-sequence is weakly increasing, ``t = len(m)`` equals the largest part
and ``m[-1]`` equals the number of parts.  The difference sequence
``d[i] = m[i] - m[i-1]`` (with m[0] := 0) and the count ``v`` of strictly
positive d-entries drive every cell-cardinality formula in this package.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A partition of n together with its precomputed column profile."""

    parts: tuple[int, ...]
    n: int = field(init=False)
    m: tuple[int, ...] = field(init=False)
    d: tuple[int, ...] = field(init=False)
    t: int = field(init=False)
    ell: int = field(init=False)
    v: int = field(init=False)

    def __post_init__(self) -> None:
        parts = self.parts
        if not parts or any(p <= 0 for p in parts):
            raise ValueError("parts must be positive integers")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        t = parts[0]
        # column heights left to right, then reversed to read right to left
        heights = [0] * t
        for p in parts:
            for j in range(p):
                heights[j] += 1
        m = tuple(reversed(heights))
        d = tuple(m[i] - (m[i - 1] if i else 0) for i in range(t))
        object.__setattr__(self, "n", sum(parts))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "ell", len(parts))
        object.__setattr__(self, "v", sum(1 for x in d if x >= 1))

    @property
    def e(self) -> dict[int, int]:
        """Multiplicity map: part size -> number of occurrences."""
        return dict(Counter(self.parts))

    def is_rectangular(self) -> bool:
        return self.v == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _gen_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _gen_parts(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, lexicographically decreasing: (n) first, (1,..,1) last."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [Partition(parts) for parts in _gen_parts(n, n)]


def iter_multiplicity_signatures(n: int) -> Iterator[tuple[int, ...]]:
    """Yield, per partition of n, the sorted tuple of part multiplicities.

    One tuple is yielded for every partition (so tallying the stream counts
    partitions), without building Partition objects.  The multiset of
    positive multiplicities equals the multiset of positive d-entries of
    the profile, which is all the cell formulas depend on besides n.
    """

    def rec(rem: int, max_part: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(sorted(acc))
            return
        for part in range(min(rem, max_part), 0, -1):
            for mult in range(1, rem // part + 1):
                acc.append(mult)
                yield from rec(rem - part * mult, part - 1, acc)
                acc.pop()

    yield from rec(n, n, [])


@functools.lru_cache(maxsize=None)
def signature_tally(n: int) -> dict[tuple[int, ...], tuple[int, Partition]]:
    """Group the partitions of n by multiplicity signature.

    Returns signature -> (count, representative partition).  Used to
    evaluate partition sums whose summand depends only on the signature.
    """
    counts: dict[tuple[int, ...], int] = {}
    reps: dict[tuple[int, ...], tuple[tuple[int, int], ...]] = {}
    mults: list[int] = []
    pairs: list[tuple[int, int]] = []

    def leaf(part: int, mult: int) -> None:
        mults.append(mult)
        sig = tuple(sorted(mults))
        c = counts.get(sig)
        if c is None:
            counts[sig] = 1
            reps[sig] = (*pairs, (part, mult))
        else:
            counts[sig] = c + 1
        mults.pop()

    def rec(rem: int, max_part: int) -> None:
        # parts of size 1 admit exactly one completion: multiplicity rem
        if max_part == 1:
            leaf(1, rem)
            return
        top = rem if rem < max_part else max_part
        for part in range(top, 1, -1):
            left = rem - part
            for mult in range(1, rem // part + 1):
                if left:
                    mults.append(mult)
                    pairs.append((part, mult))
                    rec(left, part - 1)
                    pairs.pop()
                    mults.pop()
                else:
                    leaf(part, mult)
                left -= part
        leaf(1, rem)

    rec(n, n)
    out = {}
    for sig, cnt in counts.items():
        parts: list[int] = []
        for part, mult in reps[sig]:
            parts.extend([part] * mult)
        parts.sort(reverse=True)
        out[sig] = (cnt, Partition(tuple(parts)))
    return out


@functools.lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence (independent of enumeration)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 == 1 else -1
        total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def count_distinct_odd_partitions(n: int) -> int:
    """Number of partitions of n into distinct odd parts, by subset-sum count."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(1, n + 1, 2):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]


# rows of D(n, l) = # partitions of n into exactly l parts, grown on demand;
# D(n, l) = D(n-1, l-1) + D(n-l, l)  (peel a part 1 / subtract 1 from each part)
_LENGTH_ROWS: list[list[int]] = [[1]]


def length_distribution(n: int) -> list[int]:
    """counts[l] = number of partitions of n with exactly l parts (0 <= l <= n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    while len(_LENGTH_ROWS) <= n:
        k = len(_LENGTH_ROWS)
        prev = _LENGTH_ROWS[k - 1]
        row = [0] * (k + 1)
        for l in range(1, k + 1):
            row[l] = prev[l - 1] + (_LENGTH_ROWS[k - l][l] if l <= k - l else 0)
        _LENGTH_ROWS.append(row)
    return list(_LENGTH_ROWS[n])
