"""Canonical integer partitions and enumeration of t-regular partitions.

A partition is stored as a weakly decreasing tuple of positive integers.
The multiplicity view ``[(value, mult), ...]`` is derived from it on demand.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive parts.

    Equality, hashing and ordering are those of the underlying tuple, so
    partitions can be used directly as set members and dict keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return sum(self)

    def adjoin(self, *parts: int) -> "Partition":
        """Return the partition with ``parts`` added."""
        return make_partition(self + parts)

    def remove(self, *parts: int) -> "Partition":
        """Return the partition with one copy of each of ``parts`` removed.

        Raises ValueError if a part is not present.
        """
        rest = list(self)
        for x in parts:
            rest.remove(x)
        return Partition(rest)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = Partition()


def make_partition(raw: Iterable[int]) -> Partition:
    """Sort ``raw`` into canonical (weakly decreasing) order.

    >>> make_partition([2, 5, 2, 3])
    (5,3,2,2)
    """
    parts = sorted(raw, reverse=True)
    for x in parts:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"parts must be integers, got {x!r}")
        if x <= 0:
            raise ValueError(f"parts must be positive, got {x}")
    return Partition(parts)


def to_multiplicity(p: Iterable[int]) -> list[tuple[int, int]]:
    """Run-length encode a partition as ``[(value, mult), ...]``, values decreasing."""
    return [(v, sum(1 for _ in g)) for v, g in groupby(p)]


def from_multiplicity(entries: Iterable[tuple[int, int]]) -> Partition:
    """Expand ``[(value, mult), ...]``; values must be strictly decreasing."""
    parts: list[int] = []
    prev = None
    for value, mult in entries:
        if value <= 0 or mult <= 0:
            raise ValueError(f"bad entry ({value}, {mult})")
        if prev is not None and value >= prev:
            raise ValueError("values must be strictly decreasing")
        parts.extend([value] * mult)
        prev = value
    return Partition(parts)


def _check_t(t: int) -> None:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")


def is_t_regular(p: Iterable[int], t: int) -> bool:
    """True iff no part of ``p`` is divisible by ``t``."""
    _check_t(t)
    return all(x % t for x in p)


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    yield from _parts(n, n if max_part is None else min(n, max_part), None)


def enumerate_t_regular(n: int, t: int) -> Iterator[Partition]:
    """All t-regular partitions of ``n``, descending lexicographic order.

    ``n = 0`` yields the empty partition once.
    """
    _check_t(t)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    yield from _parts(n, n, t)


def _parts(n: int, cap: int, t: int | None) -> Iterator[Partition]:
    # iterative depth-first search; parts are chosen largest first so the
    # output is in descending lexicographic order
    if n == 0:
        yield EMPTY
        return
    stack: list[int] = []

    def descend(remaining: int, cap: int):
        for first in range(min(remaining, cap), 0, -1):
            if t is not None and first % t == 0:
                continue
            stack.append(first)
            if remaining == first:
                yield Partition(stack)
            else:
                yield from descend(remaining - first, first)
            stack.pop()

    yield from descend(n, cap)


def count_t_regular(n: int, t: int) -> int:
    """Number of t-regular partitions of ``n`` from the Euler product.

    Independent of :func:`enumerate_t_regular`: the coefficient of q^n in
    prod_k (1 - q^{tk}) / (1 - q^k).
    """
    from .series import TruncatedSeries, geometric_inverse

    _check_t(t)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    s = TruncatedSeries.one(n)
    for k in range(1, n + 1):
        s = s * geometric_inverse(k, n)
        if k % t == 0:
            s = s * TruncatedSeries.polynomial({0: 1, k: -1}, n)
    return s[n]
