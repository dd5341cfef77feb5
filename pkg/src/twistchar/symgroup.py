"""Partitions, conjugacy classes of symmetric groups, and loop-space components.

A conjugacy class of the symmetric group on ``m`` letters is determined by the
cycle type of any of its elements, a partition of ``m``.  The centralizer of a
permutation with ``N_k`` cycles of length ``k`` is the product of wreath
products ``Z/k wr Sigma_{N_k}``, of order ``prod_k k^{N_k} N_k!``.

Components of the iterated free loop space of ``B(Z/p^k)`` are indexed by
tuples of commuting elements, i.e. by vectors in ``(Z/p^k)^j``; see
:func:`cyclic_loop_components`.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import EnumerationLimitError

PARTITION_CAP = 30
COMPONENT_CAP = 2 ** 20


@dataclass(frozen=True, order=False)
class Partition:
    """A partition of ``m``, stored as a non-increasing tuple of parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for x in parts:
            if isinstance(x, bool) or not isinstance(x, int) or x < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be non-increasing, got {parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts) -> Partition:
        """Accept parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def m(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, obj) -> Partition:
        return cls(tuple(int(x) for x in obj))


def _check_cap(m: int, cap: int) -> None:
    if m > cap:
        raise EnumerationLimitError(f"m = {m} exceeds the enumeration cap {cap}")


def _partitions_bounded(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_bounded(m - first, first):
            yield (first,) + rest


def partitions(m: int, cap: int = PARTITION_CAP) -> list[Partition]:
    """All partitions of ``m`` in reverse-lexicographic order.

    >>> [str(p) for p in partitions(3)]
    ['[3]', '[2,1]', '[1,1,1]']
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    _check_cap(m, cap)
    return [Partition(p) for p in _partitions_bounded(m, m)]


def cycle_counts(lam: Partition) -> dict[int, int]:
    """Map each cycle length ``k`` to the number ``N_k`` of ``k``-cycles."""
    return dict(sorted(Counter(lam.parts).items(), reverse=True))


def num_cycles(lam: Partition) -> int:
    return len(lam.parts)


def centralizer_order(lam: Partition) -> int:
    z = 1
    for k, n_k in cycle_counts(lam).items():
        z *= k ** n_k * math.factorial(n_k)
    return z


def class_size(lam: Partition) -> int:
    size, rem = divmod(math.factorial(lam.m), centralizer_order(lam))
    assert rem == 0
    return size


def canonical_representative(lam: Partition) -> tuple[int, ...]:
    """A permutation of cycle type ``lam`` as a 0-based image tuple.

    Cycles occupy consecutive blocks, e.g. ``[3,2]`` gives (0 1 2)(3 4).
    """
    image = []
    start = 0
    for k in lam.parts:
        image.extend(start + (i + 1) % k for i in range(k))
        start += k
    return tuple(image)


def cycle_type(perm) -> Partition:
    """Cycle type of a permutation given as a 0-based image sequence."""
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def from_cycles(cycles, m: int) -> tuple[int, ...]:
    """Build a 0-based image tuple from 1-based cycle notation.

    >>> from_cycles([(1, 2, 3)], 3)
    (1, 2, 0)
    """
    letters = [a for cyc in cycles for a in cyc]
    if len(set(letters)) != len(letters) or any(not 1 <= a <= m for a in letters):
        raise ValueError(f"cycles {cycles!r} do not define a permutation of {m} letters")
    image = list(range(m))
    for cyc in cycles:
        cyc = tuple(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            image[a - 1] = b - 1
    return tuple(image)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, math.isqrt(p) + 1))


@dataclass(frozen=True)
class LoopComponentCyclic:
    """A component of the ``j``-fold free loop space of ``B(Z/p^k)``.

    ``valuation`` is the largest ``v <= k`` with ``coords = p^v * x``; it
    equals ``k`` exactly for the zero vector.
    """

    p: int
    k: int
    j: int
    coords: tuple[int, ...]
    valuation: int

    def __post_init__(self):
        mod = self.p ** self.k
        if len(self.coords) != self.j:
            raise ValueError("coordinate vector has the wrong length")
        if any(not 0 <= c < mod for c in self.coords):
            raise ValueError(f"coordinates must lie in [0, {mod})")
        if self.valuation != vector_valuation(self.coords, self.p, self.k):
            raise ValueError("valuation does not match coordinates")


def _valuation(x: int, p: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v


def vector_valuation(coords, p: int, k: int) -> int:
    return min((_valuation(c, p, k) for c in coords), default=k)


def cyclic_loop_components(p: int, k: int, j: int,
                           cap: int = COMPONENT_CAP) -> list[LoopComponentCyclic]:
    """Enumerate ``(Z/p^k)^j`` with the ``p``-adic valuation of each vector."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0 or j < 1:
        raise ValueError("need k >= 0 and j >= 1")
    if p ** (k * j) > cap:
        raise EnumerationLimitError(f"{p}^({k}*{j}) components exceed the cap {cap}")
    mod = p ** k
    return [LoopComponentCyclic(p, k, j, coords, vector_valuation(coords, p, k))
            for coords in itertools.product(range(mod), repeat=j)]
