"""Partitions of n, their conjugates, the delta sequence and hook (Frobenius) notation.

Partitions are stored zero-padded to exactly n parts, so that ``delta(p, k)``
can read the conjugate from its tail without index juggling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class NotAPartition(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = self.parts
        if any(p < 0 for p in parts):
            raise NotAPartition(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise NotAPartition(f"parts not weakly decreasing: {parts}")
        if len(parts) != sum(parts) or not parts:
            raise NotAPartition(f"expected {sum(parts)} parts (zero padded), got {len(parts)}")

    @property
    def n(self) -> int:
        return len(self.parts)

    def nonzero(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Hook:
    """The partition (a+1, 1^b) of n = a + b + 1, written (a | b)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise NotAPartition(f"hook arm and leg must be nonnegative, got ({self.a}|{self.b})")

    @property
    def n(self) -> int:
        return self.a + self.b + 1

    def __str__(self) -> str:
        return f"({self.a}|{self.b})"


def make_partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition padded with zeros to n = sum(parts) terms.

    Zeros may appear only at the tail; ``NotAPartition`` is raised for negative
    entries, increasing entries, or an empty/zero total.
    """
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise NotAPartition(f"negative part in {tuple(parts)}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise NotAPartition(f"parts not weakly decreasing: {tuple(parts)}")
    n = sum(parts)
    if n == 0:
        raise NotAPartition("partition of 0 is not supported")
    nonzero = [p for p in parts if p]
    return Partition(tuple(nonzero) + (0,) * (n - len(nonzero)))


def conjugate(p: Partition) -> Partition:
    n = p.n
    return Partition(tuple(sum(1 for part in p.parts if part >= i) for i in range(1, n + 1)))


def delta(p: Partition, k: int) -> int:
    """Sum of the last k parts of the conjugate partition."""
    if not 1 <= k <= p.n:
        raise IndexError(f"k={k} outside 1..{p.n}")
    c = conjugate(p).parts
    return sum(c[p.n - k:])


def delta_sequence(p: Partition) -> tuple[int, ...]:
    c = conjugate(p).parts
    out, acc = [], 0
    for part in reversed(c):
        acc += part
        out.append(acc)
    return tuple(out)


def as_hook(p: Partition) -> Optional[Hook]:
    nz = p.nonzero()
    if all(part == 1 for part in nz[1:]):
        return Hook(nz[0] - 1, len(nz) - 1)
    return None


def hook_to_partition(h: Hook) -> Partition:
    return make_partition((h.a + 1,) + (1,) * h.b)


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order, zero padded."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, n if max_part is None else max_part):
        yield make_partition(parts)


def hooks_up_to(nmax: int) -> Iterator[Hook]:
    """Every hook (a|b) with 1 <= a + b + 1 <= nmax, ordered by n then a."""
    for n in range(1, nmax + 1):
        for a in range(n - 1, -1, -1):
            yield Hook(a, n - 1 - a)


def multinomial(p: Partition) -> int:
    """n! / (mu_1! mu_2! ...)."""
    from math import factorial

    out = factorial(p.n)
    for part in p.parts:
        out //= factorial(part)
    return out
