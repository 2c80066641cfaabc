##################################################
# Module B - Generalized Partitions
# Python version: 3.13.x (project standard)
#
# Description:
# Weakly decreasing sequences of nonnegative integers whose length
# (trailing zeros included) is part of their identity, plus the
# interlacing and containment relations and the enumerations that
# feed determinants, pattern sums and verification grids.
#
# Functions:
# - interlaces(nu, la), contains(mu, la)
# - enumerate_between(lo, hi, length)
# - partitions_up_to(max_len, max_weight)
# - generalized_partitions(length, max_weight)
# - partitions_inside(bound, length)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence


class LengthMismatch(ValueError):
    """Partition lengths do not satisfy an operation's length rule."""


@dataclass(frozen=True)
class GeneralizedPartition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> GeneralizedPartition:
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> GeneralizedPartition:
        """'2,1,0' -> (2,1,0); '' -> the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(tuple(int(piece) for piece in text.split(",")))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return GeneralizedPartition(self.parts[index])
        return self.parts[index]

    def part(self, i: int) -> int:
        """1-based part, reading anything past the end as 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def normalize(self) -> GeneralizedPartition:
        parts = list(self.parts)
        while parts and parts[-1] == 0:
            parts.pop()
        return GeneralizedPartition(tuple(parts))

    def padded(self, length: int) -> GeneralizedPartition:
        if length < len(self.parts):
            raise LengthMismatch(f"cannot pad {self} down to length {length}")
        return GeneralizedPartition(self.parts + (0,) * (length - len(self.parts)))

    def fit(self, length: int) -> GeneralizedPartition:
        """Pad or strip trailing zeros to reach exactly `length` parts."""
        base = self.normalize()
        if len(base) > length:
            raise LengthMismatch(f"{self} has more than {length} nonzero parts")
        return base.padded(length)

    def to_list(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


def _as_partition(value) -> GeneralizedPartition:
    if isinstance(value, GeneralizedPartition):
        return value
    return GeneralizedPartition(tuple(value))


def interlaces(nu, la) -> bool:
    """nu ≺ la: la_i >= nu_i >= la_{i+1} for every i (missing parts read 0)."""
    nu, la = _as_partition(nu), _as_partition(la)
    for i in range(1, max(len(nu), len(la)) + 1):
        if not la.part(i) >= nu.part(i) >= la.part(i + 1):
            return False
    return True


def contains(mu, la) -> bool:
    """mu ⊂ la: la_i >= mu_i for every i."""
    mu, la = _as_partition(mu), _as_partition(la)
    return all(la.part(i) >= mu.part(i) for i in range(1, max(len(mu), len(la)) + 1))


def _bounded_vectors(bounds: Sequence[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    ranges = [range(lo, hi + 1) for lo, hi in bounds]
    if any(len(r) == 0 for r in ranges):
        return iter(())
    return itertools.product(*ranges)


def enumerate_between(lo, hi, length: int) -> list[GeneralizedPartition]:
    """All alpha of the given length with lo ≺ alpha ≺ hi, ascending lexicographic."""
    lo, hi = _as_partition(lo), _as_partition(hi)
    bounds = []
    for j in range(1, length + 1):
        lower = max(lo.part(j), hi.part(j + 1), 0)
        upper = hi.part(j) if j == 1 else min(hi.part(j), lo.part(j - 1))
        bounds.append((lower, upper))
    found = []
    for vec in _bounded_vectors(bounds):
        if any(a < b for a, b in zip(vec, vec[1:])):
            continue
        alpha = GeneralizedPartition(vec)
        if interlaces(lo, alpha) and interlaces(alpha, hi):
            found.append(alpha)
    return found


def successors(z, length: int, cap) -> list[GeneralizedPartition]:
    """All alpha of the given length with z ≺ alpha and alpha ⊂ cap."""
    z, cap = _as_partition(z), _as_partition(cap)
    bounds = []
    for j in range(1, length + 1):
        upper = cap.part(j) if j == 1 else min(cap.part(j), z.part(j - 1))
        bounds.append((z.part(j), upper))
    found = []
    for vec in _bounded_vectors(bounds):
        if any(a < b for a, b in zip(vec, vec[1:])):
            continue
        alpha = GeneralizedPartition(vec)
        if interlaces(z, alpha):
            found.append(alpha)
    return found


def _partitions_of(n: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    # largest first part first, so (2) comes before (1,1)
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_of(n - first, first, max_len - 1):
            yield (first,) + rest


def partitions_up_to(max_len: int, max_weight: int) -> list[GeneralizedPartition]:
    """Ordinary partitions (no trailing zeros), by weight then decreasing lex."""
    return [
        GeneralizedPartition(parts)
        for n in range(max_weight + 1)
        for parts in _partitions_of(n, n, max_len)
    ]


def _generalized(length: int, budget: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(0, min(budget, max_part) + 1):
        for rest in _generalized(length - 1, budget - first, first):
            yield (first,) + rest


def generalized_partitions(length: int, max_weight: int) -> list[GeneralizedPartition]:
    """Every generalized partition of exactly `length` parts with |λ| <= max_weight."""
    return [GeneralizedPartition(p) for p in _generalized(length, max_weight, max_weight)]


def partitions_inside(bound, length: int) -> list[GeneralizedPartition]:
    """Generalized partitions of the given length contained in `bound`."""
    bound = _as_partition(bound)
    caps = [(0, bound.part(j)) for j in range(1, length + 1)]
    return [
        GeneralizedPartition(vec)
        for vec in _bounded_vectors(caps)
        if all(a >= b for a, b in zip(vec, vec[1:]))
    ]


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(enumerate_between((), (1,), 1))
    print(partitions_up_to(2, 2))
    print(generalized_partitions(2, 2))
