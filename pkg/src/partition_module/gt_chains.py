##################################################
# Module B - Gelfand-Tsetlin Chains
# Python version: 3.13.x (project standard)
#
# Description:
# Enumerates interlacing chains of generalized partitions.
# Symplectic/orthogonal chains take 2N half steps with lengths
# l + ceil(k/2); type-A chains take N steps with lengths l + i.
#
# Functions:
# - enumerate_gt_chains(mu, la, N)
# - enumerate_schur_chains(mu, la, N)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from partition_module.partitions import (
    GeneralizedPartition,
    LengthMismatch,
    _as_partition,
    contains,
    interlaces,
    successors,
)


@dataclass(frozen=True)
class GTChain:
    steps: tuple[GeneralizedPartition, ...]
    base_length: int
    halfsteps: int

    def __getitem__(self, k: int) -> GeneralizedPartition:
        return self.steps[k]

    def __len__(self) -> int:
        return len(self.steps)


def _walk(start, lengths: list[int], top) -> Iterator[tuple[GeneralizedPartition, ...]]:
    # lengths[k] is the length of step k; the last step is fixed to `top`
    if len(lengths) == 1:
        if start == top:
            yield (start,)
        return

    def extend(prefix):
        k = len(prefix)
        if k == len(lengths) - 1:
            if interlaces(prefix[-1], top):
                yield tuple(prefix) + (top,)
            return
        for alpha in successors(prefix[-1], lengths[k], top):
            yield from extend(prefix + [alpha])

    yield from extend([start])


def enumerate_gt_chains(mu, la, N: int) -> list[GTChain]:
    """mu = z_0 ≺ z_1 ≺ ... ≺ z_2N = la with len(z_k) = l + ceil(k/2)."""
    mu, la = _as_partition(mu), _as_partition(la)
    l = len(mu)
    if len(la) != l + N:
        raise LengthMismatch(f"length of {la} must be length of {mu} plus {N}")
    if not contains(mu, la):
        return []
    lengths = [l + (k + 1) // 2 for k in range(2 * N + 1)]
    return [GTChain(steps, l, N) for steps in _walk(mu, lengths, la)]


def enumerate_schur_chains(mu, la, N: int) -> list[tuple[GeneralizedPartition, ...]]:
    """Type-A chains mu = z_0 ≺ ... ≺ z_N = la on normalized partitions."""
    mu = _as_partition(mu).normalize()
    la = _as_partition(la).normalize()
    l = len(mu)
    if len(la) > l + N or not contains(mu, la):
        return []
    top = la.padded(l + N)
    return list(_walk(mu, [l + i for i in range(N + 1)], top))


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    for chain in enumerate_gt_chains((), (1,), 1):
        print([str(z) for z in chain.steps])
    print(enumerate_schur_chains((), (1,), 2))
