##################################################
# Module D - Type A (Skew) Schur Functions
# Python version: 3.13.x (project standard)
#
# Description:
# s_la and s_{la/mu} in N variables, by the Jacobi-Trudi determinant
# in h_n and by summing monomial weights over interlacing chains.
# Type-A values do not depend on trailing zeros.
#
# Functions:
# - schur_jt(la, N)
# - skew_schur_jt(la, mu, N)
# - skew_schur_gt(la, mu, N)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from collections import Counter

from genfunc_module.complete_homogeneous import h_plain
from laurent_module.determinant import det
from laurent_module.laurent_poly import LaurentPoly
from partition_module.gt_chains import enumerate_schur_chains
from partition_module.partitions import _as_partition, contains


def schur_jt(la, N: int) -> LaurentPoly:
    """det(h_{la_i - i + j}) with one row per part of la."""
    la = _as_partition(la)
    k = len(la)
    return det(
        [[h_plain(la[i] - i + j, N) for j in range(k)] for i in range(k)],
        arity=N,
    )


def skew_schur_jt(la, mu, N: int) -> LaurentPoly:
    """det(h_{la_i - mu_j - i + j}) of size max(len la, len mu), both zero-padded."""
    la, mu = _as_partition(la), _as_partition(mu)
    if not contains(mu, la):
        return LaurentPoly.zero(N)
    k = max(len(la), len(mu))
    la, mu = la.padded(k), mu.padded(k)
    return det(
        [[h_plain(la[i] - mu[j] - i + j, N) for j in range(k)] for i in range(k)],
        arity=N,
    )


def skew_schur_gt(la, mu, N: int) -> LaurentPoly:
    """Sum over mu = z_0 ≺ ... ≺ z_N = la of prod x_i^(|z_i| - |z_(i-1)|)."""
    weights: Counter = Counter()
    for chain in enumerate_schur_chains(mu, la, N):
        exp = tuple(chain[i].weight - chain[i - 1].weight for i in range(1, N + 1))
        weights[exp] += 1
    return LaurentPoly(N, weights)


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(schur_jt((2, 1), 2))
    print(skew_schur_jt((3, 1), (2,), 1))
    print(skew_schur_gt((2, 1), (1,), 2))
