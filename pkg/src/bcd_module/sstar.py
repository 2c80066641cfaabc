##################################################
# Module E - The S* Rational Function
# Python version: 3.13.x (project standard)
#
# Description:
# S*_{la/mu}(x_1..x_N): an (l+N)x(l+N) determinant mixing plain
# powers of x (first N rows) with h_n(x^±) (last l rows), over the
# N x N Vandermonde. Exactness of the division is decided per call.
#
# Functions:
# - vandermonde(N)
# - sstar(la, mu, N)
#
# Returns:
# RationalFn (den == 1 whenever the Vandermonde divides exactly)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from genfunc_module.complete_homogeneous import h_sympl
from laurent_module.determinant import det
from laurent_module.laurent_poly import LaurentPoly, RationalFn
from partition_module.partitions import LengthMismatch, _as_partition


def vandermonde(N: int) -> LaurentPoly:
    """det(x_i^(N-j)) = prod_{i<j} (x_i - x_j)."""
    return det(
        [[LaurentPoly.variable(i, N, N - 1 - j) for j in range(N)] for i in range(N)],
        arity=N,
    )


def sstar(la, mu, N: int) -> RationalFn:
    la, mu = _as_partition(la), _as_partition(mu)
    l = len(mu)
    if len(la) != l + N:
        raise LengthMismatch(f"S* needs len(la) = len(mu) + N, got {len(la)} != {l} + {N}")
    size = l + N

    def entry(i: int, j: int) -> LaurentPoly:
        # 1-based i, j
        if i <= N:
            return LaurentPoly.variable(i - 1, N, la.part(j) - j + N)
        return h_sympl(mu.part(i - N) - la.part(j) + j - i, N)

    num = det(
        [[entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)],
        arity=N,
    )
    return RationalFn(num, vandermonde(N))


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(sstar((2, 1), (), 2))
    print(sstar((2, 0), (1,), 1))
