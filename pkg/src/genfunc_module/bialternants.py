##################################################
# Module C - Bialternant Evaluators
# Python version: 3.13.x (project standard)
#
# Description:
# Schur, symplectic and even-orthogonal characters as exact ratios of
# alternating determinants. The quotient is always taken with
# exact_div; a NotDivisible here means a wrong matrix, not bad input.
#
# Functions:
# - schur_bialt(la, N)
# - sp_bialt(la, N)
# - o_bialt(la, N)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from laurent_module.determinant import det
from laurent_module.laurent_poly import LaurentPoly, exact_div
from partition_module.partitions import _as_partition


class UnsupportedArity(ValueError):
    pass


def _x(i: int, power: int, N: int) -> LaurentPoly:
    return LaurentPoly.variable(i, N, power)


def schur_bialt(la, N: int) -> LaurentPoly:
    """det(x_i^(la_j + N - j)) / det(x_i^(N - j))."""
    la = _as_partition(la).fit(N)
    num = det([[_x(i, la[j] + N - 1 - j, N) for j in range(N)] for i in range(N)], arity=N)
    den = det([[_x(i, N - 1 - j, N) for j in range(N)] for i in range(N)], arity=N)
    return exact_div(num, den)


def sp_bialt(la, N: int) -> LaurentPoly:
    """det(x_i^a - x_i^-a, a = la_j + N - j + 1) over the same with la = 0."""
    la = _as_partition(la).fit(N)

    def alternant(shift):
        return det(
            [
                [_x(i, shift[j] + N - j, N) - _x(i, -(shift[j] + N - j), N) for j in range(N)]
                for i in range(N)
            ],
            arity=N,
        )

    return exact_div(alternant(la.parts), alternant((0,) * N))


def o_bialt(la, N: int) -> LaurentPoly:
    """(1 + [la_N != 0]) (-1)^(N(N-1)/2) det(x_i^l_j + x_i^-l_j) / det(x_i^(1-j) + x_i^(j-1)),

    with l_j = la_j + N - j.
    """
    if N < 1:
        raise UnsupportedArity("o_bialt needs at least one variable")
    la = _as_partition(la).fit(N)
    num = det(
        [
            [_x(i, la[j] + N - 1 - j, N) + _x(i, -(la[j] + N - 1 - j), N) for j in range(N)]
            for i in range(N)
        ],
        arity=N,
    )
    den = det([[_x(i, -j, N) + _x(i, j, N) for j in range(N)] for i in range(N)], arity=N)
    factor = (2 if la[N - 1] != 0 else 1) * (-1) ** (N * (N - 1) // 2)
    return exact_div(num, den) * factor


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(schur_bialt((2, 1), 2))
    print(sp_bialt((1,), 2))
    print(o_bialt((1, 1), 2))
