##################################################
# Module A - Determinants over the Laurent ring
# Python version: 3.13.x (project standard)
#
# Description:
# Exact determinants of square matrices of LaurentPoly entries.
# Small matrices use cofactor expansion with a minor cache,
# larger ones fraction-free (Bareiss) elimination with exact_div.
#
# Functions:
# - det(matrix, arity=None)
# - det_cofactor(matrix, arity)
# - det_bareiss(matrix, arity)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import logging
from typing import Sequence

from laurent_module.laurent_poly import ArityMismatch, LaurentPoly, exact_div

logger = logging.getLogger(__name__)

COFACTOR_LIMIT = 6


class NonSquareMatrix(ValueError):
    pass


def _check(matrix: Sequence[Sequence[LaurentPoly]], arity: int | None) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise NonSquareMatrix(f"row of length {len(row)} in a matrix with {n} rows")
    if n == 0:
        if arity is None:
            raise ValueError("arity is required for the empty determinant")
        return arity
    if arity is None:
        arity = matrix[0][0].arity
    for row in matrix:
        for entry in row:
            if entry.arity != arity:
                raise ArityMismatch(f"matrix entry of arity {entry.arity}, expected {arity}")
    return arity


def det(matrix: Sequence[Sequence[LaurentPoly]], arity: int | None = None) -> LaurentPoly:
    """Exact determinant. The empty matrix has determinant 1 (pass arity)."""
    arity = _check(matrix, arity)
    n = len(matrix)
    if n <= COFACTOR_LIMIT:
        return det_cofactor(matrix, arity)
    logger.debug("det: size %d, using fraction-free elimination", n)
    return det_bareiss(matrix, arity)


def det_cofactor(matrix: Sequence[Sequence[LaurentPoly]], arity: int) -> LaurentPoly:
    n = len(matrix)
    one = LaurentPoly.one(arity)
    zero = LaurentPoly.zero(arity)
    minors: dict[tuple[int, ...], LaurentPoly] = {}

    # the row being expanded is n - len(cols), so cols alone keys the minor
    def minor(cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return one
        if cols in minors:
            return minors[cols]
        row = matrix[n - len(cols)]
        total = zero
        for pos, col in enumerate(cols):
            entry = row[col]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if sub.is_zero():
                continue
            total = total + entry * sub if pos % 2 == 0 else total - entry * sub
        minors[cols] = total
        return total

    return minor(tuple(range(n)))


def det_bareiss(matrix: Sequence[Sequence[LaurentPoly]], arity: int) -> LaurentPoly:
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return LaurentPoly.one(arity)
    sign = 1
    prev = LaurentPoly.one(arity)
    for k in range(n - 1):
        # 1. Pivot: swap in a row with a nonzero entry in column k
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(arity)

        # 2. Fraction-free update of the trailing block
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    result = m[n - 1][n - 1]
    return result if sign > 0 else -result
