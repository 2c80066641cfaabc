##################################################
# Module F - Truncated Series for Cauchy Kernels
# Python version: 3.13.x (project standard)
#
# Description:
# Expands the product sides of the Cauchy identities as truncated
# power series. The alphabet is x_1..x_N at positions 0..N-1 and
# y_1..y_K at positions N..N+K-1; truncation is by TruncationSpec.
#
# Functions:
# - geometric(term, spec)
# - cauchy_kernel(family, N, K, spec)
# - correction(family, N, K)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import logging

from identity_module.reports import TruncationSpec
from laurent_module.laurent_poly import LaurentPoly

logger = logging.getLogger(__name__)

FAMILIES = ("schur", "sp", "o")


def x_positions(N: int) -> list[int]:
    return list(range(N))


def y_positions(N: int, K: int) -> list[int]:
    return list(range(N, N + K))


def y_grading(N: int, K: int, cap: int) -> TruncationSpec:
    return TruncationSpec(tuple(y_positions(N, K)), cap)


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")


def geometric(term: LaurentPoly, spec: TruncationSpec) -> LaurentPoly:
    """1 / (1 - term), cut by spec. Every monomial of term needs positive graded degree."""
    for exp, _ in term.items():
        if sum(exp[v] for v in spec.graded_vars) < 1:
            raise ValueError(f"geometric series of {term} does not converge in the grading")
    result = LaurentPoly.one(term.arity)
    power = result
    while True:
        power = spec.apply(power * term)
        if power.is_zero():
            return result
        result = result + power


def truncated_product(factors, spec: TruncationSpec, arity: int) -> LaurentPoly:
    result = LaurentPoly.one(arity)
    for factor in factors:
        result = spec.apply(result * factor)
    return result


def cauchy_kernel(family: str, N: int, K: int, spec: TruncationSpec) -> LaurentPoly:
    """prod 1/(1 - x_i y_j), times prod 1/(1 - x_i^-1 y_j) for sp and o."""
    _check_family(family)
    arity = N + K
    factors = []
    for i in x_positions(N):
        for j in y_positions(N, K):
            xy = LaurentPoly.variable(i, arity) * LaurentPoly.variable(j, arity)
            factors.append(geometric(xy, spec))
            if family != "schur":
                x_inv_y = LaurentPoly.variable(i, arity, -1) * LaurentPoly.variable(j, arity)
                factors.append(geometric(x_inv_y, spec))
    kernel = truncated_product(factors, spec, arity)
    logger.debug("cauchy_kernel(%s, %d, %d, cap=%d): %d terms", family, N, K, spec.cap, len(kernel))
    return kernel


def correction(family: str, N: int, K: int) -> LaurentPoly:
    """prod_(k<l) (1 - y_k y_l) for sp, prod_(k<=l) for o, 1 for schur."""
    _check_family(family)
    arity = N + K
    result = LaurentPoly.one(arity)
    if family == "schur":
        return result
    ys = y_positions(N, K)
    for a, k in enumerate(ys):
        for l in ys[a if family == "o" else a + 1:]:
            result = result * (1 - LaurentPoly.variable(k, arity) * LaurentPoly.variable(l, arity))
    return result


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    spec = y_grading(1, 1, 3)
    print(cauchy_kernel("schur", 1, 1, spec).to_text(["x1", "y1"]))
    print(correction("o", 1, 2).to_text(["x1", "y1", "y2"]))
