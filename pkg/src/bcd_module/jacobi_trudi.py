##################################################
# Module E - Symplectic / Orthogonal Jacobi-Trudi Determinants
# Python version: 3.13.x (project standard)
#
# Description:
# sp_la, o_la and the skew functions sp_{la/mu}, o_{la/mu} as
# determinants in h_n(x^±). Skew functions are strict about length:
# len(la) must equal len(mu) + N, since padding changes the value.
#
# Functions:
# - sp_jt(la, N), o_jt(la, N)
# - skew_sp_jt(la, mu, N), skew_o_jt(la, mu, N)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from fractions import Fraction

from genfunc_module.complete_homogeneous import h_sympl
from laurent_module.determinant import det
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import LengthMismatch, _as_partition


class NonIntegerResult(ArithmeticError):
    pass


def _skew_lengths(la, mu, N: int):
    la, mu = _as_partition(la), _as_partition(mu)
    if len(la) != len(mu) + N:
        raise LengthMismatch(
            f"skew function needs len(la) = len(mu) + N, got {len(la)} != {len(mu)} + {N}"
        )
    return la, mu


def sp_jt(la, N: int) -> LaurentPoly:
    """1/2 det(h_{nu_i - i + j} + h_{nu_i - i - j + 2}), nu = la padded to N."""
    nu = _as_partition(la).fit(N)
    h = lambda n: h_sympl(n, N)  # noqa: E731
    matrix = [
        [h(nu[i] - i + j) + h(nu[i] - i - j) for j in range(N)]
        for i in range(N)
    ]
    value = det(matrix, arity=N) * Fraction(1, 2) if N else LaurentPoly.one(0)
    if not value.is_integral():
        raise NonIntegerResult(f"sp_jt({nu}, {N}) has non-integer coefficients")
    return value


def o_jt(la, N: int) -> LaurentPoly:
    """det(h_{nu_i - i + j} - h_{nu_i - i - j}), nu = la padded to N."""
    nu = _as_partition(la).fit(N)
    # 0-based i, j
    matrix = [
        [h_sympl(nu[i] - i + j, N) - h_sympl(nu[i] - i - j - 2, N) for j in range(N)]
        for i in range(N)
    ]
    return det(matrix, arity=N)


def skew_sp_jt(la, mu, N: int) -> LaurentPoly:
    la, mu = _skew_lengths(la, mu, N)
    l = len(mu)
    size = l + N
    mu_ext = mu.padded(l + 1)

    def entry(i: int, j: int) -> LaurentPoly:
        # 1-based i, j
        if j <= l + 1:
            return h_sympl(la.part(i) - mu_ext.part(j) - i + j, N)
        return h_sympl(la.part(i) - i + j, N) + h_sympl(la.part(i) - i - j + 2 * l + 2, N)

    return det(
        [[entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)],
        arity=N,
    )


def skew_o_jt(la, mu, N: int) -> LaurentPoly:
    la, mu = _skew_lengths(la, mu, N)
    l = len(mu)
    size = l + N

    def entry(i: int, j: int) -> LaurentPoly:
        if j <= l:
            return h_sympl(la.part(i) - mu.part(j) - i + j, N)
        return h_sympl(la.part(i) - i + j, N) - h_sympl(la.part(i) - i - j + 2 * l, N)

    return det(
        [[entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)],
        arity=N,
    )


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(sp_jt((1,), 1))
    print(o_jt((1,), 2))
    print(skew_sp_jt((1, 0), (1,), 1))
    print(skew_o_jt((1, 1), (0,), 1))
