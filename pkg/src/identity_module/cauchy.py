##################################################
# Module F - Cauchy Identity Checks
# Python version: 3.13.x (project standard)
#
# Description:
# Compares both sides of the classical and skew Cauchy identities
# as truncated series. Sums over partitions are cut where the
# grading makes every further term vanish, so the comparison is
# exact up to the cap.
#
# Functions:
# - check_cauchy(family, N, D)
# - check_skew_cauchy_schur(la, mu, N, K, D)
# - check_skew_cauchy_bcd(family, la, mu, N, K, D)
#
# Returns:
# CheckReport
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import logging

from bcd_module.jacobi_trudi import o_jt, skew_o_jt, skew_sp_jt, sp_jt
from bcd_module.sstar import sstar, vandermonde
from identity_module.reports import CheckReport, TruncationSpec
from identity_module.series import (
    cauchy_kernel,
    correction,
    x_positions,
    y_grading,
    y_positions,
)
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import (
    _as_partition,
    contains,
    generalized_partitions,
    partitions_inside,
    partitions_up_to,
)
from schur_module.skew_schur import schur_jt, skew_schur_jt

logger = logging.getLogger(__name__)

_STRAIGHT = {"schur": schur_jt, "sp": sp_jt, "o": o_jt}
_SKEW = {"sp": skew_sp_jt, "o": skew_o_jt}


class UnsupportedConfiguration(ValueError):
    """No S* length bookkeeping makes this skew Cauchy instance well defined."""


def check_cauchy(family: str, N: int, D: int) -> CheckReport:
    """sum_la F_la(x) s_la(y) = C_F(y) prod(...)^-1, up to y-degree D."""
    if family not in _STRAIGHT:
        raise ValueError(f"family must be one of {tuple(_STRAIGHT)}, got {family!r}")
    if N < 1 or D < 0:
        raise ValueError(f"check_cauchy needs N >= 1 and D >= 0, got N={N}, D={D}")
    arity = 2 * N
    xs, ys = x_positions(N), y_positions(N, N)
    spec = y_grading(N, N, D)
    straight = _STRAIGHT[family]

    def sides():
        lhs = LaurentPoly.zero(arity)
        for la in partitions_up_to(N, D):
            lhs = lhs + straight(la, N).embed(xs, arity) * schur_jt(la, N).embed(ys, arity)
        rhs = spec.apply(cauchy_kernel(family, N, N, spec) * correction(family, N, N))
        return spec.apply(lhs), rhs

    return CheckReport.timed(f"cauchy_{family}", {"family": family, "N": N, "D": D}, sides)


def check_skew_cauchy_schur(la, mu, N: int, K: int, D: int) -> CheckReport:
    """sum_rho s_{rho/la}(x) s_{rho/mu}(y) = prod(1 - x_i y_j)^-1 sum_tau s_{mu/tau}(x) s_{la/tau}(y)."""
    la, mu = _as_partition(la).normalize(), _as_partition(mu).normalize()
    arity = N + K
    xs, ys = x_positions(N), y_positions(N, K)
    # joint grading: every variable counts
    spec = TruncationSpec(tuple(range(arity)), D)

    def sides():
        lhs = LaurentPoly.zero(arity)
        max_len = max(len(la) + N, len(mu) + K)
        for rho in partitions_up_to(max_len, la.weight + mu.weight + D):
            if not (contains(la, rho) and contains(mu, rho)):
                continue
            lhs = lhs + spec.apply(
                skew_schur_jt(rho, la, N).embed(xs, arity) * skew_schur_jt(rho, mu, K).embed(ys, arity)
            )
        inner = LaurentPoly.zero(arity)
        for tau in partitions_up_to(min(len(la), len(mu)), min(la.weight, mu.weight)):
            if contains(tau, la) and contains(tau, mu):
                inner = inner + skew_schur_jt(mu, tau, N).embed(xs, arity) * skew_schur_jt(
                    la, tau, K
                ).embed(ys, arity)
        rhs = spec.apply(cauchy_kernel("schur", N, K, spec) * inner)
        return spec.apply(lhs), rhs

    params = {"la": la, "mu": mu, "N": N, "K": K, "D": D}
    return CheckReport.timed("skew_cauchy_schur", params, sides)


def _sstar_times_vandermonde(top, bottom, K: int, N: int) -> LaurentPoly:
    # S*(y) V(y) as a polynomial on the y slots of the (N + K)-variable alphabet
    value = sstar(top, bottom, K).numerator_over(vandermonde(K))
    return value.embed(y_positions(N, K), N + K)


def bcd_configuration(la, mu, N: int, K: int) -> str:
    """'a' or 'b' for the two supported S* bookkeepings; UnsupportedConfiguration otherwise."""
    la, mu = _as_partition(la), _as_partition(mu)
    l = len(mu)
    if len(la) != l + N:
        raise UnsupportedConfiguration(f"len(la) must be len(mu) + N, got {len(la)} != {l} + {N}")
    if K < 1:
        raise UnsupportedConfiguration(f"the y alphabet needs K >= 1, got {K}")
    nonzero = len(la.normalize())
    if K <= l and nonzero <= l - K:
        return "a"
    if l == 0 and K <= N and nonzero <= N - K:
        return "b"
    raise UnsupportedConfiguration(
        f"no S* length bookkeeping for la={la}, mu={mu}, N={N}, K={K}"
    )


def check_skew_cauchy_bcd(family: str, la, mu, N: int, K: int, D: int) -> CheckReport:
    """sum_rho F_{rho/mu}(x^±) S*_{rho/la}(y) against the product side, up to y-degree D.

    Both sides are multiplied by the y-Vandermonde before truncation, which
    clears every S* denominator.
    """
    if family not in _SKEW:
        raise ValueError(f"family must be 'sp' or 'o', got {family!r}")
    la, mu = _as_partition(la), _as_partition(mu)
    case = bcd_configuration(la, mu, N, K)
    skew = _SKEW[family]
    arity = N + K
    l = len(mu)
    xs = x_positions(N)
    spec = y_grading(N, K, D + K * (K - 1) // 2)

    def sides_a():
        la_top = la[: l + N - K]
        lhs = LaurentPoly.zero(arity)
        for rho in generalized_partitions(l + N, la_top.weight + D):
            if not contains(mu, rho):
                continue
            term = skew(rho, mu, N).embed(xs, arity) * _sstar_times_vandermonde(rho, la_top, K, N)
            lhs = lhs + spec.apply(term)
        inner = LaurentPoly.zero(arity)
        for tau in partitions_inside(la_top, l - K):
            inner = inner + skew(la_top, tau, N).embed(xs, arity) * _sstar_times_vandermonde(
                mu, tau, K, N
            )
        rhs = spec.apply(cauchy_kernel(family, N, K, spec) * inner)
        return lhs, rhs

    def sides_b():
        la_top = la[: N - K]
        lhs = LaurentPoly.zero(arity)
        for rho in generalized_partitions(N, la_top.weight + D):
            term = skew(rho, mu, N).embed(xs, arity) * _sstar_times_vandermonde(rho, la_top, K, N)
            lhs = lhs + spec.apply(term)
        v = vandermonde(K).embed(y_positions(N, K), arity)
        rhs = spec.apply(
            cauchy_kernel(family, N, K, spec)
            * correction(family, N, K)
            * skew(la, mu, N).embed(xs, arity)
            * v
        )
        return lhs, rhs

    logger.debug("skew Cauchy %s: case %s for la=%s, mu=%s, N=%d, K=%d", family, case, la, mu, N, K)
    params = {"family": family, "la": la, "mu": mu, "N": N, "K": K, "D": D, "case": case}
    return CheckReport.timed(
        f"skew_cauchy_{family}", params, sides_a if case == "a" else sides_b
    )


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(check_cauchy("sp", 1, 3).passed)
    print(check_skew_cauchy_schur((1,), (1,), 1, 1, 3).passed)
    print(check_skew_cauchy_bcd("sp", (0,), (), 1, 1, 2).passed)
