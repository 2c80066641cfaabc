##################################################
# Module F - Verification Suites
# Python version: 3.13.x (project standard)
#
# Description:
# Bounded parameter grids for every identity the library verifies.
# A suite is a list of zero-argument checks built in a fixed order;
# run_suite evaluates them on a thread pool and returns the reports
# in that same order.
#
# Suites:
# - equivalence, branching, cauchy, specialization, remarks, symmetry
#
# Functions:
# - SuiteBounds.default(suite_id)
# - build_checks(suite_id, bounds)
# - run_suite(suite_id, bounds=None, threads=None)
#
# Returns:
# list[CheckReport]
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import partial
from typing import Callable

from bcd_module.gelfand_tsetlin import o_single_var, skew_o_gt, skew_sp_gt, sp_single_var
from bcd_module.jacobi_trudi import o_jt, skew_o_jt, skew_sp_jt, sp_jt
from bcd_module.sstar import sstar
from genfunc_module.bialternants import o_bialt, schur_bialt, sp_bialt
from identity_module.branching import check_alphabet_swap, check_branching_o, check_branching_sp
from identity_module.cauchy import (
    UnsupportedConfiguration,
    bcd_configuration,
    check_cauchy,
    check_skew_cauchy_bcd,
    check_skew_cauchy_schur,
)
from identity_module.reports import CheckReport
from identity_module.settings import load_settings
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import (
    contains,
    generalized_partitions,
    interlaces,
    partitions_up_to,
)
from schur_module.skew_schur import schur_jt, skew_schur_gt, skew_schur_jt

logger = logging.getLogger(__name__)

SUITES = ("equivalence", "branching", "cauchy", "specialization", "remarks", "symmetry")

# weight cap for the la/mu grid of the sp/o skew Cauchy checks
SKEW_CAUCHY_WEIGHT = 2
# (l, N, K) shapes of the sp/o skew Cauchy grid
SKEW_CAUCHY_SHAPES = ((0, 1, 1), (1, 1, 1), (2, 1, 1))
# variable cap for the skew part of the symmetry suite; straight sp/o use max_vars
SYMMETRY_SKEW_VARS = 2


class UnknownSuite(ValueError):
    pass


@dataclass(frozen=True)
class SuiteBounds:
    max_weight: int
    max_vars: int
    max_len: int
    degree: int

    @classmethod
    def default(cls, suite_id: str) -> SuiteBounds:
        _check_suite(suite_id)
        return _DEFAULT_BOUNDS[suite_id]

    def override(self, **changes) -> SuiteBounds:
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


_DEFAULT_BOUNDS = {
    "equivalence": SuiteBounds(max_weight=6, max_vars=4, max_len=3, degree=0),
    "branching": SuiteBounds(max_weight=5, max_vars=3, max_len=3, degree=0),
    "cauchy": SuiteBounds(max_weight=2, max_vars=2, max_len=2, degree=6),
    "specialization": SuiteBounds(max_weight=5, max_vars=1, max_len=3, degree=0),
    "remarks": SuiteBounds(max_weight=3, max_vars=2, max_len=2, degree=3),
    "symmetry": SuiteBounds(max_weight=6, max_vars=3, max_len=3, degree=0),
}


def _check_suite(suite_id: str) -> None:
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}; choose one of {', '.join(SUITES)}")


Check = Callable[[], CheckReport]


def _equal(identity_id: str, params: dict, left: Callable, right: Callable, relation="eq") -> Check:
    return partial(
        CheckReport.timed, identity_id, params, lambda: (left(), right()), relation
    )


def _skew_pairs(max_len: int, N: int, max_weight: int):
    # (la, mu) with len(la) = len(mu) + N, containment not required
    for l in range(max_len + 1):
        for mu in generalized_partitions(l, max_weight):
            for la in generalized_partitions(l + N, max_weight):
                yield la, mu


# -------------------------------------------------------------------
# equivalence
# -------------------------------------------------------------------
def _equivalence_checks(b: SuiteBounds) -> list[Check]:
    checks: list[Check] = []

    # 1. Type A straight: JT, bialternant, GT
    for N in range(1, b.max_vars + 1):
        for la in partitions_up_to(N, b.max_weight):
            p = {"la": la, "N": N}
            checks.append(_equal("schur_jt=bialt", p, partial(schur_jt, la, N), partial(schur_bialt, la, N)))
            checks.append(_equal("schur_jt=gt", p, partial(schur_jt, la, N), partial(skew_schur_gt, la, (), N)))

    # 2. Type A skew
    for N in range(1, min(b.max_vars, 3) + 1):
        for mu in partitions_up_to(b.max_len, b.max_weight):
            for la in partitions_up_to(len(mu) + N, b.max_weight):
                if contains(mu, la):
                    p = {"la": la, "mu": mu, "N": N}
                    checks.append(
                        _equal("skew_schur_jt=gt", p, partial(skew_schur_jt, la, mu, N), partial(skew_schur_gt, la, mu, N))
                    )

    # 3. Types C and D straight
    for N in range(1, min(b.max_vars, 3) + 1):
        for la in partitions_up_to(N, b.max_weight):
            p = {"la": la, "N": N}
            checks.append(_equal("sp_jt=bialt", p, partial(sp_jt, la, N), partial(sp_bialt, la, N)))
            checks.append(_equal("o_jt=bialt", p, partial(o_jt, la, N), partial(o_bialt, la, N)))

    # 4. Types C and D skew
    for N in range(1, min(b.max_vars, 2) + 1):
        for la, mu in _skew_pairs(b.max_len, N, b.max_weight):
            p = {"la": la, "mu": mu, "N": N}
            checks.append(_equal("skew_sp_jt=gt", p, partial(skew_sp_jt, la, mu, N), partial(skew_sp_gt, la, mu, N)))
            checks.append(_equal("skew_o_jt=gt", p, partial(skew_o_jt, la, mu, N), partial(skew_o_gt, la, mu, N)))
    return checks


# -------------------------------------------------------------------
# branching
# -------------------------------------------------------------------
def _branching_checks(b: SuiteBounds) -> list[Check]:
    checks: list[Check] = []
    for n in range(2, b.max_vars + 1):
        for k in range(1, n):
            for la in generalized_partitions(n, b.max_weight):
                checks.append(partial(check_branching_sp, la, n, k))
                checks.append(partial(check_branching_o, la, n, k))
                checks.append(partial(check_alphabet_swap, "sp", la, n, k))
                checks.append(partial(check_alphabet_swap, "o", la, n, k))
    return checks


# -------------------------------------------------------------------
# cauchy
# -------------------------------------------------------------------
def _cauchy_checks(b: SuiteBounds) -> list[Check]:
    checks: list[Check] = []
    for family in ("schur", "sp", "o"):
        for N in range(1, b.max_vars + 1):
            checks.append(partial(check_cauchy, family, N, b.degree))

    small = partitions_up_to(b.max_len, b.max_weight)
    for la, mu in itertools.product(small, small):
        checks.append(partial(check_skew_cauchy_schur, la, mu, 1, 1, b.degree))

    for family in ("sp", "o"):
        for l, N, K in SKEW_CAUCHY_SHAPES:
            for mu in generalized_partitions(l, SKEW_CAUCHY_WEIGHT):
                for la in generalized_partitions(l + N, SKEW_CAUCHY_WEIGHT):
                    try:
                        bcd_configuration(la, mu, N, K)
                    except UnsupportedConfiguration:
                        continue
                    checks.append(partial(check_skew_cauchy_bcd, family, la, mu, N, K, b.degree))
    return checks


# -------------------------------------------------------------------
# specialization
# -------------------------------------------------------------------
def _type_a_single_var(la, nu) -> LaurentPoly:
    if not interlaces(nu, la):
        return LaurentPoly.zero(1)
    return LaurentPoly.monomial((la.weight - nu.weight,))


def _specialization_checks(b: SuiteBounds) -> list[Check]:
    checks: list[Check] = []
    for l in range(b.max_len + 1):
        for nu in generalized_partitions(l, b.max_weight):
            for la in generalized_partitions(l + 1, b.max_weight):
                p = {"la": la, "nu": nu}
                checks.append(_equal("sp_single_var", p, partial(skew_sp_jt, la, nu, 1), partial(sp_single_var, la, nu)))
                checks.append(_equal("o_single_var", p, partial(skew_o_jt, la, nu, 1), partial(o_single_var, la, nu)))

    for nu in partitions_up_to(b.max_len, b.max_weight):
        for la in partitions_up_to(b.max_len + 1, b.max_weight):
            p = {"la": la, "nu": nu}
            checks.append(
                _equal("schur_single_var", p, partial(skew_schur_jt, la, nu, 1), partial(_type_a_single_var, la, nu))
            )
    return checks


# -------------------------------------------------------------------
# remarks
# -------------------------------------------------------------------
def _doubled_images(N: int) -> list[tuple[int, ...]]:
    # z_(2i-1) -> x_i, z_(2i) -> x_i^-1
    images = []
    for i in range(N):
        for sign in (1, -1):
            exp = [0] * N
            exp[i] = sign
            images.append(tuple(exp))
    return images


def _skew_schur_doubled(la, mu, N: int) -> LaurentPoly:
    return skew_schur_jt(la, mu, 2 * N).substitute_monomials(_doubled_images(N), N)


def _remarks_checks(b: SuiteBounds) -> list[Check]:
    checks: list[Check] = []

    # 1. Padding changes skew sp values
    checks.append(
        _equal(
            "skew_sp_padding_sensitivity",
            {"la": (2, 1, 1), "mu": (1,), "padded_la": (2, 1, 1, 0), "padded_mu": (1, 0), "N": 2},
            partial(skew_sp_jt, (2, 1, 1), (1,), 2),
            partial(skew_sp_jt, (2, 1, 1, 0), (1, 0), 2),
            relation="ne",
        )
    )

    # 2. Reduction to skew Schur in the doubled alphabet
    for N in range(1, b.max_vars + 1):
        for l in range(b.max_len + 1):
            for mu in generalized_partitions(l, b.max_weight):
                for top in generalized_partitions(l + 1, b.max_weight):
                    la = top.padded(l + N)
                    if contains(mu, la):
                        p = {"la": la, "mu": mu, "N": N}
                        checks.append(
                            _equal("skew_sp_doubled_schur", p, partial(skew_sp_jt, la, mu, N), partial(_skew_schur_doubled, la, mu, N))
                        )

    # 3. S* properties
    for N in range(1, b.max_vars + 1):
        for la in generalized_partitions(N, b.max_weight):
            p = {"la": la, "N": N}
            checks.append(_equal("sstar_straight=schur", p, partial(sstar, la, (), N), partial(schur_jt, la, N)))
        for M in range(1, b.max_len + 1):
            for mu in generalized_partitions(M, b.max_weight):
                for la in generalized_partitions(M + N, b.max_weight):
                    p = {"la": la, "mu": mu, "N": N}
                    if mu[M - 1] == 0 and la[M + N - 1] > 0:
                        checks.append(
                            _equal("sstar_vanishing", p, partial(sstar, la, mu, N), partial(LaurentPoly.zero, N))
                        )
                    checks.append(
                        _equal(
                            "sstar_stability",
                            p,
                            partial(sstar, la.padded(M + N + 1), mu.padded(M + 1), N),
                            partial(sstar, la, mu, N),
                        )
                    )

    # 4. Skew Cauchy with all-zero partitions
    for family, max_n in (("sp", b.max_vars), ("o", 1)):
        for N in range(1, max_n + 1):
            checks.append(
                partial(check_skew_cauchy_bcd, family, (0,) * (2 * N), (0,) * N, N, N, b.degree)
            )
    return checks


# -------------------------------------------------------------------
# symmetry
# -------------------------------------------------------------------
def _symmetry_images(value: LaurentPoly) -> LaurentPoly:
    # the first image that differs from value, or value itself
    N = value.arity
    for i in range(N):
        image = value.invert_vars([i])
        if image != value:
            return image
    for perm in itertools.permutations(range(N)):
        image = value.permute(perm)
        if image != value:
            return image
    return value


def _symmetry_check(name: str, params: dict, compute: Callable[[], LaurentPoly]) -> Check:
    def sides():
        value = compute()
        return value, _symmetry_images(value)

    return partial(CheckReport.timed, name, params, sides)


def _symmetry_checks(b: SuiteBounds) -> list[Check]:
    checks: list[Check] = []
    for N in range(1, b.max_vars + 1):
        for la in partitions_up_to(N, b.max_weight):
            p = {"la": la, "N": N}
            checks.append(_symmetry_check("symmetry_sp", p, partial(sp_jt, la, N)))
            checks.append(_symmetry_check("symmetry_o", p, partial(o_jt, la, N)))
        if N > SYMMETRY_SKEW_VARS:
            continue
        for la, mu in _skew_pairs(b.max_len, N, b.max_weight):
            if contains(mu, la):
                p = {"la": la, "mu": mu, "N": N}
                checks.append(_symmetry_check("symmetry_skew_sp", p, partial(skew_sp_jt, la, mu, N)))
                checks.append(_symmetry_check("symmetry_skew_o", p, partial(skew_o_jt, la, mu, N)))
    return checks


_BUILDERS = {
    "equivalence": _equivalence_checks,
    "branching": _branching_checks,
    "cauchy": _cauchy_checks,
    "specialization": _specialization_checks,
    "remarks": _remarks_checks,
    "symmetry": _symmetry_checks,
}


def build_checks(suite_id: str, bounds: SuiteBounds | None = None) -> list[Check]:
    _check_suite(suite_id)
    bounds = bounds or SuiteBounds.default(suite_id)
    return _BUILDERS[suite_id](bounds)


def run_suite(suite_id: str, bounds: SuiteBounds | None = None, threads: int | None = None) -> list[CheckReport]:
    checks = build_checks(suite_id, bounds)
    threads = threads or load_settings().threads
    logger.info("suite %s: %d checks on %d thread(s)", suite_id, len(checks), threads)

    start = time.perf_counter()
    if threads == 1:
        reports = [check() for check in checks]
    else:
        # map keeps submission order whatever the completion order
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda check: check(), checks))

    failed = sum(not r.passed for r in reports)
    logger.info(
        "suite %s: %d passed, %d failed in %.2fs",
        suite_id, len(reports) - failed, failed, time.perf_counter() - start,
    )
    return reports


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    small = SuiteBounds(max_weight=2, max_vars=1, max_len=1, degree=2)
    for suite in SUITES:
        results = run_suite(suite, small)
        print(suite, sum(r.passed for r in results), "/", len(results))
