##################################################
# Module F - Branching Rule Checks
# Python version: 3.13.x (project standard)
#
# Description:
# F_la(x^±; y^±) = sum_mu F_mu(x^±) F_{la/mu}(y^±) for F = sp, o,
# with x = (x_1..x_(n-k)) and y = (y_1..y_k) sharing one n-variable
# alphabet. mu runs over generalized partitions of length n-k inside la.
#
# Functions:
# - check_branching_sp(la, n, k)
# - check_branching_o(la, n, k)
# - check_alphabet_swap(family, la, n, k)
#
# Returns:
# CheckReport
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from bcd_module.jacobi_trudi import o_jt, skew_o_jt, skew_sp_jt, sp_jt
from identity_module.reports import CheckReport
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import _as_partition, partitions_inside

_FUNCTIONS = {
    "sp": (sp_jt, skew_sp_jt),
    "o": (o_jt, skew_o_jt),
}


def _validate(la, n: int, k: int):
    la = _as_partition(la)
    if len(la) != n:
        raise ValueError(f"branching needs len(la) = n, got {len(la)} != {n}")
    if not 1 <= k < n:
        raise ValueError(f"branching needs 1 <= k < n, got k={k}, n={n}")
    return la


def _branching(family: str, la, n: int, k: int) -> CheckReport:
    straight, skew = _FUNCTIONS[family]
    la = _validate(la, n, k)
    m = n - k
    x_slots = list(range(m))
    y_slots = list(range(m, n))

    def sides():
        lhs = straight(la, n)
        rhs = LaurentPoly.zero(n)
        for mu in partitions_inside(la, m):
            rhs = rhs + straight(mu, m).embed(x_slots, n) * skew(la, mu, k).embed(y_slots, n)
        return lhs, rhs

    return CheckReport.timed(f"branching_{family}", {"la": la, "n": n, "k": k}, sides)


def check_branching_sp(la, n: int, k: int) -> CheckReport:
    return _branching("sp", la, n, k)


def check_branching_o(la, n: int, k: int) -> CheckReport:
    return _branching("o", la, n, k)


def check_alphabet_swap(family: str, la, n: int, k: int) -> CheckReport:
    """The branching LHS is unchanged when the x and y blocks trade places."""
    straight, _ = _FUNCTIONS[family]
    la = _validate(la, n, k)
    # (x_1..x_(n-k), y_1..y_k) -> (y_1..y_k, x_1..x_(n-k))
    perm = [(v + k) % n for v in range(n)]

    def sides():
        value = straight(la, n)
        return value, value.permute(perm)

    return CheckReport.timed(f"branching_swap_{family}", {"la": la, "n": n, "k": k}, sides)


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    report = check_branching_sp((1, 0), 2, 1)
    print(report.passed, report.lhs, "|", report.rhs)
