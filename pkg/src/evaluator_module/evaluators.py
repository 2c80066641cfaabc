##################################################
# Module G - Function Evaluators
# Python version: 3.13.x (project standard)
#
# Description:
# One lookup table from (family, method) to an evaluator f(la, mu, N)
# shared by the command line and the dashboard. Straight families
# ignore mu.
#
# Functions:
# - evaluate(family, la, mu, N, method="auto")
#
# Returns:
# LaurentPoly (RationalFn for sstar)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

from bcd_module.gelfand_tsetlin import skew_o_gt, skew_sp_gt
from bcd_module.jacobi_trudi import o_jt, skew_o_jt, skew_sp_jt, sp_jt
from bcd_module.sstar import sstar
from genfunc_module.bialternants import o_bialt, schur_bialt, sp_bialt
from schur_module.skew_schur import schur_jt, skew_schur_gt, skew_schur_jt

FAMILIES = ("s", "sp", "o", "skew-s", "skew-sp", "skew-o", "sstar")
METHODS = ("jt", "gt", "bialternant", "auto")


def _straight_gt(gt):
    # straight functions as skew ones over the empty partition
    return lambda la, mu, N: gt(la.fit(N), (), N)


EVALUATORS = {
    ("s", "jt"): lambda la, mu, N: schur_jt(la, N),
    ("s", "gt"): lambda la, mu, N: skew_schur_gt(la, (), N),
    ("s", "bialternant"): lambda la, mu, N: schur_bialt(la, N),
    ("sp", "jt"): lambda la, mu, N: sp_jt(la, N),
    ("sp", "gt"): _straight_gt(skew_sp_gt),
    ("sp", "bialternant"): lambda la, mu, N: sp_bialt(la, N),
    ("o", "jt"): lambda la, mu, N: o_jt(la, N),
    ("o", "gt"): _straight_gt(skew_o_gt),
    ("o", "bialternant"): lambda la, mu, N: o_bialt(la, N),
    ("skew-s", "jt"): skew_schur_jt,
    ("skew-s", "gt"): skew_schur_gt,
    ("skew-sp", "jt"): skew_sp_jt,
    ("skew-sp", "gt"): skew_sp_gt,
    ("skew-o", "jt"): skew_o_jt,
    ("skew-o", "gt"): skew_o_gt,
    ("sstar", "jt"): sstar,
}


def evaluate(family: str, la, mu, N: int, method: str = "auto"):
    if method == "auto":
        method = "jt"
    try:
        fn = EVALUATORS[(family, method)]
    except KeyError:
        raise ValueError(f"method {method} is not available for family {family}") from None
    return fn(la, mu, N)


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    from partition_module.partitions import GeneralizedPartition

    la = GeneralizedPartition.of(2, 1)
    print(evaluate("sp", la, GeneralizedPartition(), 2))
    print(evaluate("sp", la, GeneralizedPartition(), 2, "gt"))
