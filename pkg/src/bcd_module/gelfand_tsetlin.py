##################################################
# Module E - Symplectic / Orthogonal Gelfand-Tsetlin Sums
# Python version: 3.13.x (project standard)
#
# Description:
# sp_{la/mu} and o_{la/mu} as weighted sums over chains
# mu = z_0 ≺ z_1 ≺ ... ≺ z_2N = la, where odd steps z_(2i-1) carry
# the variable x_i. Also the one-variable alpha-sums used as an
# independent oracle for the N = 1 case.
#
# Functions:
# - skew_sp_gt(la, mu, N), skew_o_gt(la, mu, N)
# - sp_single_var(la, nu), o_single_var(la, nu)
#
# Returns:
# LaurentPoly in N variables (one variable t for the single_var forms)
#
# Requirements:
# - standard library only
##################################################

from __future__ import annotations

import logging
from collections import Counter

from laurent_module.laurent_poly import LaurentPoly
from partition_module.gt_chains import enumerate_gt_chains
from partition_module.partitions import LengthMismatch, _as_partition, enumerate_between

logger = logging.getLogger(__name__)


def _odd_step_exponents(chain, N: int) -> tuple[int, ...]:
    return tuple(
        2 * chain[2 * i - 1].weight - chain[2 * i].weight - chain[2 * i - 2].weight
        for i in range(1, N + 1)
    )


def skew_sp_gt(la, mu, N: int) -> LaurentPoly:
    """Sum of prod x_i^(2|z_(2i-1)| - |z_(2i)| - |z_(2i-2)|) over symplectic patterns."""
    chains = enumerate_gt_chains(mu, la, N)
    weights: Counter = Counter(_odd_step_exponents(chain, N) for chain in chains)
    logger.debug("skew_sp_gt(%s, %s, %d): %d chains", la, mu, N, len(chains))
    return LaurentPoly(N, weights)


def _o_step_factor(chain, l: int, i: int) -> int:
    # a = new last part of z_(2i-1); b, c are its neighbours in z_(2i) and z_(2i-2).
    # Returns 0 when the pattern is not orthogonal, else the multiplicity.
    a = chain[2 * i - 1].part(l + i)
    b = chain[2 * i].part(l + i)
    if l + i - 1 == 0:
        # no part above: c reads as +infinity
        return 1 if a in (0, b) else 0
    c = chain[2 * i - 2].part(l + i - 1)
    if a not in (0, min(b, c)):
        return 0
    return 2 if b > 0 and c == 0 else 1


def skew_o_gt(la, mu, N: int) -> LaurentPoly:
    """Orthogonal pattern sum with the (1 + [b > 0][c = 0]) multiplicity per step."""
    l = len(_as_partition(mu))
    weights: Counter = Counter()
    for chain in enumerate_gt_chains(mu, la, N):
        multiplicity = 1
        for i in range(1, N + 1):
            multiplicity *= _o_step_factor(chain, l, i)
            if not multiplicity:
                break
        if multiplicity:
            weights[_odd_step_exponents(chain, N)] += multiplicity
    return LaurentPoly(N, weights)


def _single_var_lengths(la, nu):
    la, nu = _as_partition(la), _as_partition(nu)
    if len(la) != len(nu) + 1:
        raise LengthMismatch(f"one-variable lemma needs len(la) = len(nu) + 1, got {la} over {nu}")
    return la, nu


def sp_single_var(la, nu) -> LaurentPoly:
    """sum over nu ≺ alpha ≺ la of t^(2|alpha| - |la| - |nu|)."""
    la, nu = _single_var_lengths(la, nu)
    weights: Counter = Counter()
    for alpha in enumerate_between(nu, la, len(la)):
        weights[(2 * alpha.weight - la.weight - nu.weight,)] += 1
    return LaurentPoly(1, weights)


def o_single_var(la, nu) -> LaurentPoly:
    """As sp_single_var with alpha_(l+1) in {0, min(la_(l+1), nu_l)} and a doubling
    when la_(l+1) > 0 = nu_l."""
    la, nu = _single_var_lengths(la, nu)
    l = len(nu)
    top = la.part(l + 1)
    if l == 0:
        allowed, factor = {0, top}, 1
    else:
        allowed = {0, min(top, nu.part(l))}
        factor = 2 if top > 0 and nu.part(l) == 0 else 1
    weights: Counter = Counter()
    for alpha in enumerate_between(nu, la, len(la)):
        if alpha.part(l + 1) in allowed:
            weights[(2 * alpha.weight - la.weight - nu.weight,)] += factor
    return LaurentPoly(1, weights)


##################################################
# Simple test block
##################################################

if __name__ == "__main__":
    print(skew_sp_gt((1,), (), 1))
    print(skew_o_gt((1, 1), (0,), 1))
    print(sp_single_var((2, 1), (1,)))
    print(o_single_var((1, 0), (0,)))
