import itertools

import pytest

from conftest import x
from genfunc_module.bialternants import schur_bialt
from partition_module.partitions import contains, partitions_up_to
from schur_module.skew_schur import schur_jt, skew_schur_gt, skew_schur_jt


def test_schur_jt_examples():
    assert schur_jt((2, 2), 1).is_zero()
    assert schur_jt((), 2) == 1
    x1, x2 = x(0, 2), x(1, 2)
    assert schur_jt((2, 1), 2) == x1**2 * x2 + x1 * x2**2


def test_skew_schur_examples():
    t = x(0, 1)
    assert skew_schur_jt((3, 1), (2,), 1) == t**2
    assert skew_schur_gt((3, 1), (2,), 1) == t**2
    assert skew_schur_jt((2, 1), (2, 1), 3) == 1
    x1, x2 = x(0, 2), x(1, 2)
    assert skew_schur_jt((2, 1), (1,), 2) == x1**2 + 2 * x1 * x2 + x2**2
    assert skew_schur_gt((1,), (), 2) == x1 + x2
    assert skew_schur_gt((1,), (2,), 2).is_zero()
    assert skew_schur_jt((1,), (2,), 2).is_zero()


def test_padding_invariance():
    assert skew_schur_jt((2, 1, 0), (1, 0, 0), 2) == skew_schur_jt((2, 1), (1,), 2)
    assert schur_jt((2, 1, 0, 0), 3) == schur_jt((2, 1), 3)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_straight_formulations_agree(N):
    for la in partitions_up_to(N, 4):
        value = schur_jt(la, N)
        assert value == schur_bialt(la, N)
        assert value == skew_schur_gt(la, (), N)


@pytest.mark.parametrize("N", [1, 2])
def test_skew_formulations_agree(N):
    for mu in partitions_up_to(2, 3):
        for la in partitions_up_to(len(mu) + N, 4):
            if contains(mu, la):
                assert skew_schur_jt(la, mu, N) == skew_schur_gt(la, mu, N)


def test_symmetric_under_permutations():
    value = skew_schur_jt((3, 2, 1), (1,), 3)
    for perm in itertools.permutations(range(3)):
        assert value.permute(perm) == value


@pytest.mark.slow
def test_acceptance_grid():
    for N in range(1, 5):
        for la in partitions_up_to(N, 6):
            assert schur_jt(la, N) == schur_bialt(la, N) == skew_schur_gt(la, (), N)
    for N in range(1, 4):
        for mu in partitions_up_to(3, 6):
            for la in partitions_up_to(len(mu) + N, 6):
                if contains(mu, la):
                    assert skew_schur_jt(la, mu, N) == skew_schur_gt(la, mu, N)
