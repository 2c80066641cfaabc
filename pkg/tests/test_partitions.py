import pytest
from hypothesis import given, strategies as st

from partition_module.gt_chains import enumerate_gt_chains, enumerate_schur_chains
from partition_module.partitions import (
    GeneralizedPartition,
    LengthMismatch,
    contains,
    enumerate_between,
    generalized_partitions,
    interlaces,
    partitions_inside,
    partitions_up_to,
)

P = GeneralizedPartition.of


def test_trailing_zeros_are_part_of_identity():
    assert P(2, 1) != P(2, 1, 0)
    assert P(2, 1, 0).normalize() == P(2, 1)
    assert len(P(2, 1, 0)) == 3


def test_invalid_partitions():
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(1, -1)


def test_parse_and_str():
    assert GeneralizedPartition.parse("2,1,0") == P(2, 1, 0)
    assert GeneralizedPartition.parse("") == P()
    assert str(P(2, 1, 0)) == "(2,1,0)"
    assert str(P()) == "∅"


def test_padding():
    assert P(2).padded(3) == P(2, 0, 0)
    assert P(2, 0, 0).fit(1) == P(2)
    with pytest.raises(LengthMismatch):
        P(2, 1).padded(1)
    with pytest.raises(LengthMismatch):
        P(2, 1).fit(1)


def test_interlaces_examples():
    assert interlaces(P(2), P(3, 1))
    assert not interlaces(P(0), P(2, 2))
    for m in range(4):
        assert interlaces(P(), P(m))


def test_contains_examples():
    assert contains(P(1), P(2, 1, 1))
    assert not contains(P(3), P(2, 2))
    assert contains(P(), P(4, 2))


def test_enumerate_between_examples():
    assert enumerate_between(P(), P(1), 1) == [P(0), P(1)]
    assert enumerate_between(P(1), P(1, 0), 2) == [P(1, 0)]
    assert enumerate_between(P(2, 2), P(2, 2), 2) == [P(2, 2)]
    assert enumerate_between(P(2, 1), P(2, 1), 2) == [P(2, 1)]
    assert enumerate_between(P(2), P(1, 0), 2) == []


def test_enumerate_between_is_ascending():
    found = enumerate_between(P(1), P(3, 0), 2)
    assert found == sorted(found, key=lambda a: a.parts)
    assert found == [P(1, 0), P(2, 0), P(3, 0)]


def test_partitions_up_to_examples():
    assert partitions_up_to(1, 2) == [P(), P(1), P(2)]
    assert partitions_up_to(2, 2) == [P(), P(1), P(2), P(1, 1)]
    assert partitions_up_to(0, 5) == [P()]


def test_generalized_partitions():
    assert generalized_partitions(2, 2) == [P(0, 0), P(1, 0), P(1, 1), P(2, 0)]
    assert generalized_partitions(0, 3) == [P()]


def test_partitions_inside():
    assert partitions_inside(P(2, 1), 2) == [P(0, 0), P(1, 0), P(1, 1), P(2, 0), P(2, 1)]
    assert partitions_inside(P(1), 2) == [P(0, 0), P(1, 0)]


small_partitions = st.lists(st.integers(0, 3), max_size=3).map(
    lambda parts: GeneralizedPartition(tuple(sorted(parts, reverse=True)))
)


@given(small_partitions, small_partitions)
def test_interlacing_implies_containment(nu, la):
    if interlaces(nu, la):
        assert contains(nu, la)


def test_gt_chain_examples():
    chains = enumerate_gt_chains(P(), P(1), 1)
    assert [c[1] for c in chains] == [P(0), P(1)]
    assert [c.steps for c in enumerate_gt_chains(P(1), P(1, 0), 1)] == [(P(1), P(1, 0), P(1, 0))]
    assert enumerate_gt_chains(P(2), P(1, 1), 1) == []


def test_gt_chain_lengths():
    for chain in enumerate_gt_chains(P(1), P(2, 1, 0), 2):
        assert [len(z) for z in chain.steps] == [1, 2, 2, 3, 3]
        for lo, hi in zip(chain.steps, chain.steps[1:]):
            assert interlaces(lo, hi)


def test_gt_chains_length_rule():
    with pytest.raises(LengthMismatch):
        enumerate_gt_chains(P(1), P(1), 1)


@given(small_partitions, small_partitions)
def test_one_step_chains_match_enumerate_between(mu, top):
    la = top.padded(len(mu) + 1) if len(top) <= len(mu) + 1 else None
    if la is None or not contains(mu, la):
        return
    chains = enumerate_gt_chains(mu, la, 1)
    assert [c[1] for c in chains] == enumerate_between(mu, la, len(mu) + 1)


def test_schur_chains():
    assert enumerate_schur_chains(P(), P(1), 2) == [(P(), P(0), P(1, 0)), (P(), P(1), P(1, 0))]
    assert enumerate_schur_chains(P(), P(1, 1), 1) == []
    assert enumerate_schur_chains(P(2), P(1), 1) == []
