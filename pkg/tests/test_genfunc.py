import itertools

import pytest

from conftest import x
from genfunc_module.bialternants import UnsupportedArity, o_bialt, schur_bialt, sp_bialt
from genfunc_module.complete_homogeneous import (
    Alphabet,
    clear_h_cache,
    h_cache_info,
    h_plain,
    h_sympl,
)
from identity_module.reports import TruncationSpec
from laurent_module.laurent_poly import LaurentPoly
from partition_module.partitions import partitions_up_to


def test_h_plain_examples():
    assert h_plain(-1, 2).is_zero()
    assert h_plain(0, 3) == 1
    x1, x2 = x(0, 2), x(1, 2)
    assert h_plain(2, 2) == x1**2 + x1 * x2 + x2**2


def test_h_sympl_examples():
    t = x(0, 1)
    assert h_sympl(2, 1) == t**2 + 1 + x(0, 1, -2)
    assert h_sympl(0, 4) == 1
    assert h_sympl(1, 2) == x(0, 2) + x(0, 2, -1) + x(1, 2) + x(1, 2, -1)


def test_alphabet_dispatch():
    assert Alphabet(2).h(2) == h_plain(2, 2)
    assert Alphabet(2, doubled=True).h(2) == h_sympl(2, 2)
    with pytest.raises(ValueError):
        Alphabet(-1)


def test_h_memo():
    clear_h_cache()
    h_sympl(3, 2)
    h_sympl(3, 2)
    assert h_cache_info().hits >= 1


def _generating_product(N, D, doubled):
    # prod 1/(1 - x_i z) (and 1/(1 - x_i^-1 z)) up to z^D; z is the last variable
    arity = N + 1
    spec = TruncationSpec((N,), D)
    z = x(N, arity)
    letters = [x(i, arity) for i in range(N)]
    if doubled:
        letters += [x(i, arity, -1) for i in range(N)]
    result = LaurentPoly.one(arity)
    for letter in letters:
        series = sum((spec.apply((letter * z) ** n) for n in range(D + 1)), LaurentPoly.zero(arity))
        result = spec.apply(result * series)
    return result


def _h_series(N, D, doubled):
    arity = N + 1
    h = h_sympl if doubled else h_plain
    total = LaurentPoly.zero(arity)
    for n in range(D + 1):
        total = total + h(n, N).embed(list(range(N)), arity) * x(N, arity, n)
    return total


@pytest.mark.parametrize("N", [1, 2])
@pytest.mark.parametrize("doubled", [False, True])
def test_h_generating_function(N, doubled):
    assert _h_series(N, 5, doubled) == _generating_product(N, 5, doubled)


@pytest.mark.slow
@pytest.mark.parametrize("N", [1, 2, 3])
@pytest.mark.parametrize("doubled", [False, True])
def test_h_generating_function_to_degree_8(N, doubled):
    assert _h_series(N, 8, doubled) == _generating_product(N, 8, doubled)


@pytest.mark.parametrize("n", range(4))
def test_h_sympl_symmetry(n):
    h = h_sympl(n, 2)
    assert h.invert_vars([0]) == h
    assert h.permute([1, 0]) == h


def test_schur_bialt_examples():
    x1, x2 = x(0, 2), x(1, 2)
    assert schur_bialt((2, 1), 2) == x1**2 * x2 + x1 * x2**2
    assert schur_bialt((), 2) == 1
    assert schur_bialt((1,), 1) == x(0, 1)


def test_schur_bialt_positive_integral():
    for la in partitions_up_to(3, 5):
        value = schur_bialt(la, 3)
        assert all(c > 0 and c.denominator == 1 for _, c in value.items())


def test_sp_bialt_examples():
    assert sp_bialt((1,), 1) == x(0, 1) + x(0, 1, -1)
    assert sp_bialt((), 1) == 1
    assert sp_bialt((1,), 2) == h_sympl(1, 2)


def test_o_bialt_examples():
    assert o_bialt((), 2) == 1
    assert o_bialt((1,), 2) == h_sympl(1, 2)
    x1, x2 = x(0, 2), x(1, 2)
    expected = 2 + x1 * x2 + x1 * x(1, 2, -1) + x(0, 2, -1) * x2 + x(0, 2, -1) * x(1, 2, -1)
    assert o_bialt((1, 1), 2) == expected


def test_o_bialt_one_variable():
    t = x(0, 1)
    assert o_bialt((), 1) == 1
    assert o_bialt((3,), 1) == t**3 + x(0, 1, -3)
    with pytest.raises(UnsupportedArity):
        o_bialt((), 0)


@pytest.mark.parametrize("bialt", [sp_bialt, o_bialt])
def test_bcd_bialternants_are_symmetric(bialt):
    for la in partitions_up_to(2, 3):
        value = bialt(la, 2)
        for i in range(2):
            assert value.invert_vars([i]) == value
        for perm in itertools.permutations(range(2)):
            assert value.permute(perm) == value
