import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ferrers_rees.core import (
    EQUAL,
    GREATER,
    LESS,
    DimensionError,
    first_difference,
    lattice_point,
    sigma_cmp,
    sigma_ge,
    sigma_key,
)



def test_sigma_examples():
    assert sigma_cmp((1, 2), (2, 1)) == GREATER
    assert sigma_cmp((2, 1), (1, 2)) == LESS
    assert sigma_cmp((3, 3), (3, 3)) == EQUAL
    assert sigma_cmp((1, 1, 5), (1, 2, 1)) == GREATER
    assert sigma_cmp((1, 4, 2), (1, 3, 5)) == LESS


def test_sigma_dimension_mismatch():
    with pytest.raises(DimensionError):
        sigma_cmp((1, 2), (1, 2, 3))


def test_lattice_point_validation():
    assert lattice_point([1, 2]) == (1, 2)
    with pytest.raises(ValueError):
        lattice_point([0, 1])
    with pytest.raises(ValueError):
        lattice_point([])


def test_first_difference():
    assert first_difference((1, 2, 3), (1, 4, 3)) == 1
    assert first_difference((1, 2), (1, 2)) is None


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.tuples(*[st.integers(1, 5)] * n), min_size=3, max_size=3)))
def test_sigma_is_reverse_lex_total_order(triple):
    a, b, c = triple
    assert sigma_cmp(a, b) == -sigma_cmp(b, a)
    assert (sigma_cmp(a, b) == EQUAL) == (a == b)
    assert (sigma_cmp(a, b) == GREATER) == (a < b)
    if sigma_ge(a, b) and sigma_ge(b, c):
        assert sigma_ge(a, c)
    assert (sigma_key(a) > sigma_key(b)) == (sigma_cmp(a, b) == GREATER)


def _scan(a, b):
    # independent reading of the definition: sign of the first nonzero entry of a - b
    for x, y in zip(a, b):
        if x - y:
            return GREATER if x - y < 0 else LESS
    return EQUAL


def test_sigma_sampled_triples():
    rng = random.Random(11)
    for _ in range(10_000):
        n = rng.randint(1, 6)
        a, b, c = (tuple(rng.randint(1, 9) for _ in range(n)) for _ in range(3))
        ab, bc, ac = sigma_cmp(a, b), sigma_cmp(b, c), sigma_cmp(a, c)
        assert ab == _scan(a, b)
        assert sigma_cmp(b, a) == -ab
        if ab != LESS and bc != LESS:
            assert ac != LESS
