import pytest
from hypothesis import given, settings, strategies as st

from filigrade.groups import (FGAbelianGroup, cyclic_product, free, group_quotient,
                              is_quotient_of, quotient)


def test_canonical_form():
    assert cyclic_product([2, 3]) == FGAbelianGroup(0, (6,))
    assert cyclic_product([2, 4, 0]) == FGAbelianGroup(1, (2, 4))
    assert cyclic_product([1, 1]) == FGAbelianGroup(0)
    assert str(cyclic_product([0, 0])) == "Z^2"
    assert str(cyclic_product([0, 2])) == "Z x Z_2"
    assert str(FGAbelianGroup(0)) == "0"


def test_invalid_groups():
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (2, 3))
    with pytest.raises(ValueError):
        FGAbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        FGAbelianGroup(-1)


def test_arithmetic_and_json():
    g = FGAbelianGroup(1, (3,))
    assert g.add((1, 2), (4, 2)) == (5, 1)
    assert g.neg((1, 1)) == (-1, 2)
    assert g.order is None and FGAbelianGroup(0, (2, 4)).order == 8
    assert FGAbelianGroup.from_json(g.to_json()) == g


def test_quotient_map():
    q = quotient(2, [[2, 0], [0, 3]])
    assert q.group == FGAbelianGroup(0, (6,))
    # generators map to elements of order 2 and 3
    x, y = q.generator_images()
    assert q.group.reduce([2 * c for c in x]) == (0,) != x
    assert q.group.reduce([3 * c for c in y]) == (0,) != y
    assert q.image((2, 3)) == (0,)


def test_group_quotient():
    g = free(2)
    q = group_quotient(g, [(2, 0)])
    assert q.group == FGAbelianGroup(1, (2,))


def test_is_quotient_of():
    assert is_quotient_of(FGAbelianGroup(0, (3,)), FGAbelianGroup(1))
    assert is_quotient_of(FGAbelianGroup(0, (2,)), FGAbelianGroup(0, (4,)))
    assert not is_quotient_of(FGAbelianGroup(0, (3,)), FGAbelianGroup(0, (4,)))
    assert not is_quotient_of(FGAbelianGroup(2), FGAbelianGroup(1, (2,)))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 12), min_size=1, max_size=4))
def test_cyclic_product_order(orders):
    g = cyclic_product(orders)
    assert g.free_rank == orders.count(0)
    if 0 not in orders:
        prod = 1
        for o in orders:
            prod *= o
        assert g.order == prod


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), max_size=3))
def test_quotient_kills_relations(_, rels):
    q = quotient(3, rels)
    for r in rels:
        assert q.image(r) == q.group.zero()
