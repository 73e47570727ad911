import pytest

from filigrade.catalog import L, ModelSpec
from filigrade.equivalence import are_equivalent, find_equivalence
from filigrade.gradings import classify, grading_from_partition
from filigrade.lie import abelian


def test_abelian_partitions_are_equivalent():
    a = abelian(3)
    g1 = grading_from_partition(a, [(0, 1), (2,)])
    g2 = grading_from_partition(a, [(0,), (1, 2)])
    assert are_equivalent(g1, g2)
    match, gb = find_equivalence(g1, g2, prune=False)
    assert list(gb.exprs) != [1]


def test_grading_equivalent_to_itself():
    g = classify(ModelSpec("L", 4)).representatives[3].grading
    assert are_equivalent(g, g)


def test_inequivalent_representatives_on_L5():
    reps = {r.label(): r.grading for r in classify(ModelSpec("L", 5)).representatives}
    g2, g3 = reps["Gamma_0^l(l=2)"], reps["Gamma_0^l(l=3)"]
    assert not are_equivalent(g2, g3)
    assert not are_equivalent(g2, g3, prune=False)


def test_different_shapes_short_circuit():
    reps = classify(ModelSpec("L", 4)).representatives
    assert find_equivalence(reps[0].grading, reps[1].grading) is None


def test_dimension_limit():
    g = grading_from_partition(L(8), [(i,) for i in range(8)])
    with pytest.raises(ValueError):
        are_equivalent(g, g)
