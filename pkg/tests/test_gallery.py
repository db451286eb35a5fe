import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.closure.engine import closure
from src.core.errors import UndefinedName
from src.families.blocks import Fan, FanArray
from src.families.family import Family, family_eq, family_subset
from src.gallery.cases import CASES, all_cases, get_case
from src.gallery.random_families import (
    make_random_family, make_random_lgs_family, make_random_points, random_array,
)


@pytest.mark.parametrize("name", sorted(CASES))
def test_gallery_case_verdicts(name):
    case = get_case(name)
    results = case.check()
    mismatches = {key: (expected, live) for key, (expected, live, ok) in results.items() if not ok}
    assert mismatches == {}
    assert case.passed()


def test_gallery_families_are_named():
    for case in all_cases():
        assert case.families
        for key in case.families:
            assert case.family(key) is case.families[key]


def test_unknown_gallery_names():
    with pytest.raises(UndefinedName):
        get_case("bogus")
    with pytest.raises(UndefinedName):
        get_case("basic").family("bogus")


def test_random_families_are_reproducible():
    assert make_random_family(42) == make_random_family(42)
    assert make_random_family(42).name == "random-42"
    assert make_random_points(7, 5) == make_random_points(7, 5)
    assert family_eq(make_random_lgs_family(3), make_random_lgs_family(3))


def test_random_budget_and_kinds():
    family = make_random_family(5, budget=4, kinds=("fin",))
    assert family.is_finite
    assert len(make_random_points(1, 9)) == 9


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_arrays_are_well_formed(seed):
    family = make_random_family(seed, budget=2, kinds=("array",))
    for block in family.blocks:
        assert isinstance(block, (FanArray, Fan))
        if isinstance(block, FanArray):
            bare = block.with_base(False)
            assert all(bare.contains(p) and not block.cube().contains(p) for p in bare.sample(3))
            assert family_subset(Family.of(block.cube()), closure(Family.of(block)))


def test_random_array_falls_back_to_a_fan():
    assert isinstance(random_array(np.random.default_rng(1), attempts=0), Fan)
    kinds = {type(b) for seed in range(30) for b in make_random_family(seed).blocks}
    assert FanArray in kinds
