import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import EnumerationLimit, UnsupportedComparison, UnsupportedIntersection
from src.core.sentences import TRUE, Atom, Not
from src.core.trichotomy import Trichotomy
from src.core.words import Mask
from src.families.blocks import Fan, FanArray, FinSet
from src.families.family import (
    Family, clopen_count, difference, family_count, family_eq, family_subset, intersect, member,
    union,
)
from src.gallery.cases import CUBE0, CUBE0_MASK, FAN0, ZERO
from src.gallery.random_families import make_random_family, make_random_points
from tests.conftest import point

seeds = st.integers(min_value=0, max_value=10_000)


def test_membership(fan0, cube0):
    assert member(fan0, point("001~0"))
    assert not member(cube0, point("~01"))
    assert member(Family.of(FinSet((ZERO,))), ZERO)


def test_clopen_and_family_count(fan0):
    assert clopen_count(FAN0, Atom(0)).same_as(Trichotomy.finite([point("1~0")]))
    pair = Family.of(FinSet((ZERO, point("1~0"))))
    assert family_count(pair, Atom(0)).same_as(Trichotomy.finite([point("1~0")]))
    mixed = union(fan0, Family.of(FinSet((point("~01"),))))
    assert family_count(mixed, Not(Atom(0))).is_infinite
    assert family_count(Family.empty(), TRUE).is_empty


def test_union_absorbs_fan_limit(fan0, limit_only):
    joined = union(fan0, limit_only)
    assert joined.blocks == (Fan(ZERO, include_limit=True),)
    assert union(fan0, Family.empty()) == fan0


def test_union_merges_points():
    p, q = point("1~0"), point("11~0")
    joined = union(Family.of(FinSet((p,))), Family.of(FinSet((q,))))
    assert joined.blocks == (FinSet((p, q)),)


def test_covered_points_are_dropped(fan0):
    joined = union(fan0, Family.of(FinSet((point("01~0"),))))
    assert joined.blocks == fan0.blocks


def test_cube_equal_to_array_base_becomes_flag(cube0):
    array = Family.of(FanArray(CUBE0_MASK, 1, 4))
    joined = union(array, cube0)
    assert joined.blocks == (FanArray(CUBE0_MASK, 1, 4, include_base=True),)


def test_intersect_table(fan0_closed, fan_b_closed, cube0, limit_only):
    assert family_eq(intersect(fan0_closed, fan_b_closed), limit_only)
    assert family_eq(intersect(cube0, cube0), cube0)
    assert family_eq(intersect(limit_only, cube0), limit_only)
    assert intersect(fan0_closed, Family.empty()).is_empty


def test_fan_cube_intersection_keeps_members_inside_the_mask(fan0, cube0):
    # t_i = 0^i 1 0~ lies in the cube exactly when i is even
    meet = intersect(fan0, cube0)
    assert member(meet, FAN0.point(2)) and not member(meet, FAN0.point(3))
    assert not meet.is_finite


def test_difference(fan0_closed, fan0, limit_only):
    assert family_eq(difference(fan0_closed, limit_only), fan0)
    assert family_eq(difference(fan0_closed, fan0), limit_only)


def test_subset_and_equality(fan0, fan0_closed, cube0):
    assert family_subset(fan0, fan0_closed)
    assert not family_eq(fan0, fan0_closed)
    assert family_eq(cube0, Family.of(CUBE0))
    assert family_subset(Family.of(FinSet((FAN0.point(3),))), fan0)
    assert not family_subset(fan0_closed, fan0)


def test_points_and_describe():
    family = Family.of(FinSet((ZERO, point("1~0"))), name="pair")
    assert family.points() == (ZERO, point("1~0"))
    assert family.describe() == "pair [1 FinSet]"
    assert Family.empty().to_dsl() == "fin{}"
    with pytest.raises(ValueError):
        Family.of(FAN0).points()


def test_family_dsl_is_nested_unions(fan0):
    text = union(fan0, Family.of(FinSet((point("11~0"),))), Family.of(CUBE0)).to_dsl()
    assert text.startswith("union(fin{11~0}, union(fan(")
    assert text.endswith("cube(mask=~F0)))")


def _sample_points(a, b, seed):
    found = list(make_random_points(seed, 6))
    for block in a.blocks + b.blocks:
        found.extend(block.sample(3))
    return found


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_intersection_and_union_are_sound(seed):
    a = make_random_family(seed)
    b = make_random_family(seed + 7919)
    try:
        meet = intersect(a, b)
    except (UnsupportedIntersection, UnsupportedComparison):
        return
    joined = union(a, b)
    for p in _sample_points(a, b, seed):
        assert member(meet, p) == (member(a, p) and member(b, p))
        assert member(joined, p) == (member(a, p) or member(b, p))


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_union_and_intersect_laws(seed):
    a = make_random_family(seed, kinds=("fin", "fan"))
    b = make_random_family(seed + 1, kinds=("fin", "fan"))
    try:
        assert family_eq(union(a, b), union(b, a))
        assert family_eq(intersect(a, b), intersect(b, a))
        assert family_eq(intersect(a, a), a)
        assert family_eq(union(a, a), a)
    except (UnsupportedIntersection, UnsupportedComparison, EnumerationLimit):
        pass


def test_array_counts_many_members_without_listing_them():
    wide = Mask("", "F" * 17 + "0")
    array = Family.of(FanArray(wide))
    count = family_count(array, Atom(17))
    assert count.is_finite and not count.is_listed
    assert count.size == 2 ** 17
    assert count.label() == "FINITE:131072"
    assert count.same_as(family_count(array, Atom(17)))

    both = family_count(array, Atom(17) | Atom(35))
    assert both.size == 2 ** 17 + 2 ** 34
    assert not both.same_as(count)
    # fixing more atoms brings the count back under the listing cap
    small = family_count(array, Atom(17) & Not(Atom(0)) & Not(Atom(1)) & Not(Atom(2)) & Atom(3)
                         & Not(Atom(4)) & Not(Atom(5)) & Not(Atom(6)) & Not(Atom(7)) & Not(Atom(8))
                         & Not(Atom(9)) & Not(Atom(10)) & Not(Atom(11)) & Not(Atom(12)))
    assert small.is_listed and small.size == 2 ** 4
    assert all(p.bit(3) == 1 and p.bit(17) == 1 for p in small.points)
