import pytest
from hypothesis import given, settings, strategies as st

from config.settings import VERIFY_PAIR_OFFSET
from src.closure.engine import closure
from src.core.errors import (
    CapExceeded, NoLGS, NotClosed, NotComparable, PreconditionFailed, UnsupportedComparison,
    UnsupportedIntersection,
)
from src.families.blocks import Fan, FinSet
from src.families.family import Family, family_eq, intersect, union
from src.gallery.cases import CUBE0, FAN0, ZERO
from src.gallery.random_families import make_random_lgs_family
from src.lattice.elements import LatticeElement
from src.lattice.generate import check_lattice_laws, generate_lattice
from src.lattice.operations import (
    check_distributivity, check_finite_extension, check_generation_neighbourhoods,
    check_join_has_lgs, check_order_coherence, decompose, join, leq, meet, meet_prime,
)
from tests.conftest import point


def fin(*points):
    return LatticeElement(Family.of(FinSet(tuple(points))))


@pytest.fixture
def fan_pair(fan0_closed, fan_b_closed):
    return LatticeElement(fan0_closed, "first"), LatticeElement(fan_b_closed, "second")


@pytest.fixture
def limit_element(limit_only):
    return LatticeElement(limit_only, "limit")


def test_elements_must_be_closed(fan0):
    with pytest.raises(NotClosed):
        LatticeElement(fan0)


def test_meet_prime_keeps_the_shared_limit(fan_pair, limit_only):
    first, second = fan_pair
    assert family_eq(meet(first, second).family, limit_only)
    assert family_eq(meet_prime(first, second).family, limit_only)
    assert family_eq(join(first, second).generators, union(first.generators, second.generators))


def test_meet_prime_with_a_member(fan_pair):
    first, _ = fan_pair
    t2 = FAN0.point(2)
    assert family_eq(meet_prime(first, fin(t2)).family, Family.of(FinSet((t2,))))


def test_array_meet_is_the_bare_cube(array_pair, cube0):
    first, second = (LatticeElement(f) for f in array_pair)
    assert first.has_lgs and second.has_lgs
    met = meet(first, second)
    assert family_eq(met.family, cube0)
    assert not met.has_lgs
    assert meet_prime(first, second).family.is_empty


def test_meet_prime_needs_generators(fan_pair, cube0):
    first, _ = fan_pair
    with pytest.raises(NoLGS):
        meet_prime(first, LatticeElement(cube0))


def test_leq_and_order_coherence(fan_pair, limit_element):
    first, second = fan_pair
    assert leq(limit_element, first)
    assert not leq(first, second)
    coherence = check_order_coherence(limit_element, first)
    assert coherence == {"leq": True, "join": True, "meetPrime": True, "coherent": True}
    assert check_order_coherence(first, second)["coherent"]


def test_decompose_with_used_generators(fan_pair, limit_element):
    first, _ = fan_pair
    parts = decompose(limit_element, first)
    assert parts.shared.is_empty
    assert family_eq(parts.used, Family.of(FAN0))
    assert parts.unused.is_empty
    conditions = parts.conditions(limit_element.generators, first.generators)
    assert all(conditions.values()), conditions
    assert check_generation_neighbourhoods(limit_element, first)


def test_decompose_with_unused_generators(fan_pair):
    first, _ = fan_pair
    t0, t1 = FAN0.point(0), FAN0.point(1)
    small = fin(t0, t1)
    parts = decompose(small, first)
    assert family_eq(parts.shared, Family.of(FinSet((t0, t1))))
    assert parts.used.is_empty
    assert not parts.unused.is_empty
    assert set(parts.to_json()) == {"shared", "used", "unused"}


def test_decompose_needs_comparable_elements(fan_pair):
    first, second = fan_pair
    with pytest.raises(NotComparable):
        decompose(first, second)


def test_finite_extension():
    p, q = point("1~0"), point("11~0")
    assert check_finite_extension(fin(p), fin(p, q))


def test_finite_extension_rejects_infinitely_many_new_generators(fan_pair):
    first, _ = fan_pair
    with pytest.raises(PreconditionFailed):
        check_finite_extension(fin(FAN0.point(0)), first)


def test_join_has_lgs(fan_pair, limit_element):
    first, second = fan_pair
    assert check_join_has_lgs(first, second)
    assert check_join_has_lgs(first, limit_element)


def test_distributivity_on_the_fan_pair(fan_pair, limit_element):
    first, second = fan_pair
    report = check_distributivity(first, second, limit_element)
    assert report.holds and report.sides == {}


def test_fan_pair_lattice(fan_pair):
    lattice = generate_lattice(list(fan_pair))
    assert len(lattice) == 4
    assert lattice.hasse() == [(0, 2), (1, 2), (3, 0), (3, 1)]
    assert family_eq(lattice.elements[3].family, Family.of(FinSet((ZERO,))))
    assert check_lattice_laws(lattice) == []
    assert lattice.op_table("join").shape == (4, 4)
    assert "rankdir = BT" in lattice.to_dot()
    assert lattice.to_json()["edges"] == [[0, 2], [1, 2], [3, 0], [3, 1]]


def test_two_singletons_give_a_square():
    lattice = generate_lattice([fin(point("1~0")), fin(point("01~0"))])
    assert len(lattice) == 4
    assert lattice.elements[3].family.is_empty
    assert check_lattice_laws(lattice) == []


def test_lattice_generation_guards(fan_pair, cube0):
    with pytest.raises(ValueError):
        generate_lattice(list(fan_pair), ops=("join", "bogus"))
    with pytest.raises(NoLGS):
        generate_lattice([LatticeElement(cube0)])
    with pytest.raises(CapExceeded):
        generate_lattice(list(fan_pair), cap=2)


def test_meet_only_lattice_of_the_cube(cube0):
    lattice = generate_lattice([LatticeElement(cube0)], ops=("join", "meet"))
    assert len(lattice) == 1
    assert family_eq(lattice.elements[0].family, Family.of(CUBE0))


P = point("111~0")


def test_decompose_splits_used_and_unused(fan0_closed, limit_element):
    larger = LatticeElement(union(fan0_closed, Family.of(FinSet((P,)))))
    parts = decompose(limit_element, larger)
    assert parts.shared.is_empty
    assert family_eq(parts.used, Family.of(FAN0))
    assert family_eq(parts.unused, Family.of(FinSet((P,))))

    closed_fan = LatticeElement(fan0_closed)
    parts = decompose(closed_fan, larger)
    assert family_eq(parts.shared, Family.of(FAN0))
    assert parts.used.is_empty
    assert family_eq(parts.unused, Family.of(FinSet((P,))))
    assert check_finite_extension(closed_fan, larger)
    assert check_finite_extension(closed_fan, closed_fan)


def test_join_with_an_array_keeps_generators(array_pair):
    first = LatticeElement(array_pair[0])
    assert check_join_has_lgs(first, fin(point("~1")))


def test_empty_and_idempotent_identities(fan_pair):
    first, _ = fan_pair
    empty = LatticeElement(Family.empty())
    assert meet(first, empty).family.is_empty
    assert join(first, empty).same_as(first)
    assert check_distributivity(first, empty, empty).holds
    assert check_distributivity(first, first, first).holds
    assert len(generate_lattice([first])) == 1


def test_decompose_when_a_used_and_an_unused_fan_share_a_point():
    # 01~0 lies on both fans; only the first accumulates at 0~0
    accumulating = Fan(ZERO, stride=3, offset=1)
    idle = Fan(point("~01"), stride=2, offset=1)
    assert accumulating.point(0) == idle.point(1) == point("01~0")
    large = LatticeElement(closure(Family.of(accumulating, idle, FinSet((ZERO,)))))
    small = fin(ZERO)
    parts = decompose(small, large)
    assert intersect(parts.used, parts.unused).is_empty
    conditions = parts.conditions(small.generators, large.generators)
    assert all(conditions.values()), conditions


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_decompose_parts_are_disjoint_on_random_joins(seed):
    a = LatticeElement(make_random_lgs_family(seed))
    b = LatticeElement(make_random_lgs_family(seed + VERIFY_PAIR_OFFSET))
    try:
        joined = join(a, b)
        parts = decompose(a, joined)
        conditions = parts.conditions(a.generators, joined.generators)
        overlap = intersect(parts.used, parts.unused)
    except (UnsupportedIntersection, UnsupportedComparison):
        return
    assert overlap.is_empty
    assert all(conditions.values()), conditions
