import pytest

from src.algebra.boolean import build_algebra, default_generators, iso_check
from src.algebra.cantor_bendixson import cb_profile
from src.core.errors import CapExceeded, NoLGS, PreconditionFailed
from src.families.blocks import FinSet
from src.families.family import Family, family_eq
from src.gallery.cases import FAN0, FAN1, ZERO
from src.closure.engine import closure
from tests.conftest import point


def test_algebra_over_three_fan_members(fan0_closed):
    algebra = build_algebra(fan0_closed, cap=3)
    assert algebra.size == 8
    assert algebra.atoms() == [1, 2, 4]
    top = algebra.denotation(algebra.top)
    assert family_eq(top, Family.of(FinSet(tuple(FAN0.point(i) for i in range(3)))))
    assert algebra.denotation(0).is_empty
    assert algebra.complement(0b101) == 0b010
    assert iso_check(algebra).ok


def test_algebra_json_marks_atoms():
    pair = Family.of(FinSet((ZERO, point("1~0"))))
    algebra = build_algebra(pair)
    rows = algebra.to_json()
    assert [row["mask"] for row in rows] == ["00", "01", "10", "11"]
    assert [row["atom"] for row in rows] == [False, True, True, False]
    assert iso_check(algebra)


def test_algebra_over_infinite_generators():
    family = closure(Family.of(FAN0, FAN1))
    algebra = build_algebra(family, generators=[Family.of(FAN0), Family.of(FAN1)])
    assert algebra.size == 4
    assert family_eq(algebra.denotation(algebra.top), family)
    report = iso_check(algebra)
    assert report.exhaustive and report.pairs_checked == 16
    assert report.ok, report.failures


def test_algebra_preconditions(fan0_closed, cube0):
    with pytest.raises(NoLGS):
        build_algebra(cube0)
    with pytest.raises(PreconditionFailed):
        build_algebra(fan0_closed, generators=[Family.of(FinSet((ZERO,)))])
    t0 = FAN0.point(0)
    with pytest.raises(PreconditionFailed):
        build_algebra(fan0_closed, generators=[Family.of(FinSet((t0,))), Family.of(FAN0)])
    with pytest.raises(CapExceeded):
        build_algebra(fan0_closed, generators=[FAN0.point(i) for i in range(3)], cap=2)


def test_default_generators_sample_infinite_sets():
    generators = default_generators(Family.of(FAN0), 2)
    assert [g.points() for g in generators] == [(FAN0.point(0),), (FAN0.point(1),)]


def test_cb_profiles(fan0_closed, limit_only, cube0):
    fan = cb_profile(fan0_closed)
    assert fan.rank == 2
    assert fan.kernel_empty
    assert family_eq(fan.chain[1], limit_only)

    assert cb_profile(limit_only).rank == 1
    assert cb_profile(Family.empty()).rank == 0

    cube = cb_profile(cube0)
    assert cube.rank == 0
    assert not cube.kernel_empty
    assert cube.to_json()["kernelEmpty"] is False


def test_singleton_algebra():
    algebra = build_algebra(Family.of(FinSet((ZERO,))))
    assert algebra.size == 2
    assert iso_check(algebra).ok


@pytest.mark.slow
def test_sampled_iso_check_on_ten_fan_members(fan0_closed):
    algebra = build_algebra(fan0_closed, cap=10)
    assert algebra.size == 1024
    report = iso_check(algebra)
    assert not report.exhaustive
    assert report.ok, report.failures[:3]
