import pytest

from src.core.errors import MalformedBlock
from src.core.sentences import Atom, Not, prefix_sentence
from src.core.trichotomy import Trichotomy
from src.core.words import Mask, TheoryPoint
from src.families.blocks import Cube, Fan, FanArray, FinSet
from src.gallery.cases import CUBE0, CUBE0_MASK, FAN0, ZERO
from tests.conftest import point


def test_fan_members():
    assert FAN0.contains(point("001~0"))
    assert FAN0.point(2) == point("001~0")
    assert FAN0.index_of(point("0001~0")) == 3
    assert not FAN0.contains(ZERO)
    assert FAN0.with_limit().contains(ZERO)
    assert not FAN0.contains(point("011~0"))


def test_fan_flip_positions_follow_stride_and_offset():
    fan = Fan(ZERO, stride=2, offset=1, dev="1")
    assert fan.point(0) == point("011~0")
    assert fan.point(1) == point("00011~0")
    assert fan.contains(point("00011~0"))
    assert not fan.contains(point("001~0"))


def test_fan_deviation_drops_trailing_zeros():
    assert Fan(ZERO, dev="100").dev == "1"
    assert Fan(ZERO, dev="100") == Fan(ZERO, dev="1")


@pytest.mark.parametrize("params", [
    dict(stride=0),
    dict(offset=-1),
    dict(dev="12"),
])
def test_malformed_fans(params):
    with pytest.raises(MalformedBlock):
        Fan(ZERO, **params)


def test_cube_needs_infinitely_many_free_coordinates():
    with pytest.raises(MalformedBlock):
        Cube(Mask("FF", "0"))


def test_cube_membership():
    assert CUBE0.contains(ZERO)
    assert CUBE0.contains(point("1~0"))
    assert not CUBE0.contains(point("~01"))


def test_finset_dedupes_and_sorts():
    block = FinSet((point("1~0"), ZERO, point("1~0")))
    assert len(block) == 2
    assert block.points == tuple(sorted({ZERO, point("1~0")}))


def test_clopen_count_on_fan():
    assert FAN0.clopen_count(Atom(0)).same_as(Trichotomy.finite([point("1~0")]))
    assert FAN0.clopen_count(Not(Atom(0))).is_infinite
    assert FAN0.clopen_count(prefix_sentence("11")).is_empty


def test_clopen_count_on_cube():
    assert CUBE0.clopen_count(Atom(1)).is_empty
    assert CUBE0.clopen_count(Atom(0), block_id=4).witness == 4


def test_fan_array_points_at_coding_positions():
    array = FanArray(CUBE0_MASK, start=1, step=4)
    assert set(array.points_at(1)) == {point("01~0"), point("11~0")}
    assert array.points_at(3) == []
    assert array.gap_of(point("01~0")) == 1
    assert array.contains(point("11~0"))
    assert not array.contains(ZERO)
    assert array.with_base().contains(ZERO)
    assert not CUBE0.contains(point("01~0"))


def test_fan_array_points_clear_free_coordinates_beyond_the_gap():
    array = FanArray(CUBE0_MASK, start=1, step=4)
    # the gap is at 5, but coordinate 6 is free and set
    assert not array.contains(point("0000011~0"))
    assert array.contains(point("1010010~0"))


def test_fan_array_coding_parameters_are_canonical():
    assert FanArray(CUBE0_MASK, start=1, step=1) == FanArray(CUBE0_MASK, start=1, step=2)
    with pytest.raises(MalformedBlock):
        FanArray(CUBE0_MASK, start=0, step=2)


def test_fan_array_count_is_infinite_over_the_base():
    array = FanArray(CUBE0_MASK, start=1, step=4)
    assert array.clopen_count(Atom(0)).is_infinite
    assert array.clopen_count(Atom(1)).same_as(Trichotomy.finite(array.points_at(1)))


def test_accumulation_pieces():
    assert FAN0.acc() == (FinSet((ZERO,)),)
    assert CUBE0.acc() == (CUBE0,)
    assert FanArray(CUBE0_MASK, 1, 4).acc() == (CUBE0,)
    assert FinSet((ZERO,)).acc() == ()


def test_pieces_split_flags():
    assert FAN0.with_limit().pieces() == (FAN0, FinSet((ZERO,)))
    array = FanArray(CUBE0_MASK, 1, 4, include_base=True)
    assert array.pieces() == (FanArray(CUBE0_MASK, 1, 4), CUBE0)


def test_dsl_text():
    assert FAN0.to_dsl() == "fan(limit=~0, stride=1, offset=0, dev=)"
    assert FAN0.with_limit().to_dsl().endswith(", withlimit)")
    assert CUBE0.to_dsl() == "cube(mask=~F0)"
    assert FinSet((ZERO,)).to_dsl() == "fin{~0}"
    assert FanArray(CUBE0_MASK, 1, 4).to_dsl() == "fanarray(base=cube(mask=~F0), c=1, step=4)"


def test_separation_depths():
    assert FAN0.separation_depth(ZERO) is None
    assert FAN0.separation_depth(point("11~0")) == 2
    assert CUBE0.separation_depth(point("01~0")) == 2
    assert CUBE0.separation_depth(ZERO) is None
    assert TheoryPoint("", "0") == ZERO
