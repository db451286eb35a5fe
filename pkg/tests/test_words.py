import pytest
from hypothesis import given, strategies as st

from src.core.errors import MalformedMask, MalformedPoint
from src.core.words import (
    Equal, FirstDifference, Mask, TheoryPoint, bit_at, format_point, normalize_point,
    parse_mask, parse_point, point_compare,
)
from src.families.indexset import IndexSet

bits = st.text(alphabet="01", max_size=6)
periods = st.text(alphabet="01", min_size=1, max_size=4)


def test_normalize_absorbs_prefix_into_period():
    p = normalize_point("0101", "01")
    assert (p.prefix, p.period) == ("", "01")


def test_normalize_keeps_distinct_descriptor():
    p = normalize_point("0101", "10")
    assert (p.prefix, p.period) == ("0101", "10")


def test_normalize_reduces_period_to_primitive_root():
    assert normalize_point("", "0000") == TheoryPoint("", "0")
    assert normalize_point("1", "0101") == TheoryPoint("", "10")


def test_bit_at():
    p = TheoryPoint("101", "0")
    assert [bit_at(p, i) for i in range(6)] == [1, 0, 1, 0, 0, 0]


def test_point_compare():
    assert point_compare(TheoryPoint("", "0"), TheoryPoint("001", "0")) == FirstDifference(2)
    assert point_compare(TheoryPoint("0101", "01"), TheoryPoint("", "01")) == Equal()


def test_parse_and_format():
    p = parse_point("101~0")
    assert p == TheoryPoint("101", "0")
    assert format_point(p) == "101~0"
    assert str(parse_point("~01")) == "~01"


@pytest.mark.parametrize("text", ["10", "1~", "~", "12~0", "0~0~1"])
def test_malformed_points(text):
    with pytest.raises(MalformedPoint):
        parse_point(text)


def test_flip():
    assert TheoryPoint("", "0").flip(2) == TheoryPoint("001", "0")
    assert TheoryPoint("", "01").flip(0) == TheoryPoint("11", "01")


def test_mask_consistency_and_violations():
    mask = parse_mask("~F0")
    assert mask.consistent(TheoryPoint("1", "0"))
    assert not mask.consistent(TheoryPoint("", "01"))
    found, infinite = mask.violations(TheoryPoint("", "01"))
    assert infinite and len(found) >= 2 and found[0] == 1
    found, infinite = mask.violations(TheoryPoint("01", "0"))
    assert found == [1] and not infinite


def test_mask_merge_and_conflicts():
    assert Mask("", "F0").merge(Mask("", "FF")) == Mask("", "F0")
    assert Mask("", "F0").merge(Mask("", "F1")) is None
    found, infinite = Mask("", "F0").conflicts(Mask("", "F1"))
    assert found and infinite


def test_malformed_mask():
    with pytest.raises(MalformedMask):
        parse_mask("F2~F")


def test_index_sets():
    odd_from_one = IndexSet.progression(1, 4)
    assert 1 in odd_from_one and 5 in odd_from_one and 3 not in odd_from_one
    both = odd_from_one | IndexSet.progression(3, 4)
    assert both == IndexSet.progression(1, 2)
    assert (odd_from_one & IndexSet.progression(3, 4)).is_empty
    assert IndexSet.of([0, 2]).is_finite
    assert IndexSet.of([0]).complement().first(3) == [1, 2, 3]


@given(bits, periods)
def test_canonical_form_denotes_same_sequence(prefix, period):
    p = TheoryPoint(prefix, period)
    naive = (prefix + period * 40)[:30]
    assert p.expand(30) == naive
    assert TheoryPoint(p.prefix, p.period) == p


@given(bits, periods, bits, periods)
def test_equality_matches_expansion(a, b, c, d):
    p, q = TheoryPoint(a, b), TheoryPoint(c, d)
    same = (a + b * 40)[:40] == (c + d * 40)[:40]
    assert (p == q) == same
    assert isinstance(point_compare(p, q), Equal) == same


def test_point_helpers_on_sample_points():
    assert normalize_point("10", "0") == TheoryPoint("1", "0")
    assert bit_at(TheoryPoint("", "01"), 1001) == 1
    assert bit_at(TheoryPoint("", "0"), 3) == 0
    assert point_compare(TheoryPoint("", "01"), TheoryPoint("01", "10")) == FirstDifference(2)
