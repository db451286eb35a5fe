from src.core.sentences import (
    FALSE, TRUE, And, Atom, Not, Or, literal, prefix_sentence, satisfiable_under, satisfies,
)
from src.core.trichotomy import Trichotomy
from src.core.words import Mask, TheoryPoint


def test_evaluation_reads_only_listed_coordinates():
    p = TheoryPoint("10", "0")
    assert satisfies(p, Atom(0))
    assert not satisfies(p, Atom(1))
    assert satisfies(p, Atom(0) & ~Atom(1))
    assert satisfies(p, Atom(5) | Atom(0))
    assert not satisfies(p, FALSE)


def test_prefix_sentence():
    sentence = prefix_sentence("01")
    assert sentence == And((Not(Atom(0)), Atom(1)))
    assert sentence.max_index() == 1
    assert satisfies(TheoryPoint("", "01"), sentence)
    assert not satisfies(TheoryPoint("", "0"), sentence)
    assert prefix_sentence("") == TRUE
    assert prefix_sentence("1") == literal(0, 1)


def test_sentence_text():
    assert str(prefix_sentence("11")) == "P_0 AND P_1"
    assert str(Or((Atom(2), Not(Atom(3))))) == "P_2 OR NOT P_3"


def test_satisfiable_under_mask():
    cube = Mask("", "F0")
    assert satisfiable_under(Atom(0), cube.fixed_bit)
    assert not satisfiable_under(Atom(1), cube.fixed_bit)
    assert satisfiable_under(Atom(1) | Atom(2), cube.fixed_bit)
    assert not satisfiable_under(Atom(0) & Not(Atom(0)), lambda i: None)


def test_trichotomy_merge_and_labels():
    one = Trichotomy.finite([TheoryPoint("1", "0")])
    two = Trichotomy.finite([TheoryPoint("", "0"), TheoryPoint("1", "0")])
    assert one.merge(two).points == two.points
    assert one.merge(Trichotomy.infinite(3)).is_infinite
    assert Trichotomy.finite([]).is_empty
    assert Trichotomy.infinite(1).same_as(Trichotomy.infinite(2))
    assert [t.label() for t in (Trichotomy.empty(), two, Trichotomy.infinite())] == [
        "EMPTY", "FINITE:2", "INF"]


def test_evaluation_on_sample_points():
    assert satisfies(TheoryPoint("", "0"), Not(Atom(3)))
    assert not satisfies(TheoryPoint("", "01"), Atom(0) | Atom(2))


def test_evaluation_ignores_coordinates_past_max_index():
    sentence = Atom(0) & ~Atom(2)
    base = TheoryPoint("10", "0")
    for i in range(sentence.max_index() + 1, sentence.max_index() + 6):
        assert satisfies(base.flip(i), sentence) == satisfies(base, sentence)
