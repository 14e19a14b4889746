import pytest
from hypothesis import given, settings, strategies as st

from condrank.logic import (
    BOTTOM,
    TOP,
    And,
    Atom,
    FormulaSyntaxError,
    Not,
    Or,
    PossibleWorld,
    WorldLimitExceeded,
    enumerate_worlds,
    evaluate,
    format_formula,
    literal_masks,
    models,
    parse_formula,
)

ABCD = ("a", "b", "c", "d")
a, b, c, d = (Atom(x) for x in ABCD)


def w(text, atoms=ABCD):
    return PossibleWorld.from_string(text, atoms)


def test_world_string_roundtrip():
    world = PossibleWorld(0b0101, ABCD)
    assert str(world) == "a !b c !d"
    assert w("a !b c !d") == world
    assert str(PossibleWorld(0, ())) == ""


@pytest.mark.parametrize("text", ["a b c", "a b c d d", "a !b c e"])
def test_world_from_string_rejects_partial(text):
    with pytest.raises(ValueError):
        w(text)


def test_eval_examples():
    f = And([Not(b), Not(a), Not(d)])
    assert evaluate(w("a b c d"), f) is False
    assert evaluate(w("!a !b c !d"), f) is True
    assert evaluate(w("a !b c d"), Not(b)) is True


def test_eval_unknown_atom():
    with pytest.raises(KeyError):
        evaluate(w("a b c d"), Atom("z"))


def test_empty_connectives():
    world = w("a b c d")
    assert evaluate(world, And([])) and not evaluate(world, Or([]))
    assert evaluate(world, TOP) and not evaluate(world, BOTTOM)


def test_enumerate_worlds():
    assert [x.bits for x in enumerate_worlds(0)] == [0]
    assert len(list(enumerate_worlds(2))) == 4
    worlds = list(enumerate_worlds(ABCD))
    assert len(worlds) == 16
    assert str(worlds[1]) == "a !b !c !d"  # first atom is the low bit


def test_world_limit():
    with pytest.raises(WorldLimitExceeded):
        next(enumerate_worlds(25))
    with pytest.raises(WorldLimitExceeded):
        next(enumerate_worlds(5, world_limit=4))
    assert len(list(enumerate_worlds(5, world_limit=5))) == 32


def test_models():
    assert len(models([TOP], ("a", "b"))) == 4
    assert models([BOTTOM], ("a", "b")) == []
    assert [str(m) for m in models([a, Not(b)], ("a", "b"))] == ["a !b"]
    assert len(models([], ("a", "b"))) == 4


@pytest.mark.parametrize("text, expected", [
    ("a", a),
    ("!a & b", And([Not(a), b])),
    ("a | b & c", Or([a, And([b, c])])),
    ("!(a | b)", Not(Or([a, b]))),
    ("top", TOP),
    ("bot", BOTTOM),
])
def test_parse_formula(text, expected):
    assert parse_formula(text) == expected
    assert parse_formula(format_formula(expected)) == expected


@pytest.mark.parametrize("text", ["", "a &", "(a", "a b", "a $ b"])
def test_parse_formula_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)


def test_literal_masks():
    index = {x: i for i, x in enumerate(ABCD)}
    assert literal_masks(And([Not(b), Not(a), Not(d)]), index) == (0, 0b1011)
    assert literal_masks(TOP, index) == (0, 0)
    assert literal_masks(a, index) == (1, 0)
    assert literal_masks(Or([a, b]), index) is None
    assert literal_masks(And([a, Not(a)]), index) is None
    assert literal_masks(BOTTOM, index) is None


atoms3 = ("p", "q", "r")
formulas = st.recursive(
    st.sampled_from([Atom(x) for x in atoms3] + [TOP, BOTTOM]),
    lambda sub: st.one_of(
        sub.map(Not),
        st.lists(sub, min_size=0, max_size=3).map(And),
        st.lists(sub, min_size=0, max_size=3).map(Or),
    ),
    max_leaves=8,
)
worlds3 = st.integers(0, 7).map(lambda bits: PossibleWorld(bits, atoms3))


@settings(max_examples=150, deadline=None)
@given(formulas, formulas, worlds3)
def test_de_morgan(f, g, world):
    assert evaluate(world, Not(And([f, g]))) == evaluate(world, Or([Not(f), Not(g)]))


@settings(max_examples=100, deadline=None)
@given(formulas)
def test_models_of_f_and_not_f_partition_worlds(f):
    pos = {m.bits for m in models([f], atoms3)}
    neg = {m.bits for m in models([Not(f)], atoms3)}
    assert pos | neg == set(range(8)) and not pos & neg


@settings(max_examples=100, deadline=None)
@given(formulas)
def test_format_parse_roundtrip_preserves_meaning(f):
    g = parse_formula(format_formula(f))
    for world in enumerate_worlds(atoms3):
        assert evaluate(world, f) == evaluate(world, g)


@given(st.integers(0, 8))
def test_enumeration_distinct(n):
    bits = [x.bits for x in enumerate_worlds(n)]
    assert len(bits) == 2 ** n == len(set(bits))
