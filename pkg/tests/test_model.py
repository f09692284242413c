import pytest
from hypothesis import given
from hypothesis import strategies as st

from nspduality import (CLASSES, LEAF, BetaTree, DecoTree, ParseError, RootedMap, SyncInterval,
                        ValidationError, class_of, decode, encode, size, validate)
from nspduality.enumeration import generate

from conftest import M2BOND


def objects(max_n=5):
    return st.sampled_from(CLASSES).flatmap(
        lambda cls: st.integers(1, max_n).flatmap(lambda n: st.sampled_from(generate(cls, n))))


def test_base_encodings():
    assert encode(BetaTree(1, (LEAF,))) == "(1 1)"
    assert encode(DecoTree((-1,))) == "(* -1)"


def test_decode_double_edge_accepts_bare_keys():
    m = decode("map", "{E:2, sigma:[2,3,0,1], root:0}")
    assert m == RootedMap(2, (2, 3, 0, 1), 0)
    assert encode(m) == M2BOND
    assert size(m) == 1


def test_validate_examples():
    assert validate(decode("beta", "(2 1 1)")) == []
    assert any("condition 1" in v for v in validate(decode("deco", "(* 0)", check=False)))
    path = RootedMap(2, (0, 2, 1, 3), 0)
    assert validate(path) == ["cut vertex / not non-separable"]


@pytest.mark.parametrize("cls,text", [
    ("beta", "(1 1"), ("beta", "(x)"), ("deco", "(1 1)"), ("deco", ""),
    ("map", "{E:2}"), ("map", "[ud]"), ("interval", "[ud]"), ("interval", "(1 1)"),
])
def test_malformed_text_raises_parse_error(cls, text):
    with pytest.raises(ParseError):
        decode(cls, text)


@pytest.mark.parametrize("cls,text", [
    ("beta", "(3 1 1)"), ("beta", "(1 (2 1))"), ("deco", "(* (* 1))"),
    ("interval", "[udud,uudd]"), ("interval", "[uudd,udud]"),
])
def test_invalid_objects_raise_validation_error(cls, text):
    with pytest.raises(ValidationError):
        decode(cls, text)


def test_interval_needs_same_type_and_order():
    assert validate(SyncInterval("udud", "uudd"))
    assert validate(SyncInterval("uudd", "uudd")) == []


@given(objects())
def test_encode_decode_roundtrip(x):
    cls = class_of(x)
    assert decode(cls, encode(x)) == x
    assert validate(x) == []


@given(objects())
def test_size_matches_generation_layer(x):
    assert x in generate(class_of(x), size(x))
