import pytest
from hypothesis import given
from hypothesis import strategies as st

from nspduality import CLASSES, class_of, decode, encode
from nspduality.decomp import (Base, Graft, Join, TypeTag, Wrap, classify, compose, decompose,
                               size_stat, step_to_json, tag_of)
from nspduality.enumeration import generate
from nspduality.mapops import M2BOND

from conftest import BAND, C3


def objects(max_n=5):
    return st.sampled_from(CLASSES).flatmap(
        lambda cls: st.integers(1, max_n).flatmap(lambda n: st.sampled_from(generate(cls, n))))


def test_classify_examples():
    assert classify(decode("beta", "(1 1)")) == TypeTag.I
    assert classify(decode("interval", "[uudd,uudd]")) == TypeTag.II
    assert classify(decode("map", BAND)) == TypeTag.III


def test_decompose_examples():
    assert decompose(decode("beta", "(1 (1 1))")) == Wrap(decode("beta", "(1 1)"), 1)
    assert decompose(decode("deco", "(* (* -1) -1)")) == Join(decode("deco", "(* -1)"), 1, decode("deco", "(* -1)"))
    base = decode("interval", "[ud,ud]")
    assert decompose(decode("interval", "[uuddud,uuddud]")) == Join(base, 1, base)


def test_compose_examples():
    assert encode(compose(Graft(decode("beta", "(1 1)")), "beta")) == "(2 1 1)"
    assert compose(Wrap(M2BOND, 1), "map") == decode("map", C3)
    base = decode("interval", "[ud,ud]")
    assert encode(compose(Join(base, 1, base), "interval")) == "[uuddud,uuddud]"


def test_base_everywhere():
    for cls in CLASSES:
        x = compose(Base(), cls)
        assert decompose(x) == Base()
        assert generate(cls, 1) == (x,)


def test_compose_rejects_out_of_range_index():
    with pytest.raises(ValueError):
        compose(Wrap(decode("beta", "(1 1)"), 2), "beta")


def test_step_json():
    step = decompose(decode("deco", "(* (* -1) -1)"))
    assert step_to_json(step) == '{"kind":"join","head":"(* -1)","i":1,"tail":"(* -1)"}'


schemes = st.sampled_from(["parallel", "series"])


@given(objects(), schemes)
def test_roundtrip(x, scheme):
    if class_of(x) != "map":
        scheme = "parallel"
    step = decompose(x, scheme)
    assert compose(step, class_of(x), scheme) == x
    assert classify(x, scheme) == tag_of(step)


@given(objects(), schemes)
def test_size_statistic_law(x, scheme):
    if class_of(x) != "map":
        scheme = "parallel"
    step = decompose(x, scheme)
    k = size_stat(x, scheme)
    if isinstance(step, Wrap):
        assert k == step.i
    elif isinstance(step, Graft):
        assert k == size_stat(step.inner, scheme) + 1
    elif isinstance(step, Join):
        assert k == step.i + size_stat(step.tail, scheme)
    else:
        assert k == 1
