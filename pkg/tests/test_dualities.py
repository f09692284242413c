import pytest
from hypothesis import given
from hypothesis import strategies as st

from nspduality import decode, encode, maps, dyck
from nspduality import bijections as bij
from nspduality import dualities as du
from nspduality.enumeration import generate
from nspduality.mapops import M2BOND


map_objects = st.integers(1, 5).flatmap(lambda n: st.sampled_from(generate("map", n)))
betas = st.integers(1, 6).flatmap(lambda n: st.sampled_from(generate("beta", n)))
decos = st.integers(1, 6).flatmap(lambda n: st.sampled_from(generate("deco", n)))
words = st.integers(1, 6).flatmap(lambda n: st.sampled_from(dyck.dyck_words(n)))


def test_dual_examples(c3, band):
    assert du.dual(M2BOND) == M2BOND
    assert du.dual(band) == c3
    assert du.dual(c3) == band


def test_next_root_examples(c3, band):
    assert du.next_root(M2BOND) == M2BOND
    assert du.next_root(du.next_root(du.next_root(c3))) == c3
    assert maps.fdeg(du.next_root(band)) == maps.fdeg(band)


@pytest.mark.parametrize("a,b", [("(1 1)", "(1 1)"), ("(2 1 1)", "(1 (1 1))"), ("(1 (1 1))", "(2 1 1)")])
def test_h_examples(a, b):
    assert encode(du.h_beta(decode("beta", a))) == b


@pytest.mark.parametrize("a,b", [("(* -1)", "(* -1)"), ("(* -1 -1)", "(* (* -1))"), ("(* (* -1))", "(* -1 -1)")])
def test_h_deco_examples(a, b):
    assert encode(du.h_deco(decode("deco", a))) == b


@pytest.mark.parametrize("a,b", [("ud", "ud"), ("uudd", "udud"), ("ududud", "uuuddd")])
def test_mir_examples(a, b):
    assert du.mir_dyck(a) == b


def test_mir_interval_examples():
    iv = lambda s: decode("interval", s)
    assert du.mir_interval(iv("[ud,ud]")) == iv("[ud,ud]")
    assert du.mir_interval(iv("[uudd,uudd]")) == iv("[udud,udud]")
    t = decode("deco", "(* (* -1) -1)")
    assert du.mir_interval(iv("[uuddud,uuddud]")) == bij.deco_to_interval(du.h_deco(t))


def test_rpath():
    assert du.rpath(decode("beta", "(1 (1 1))")) == 2
    assert du.rpath(decode("deco", "(* -1 (* 0 -1))")) == 2


@given(map_objects)
def test_dual_is_an_involution_and_swaps_degrees(m):
    d = du.dual(m)
    assert du.dual(d) == m
    assert maps.fdeg(m) == maps.deg(d)


@given(map_objects)
def test_next_root_cycles_the_outer_face(m):
    x = m
    for _ in range(maps.fdeg(m) + 1):
        x = du.next_root(x)
        assert maps.fdeg(x) == maps.fdeg(m)
    assert x == m


@given(map_objects)
def test_dual_conjugates_to_h_deco(m):
    assert bij.map_to_deco(du.dual(m)) == du.h_deco(bij.map_to_deco(m))


@given(map_objects)
def test_series_is_parallel_after_dual_and_next_root(m):
    assert bij.transport(m, "beta", "series") == bij.transport(du.dual(du.next_root(m)), "beta")


@given(betas)
def test_h_involution(b):
    h = du.h_beta(b)
    assert du.h_beta(h) == b
    assert b.label == du.rpath(h)


@given(decos)
def test_h_deco_conjugacies(t):
    h = du.h_deco(t)
    assert du.h_deco(h) == t
    assert bij.deco_to_beta_direct(h) == du.h_beta(bij.deco_to_beta_direct(t))
    assert du.mir_interval(bij.deco_to_interval(t)) == bij.deco_to_interval(h)


@given(words)
def test_mir_involution_and_trailing_descent(w):
    m = du.mir_dyck(w)
    assert du.mir_dyck(m) == w
    assert du.trailing_downs(m) >= dyck.contacts(w)


@given(words, st.data())
def test_mir_reverses_order(a, data):
    b = data.draw(st.sampled_from(dyck.dyck_words(len(a) // 2)))
    if dyck.tamari_leq(a, b):
        assert dyck.tamari_leq(du.mir_dyck(b), du.mir_dyck(a))
