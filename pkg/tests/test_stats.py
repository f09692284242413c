import json

from hypothesis import given
from hypothesis import strategies as st

from nspduality import decode
from nspduality import bijections as bij
from nspduality import dualities as du
from nspduality.enumeration import generate
from nspduality.stats import (BetaStats, DecoStats, IntervalStats, MapStats, stats, stats_beta,
                              stats_deco, stats_interval, stats_map, to_json)

map_objects = st.integers(1, 5).flatmap(lambda n: st.sampled_from(generate("map", n)))
decos = st.integers(1, 6).flatmap(lambda n: st.sampled_from(generate("deco", n)))
betas = st.integers(1, 6).flatmap(lambda n: st.sampled_from(generate("beta", n)))


def test_beta_example():
    assert stats_beta(decode("beta", "(2 1 1)")) == BetaStats(2, 1, 2, 1, 2, 0, 1, 1)


def test_deco_example():
    assert stats_deco(decode("deco", "(* (* -1))")) == DecoStats(1, 1, 2, 1, 2, 1, 1, 0)


def test_map_example(c3):
    assert stats_map(c3) == MapStats(1, 2, 2, 3, 1, 2, 1, 0)


def test_interval_examples():
    assert stats_interval(decode("interval", "[uudd,uudd]")) == IntervalStats(1, 1, 1, 1, 2, 1, 0)
    assert stats_interval(decode("interval", "[ud,ud]")) == IntervalStats(1, 1, 1, 0, 1, 0, 0)


def test_json_record_keys(c3):
    record = json.loads(to_json(stats(c3)))
    assert list(record) == ["deg", "fdeg", "face", "vertex", "pcomp", "scomp", "ejoin", "ecut"]


def test_vertex_is_two_plus_dblu_on_c3(c3):
    iv = bij.deco_to_interval(bij.map_to_deco(c3))
    assert stats_map(c3).vertex == 3
    assert stats_interval(iv).dblu == 1
    assert stats_map(c3).vertex == 2 + stats_interval(iv).dblu


@given(map_objects)
def test_transfer_through_t_and_i(m):
    t = bij.map_to_deco(m)
    a, b, c = stats_map(m), stats_deco(t), stats_interval(bij.deco_to_interval(t))
    assert a.deg == b.fl == c.cont
    assert a.face == 1 + b.leaf == 1 + c.peak
    assert a.vertex == 1 + b.int == 2 + c.dblu
    assert a.pcomp == b.sub == c.contStar
    assert a.fdeg == b.rpath == c.desc
    assert a.ejoin == b.stem == c.level
    assert a.ecut == b.rfl == c.teeth


@given(decos)
def test_transfer_through_varphi(t):
    s, b = stats_deco(t), stats_beta(bij.deco_to_beta_direct(t))
    assert (s.fl, 1 + s.dsub, s.rfl) == (b.root, b.rsub, b.gamma)


@given(map_objects)
def test_dual_statistics(m):
    a, d = stats_map(m), stats_map(du.dual(m))
    assert (d.deg, d.fdeg, d.face, d.vertex, d.ejoin, d.ecut) == (a.fdeg, a.deg, a.vertex, a.face, a.ecut, a.ejoin)
    assert stats_deco(bij.map_to_deco(du.dual(m))).dsub + 1 == a.pcomp


@given(betas)
def test_h_exchanges_statistics(b):
    a, h = stats_beta(b), stats_beta(du.h_beta(b))
    assert (h.leaf, h.root, h.gamma, h.sub) == (a.int, a.rpath, a.stem, a.rsub)


@given(decos)
def test_peak_and_dblu_split_the_size(t):
    iv = bij.deco_to_interval(t)
    s = stats_interval(iv)
    assert s.peak + s.dblu == len(iv.lower) // 2
