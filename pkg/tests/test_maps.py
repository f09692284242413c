import random

from hypothesis import given, settings
from hypothesis import strategies as st

from nspduality import decode, validate
from nspduality import maps, mapops
from nspduality.enumeration import generate

from oracles import nonseparable_planar

map_objects = st.integers(1, 5).flatmap(lambda n: st.sampled_from(generate("map", n)))


def test_two_relabellings_of_c3_agree(c3):
    a = maps.relabel(c3, random.Random(1))
    b = maps.relabel(c3, random.Random(2))
    assert maps.canonical_form(a) == maps.canonical_form(b) == c3


def test_degrees_of_small_maps(m2bond, c3, band):
    assert (maps.deg(m2bond), maps.fdeg(m2bond)) == (1, 1)
    assert (maps.deg(c3), maps.fdeg(c3)) == (1, 2)
    assert (maps.deg(band), maps.fdeg(band)) == (2, 1)


def test_bond_constant(m2bond):
    assert mapops.M2BOND == m2bond


def test_blocks_split_at_cut_vertex():
    # two triangles sharing vertex 0
    pairs = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]
    edges = [(k, a, b) for k, (a, b) in enumerate(pairs)]
    assert sorted(sorted(b) for b in maps.blocks(edges)) == [[0, 1, 2], [3, 4, 5]]
    assert maps.blocks([(0, 0, 1), (1, 0, 1)]) == [frozenset({0, 1})]


@given(map_objects, st.integers(0, 2**32))
def test_canonical_form_is_relabelling_invariant(m, seed):
    twisted = maps.relabel(m, random.Random(seed))
    assert maps.canonical_form(twisted) == m
    assert maps.canonical_form(m) == m


@given(map_objects)
def test_generated_maps_pass_independent_check(m):
    assert nonseparable_planar(m.sigma)
    assert maps.is_nsp(maps.as_dict(m))
    assert maps.euler(maps.as_dict(m)) == 2


@settings(max_examples=50)
@given(map_objects)
def test_face_walk_partitions_darts(m):
    sig = maps.as_dict(m)
    darts = sorted(d for f in maps.faces(sig) for d in f)
    assert darts == list(range(2 * m.E))


def test_separable_maps_rejected():
    loop = decode("map", '{"E":2,"sigma":[1,0,3,2],"root":0}', check=False)
    assert validate(loop)
    assert not nonseparable_planar(loop.sigma)
