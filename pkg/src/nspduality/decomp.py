"""Four-type recursive decomposition shared by every class.

Each object is either a base object (type I), ``wrap(inner, i)`` (type II),
``graft(inner)`` (type III) or ``join(head, i, tail)`` (type IV). Maps carry a
``scheme``: ``"parallel"`` contracts the root, ``"series"`` deletes it.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import NamedTuple

from . import dyck, mapops, maps
from .model import LEAF, BetaTree, DecoTree, SyncInterval, class_of, encode

SCHEMES = ("parallel", "series")


class TypeTag(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


class Base(NamedTuple):
    pass


class Wrap(NamedTuple):
    inner: object
    i: int


class Graft(NamedTuple):
    inner: object


class Join(NamedTuple):
    head: object
    i: int
    tail: object


_TAG = {Base: TypeTag.I, Wrap: TypeTag.II, Graft: TypeTag.III, Join: TypeTag.IV}


def tag_of(step):
    return _TAG[type(step)]


# ---------------------------------------------------------------- statistics


def fl(t):
    """Number of free leaves (label -1) of a decorated tree."""
    if isinstance(t, int):
        return int(t == -1)
    return sum(fl(c) for c in t.children)


def size_stat(x, scheme="parallel"):
    """root / fl / deg (fdeg for series) / cont, by class."""
    cls = class_of(x)
    if cls == "beta":
        return x.label
    if cls == "deco":
        return fl(x)
    if cls == "interval":
        return dyck.contacts(x.lower)
    return maps.fdeg(x) if scheme == "series" else maps.deg(x)


def _check(i, k):
    if not 1 <= i <= k:
        raise ValueError(f"parameter {i} outside [1, {k}]")


# ---------------------------------------------------------------- beta trees


def _sum(children):
    return sum(c.label for c in children)


def beta_delta(b, i):
    _check(i, b.label)
    return BetaTree(i, (b._replace(label=i),))


def beta_pi(b):
    (c,) = b.children
    return BetaTree(_sum(c.children), c.children)


def beta_oplus(b1, i, b2):
    _check(i, b1.label)
    kids = (b1._replace(label=i),) + b2.children
    return BetaTree(_sum(kids), kids)


def _beta_decompose(b):
    kids = b.children
    first = kids[0]
    if len(kids) == 1:
        return Base() if first.is_leaf else Wrap(beta_pi(b), first.label)
    rest = kids[1:]
    if first.is_leaf:
        return Graft(BetaTree(_sum(rest), rest))
    head = BetaTree(_sum(first.children), first.children)
    return Join(head, first.label, BetaTree(_sum(rest), rest))


def _beta_compose(step):
    if isinstance(step, Base):
        return BetaTree(1, (LEAF,))
    if isinstance(step, Wrap):
        return beta_delta(step.inner, step.i)
    if isinstance(step, Graft):
        b = step.inner
        return BetaTree(b.label + 1, (LEAF,) + b.children)
    return beta_oplus(step.head, step.i, step.tail)


# ----------------------------------------------------------- decorated trees


def _shift_leaves(t, f):
    if isinstance(t, int):
        return f(t)
    return DecoTree(tuple(_shift_leaves(c, f) for c in t.children))


def deco_delta(t, i):
    k = fl(t)
    _check(i, k)
    seen = 0

    def bump(label):
        nonlocal seen
        if label == -1:
            seen += 1
            if seen > k - i:
                return -1
        return label + 1

    return DecoTree((_shift_leaves(t, bump),))


def deco_pi(t):
    (c,) = t.children
    return _shift_leaves(c, lambda l: l if l == -1 else l - 1)


def deco_oplus(t1, i, t2):
    return DecoTree(deco_delta(t1, i).children + t2.children)


def _deco_decompose(t):
    kids = t.children
    first = kids[0]
    if len(kids) == 1:
        if isinstance(first, int):
            return Base()
        return Wrap(deco_pi(t), fl(t))
    rest = DecoTree(kids[1:])
    if isinstance(first, int):
        return Graft(rest)
    lead = DecoTree((first,))
    return Join(deco_pi(lead), fl(lead), rest)


def _deco_compose(step):
    if isinstance(step, Base):
        return DecoTree((-1,))
    if isinstance(step, Wrap):
        return deco_delta(step.inner, step.i)
    if isinstance(step, Graft):
        return DecoTree((-1,) + step.inner.children)
    return deco_oplus(step.head, step.i, step.tail)


# ----------------------------------------------------------------- intervals


def interval_delta(iv, i):
    p, q = iv
    cuts = [k for k, h in enumerate(dyck.heights(p)) if h == 0 and k > 0]
    _check(i, len(cuts))
    cut = cuts[len(cuts) - i]
    return SyncInterval("u" + p[:cut] + "d" + p[cut:], "u" + q + "d")


def interval_oplus(i1, i, i2):
    p, q = interval_delta(i1, i)
    return SyncInterval(p + i2.lower, q + i2.upper)


def _interval_decompose(iv):
    p, q = iv
    q1, q2 = dyck.first_return(q)
    head = p[:len(p) - len(q2)]
    p2 = p[len(head):]
    p1l, p1r = dyck.first_return(head)
    if not p1l:
        return Base() if not p2 else Graft(SyncInterval(p2, q2))
    inner = SyncInterval(p1l + p1r, q1)
    i = 1 + dyck.contacts(p1r)
    return Wrap(inner, i) if not p2 else Join(inner, i, SyncInterval(p2, q2))


def _interval_compose(step):
    if isinstance(step, Base):
        return SyncInterval("ud", "ud")
    if isinstance(step, Wrap):
        return interval_delta(step.inner, step.i)
    if isinstance(step, Graft):
        return SyncInterval("ud" + step.inner.lower, "ud" + step.inner.upper)
    return interval_oplus(step.head, step.i, step.tail)


# ---------------------------------------------------------------------- maps


def _map_decompose(m, scheme):
    parts = (mapops.series_split if scheme == "series" else mapops.parallel_split)(m)
    kind = parts[0]
    if kind == "I":
        return Base()
    if kind == "II":
        return Wrap(parts[1], parts[2])
    if kind == "III":
        return Graft(parts[1])
    return Join(parts[1], parts[2], parts[3])


def _map_compose(step, scheme):
    series = scheme == "series"
    if isinstance(step, Base):
        return mapops.M2BOND
    if isinstance(step, Wrap):
        return (mapops.series_delta if series else mapops.delta)(step.inner, step.i)
    if isinstance(step, Graft):
        return (mapops.subdivide if series else mapops.graft)(step.inner)
    return (mapops.series_oplus if series else mapops.oplus)(step.head, step.i, step.tail)


# ------------------------------------------------------------------- generic


def _scheme(cls, scheme):
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if scheme == "series" and cls != "map":
        raise ValueError("series scheme applies to maps only")


def decompose(x, scheme="parallel"):
    """One level of the recursive decomposition of ``x``."""
    cls = class_of(x)
    _scheme(cls, scheme)
    if cls == "beta":
        return _beta_decompose(x)
    if cls == "deco":
        return _deco_decompose(x)
    if cls == "interval":
        return _interval_decompose(x)
    return _map_decompose(x, scheme)


def compose(step, cls, scheme="parallel"):
    """Inverse of ``decompose``; raises ``ValueError`` on a bad parameter."""
    _scheme(cls, scheme)
    for part in step:
        if not isinstance(part, int) and class_of(part) != cls:
            raise ValueError(f"constituent of class {class_of(part)} in a {cls} step")
    if isinstance(step, (Wrap, Join)):
        _check(step.i, size_stat(step[0], scheme))
    if cls == "beta":
        return _beta_compose(step)
    if cls == "deco":
        return _deco_compose(step)
    if cls == "interval":
        return _interval_compose(step)
    if cls == "map":
        return _map_compose(step, scheme)
    raise ValueError(f"unknown class {cls!r}")


def classify(x, scheme="parallel"):
    return tag_of(decompose(x, scheme))


def step_to_json(step):
    kind = {Base: "base", Wrap: "wrap", Graft: "graft", Join: "join"}[type(step)]
    out = {"kind": kind}
    for name, value in step._asdict().items():
        out[name] = value if name == "i" else encode(value)
    return json.dumps(out, separators=(",", ":"))
