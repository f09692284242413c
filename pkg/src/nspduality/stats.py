"""Statistics on the four classes, returned as flat records."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from . import dyck, maps, mapops
from .decomp import fl
from .dualities import rpath
from .model import DecoTree, class_of, validate


@dataclass(frozen=True)
class BetaStats:
    root: int
    rpath: int
    leaf: int
    int: int
    sub: int
    stem: int
    rsub: int
    gamma: int


@dataclass(frozen=True)
class DecoStats:
    fl: int
    leaf: int
    int: int
    sub: int
    rpath: int
    stem: int
    dsub: int
    rfl: int


@dataclass(frozen=True)
class MapStats:
    deg: int
    fdeg: int
    face: int
    vertex: int
    pcomp: int
    scomp: int
    ejoin: int
    ecut: int


@dataclass(frozen=True)
class IntervalStats:
    cont: int
    contStar: int
    peak: int
    dblu: int
    desc: int
    level: int
    teeth: int


def to_json(record):
    return json.dumps(asdict(record), separators=(",", ":"))


# -------------------------------------------------------------- tree shape


def _is_leaf(node):
    return isinstance(node, int) or not node.children


def _counts(t):
    if _is_leaf(t):
        return 1, 0
    leaves, internal = 0, 1
    for c in t.children:
        a, b = _counts(c)
        leaves += a
        internal += b
    return leaves, internal


def stem(t):
    """Single-child internal nodes hanging in a chain below the root."""
    n = 0
    while len(t.children) == 1 and not _is_leaf(t.children[0]):
        t = t.children[0]
        n += 1
    return n


# ---------------------------------------------------------------- beta trees


def _rsub(b):
    n = 0
    while not b.is_leaf:
        b = b.children[-1]
        n += b.label == 1
    return n


def _gamma(b):
    """Leaves handled right to left while every ancestor label stays >= 2."""
    labels = {}

    def index(node, path):
        if not node.is_leaf:
            labels[path] = node.label
            for k, c in enumerate(node.children):
                yield from index(c, path + (k,))
        else:
            yield path

    leaves = list(index(b, ()))
    count = 0
    for leaf in reversed(leaves):
        ancestors = [leaf[:k] for k in range(len(leaf))]
        if any(labels[a] < 2 for a in ancestors):
            break
        for a in ancestors:
            labels[a] -= 1
        count += 1
    return count


def stats_beta(b):
    leaf, internal = _counts(b)
    return BetaStats(b.label, rpath(b), leaf, internal, len(b.children), stem(b), _rsub(b), _gamma(b))


# ----------------------------------------------------------- decorated trees


def _leaf_labels(node):
    if isinstance(node, int):
        return [node]
    return [l for c in node.children for l in _leaf_labels(c)]


def _dsub(t):
    """Non-root rightmost-path nodes with exactly one leaf <= depth - 2."""
    n = 0
    depth = 0
    node = t
    while not isinstance(node.children[-1], int):
        node = node.children[-1]
        depth += 1
        if sum(1 for l in _leaf_labels(node) if l <= depth - 2) == 1:
            n += 1
    return n


def _drop_last_leaf(t):
    """Remove the rightmost leaf; ``None`` if that empties its parent."""
    kids = t.children
    last = kids[-1]
    if isinstance(last, int):
        return None if len(kids) == 1 else DecoTree(kids[:-1])
    inner = _drop_last_leaf(last)
    return None if inner is None else DecoTree(kids[:-1] + (inner,))


def _last_leaf(t):
    while not isinstance(t, int):
        t = t.children[-1]
    return t


def _rfl(t):
    n = 0
    while _last_leaf(t) == -1:
        smaller = _drop_last_leaf(t)
        if smaller is None or validate(smaller):
            break
        t = smaller
        n += 1
    return n


def stats_deco(t):
    leaf, internal = _counts(t)
    return DecoStats(fl(t), leaf, internal, len(t.children), rpath(t), stem(t), _dsub(t), _rfl(t))


# ---------------------------------------------------------------------- maps


def _ejoin(m):
    sig = maps.as_dict(m)
    r = m.root
    n = 0
    while len(sig) > 2:
        vert = maps.vertex_of(sig)
        if vert[r] == vert[r ^ 1]:
            break
        nxt = sig[r ^ 1]
        sig = maps.contract(sig, r)
        r = nxt
        if not maps.is_nsp(sig):
            break
        n += 1
    return n


def _ecut(m):
    sig = maps.as_dict(m)
    r = m.root
    n = 0
    while len(sig) > 2:
        before = maps.inverse(sig)[r]
        if before == r:
            break
        sig = maps.delete_edge(sig, before)
        if not maps.is_nsp(sig):
            break
        n += 1
    return n


def stats_map(m):
    sig = maps.as_dict(m)
    parts, _ = mapops.parallel_parts(m)
    series = maps.blocks(maps.edge_list(sig, skip={m.root >> 1}))
    return MapStats(
        deg=maps.deg(m),
        fdeg=maps.fdeg(m),
        face=len(maps.faces(sig)),
        vertex=len(maps.orbits(sig)),
        pcomp=len(parts),
        scomp=len(series),
        ejoin=_ejoin(m),
        ecut=_ecut(m),
    )


# ----------------------------------------------------------------- intervals


def _level(q):
    k = 0
    while q[k + 1:len(q) - k - 1] and q[k] == "u" and q[-k - 1] == "d" and dyck.is_dyck(q[k + 1:len(q) - k - 1]):
        k += 1
    return k


def _teeth(p):
    t = 0
    while p.endswith("ud" * (t + 1)) and len(p) > 2 * (t + 1):
        t += 1
    return t


def stats_interval(iv):
    p, q = iv
    return IntervalStats(
        cont=dyck.contacts(p),
        contStar=dyck.contacts(q),
        peak=p.count("ud"),
        dblu=sum(1 for a, b in zip(p, p[1:]) if a == b == "u"),
        desc=len(q) - len(q.rstrip("d")),
        level=_level(q),
        teeth=_teeth(p),
    )


def stats(x):
    return {"beta": stats_beta, "deco": stats_deco, "map": stats_map,
            "interval": stats_interval}[class_of(x)](x)
