"""Canonical transport between classes and the direct bijections T, varphi_T, I.

``transport`` walks the shared four-type recursion: decompose in the source
class, transport the constituents, compose in the target class.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from . import maps
from .decomp import Graft, Join, Wrap, compose, decompose
from .model import BetaTree, DecoTree, SyncInterval, class_of


def transport(x, dst, scheme="parallel"):
    """Image of ``x`` in class ``dst``; ``scheme`` applies to whichever side is a map."""
    src = class_of(x)
    if src == "map":
        x = maps.canonical_form(x)
    return _transport(x, src, dst, scheme if "map" in (src, dst) else "parallel")


@lru_cache(maxsize=None)
def _transport(x, src, dst, scheme):
    if src == dst:
        return x
    step = decompose(x, scheme if src == "map" else "parallel")
    if isinstance(step, Wrap):
        step = Wrap(_transport(step.inner, src, dst, scheme), step.i)
    elif isinstance(step, Graft):
        step = Graft(_transport(step.inner, src, dst, scheme))
    elif isinstance(step, Join):
        step = Join(_transport(step.head, src, dst, scheme), step.i,
                    _transport(step.tail, src, dst, scheme))
    return compose(step, dst, scheme if dst == "map" else "parallel")


# ------------------------------------------------------------------------ T


def map_to_deco(m):
    """Depth-first exploration tree of the map with its root deleted.

    The search starts at the head of the root and scans the darts of every
    newly reached vertex clockwise from the arrival dart. An edge towards an
    explored vertex becomes a leaf labelled by that vertex's depth (the root
    vertex has depth -1). The last explored branch is the leftmost child.
    """
    sig = maps.as_dict(m)
    vert = maps.vertex_of(sig)
    r = m.root
    depth = {vert[r]: -1, vert[r ^ 1]: 0}
    used = {r >> 1}

    def explore(arrival, level):
        kids = []
        for x in maps.cycle(sig, arrival)[1:]:
            if x >> 1 in used:
                continue
            used.add(x >> 1)
            w = vert[x ^ 1]
            if w in depth:
                kids.append(depth[w])
            else:
                depth[w] = level + 1
                kids.append(explore(x ^ 1, level + 1))
        return DecoTree(tuple(reversed(kids)))

    return explore(r ^ 1, 0)


def deco_to_map(t):
    return transport(t, "map")


# ------------------------------------------------------------- certificates


class CertificateTable(NamedTuple):
    """``cert_of`` maps a node path to the traversal index of its certificate;
    ``counts[k]`` is the number of nodes certified by the ``k``-th leaf."""

    cert_of: dict
    counts: tuple


def _leaf_paths(t, path=()):
    for k, c in enumerate(t.children):
        if isinstance(c, int):
            yield path + (k,), c
        else:
            yield from _leaf_paths(c, path + (k,))


def certificates(t):
    leaves = list(_leaf_paths(t))
    cert_of = {}

    def walk(node, path):
        if path:
            p = len(path)
            cert_of[path] = next(k for k, (lp, label) in enumerate(leaves)
                                 if lp[:p] == path and label <= p - 2)
        for k, c in enumerate(node.children):
            if not isinstance(c, int):
                walk(c, path + (k,))

    walk(t, ())
    counts = [0] * len(leaves)
    for k in cert_of.values():
        counts[k] += 1
    return CertificateTable(cert_of, tuple(counts))


# -------------------------------------------------------------- varphi_T, I


def deco_to_beta_direct(t):
    """Label internal nodes of depth p by their descendant leaves <= p - 2;
    the root gets the number of free leaves."""

    def build(node, depth):
        kids = tuple(BetaTree(1) if isinstance(c, int) else build(c, depth + 1)
                     for c in node.children)
        if depth == 0:
            label = sum(1 for l in _all_leaves(node) if l == -1)
        else:
            label = sum(1 for l in _all_leaves(node) if l <= depth - 2)
        return BetaTree(label, kids)

    return build(t, 0)


def _all_leaves(node):
    if isinstance(node, int):
        return [node]
    out = []
    for c in node.children:
        out.extend(_all_leaves(c))
    return out


def deco_to_interval(t):
    """Lower path from certificate counts, upper path from the depth profile."""
    counts = iter(certificates(t).counts)
    lower = []
    upper = []

    def walk(node):
        for c in node.children:
            lower.append("u")
            upper.append("u")
            if isinstance(c, int):
                lower.append("d" * (next(counts) + 1))
            else:
                walk(c)
            upper.append("d")

    walk(t)
    return SyncInterval("".join(lower), "".join(upper))


def interval_to_deco(iv):
    return transport(iv, "deco")
