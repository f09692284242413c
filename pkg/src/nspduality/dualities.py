"""Map duality, re-rooting, the involutions h and h_T, and mir on Dyck paths."""

from __future__ import annotations

from functools import lru_cache

from . import decomp
from .decomp import Graft, Join, Wrap
from .mapops import dual, next_root
from .model import BetaTree, DecoTree, SyncInterval

__all__ = ["dual", "next_root", "h_beta", "h_deco", "mir_dyck", "mir_interval", "rpath",
           "trailing_downs"]


def rpath(t):
    """Number of edges on the path from the root to the rightmost leaf."""
    n = 0
    while not isinstance(t, int) and t.children:
        t = t.children[-1]
        n += 1
    return n


def _along_right(t, k, f):
    """Apply ``f`` to the ``k``-th node of the rightmost path (the root is 1)."""
    if k == 1:
        return f(t)
    kids = t.children
    return _rebuild(t, kids[:-1] + (_along_right(kids[-1], k - 1, f),))


def _rebuild(t, kids):
    return t._replace(children=kids)


# ------------------------------------------------------------------------ h


def _bump_path(b, i):
    """Add 1 to the first ``i`` rightmost-path nodes and hang a leaf on the last."""
    if i == 1:
        return BetaTree(b.label + 1, b.children + (BetaTree(1),))
    kids = b.children
    return BetaTree(b.label + 1, kids[:-1] + (_bump_path(kids[-1], i - 1),))


def _replace_rightmost_leaf(t, new):
    if isinstance(t, int) or not t.children:
        return new
    return _rebuild(t, t.children[:-1] + (_replace_rightmost_leaf(t.children[-1], new),))


@lru_cache(maxsize=None)
def h_beta(b):
    step = decomp.decompose(b)
    if isinstance(step, Wrap):
        return _bump_path(h_beta(step.inner), step.i)
    if isinstance(step, Graft):
        return _replace_rightmost_leaf(h_beta(step.inner), BetaTree(1, (BetaTree(1),)))
    if isinstance(step, Join):
        top = h_beta(decomp.beta_delta(step.head, step.i))
        return _replace_rightmost_leaf(h_beta(step.tail), top._replace(label=1))
    return b


# ---------------------------------------------------------------------- h_T


def _shift_all_but_last(t, r):
    count = sum(1 for _ in _leaf_labels(t))
    seen = 0

    def walk(node):
        nonlocal seen
        if isinstance(node, int):
            seen += 1
            return node if seen == count else node + r
        return DecoTree(tuple(walk(c) for c in node.children))

    return walk(t)


def _leaf_labels(t):
    if isinstance(t, int):
        yield t
    else:
        for c in t.children:
            yield from _leaf_labels(c)


@lru_cache(maxsize=None)
def h_deco(t):
    step = decomp.decompose(t)
    if isinstance(step, Wrap):
        hang = lambda node: _rebuild(node, node.children + (-1,))
        return _along_right(h_deco(step.inner), step.i, hang)
    if isinstance(step, Graft):
        return _replace_rightmost_leaf(h_deco(step.inner), DecoTree((-1,)))
    if isinstance(step, Join):
        top = h_deco(decomp.deco_delta(step.head, step.i))
        bottom = h_deco(step.tail)
        return _replace_rightmost_leaf(bottom, _shift_all_but_last(top, rpath(bottom)))
    return t


# ---------------------------------------------------------------------- mir


@lru_cache(maxsize=None)
def mir_dyck(w):
    """``D1 u D2 d -> mir(D2) u mir(D1) d`` split at the last primitive factor."""
    if not w:
        return w
    h = 0
    cut = 0
    for k, ch in enumerate(w[:-1]):
        h += 1 if ch == "u" else -1
        if h == 0:
            cut = k + 1
    return mir_dyck(w[cut + 1:-1]) + "u" + mir_dyck(w[:cut]) + "d"


def mir_interval(iv):
    return SyncInterval(mir_dyck(iv.upper), mir_dyck(iv.lower))


def trailing_downs(w):
    return len(w) - len(w.rstrip("d"))
