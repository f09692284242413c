"""Exhaustive generation by the recursive decomposition, and brute-force oracles
that never touch it."""

from __future__ import annotations

import itertools
import json
import threading
from functools import lru_cache
from math import factorial

from . import dyck, maps
from .decomp import Base, Graft, Join, Wrap, compose, size_stat
from .model import BetaTree, DecoTree, RootedMap, SyncInterval, encode, validate

ORACLE_CEILING = {"beta": 7, "deco": 7, "interval": 7, "map": 5}

_LAYERS = {}
_LOCK = threading.Lock()


def closed_form(n):
    return 2 * factorial(3 * n) // (factorial(2 * n + 1) * factorial(n + 1))


def _layer(cls, n, scheme):
    key = (cls, scheme, n)
    hit = _LAYERS.get(key)
    if hit is not None:
        return hit
    for k in range(1, n):
        _layer(cls, k, scheme)
    with _LOCK:
        if key in _LAYERS:
            return _LAYERS[key]
        out = []
        if n == 1:
            out.append(compose(Base(), cls, scheme))
        else:
            for x in _LAYERS[(cls, scheme, n - 1)]:
                out.append(compose(Graft(x), cls, scheme))
                for i in range(1, size_stat(x, scheme) + 1):
                    out.append(compose(Wrap(x, i), cls, scheme))
            for a in range(1, n - 1):
                for head in _LAYERS[(cls, scheme, a)]:
                    for tail in _LAYERS[(cls, scheme, n - 1 - a)]:
                        for i in range(1, size_stat(head, scheme) + 1):
                            out.append(compose(Join(head, i, tail), cls, scheme))
        out.sort(key=encode)
        _LAYERS[key] = tuple(out)
        return _LAYERS[key]


def generate(cls, n, scheme="parallel"):
    """Every object of size ``n``, once each, sorted by encoding."""
    if n < 1:
        raise ValueError("size must be at least 1")
    return _layer(cls, n, scheme)


# ------------------------------------------------------------------- oracles


@lru_cache(maxsize=None)
def plane_trees(n):
    """Plane tree shapes with ``n`` edges as nested tuples of children."""
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        first_edges = k - 1
        for first in plane_trees(first_edges):
            for rest in plane_trees(n - k):
                out.append((first,) + rest)
    return tuple(out)


def _leaves(shape):
    return 1 if not shape else sum(_leaves(c) for c in shape)


def _beta_labellings(shape, is_root):
    if not shape:
        yield BetaTree(1)
        return
    for kids in itertools.product(*(list(_beta_labellings(c, False)) for c in shape)):
        total = sum(k.label for k in kids)
        labels = [total] if is_root else range(1, _leaves(shape) + 1)
        for label in labels:
            yield BetaTree(label, kids)


def _deco_labellings(shape, depth):
    options = []
    for c in shape:
        if c:
            options.append(list(_deco_labellings(c, depth + 1)))
        else:
            options.append(list(range(-1, depth)))
    for kids in itertools.product(*options):
        yield DecoTree(kids)


def _brute_trees(cls, n):
    out = []
    for shape in plane_trees(n):
        if cls == "beta":
            candidates = _beta_labellings(shape, True)
        else:
            candidates = _deco_labellings(shape, 0)
        out.extend(t for t in candidates if not validate(t))
    return out


def _brute_intervals(n):
    words = dyck.dyck_words(n)
    out = []
    for p in words:
        for q in words:
            if dyck.dyck_type(p) == dyck.dyck_type(q) and dyck.tamari_leq_naive(p, q):
                out.append(SyncInterval(p, q))
    return out


def rooted_maps(edges):
    """Every connected rooted map with ``edges`` edges, in canonical labelling.

    Rotations are built directly in discovery order: the image of dart ``j`` is
    either a discovered dart not yet used as an image, or the next fresh edge.
    Each rooted map arises exactly once, at any genus.
    """
    size = 2 * edges
    sigma = [None] * size
    used = [False] * size

    def grow(j, labelled):
        if j == size:
            yield RootedMap(edges, tuple(sigma), 0)
            return
        if j >= labelled:
            return
        for t in range(labelled):
            if not used[t]:
                sigma[j], used[t] = t, True
                yield from grow(j + 1, labelled)
                used[t] = False
        if labelled < size:
            sigma[j], used[labelled] = labelled, True
            yield from grow(j + 1, labelled + 2)
            used[labelled] = False
        sigma[j] = None

    yield from grow(0, 2)


def _brute_maps(n):
    return [m for m in rooted_maps(n + 1) if maps.is_nsp(maps.as_dict(m))]


def brute_force(cls, n):
    """Oracle enumeration, sorted by encoding."""
    ceiling = ORACLE_CEILING[cls]
    if not 1 <= n <= ceiling:
        raise ValueError(f"oracle for {cls} supports sizes 1..{ceiling}")
    if cls in ("beta", "deco"):
        out = _brute_trees(cls, n)
    elif cls == "interval":
        out = _brute_intervals(n)
    else:
        out = _brute_maps(n)
    return tuple(sorted(out, key=encode))


# -------------------------------------------------------------- count table


def count_report(max_n, max_map_n=None):
    """Rows of per-size cardinalities and fixed-point counts."""
    from . import dualities

    max_map_n = max_n if max_map_n is None else max_map_n
    rows = []
    for n in range(1, max_n + 1):
        row = {"n": n, "closed_form": closed_form(n)}
        for cls in ("beta", "deco", "interval"):
            row[cls] = len(generate(cls, n))
        row["fix_h"] = sum(dualities.h_beta(b) == b for b in generate("beta", n))
        row["fix_mir"] = sum(dualities.mir_interval(iv) == iv for iv in generate("interval", n))
        if n <= max_map_n:
            ms = generate("map", n)
            row["map"] = len(ms)
            row["self_dual"] = sum(dualities.dual(m) == m for m in ms)
        else:
            row["map"] = row["self_dual"] = None
        counts = {row[c] for c in ("beta", "deco", "interval", "map") if row[c] is not None}
        fixes = {row[c] for c in ("fix_h", "fix_mir", "self_dual") if row[c] is not None}
        row["ok"] = counts == {row["closed_form"]} and len(fixes) == 1
        rows.append(row)
    return rows


COLUMNS = ("n", "beta", "deco", "map", "interval", "closed_form", "fix_h", "self_dual", "fix_mir", "ok")


def report_tsv(rows):
    lines = ["\t".join(COLUMNS)]
    for row in rows:
        lines.append("\t".join("-" if row[c] is None else str(row[c]).lower() for c in COLUMNS))
    return "\n".join(lines) + "\n"


def report_json(rows):
    return json.dumps(rows, separators=(",", ":"))
