"""Dart-level primitives for rooted planar maps.

Working maps are plain dicts ``{dart: clockwise successor}`` over integer darts
paired by ``d ^ 1``; they need not be contiguous. ``freeze`` relabels such a
dict into a canonical ``RootedMap``.
"""

from __future__ import annotations

import random

from .model import RootedMap


def alpha(d):
    return d ^ 1


def as_dict(m):
    return dict(enumerate(m.sigma))


def face_next(sig, d):
    """Next dart along the face on the left of ``d``."""
    return sig[d ^ 1]


def inverse(sig):
    return {b: a for a, b in sig.items()}


def cycle(perm, d):
    out = [d]
    x = perm[d]
    while x != d:
        out.append(x)
        x = perm[x]
    return out


def orbits(perm):
    seen = set()
    out = []
    for d in sorted(perm):
        if d not in seen:
            c = cycle(perm, d)
            seen.update(c)
            out.append(c)
    return out


def vertex_of(sig):
    """Map each dart to the index of its vertex (sigma orbit)."""
    out = {}
    for k, c in enumerate(orbits(sig)):
        for d in c:
            out[d] = k
    return out


def faces(sig):
    return orbits({d: sig[d ^ 1] for d in sig})


def restrict(sig, keep):
    """Rotation induced on the dart subset ``keep``."""
    out = {}
    for d in keep:
        e = sig[d]
        while e not in keep:
            e = sig[e]
        out[d] = e
    return out


def delete_edge(sig, d):
    return restrict(sig, set(sig) - {d, d ^ 1})


def contract(sig, d):
    """Contract the non-loop edge of ``d``, merging its endpoint rotations."""
    xs = cycle(sig, d)[1:]
    ys = cycle(sig, d ^ 1)[1:]
    merged = xs + ys
    out = {k: v for k, v in sig.items() if k not in (d, d ^ 1)}
    for a, b in zip(merged, merged[1:] + merged[:1]):
        out[a] = b
    return out


def freeze(sig, root):
    """Canonical ``RootedMap`` of a connected working map.

    Darts are relabelled in the order they are discovered: the root gets 0 and
    its partner 1; then, scanning labels in increasing order, the clockwise
    successor of each labelled dart receives the next free even label (and
    its partner the odd one) when first met.
    """
    label = {root: 0, root ^ 1: 1}
    order = [root, root ^ 1]
    j = 0
    while j < len(order):
        s = sig[order[j]]
        if s not in label:
            label[s] = len(order)
            label[s ^ 1] = len(order) + 1
            order.extend((s, s ^ 1))
        j += 1
    if len(order) != len(sig):
        raise ValueError("map is not connected")
    return RootedMap(len(order) // 2, tuple(label[sig[d]] for d in order), 0)


def canonical_form(m):
    return freeze(as_dict(m), m.root)


def relabel(m, rng=None):
    """Random dart relabelling that keeps the ``d ^ 1`` pairing."""
    rng = rng or random.Random(0)
    perm = list(range(m.E))
    rng.shuffle(perm)
    flip = [rng.randrange(2) for _ in range(m.E)]

    def new(d):
        return 2 * perm[d >> 1] + ((d & 1) ^ flip[d >> 1])

    sigma = [0] * (2 * m.E)
    for d, s in enumerate(m.sigma):
        sigma[new(d)] = new(s)
    return RootedMap(m.E, tuple(sigma), new(m.root))


def deg(m):
    """Degree of the root vertex minus one."""
    return len(cycle(as_dict(m), m.root)) - 1


def fdeg(m):
    """Degree of the outer face minus one."""
    sig = as_dict(m)
    return len(cycle({d: sig[d ^ 1] for d in sig}, m.root)) - 1


def euler(sig):
    """``V - E + F`` of a working map."""
    return len(orbits(sig)) - len(sig) // 2 + len(faces(sig))


# ------------------------------------------------------------------ blocks


def blocks(edges):
    """Biconnected components of a multigraph given as ``(eid, a, b)`` triples.

    Loops form their own blocks. Returns a list of frozensets of edge ids.
    """
    adj = {}
    out = []
    for eid, a, b in edges:
        if a == b:
            out.append(frozenset([eid]))
            continue
        adj.setdefault(a, []).append((b, eid))
        adj.setdefault(b, []).append((a, eid))
    disc = {}
    low = {}
    stack = []

    def dfs(v, parent_eid):
        disc[v] = low[v] = len(disc)
        for w, eid in adj[v]:
            if eid == parent_eid:
                continue
            if w not in disc:
                stack.append(eid)
                dfs(w, eid)
                low[v] = min(low[v], low[w])
                if low[w] >= disc[v]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(e)
                        if e == eid:
                            break
                    out.append(frozenset(block))
            elif disc[w] < disc[v]:
                stack.append(eid)
                low[v] = min(low[v], disc[w])

    for v in adj:
        if v not in disc:
            dfs(v, None)
    return out


def edge_list(sig, skip=()):
    """``(eid, a, b)`` triples of a working map, vertices as sigma-orbit ids."""
    vert = vertex_of(sig)
    return [(d >> 1, vert[d], vert[d ^ 1]) for d in sorted(sig) if d & 1 == 0 and d >> 1 not in skip]


# --------------------------------------------------------------- validation


def _connected(sig):
    seen = set()
    todo = [next(iter(sig))]
    while todo:
        d = todo.pop()
        if d in seen:
            continue
        seen.add(d)
        todo.append(sig[d])
        todo.append(d ^ 1)
    return len(seen) == len(sig)


def nsp_violations(sig):
    """Reasons why a working map is not a non-separable planar map."""
    if len(sig) < 4:
        return ["fewer than two edges"]
    if not _connected(sig):
        return ["map is not connected"]
    out = []
    if euler(sig) != 2:
        out.append(f"genus is not 0 (V - E + F = {euler(sig)})")
    vert = vertex_of(sig)
    if any(vert[d] == vert[d ^ 1] for d in sig):
        out.append("map has a loop")
    elif len(blocks(edge_list(sig))) != 1:
        out.append("cut vertex / not non-separable")
    return out


def is_nsp(sig):
    return not nsp_violations(sig)


def map_violations(m):
    n = 2 * m.E
    if m.E < 1 or len(m.sigma) != n or sorted(m.sigma) != list(range(n)):
        return [f"sigma is not a permutation of 0..{n - 1}"]
    if not 0 <= m.root < n:
        return [f"root dart {m.root} out of range"]
    return nsp_violations(as_dict(m))
