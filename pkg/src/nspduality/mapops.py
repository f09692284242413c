"""Parallel and series decompositions of rooted non-separable planar maps.

Geometry used throughout (``sigma`` clockwise, outer face left of the root):

* the outer face is walked clockwise by ``d -> sigma[d ^ 1]`` from the root;
* around the root vertex, the outer corner sits just before the root and the
  core corner just after it.

All constructors return canonical ``RootedMap`` values.
"""

from __future__ import annotations

from . import maps
from .maps import contract, cycle, freeze, restrict
from .model import RootedMap

M2BOND = RootedMap(2, (2, 3, 0, 1), 0)


def _fresh(sig):
    return max(sig) + 1 + (max(sig) + 1) % 2


def _link(sig, darts):
    for a, b in zip(darts, darts[1:] + darts[:1]):
        sig[a] = b


def _offset(sig, k):
    return {a + k: b + k for a, b in sig.items()}


# ---------------------------------------------------------------- parallel


def delta(m, i):
    """Split the root vertex along the outer face; new vertex keeps ``i`` darts."""
    k = maps.deg(m)
    if not 1 <= i <= k:
        raise ValueError(f"parameter {i} outside [1, {k}]")
    sig = maps.as_dict(m)
    a = cycle(sig, m.root)
    n = _fresh(sig)
    _link(sig, a[k - i + 1:] + [n])
    _link(sig, [n + 1] + a[:k - i + 1])
    return freeze(sig, n)


def pi(m):
    """Contract the root and re-root at the next outer edge clockwise."""
    sig = maps.as_dict(m)
    return freeze(contract(sig, m.root), sig[m.root ^ 1])


def _join_dict(m1, i, m2):
    d = maps.as_dict(delta(m1, i))
    off = 2 * m2.E
    d = _offset(d, off)
    rd = off
    sig = maps.as_dict(m2)
    r = m2.root
    cs = cycle(d, rd)[1:]
    ws = cycle(d, rd ^ 1)[1:]
    bs = cycle(sig, r)[1:]
    zs = cycle(sig, r ^ 1)[1:]
    sig.update({k: v for k, v in d.items() if k not in (rd, rd ^ 1)})
    _link(sig, [r] + cs + bs)
    _link(sig, [r ^ 1] + zs + ws)
    return sig, r


def oplus(m1, i, m2):
    """Place ``delta(m1, i)`` in the core face of ``m2`` and merge the roots."""
    return freeze(*_join_dict(m1, i, m2))


def graft(m):
    """Duplicate the root edge on the core-face side."""
    sig = maps.as_dict(m)
    r = m.root
    n = _fresh(sig)
    inv = maps.inverse(sig)
    sig[n] = sig[r]
    sig[r] = n
    before = inv[r ^ 1]
    sig[before] = n + 1
    sig[n + 1] = r ^ 1
    return freeze(sig, r)


def parallel_parts(m):
    """Blocks of the map obtained by contracting the root (root excluded).

    Returns ``(blocks, innermost)``; the innermost block is the one holding
    the first dart clockwise after the root.
    """
    sig = maps.as_dict(m)
    r = m.root
    vert = maps.vertex_of(sig)
    v, u = vert[r], vert[r ^ 1]
    edges = []
    for d in sorted(sig):
        if d & 1 or d >> 1 == r >> 1:
            continue
        a, b = vert[d], vert[d ^ 1]
        edges.append((d >> 1, v if a == u else a, v if b == u else b))
    parts = maps.blocks(edges)
    inner = next(b for b in parts if sig[r] >> 1 in b)
    return parts, inner


def parallel_split(m):
    """Type and constituents under the parallel decomposition.

    Returns ``("I",)``, ``("II", pi(m), deg)``, ``("III", inner)`` or
    ``("IV", head, i, tail)``.
    """
    if m.E == 2:
        return ("I",)
    parts, inner = parallel_parts(m)
    sig = maps.as_dict(m)
    r = m.root
    if len(parts) == 1:
        return ("II", pi(m), maps.deg(m))
    if len(inner) == 1 and sig[r] ^ 1 == maps.inverse(sig)[r ^ 1]:
        return ("III", freeze(maps.delete_edge(sig, sig[r]), r))
    inner_darts = {2 * e for e in inner} | {2 * e + 1 for e in inner}
    tail = freeze(restrict(sig, set(sig) - inner_darts), r)
    wrapped = freeze(restrict(sig, inner_darts | {r, r ^ 1}), r)
    i = maps.deg(wrapped)
    return ("IV", pi(wrapped), i, tail)


# ------------------------------------------------------------------ series


def _outer_walk(sig, r):
    return cycle({d: sig[d ^ 1] for d in sig}, r)


def series_delta(m, i):
    """Add a root edge from the ``i``-th outer vertex to the old root head."""
    k = maps.fdeg(m)
    if not 1 <= i <= k:
        raise ValueError(f"parameter {i} outside [1, {k}]")
    sig = maps.as_dict(m)
    r = m.root
    walk = _outer_walk(sig, r)
    a = walk[i] ^ 1
    n = _fresh(sig)
    sig[n + 1] = sig[r ^ 1]
    sig[r ^ 1] = n + 1
    sig[n] = sig[a]
    sig[a] = n
    return freeze(sig, n)


def series_pi(m):
    """Delete the root; re-root at the outer edge entering the old head."""
    sig = maps.as_dict(m)
    r = m.root
    new_root = maps.inverse(sig)[r ^ 1] ^ 1
    return freeze(maps.delete_edge(sig, r), new_root)


def series_oplus(m1, i, m2):
    """Attach ``m2`` by its root vertex: root tail at the ``i``-th outer vertex
    of ``m1``, remaining darts at the head of ``m1``'s root."""
    k = maps.fdeg(m1)
    if not 1 <= i <= k:
        raise ValueError(f"parameter {i} outside [1, {k}]")
    sig = maps.as_dict(m1)
    r1 = m1.root
    walk = _outer_walk(sig, r1)
    a = walk[i] ^ 1
    other = _offset(maps.as_dict(m2), 2 * m1.E)
    r2 = m2.root + 2 * m1.E
    bs = cycle(other, r2)[1:]
    sig.update(other)
    after_a = sig[a]
    sig[a] = r2
    sig[r2] = after_a
    after_head = sig[r1 ^ 1]
    _link(sig, [r1 ^ 1] + bs)
    sig[bs[-1]] = after_head
    return freeze(sig, r2)


def subdivide(m):
    """Insert a vertex in the middle of the root; it becomes the root vertex."""
    sig = maps.as_dict(m)
    r = m.root
    n = _fresh(sig)
    before = maps.inverse(sig)[r]
    sig[before] = n
    sig[n] = sig[r] if sig[r] != r else n
    sig[r] = n + 1
    sig[n + 1] = r
    return freeze(sig, r)


def series_split(m):
    """Type and constituents under the series decomposition (see ``parallel_split``)."""
    if m.E == 2:
        return ("I",)
    sig = maps.as_dict(m)
    r = m.root
    vert = maps.vertex_of(sig)
    parts = maps.blocks(maps.edge_list(sig, skip={r >> 1}))
    if len(parts) == 1:
        return ("II", series_pi(m), maps.fdeg(m))
    x = vert[r]
    first = next(b for b in parts if sig[r] >> 1 in b)
    if len(first) == 1:
        f = sig[r]
        return ("III", freeze(contract(sig, f), r))
    first_darts = {2 * e for e in first} | {2 * e + 1 for e in first}
    first_verts = {vert[d] for d in first_darts}
    rest_verts = {vert[d] for d in sig if d not in first_darts and d >> 1 != r >> 1}
    (c,) = first_verts & rest_verts - {x} or first_verts & rest_verts
    d = sig[r]
    while vert[d ^ 1] != c:
        d = sig[d ^ 1]
    head = freeze(restrict(sig, first_darts), d)
    tail_sig = restrict(sig, set(sig) - first_darts)
    bs = []
    b = sig[d ^ 1]
    while b not in first_darts:
        bs.append(b)
        b = sig[b]
    tail_sig[r] = bs[0]
    tail_sig[bs[-1]] = r
    tail = freeze(tail_sig, r)
    i = maps.fdeg(m) - maps.fdeg(tail)
    return ("IV", head, i, tail)


def next_root(m):
    """Re-root at the next edge clockwise along the outer face."""
    sig = maps.as_dict(m)
    return freeze(sig, sig[m.root ^ 1])


def dual(m):
    """Dual map: vertices are faces, rotation is the inverse face walk.

    The dual root is the dual of the outer edge ending at the root vertex,
    so the dual root vertex is the outer face and the dual outer face is the
    old root vertex.
    """
    sig = maps.as_dict(m)
    inv = maps.inverse(sig)
    star = {d: inv[d] ^ 1 for d in sig}
    return freeze(star, inv[m.root] ^ 1)
