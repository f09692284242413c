"""Dyck words over ``u``/``d`` and the Tamari order on them.

The elementary move rewrites ``V d D1 W`` into ``V D1 d W`` for a non-empty
Dyck factor ``D1``. It raises the path, so ``tamari_leq(a, b)`` holds when
``b`` is reachable from ``a`` by such moves; the bottom element is ``(ud)^n``.
"""

from __future__ import annotations

import threading
from collections import deque
from functools import lru_cache


def is_dyck(w):
    h = 0
    for ch in w:
        if ch == "u":
            h += 1
        elif ch == "d":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def heights(w):
    out = [0]
    for ch in w:
        out.append(out[-1] + (1 if ch == "u" else -1))
    return out


def contacts(w):
    """Number of non-initial points of ``w`` on the x-axis."""
    return sum(1 for h in heights(w)[1:] if h == 0)


def first_return(w):
    """Split ``w = u A d B`` at the first return to the axis."""
    h = 0
    for i, ch in enumerate(w):
        h += 1 if ch == "u" else -1
        if h == 0:
            return w[1:i], w[i + 1:]
    raise ValueError(f"{w!r} is not a Dyck word")


def factors(w):
    """Primitive factors ``u A d`` of ``w`` from left to right."""
    out = []
    while w:
        a, w = first_return(w)
        out.append("u" + a + "d")
    return out


def dyck_type(w):
    """N/E word: letter k is E iff the k-th up step is followed by an up step."""
    ups = [i for i, ch in enumerate(w) if ch == "u"]
    return "".join("E" if ups[k + 1] == ups[k] + 1 else "N" for k in range(len(ups) - 1))


@lru_cache(maxsize=None)
def dyck_words(n):
    """All Dyck words of size ``n`` in lexicographic order (``d`` < ``u``)."""
    out = []

    def grow(prefix, ups, downs):
        if downs == n:
            out.append(prefix)
            return
        if downs < ups:
            grow(prefix + "d", ups, downs + 1)
        if ups < n:
            grow(prefix + "u", ups + 1, downs)

    grow("", 0, 0)
    return tuple(out)


def tamari_covers(w):
    """Words one move above ``w`` (swap a ``d`` past the Dyck factor after it)."""
    out = set()
    for i, ch in enumerate(w):
        if ch != "d":
            continue
        h = 0
        for j in range(i + 1, len(w)):
            h += 1 if w[j] == "u" else -1
            if h < 0:
                break
            if h == 0:
                out.add(w[:i] + w[i + 1:j + 1] + "d" + w[j + 1:])
    return out


_TABLES = {}
_TABLE_LOCK = threading.Lock()


def _table(n):
    table = _TABLES.get(n)
    if table is not None:
        return table
    with _TABLE_LOCK:
        if n in _TABLES:
            return _TABLES[n]
        words = dyck_words(n)
        index = {w: k for k, w in enumerate(words)}
        above = {}

        def up(w):
            mask = above.get(w)
            if mask is None:
                mask = 1 << index[w]
                for c in tamari_covers(w):
                    mask |= up(c)
                above[w] = mask
            return mask

        for w in words:
            up(w)
        _TABLES[n] = (index, above)
        return _TABLES[n]


def tamari_leq(a, b):
    """True iff ``b`` is reachable from ``a`` by repeated moves."""
    if len(a) != len(b):
        raise ValueError("Tamari comparison of words of different sizes")
    if a == b:
        return True
    index, above = _table(len(a) // 2)
    return bool(above[a] >> index[b] & 1)


def tamari_leq_naive(a, b):
    """Breadth-first search upwards from ``a``."""
    if len(a) != len(b):
        raise ValueError("Tamari comparison of words of different sizes")
    seen = {a}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        if w == b:
            return True
        for c in tamari_covers(w):
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return False
