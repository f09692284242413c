"""Independent reference implementations used only by the tests.

None of these touch the recursive decompositions or the package's own
brute-force generators.
"""

from itertools import permutations
from math import factorial


def type_word(w):
    """Type word from overlapping ``uu`` factors of the up-step subsequence."""
    letters = []
    k = 0
    while k < len(w):
        if w[k] == "u":
            nxt = w.find("u", k + 1)
            if nxt == -1:
                break
            letters.append("E" if nxt == k + 1 else "N")
        k += 1
    return "".join(letters)


def excursions(w):
    """Half-length of the excursion started by each up step."""
    out = []
    for k, ch in enumerate(w):
        if ch != "u":
            continue
        h = 0
        for j in range(k, len(w)):
            h += 1 if w[j] == "u" else -1
            if h == 0:
                out.append((j - k + 1) // 2)
                break
    return out


def tamari_below(a, b):
    """Componentwise excursion comparison, a classical Tamari criterion."""
    return len(a) == len(b) and all(x <= y for x, y in zip(excursions(a), excursions(b)))


def _orbits(perm):
    seen, out = set(), []
    for d in range(len(perm)):
        if d not in seen:
            orb, x = [], d
            while x not in seen:
                seen.add(x)
                orb.append(x)
                x = perm[x]
            out.append(orb)
    return out


def nonseparable_planar(sigma):
    """Planar, loopless, 2-connected (multi-edges allowed), at least two edges."""
    n = len(sigma)
    E = n // 2
    vert = {}
    for k, orb in enumerate(_orbits(sigma)):
        for d in orb:
            vert[d] = k
    phi = [sigma[d ^ 1] for d in range(n)]
    V, F = len(_orbits(sigma)), len(_orbits(phi))
    edges = [(vert[2 * e], vert[2 * e + 1]) for e in range(E)]
    if E < 2 or any(a == b for a, b in edges):
        return False
    if not _connected(range(V), edges) or V - E + F != 2:
        return False
    if V <= 2:
        return True
    return all(_connected([x for x in range(V) if x != v], [(a, b) for a, b in edges if v not in (a, b)])
               for v in range(V))


def _connected(nodes, edges):
    nodes = list(nodes)
    if not nodes:
        return True
    adj = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {nodes[0]}, [nodes[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(nodes)


def count_nsp_maps(n):
    """Rooted NSP-maps with ``n + 1`` edges, by orbit counting over all rotations.

    Rooted maps have trivial automorphism groups, so each one is hit
    ``2^E E! / 2E`` times by (rotation, root) pairs on a fixed edge pairing.
    """
    E = n + 1
    hits = sum(nonseparable_planar(p) for p in permutations(range(2 * E)))
    return hits * 2 * E // (2 ** E * factorial(E))


def catalan_like(n):
    return 2 * factorial(3 * n) // (factorial(2 * n + 1) * factorial(n + 1))
