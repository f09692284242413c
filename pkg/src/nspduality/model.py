"""Object classes, text codec and validity predicates.

Four classes of objects are counted by the same numbers:

* ``BetaTree``     -- plane tree, positive labels on every node
* ``DecoTree``     -- plane tree, integer labels >= -1 on leaves only
* ``RootedMap``    -- rooted non-separable planar map stored as darts
* ``SyncInterval`` -- pair of Dyck words ``[P, Q]``, ``P <= Q`` in Tamari order,
  same type word

Size conventions: trees count edges, intervals count up steps, and a map of
size ``n`` has ``n + 1`` edges.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import NamedTuple, Union

CLASSES = ("beta", "deco", "map", "interval")


class ParseError(ValueError):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class ValidationError(ValueError):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class BetaTree(NamedTuple):
    label: int
    children: tuple = ()

    @property
    def is_leaf(self):
        return not self.children


LEAF = BetaTree(1)


class DecoTree(NamedTuple):
    """Internal node of a decorated tree; leaves are plain ``int`` labels."""

    children: tuple


DecoChild = Union[int, DecoTree]


class SyncInterval(NamedTuple):
    lower: str
    upper: str


@dataclass(frozen=True)
class RootedMap:
    """Rooted planar map on darts ``0 .. 2E-1``.

    The edge involution is implicit: dart ``d`` is paired with ``d ^ 1``.
    ``sigma[d]`` is the next dart clockwise around the vertex where ``d``
    starts. The outer face lies on the left of ``root``.
    """

    E: int
    sigma: tuple
    root: int = 0

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))


def class_of(x):
    if isinstance(x, BetaTree):
        return "beta"
    if isinstance(x, DecoTree):
        return "deco"
    if isinstance(x, RootedMap):
        return "map"
    if isinstance(x, SyncInterval):
        return "interval"
    raise TypeError(f"not a class object: {x!r}")


def size(x):
    cls = class_of(x)
    if cls == "map":
        return x.E - 1
    if cls == "interval":
        return len(x.lower) // 2
    return tree_edges(x)


def tree_edges(t):
    if isinstance(t, int):
        return 0
    kids = t.children
    return sum(1 + tree_edges(c) for c in kids)


# ---------------------------------------------------------------- encoding


def encode(x):
    cls = class_of(x)
    if cls == "beta":
        return _encode_beta(x)
    if cls == "deco":
        return _encode_deco(x)
    if cls == "interval":
        return f"[{x.lower},{x.upper}]"
    return json.dumps({"E": x.E, "sigma": list(x.sigma), "root": x.root},
                      separators=(",", ":"))


def _encode_beta(b):
    if b.is_leaf:
        return str(b.label)
    return "(" + " ".join([str(b.label)] + [_encode_beta(c) for c in b.children]) + ")"


def _encode_deco(t):
    if isinstance(t, int):
        return str(t)
    return "(* " + " ".join(_encode_deco(c) for c in t.children) + ")"


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\*)|(-?\d+))")


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        out.append((m.group(m.lastindex), start))
        pos = m.end()
    return out


def _parse_tree(text, starred):
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty input", text, 0)
    idx = 0

    def node():
        nonlocal idx
        if idx >= len(toks):
            raise ParseError("unexpected end of input", text, len(text))
        tok, pos = toks[idx]
        idx += 1
        if tok == "(":
            if starred:
                if idx >= len(toks) or toks[idx][0] != "*":
                    raise ParseError("expected '*'", text, toks[idx][1] if idx < len(toks) else len(text))
                idx += 1
                label = None
            else:
                if idx >= len(toks) or not _is_int(toks[idx][0]):
                    raise ParseError("expected node label", text, toks[idx][1] if idx < len(toks) else len(text))
                label = int(toks[idx][0])
                idx += 1
            kids = []
            while True:
                if idx >= len(toks):
                    raise ParseError("unbalanced parenthesis", text, len(text))
                if toks[idx][0] == ")":
                    idx += 1
                    break
                kids.append(node())
            if not kids:
                raise ParseError("internal node without children", text, pos)
            return DecoTree(tuple(kids)) if starred else BetaTree(label, tuple(kids))
        if _is_int(tok):
            return int(tok) if starred else BetaTree(int(tok))
        raise ParseError(f"unexpected token {tok!r}", text, pos)

    tree = node()
    if idx != len(toks):
        raise ParseError("trailing input", text, toks[idx][1])
    return tree


def _is_int(tok):
    return tok.lstrip("-").isdigit()


_DYCK = re.compile(r"\s*\[\s*([ud]+)\s*,\s*([ud]+)\s*\]\s*$")
_BARE_KEY = re.compile(r"([{,]\s*)([A-Za-z_]\w*)(\s*:)")


def _parse_map(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        try:
            obj = json.loads(_BARE_KEY.sub(r'\1"\2"\3', text))
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, text, exc.pos) from None
    if not isinstance(obj, dict) or not {"E", "sigma"} <= obj.keys():
        raise ParseError("expected an object with keys E, sigma, root", text, 0)
    try:
        return RootedMap(int(obj["E"]), tuple(int(s) for s in obj["sigma"]), int(obj.get("root", 0)))
    except (TypeError, ValueError):
        raise ParseError("non-integer field", text, 0) from None


def decode(cls, text, check=True):
    """Parse ``text`` as an object of class ``cls`` and validate it."""
    if cls == "beta":
        x = _parse_tree(text, starred=False)
    elif cls == "deco":
        x = _parse_tree(text, starred=True)
        if isinstance(x, int):
            raise ValidationError(["deco tree must have at least one edge"])
    elif cls == "interval":
        m = _DYCK.match(text)
        if m is None:
            bad = next((i for i, ch in enumerate(text) if ch not in "[]ud, \t"), len(text))
            raise ParseError("malformed interval", text, bad)
        x = SyncInterval(m.group(1), m.group(2))
    elif cls == "map":
        x = _parse_map(text)
    else:
        raise ValueError(f"unknown class {cls!r}")
    if check:
        problems = validate(x)
        if problems:
            raise ValidationError(problems)
    return x


# --------------------------------------------------------------- validation


def validate(x):
    """Return the list of violated invariants; empty means valid."""
    cls = class_of(x)
    if cls == "beta":
        return _validate_beta(x)
    if cls == "deco":
        return _validate_deco(x)
    if cls == "interval":
        return _validate_interval(x)
    from . import maps
    return maps.map_violations(x)


def _validate_beta(b):
    out = []
    if b.is_leaf:
        return ["beta tree must have at least one edge"]

    def walk(node, path, is_root):
        if node.is_leaf:
            if node.label != 1:
                out.append(f"beta leaf at {path} has label {node.label}, expected 1")
            return
        total = sum(c.label for c in node.children)
        if is_root and node.label != total:
            out.append(f"beta root label {node.label} differs from children sum {total}")
        elif not is_root and not 1 <= node.label <= total:
            out.append(f"beta node at {path} label {node.label} outside [1, {total}]")
        for k, c in enumerate(node.children):
            walk(c, path + (k,), False)

    walk(b, (), True)
    return out


def _validate_deco(t):
    out = []

    def leaves(node):
        if isinstance(node, int):
            yield node
        else:
            for c in node.children:
                yield from leaves(c)

    def walk(node, depth, path):
        for k, c in enumerate(node.children):
            where = path + (k,)
            if isinstance(c, int):
                if c < -1:
                    out.append(f"deco leaf at {where} has label {c} < -1")
                if c >= depth:
                    out.append(f"deco condition 1 at leaf {where}: label {c} not below parent depth {depth}")
            else:
                walk(c, depth + 1, where)
        if depth > 0 and not any(l <= depth - 2 for l in leaves(node)):
            out.append(f"deco condition 2 at node {path}: no leaf labeled <= {depth - 2}")
        for k, c in enumerate(node.children):
            lowest = None
            for l in leaves(c):
                if l == depth and lowest is not None and lowest < depth:
                    out.append(f"deco condition 3 at node {path}, subtree {k}: "
                               f"leaf labeled {depth} preceded by label {lowest}")
                    break
                lowest = l if lowest is None else min(lowest, l)

    if not isinstance(t, DecoTree) or not t.children:
        return ["deco tree must have at least one edge"]
    walk(t, 0, ())
    return out


def _validate_interval(iv):
    from . import dyck
    out = []
    for name, w in (("lower", iv.lower), ("upper", iv.upper)):
        if not dyck.is_dyck(w) or not w:
            out.append(f"{name} path {w!r} is not a Dyck word")
    if out:
        return out
    if len(iv.lower) != len(iv.upper):
        return ["lower and upper paths differ in size"]
    if not dyck.tamari_leq(iv.lower, iv.upper):
        out.append("lower path is not below upper path in Tamari order")
    if dyck.dyck_type(iv.lower) != dyck.dyck_type(iv.upper):
        out.append("lower and upper paths have different types")
    return out
