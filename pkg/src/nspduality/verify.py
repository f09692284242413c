"""Named verification suites over full enumerations.

Each law checks every object up to a size bound and keeps the first
counterexample. Reports are deterministic apart from elapsed times.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import bijections as bij
from . import dualities as du
from . import dyck, maps
from .decomp import SCHEMES, Base, Graft, Join, Wrap, compose, decompose, size_stat, step_to_json
from .enumeration import ORACLE_CEILING, brute_force, closed_form, generate
from .model import CLASSES, decode, encode, validate
from .stats import stats_beta, stats_deco, stats_interval, stats_map

MAP_CEILING = 6
SUITES = ("codecs", "decomp", "diagram", "involutions", "fixed-points", "stats-transfer", "oracle")


@dataclass
class LawResult:
    suite: str
    name: str
    status: str
    sizes: list
    checked: int
    counterexample: dict = None
    note: str = None


@dataclass
class VerifyReport:
    suite: str
    max_size: int
    seed: int
    laws: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self):
        return all(law.status != "fail" for law in self.laws)

    def to_json(self):
        out = asdict(self)
        out["ok"] = self.ok
        return json.dumps(out, separators=(",", ":"))

    def lines(self):
        out = []
        for law in self.laws:
            span = f"n={law.sizes[0]}..{law.sizes[-1]}" if law.sizes else "n=-"
            out.append(f"{law.status.upper():9} {law.suite:15} {law.name} ({span}, {law.checked} checked)")
            if law.counterexample:
                out.append(f"          witness: {json.dumps(law.counterexample)}")
            if law.note:
                out.append(f"          note: {law.note}")
        out.append(f"{'PASS' if self.ok else 'FAIL'} suite={self.suite} max-size={self.max_size} "
                   f"laws={len(self.laws)} elapsed={self.elapsed:.2f}s")
        return out


class _Check:
    """Accumulates checks for one law and remembers the first failure."""

    def __init__(self):
        self.checked = 0
        self.witness = None
        self.sizes = set()

    def __call__(self, n, ok, **witness):
        self.checked += 1
        self.sizes.add(n)
        if not ok and self.witness is None:
            self.witness = {k: _show(v) for k, v in witness.items()}
            self.witness["n"] = n
        return ok


def _show(v):
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)) and not hasattr(v, "_fields"):
        return [_show(x) for x in v]
    if isinstance(v, (Wrap, Graft, Join)) or type(v).__name__ == "Base":
        return step_to_json(v)
    try:
        return encode(v)
    except TypeError:
        return repr(v)


def _sizes(max_n, cls):
    top = min(max_n, MAP_CEILING) if cls == "map" else max_n
    return range(1, top + 1)


LAWS = {}


def law(suite, name):
    def register(fn):
        LAWS[name] = (suite, fn)
        return fn
    return register


# -------------------------------------------------------------------- codecs


@law("codecs", "decode(encode(x)) = x")
def _codec_roundtrip(max_n, seed, check):
    for cls in CLASSES:
        for n in _sizes(max_n, cls):
            for x in generate(cls, n):
                check(n, decode(cls, encode(x)) == x, object=x)


@law("codecs", "Euler formula V - E + F = 2")
def _euler(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            check(n, maps.euler(maps.as_dict(m)) == 2, map=m)


@law("codecs", "canonicalForm idempotent and relabelling-invariant")
def _canonical(max_n, seed, check):
    rng = random.Random(seed)
    for n in range(1, min(max_n, 5) + 1):
        ms = generate("map", n)
        for trial in range(100):
            m = ms[rng.randrange(len(ms))]
            twisted = maps.relabel(m, rng)
            c = maps.canonical_form(twisted)
            check(n, c == m and maps.canonical_form(c) == c, map=m, relabelled=twisted)


@law("codecs", "tamariLeq agrees with naive closure")
def _tamari(max_n, seed, check):
    for n in range(1, min(max_n, 6) + 1):
        words = dyck.dyck_words(n)
        for a in words:
            for b in words:
                check(n, dyck.tamari_leq(a, b) == dyck.tamari_leq_naive(a, b), lower=a, upper=b)


@law("codecs", "interval paths share their type word")
def _types(max_n, seed, check):
    for n in _sizes(max_n, "interval"):
        for iv in generate("interval", n):
            check(n, dyck.dyck_type(iv.lower) == dyck.dyck_type(iv.upper), interval=iv)


# -------------------------------------------------------------------- decomp


def _schemes(cls):
    return SCHEMES if cls == "map" else ("parallel",)


@law("decomp", "compose(decompose(x)) = x")
def _compose_decompose(max_n, seed, check):
    for cls in CLASSES:
        for scheme in _schemes(cls):
            for n in _sizes(max_n, cls):
                for x in generate(cls, n):
                    step = decompose(x, scheme)
                    check(n, compose(step, cls, scheme) == x, object=x, scheme=scheme, step=step)


def _all_steps(cls, n, scheme):
    if n == 1:
        yield Base()
        return
    for x in generate(cls, n - 1, scheme):
        yield Graft(x)
        for i in range(1, size_stat(x, scheme) + 1):
            yield Wrap(x, i)
    for a in range(1, n - 1):
        for head in generate(cls, a, scheme):
            for tail in generate(cls, n - 1 - a, scheme):
                for i in range(1, size_stat(head, scheme) + 1):
                    yield Join(head, i, tail)


@law("decomp", "decompose(compose(s)) = s, composed objects valid")
def _decompose_compose(max_n, seed, check):
    for cls in CLASSES:
        for scheme in _schemes(cls):
            for n in _sizes(max_n, cls):
                for step in _all_steps(cls, n, scheme):
                    x = compose(step, cls, scheme)
                    check(n, not validate(x) and decompose(x, scheme) == step,
                          step=step, scheme=scheme, composed=x)


@law("decomp", "size statistic laws for types II, III, IV")
def _stat_laws(max_n, seed, check):
    for cls in CLASSES:
        for scheme in _schemes(cls):
            for n in _sizes(max_n, cls):
                for x in generate(cls, n):
                    step = decompose(x, scheme)
                    k = size_stat(x, scheme)
                    if isinstance(step, Wrap):
                        ok = k == step.i
                    elif isinstance(step, Graft):
                        ok = k == size_stat(step.inner, scheme) + 1
                    elif isinstance(step, Join):
                        ok = k == step.i + size_stat(step.tail, scheme)
                    else:
                        ok = k == 1
                    check(n, ok, object=x, scheme=scheme)


# ------------------------------------------------------------------- diagram


@law("diagram", "T is canonical: phi_M = phi_T . T")
def _t_canonical(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            t = bij.map_to_deco(m)
            check(n, not validate(t) and bij.transport(m, "beta") == bij.transport(t, "beta"), map=m, tree=t)


@law("diagram", "I is canonical: phi_T = phi_I . I")
def _i_canonical(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            iv = bij.deco_to_interval(t)
            check(n, not validate(iv) and bij.transport(t, "beta") == bij.transport(iv, "beta"),
                  tree=t, interval=iv)


@law("diagram", "varphi_T equals phi_T and keeps the shape")
def _varphi(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            b = bij.deco_to_beta_direct(t)
            check(n, b == bij.transport(t, "beta") and _shape(b) == _shape(t), tree=t, beta=b)


def _shape(t):
    if isinstance(t, int) or not t.children:
        return ()
    return tuple(_shape(c) for c in t.children)


@law("diagram", "free leaves end Dyck prefixes of P; fl = cont")
def _free_leaf_contact(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            p = bij.deco_to_interval(t).lower
            ends = _leaf_ends(t)
            free = [end for end, (_, label) in zip(ends, bij._leaf_paths(t)) if label == -1]
            ok = all(dyck.is_dyck(p[:end]) for end in free)
            ok = ok and dyck.contacts(p) == stats_deco(t).fl
            check(n, ok, tree=t, lower=p)


def _leaf_ends(t):
    """Position in the lower path just after each leaf's run of down steps."""
    counts = iter(bij.certificates(t).counts)
    ends = []
    pos = 0

    def walk(node):
        nonlocal pos
        for c in node.children:
            pos += 1
            if isinstance(c, int):
                pos += next(counts) + 1
                ends.append(pos)
            else:
                walk(c)

    walk(t)
    return ends


@law("diagram", "T carries deg to fl")
def _deg_fl(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            check(n, maps.deg(m) == stats_deco(bij.map_to_deco(m)).fl, map=m)


@law("diagram", "transports are bijective and size-preserving")
def _bijective(max_n, seed, check):
    for src in CLASSES:
        for dst in CLASSES:
            if src == dst:
                continue
            for n in _sizes(max_n, "map" if "map" in (src, dst) else src):
                images = {bij.transport(x, dst) for x in generate(src, n)}
                check(n, images == set(generate(dst, n)), source=src, target=dst)


@law("diagram", "T . dual = h_T . T")
def _dual_ht(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            lhs = bij.map_to_deco(du.dual(m))
            rhs = du.h_deco(bij.map_to_deco(m))
            check(n, lhs == rhs, map=m, lhs=lhs, rhs=rhs)


@law("diagram", "varphi_T . h_T = h . varphi_T")
def _ht_h(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            lhs = bij.deco_to_beta_direct(du.h_deco(t))
            rhs = du.h_beta(bij.deco_to_beta_direct(t))
            check(n, lhs == rhs, tree=t, lhs=lhs, rhs=rhs)


@law("diagram", "mir . I = I . h_T")
def _mir_ht(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            lhs = du.mir_interval(bij.deco_to_interval(t))
            rhs = bij.deco_to_interval(du.h_deco(t))
            check(n, lhs == rhs, tree=t, lhs=lhs, rhs=rhs)


@law("diagram", "phi_S = phi_M . dual . NR")
def _series_parallel(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            lhs = bij.transport(m, "beta", "series")
            rhs = bij.transport(du.dual(du.next_root(m)), "beta")
            check(n, lhs == rhs, map=m, lhs=lhs, rhs=rhs)


# --------------------------------------------------------------- involutions


@law("involutions", "dual is an involution on NSP-maps")
def _dual_inv(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            d = du.dual(m)
            check(n, not validate(d) and d.E == m.E and du.dual(d) == m, map=m, dual=d)


@law("involutions", "fdeg(M) = deg(dual(M))")
def _deg_fdeg(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            check(n, maps.fdeg(m) == maps.deg(du.dual(m)), map=m)


@law("involutions", "NR keeps fdeg and NR^(fdeg+1) = id")
def _nr(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            k = maps.fdeg(m)
            x = m
            ok = True
            for _ in range(k + 1):
                x = du.next_root(x)
                ok = ok and maps.fdeg(x) == k
            check(n, ok and x == m, map=m)


@law("involutions", "h is an involution with root(B) = rpath(h(B))")
def _h_inv(max_n, seed, check):
    for n in _sizes(max_n, "beta"):
        for b in generate("beta", n):
            hb = du.h_beta(b)
            check(n, not validate(hb) and du.h_beta(hb) == b and b.label == du.rpath(hb), tree=b, image=hb)


@law("involutions", "h_T is an involution")
def _ht_inv(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            ht = du.h_deco(t)
            check(n, not validate(ht) and du.h_deco(ht) == t, tree=t, image=ht)


@law("involutions", "mir is an involution on synchronized intervals")
def _mir_inv(max_n, seed, check):
    for n in _sizes(max_n, "interval"):
        for iv in generate("interval", n):
            m = du.mir_interval(iv)
            check(n, not validate(m) and du.mir_interval(m) == iv, interval=iv, image=m)


@law("involutions", "mir reverses the Tamari order")
def _mir_order(max_n, seed, check):
    for n in range(1, min(max_n, 5) + 1):
        words = dyck.dyck_words(n)
        for a in words:
            for b in words:
                if dyck.tamari_leq(a, b):
                    check(n, dyck.tamari_leq(du.mir_dyck(b), du.mir_dyck(a)), lower=a, upper=b)


@law("involutions", "mir preserves type equality of paths")
def _mir_types(max_n, seed, check):
    for n in _sizes(max_n, "interval"):
        words = dyck.dyck_words(n)
        by_type = {}
        for w in words:
            by_type.setdefault(dyck.dyck_type(w), []).append(w)
        for group in by_type.values():
            images = {dyck.dyck_type(du.mir_dyck(w)) for w in group}
            check(n, len(images) == 1, paths=group)


@law("involutions", "mir(P) ends with cont(P) down steps")
def _mir_comp(max_n, seed, check):
    for n in _sizes(max_n, "interval"):
        for w in dyck.dyck_words(n):
            check(n, du.trailing_downs(du.mir_dyck(w)) >= dyck.contacts(w), path=w, image=du.mir_dyck(w))


# -------------------------------------------------------------- fixed points


def fixed_point_row(n):
    fix_h = sum(du.h_beta(b) == b for b in generate("beta", n))
    self_dual = sum(du.dual(m) == m for m in generate("map", n))
    fix_mir = sum(du.mir_interval(iv) == iv for iv in generate("interval", n))
    return fix_h, self_dual, fix_mir


@law("fixed-points", "#fix(h) = #self-dual = #fix(mir)")
def _fixed(max_n, seed, check):
    expected = {1: (1, 1, 1), 2: (0, 0, 0)}
    for n in _sizes(max_n, "map"):
        row = fixed_point_row(n)
        ok = len(set(row)) == 1 and expected.get(n, row) == row
        check(n, ok, counts=list(row))


# ------------------------------------------------------------ stats transfer


def _triples(max_n):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            t = bij.map_to_deco(m)
            yield n, m, t, bij.deco_to_interval(t), bij.deco_to_beta_direct(t)


COLUMNS = {
    "deg / fl / cont": ("deg", "fl", "cont", 0, 0),
    "face / 1+leaf / 1+peak": ("face", "leaf", "peak", 1, 1),
    "vertex / 1+int / 2+dblu": ("vertex", "int", "dblu", 1, 2),
    "pcomp / sub / contStar": ("pcomp", "sub", "contStar", 0, 0),
    "fdeg / rpath / desc": ("fdeg", "rpath", "desc", 0, 0),
    "ejoin / stem / level": ("ejoin", "stem", "level", 0, 0),
    "ecut / rfl / teeth": ("ecut", "rfl", "teeth", 0, 0),
}


def _column_law(label, columns):
    ms, ts, is_, dt, di = columns

    def run(max_n, seed, check):
        for n, m, t, iv, _ in _triples(max_n):
            a = getattr(stats_map(m), ms)
            b = getattr(stats_deco(t), ts) + dt
            c = getattr(stats_interval(iv), is_) + di
            check(n, a == b == c, map=m, tree=t, interval=iv, values=[a, b, c])

    LAWS[f"T and I transfer {label}"] = ("stats-transfer", run)


for _label, _columns in COLUMNS.items():
    _column_law(_label, _columns)


@law("stats-transfer", "phi_T carries fl, 1+dsub, rfl to root, rsub, gamma")
def _phi_t_stats(max_n, seed, check):
    for n in _sizes(max_n, "deco"):
        for t in generate("deco", n):
            s, b = stats_deco(t), stats_beta(bij.deco_to_beta_direct(t))
            check(n, (s.fl, 1 + s.dsub, s.rfl) == (b.root, b.rsub, b.gamma), tree=t)


@law("stats-transfer", "dsub(T(dual M)) + 1 = pcomp(M)")
def _stat_dsub(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            check(n, stats_deco(bij.map_to_deco(du.dual(m))).dsub + 1 == stats_map(m).pcomp, map=m)


@law("stats-transfer", "dual swaps (deg, fdeg), (face, vertex), (ejoin, ecut)")
def _stat_dual(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        for m in generate("map", n):
            a, d = stats_map(m), stats_map(du.dual(m))
            ok = (d.deg, d.fdeg, d.face, d.vertex, d.ejoin, d.ecut) == \
                 (a.fdeg, a.deg, a.vertex, a.face, a.ecut, a.ejoin)
            check(n, ok, map=m)


@law("stats-transfer", "h swaps (leaf, int), (root, rpath), (gamma, stem), (sub, rsub)")
def _stat_h(max_n, seed, check):
    for n in _sizes(max_n, "beta"):
        for b in generate("beta", n):
            a, h = stats_beta(b), stats_beta(du.h_beta(b))
            ok = (h.leaf, h.int, h.root, h.rpath, h.gamma, h.stem, h.sub, h.rsub) == \
                 (a.int, a.leaf, a.rpath, a.root, a.stem, a.gamma, a.rsub, a.sub)
            check(n, ok, tree=b)


# -------------------------------------------------------------------- oracle


@law("oracle", "generate = bruteForce within oracle ceilings")
def _oracle(max_n, seed, check):
    for cls in CLASSES:
        for n in range(1, min(max_n, ORACLE_CEILING[cls]) + 1):
            fast, slow = generate(cls, n), brute_force(cls, n)
            check(n, fast == slow, cls=cls, only_generated=sorted(set(map(encode, fast)) - set(map(encode, slow)))[:3],
                  only_oracle=sorted(set(map(encode, slow)) - set(map(encode, fast)))[:3])


@law("oracle", "series and parallel generators agree on maps")
def _series_gen(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        check(n, generate("map", n, "series") == generate("map", n, "parallel"))


@law("oracle", "class sizes agree with the closed form")
def _equinumerous(max_n, seed, check):
    for n in range(1, max_n + 1):
        sizes = [len(generate(cls, n)) for cls in CLASSES if cls != "map" or n <= MAP_CEILING]
        check(n, set(sizes) == {closed_form(n)}, counts=sizes, expected=closed_form(n))


@law("oracle", "generated maps are valid with no canonical collisions")
def _map_collisions(max_n, seed, check):
    for n in _sizes(max_n, "map"):
        ms = generate("map", n)
        ok = all(not validate(m) and maps.canonical_form(m) == m for m in ms)
        check(n, ok and len(set(ms)) == len(ms))


# ------------------------------------------------------------------- running

VERTEX_LAW = "T and I transfer vertex / 1+int / 2+dblu"


def dblu_deviation(tree="(* (* -1))"):
    """The uncorrected vertex law vertex = 1 + dblu evaluated on the triple through ``tree``."""
    t = decode("deco", tree)
    m, iv = bij.deco_to_map(t), bij.deco_to_interval(t)
    vertex, dblu = stats_map(m).vertex, stats_interval(iv).dblu
    return {"map": encode(m), "tree": tree, "interval": encode(iv), "vertex": vertex,
            "dblu": dblu, "holds": vertex == 1 + dblu}


def run_law(name, max_n, seed):
    suite, fn = LAWS[name]
    check = _Check()
    fn(max_n, seed, check)
    status = "pass" if check.witness is None else "fail"
    note = None
    if name == VERTEX_LAW:
        w = dblu_deviation()
        note = ("documented deviation: the uncorrected form vertex = 1 + dblu is off by one "
                "since peak + dblu = n while face + vertex = n + 3; witness " + json.dumps(w))
    return LawResult(suite, name, status, sorted(check.sizes), check.checked, check.witness, note)


def _job(args):
    return run_law(*args)


def laws_in(suite):
    if suite == "all":
        return list(LAWS)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [name for name, (s, _) in LAWS.items() if s == suite]


def run(suite, max_n, seed=0, jobs=1):
    start = time.perf_counter()
    names = laws_in(suite)
    args = [(name, max_n, seed) for name in names]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_job, args))
    else:
        results = [_job(a) for a in args]
    return VerifyReport(suite, max_n, seed, results, time.perf_counter() - start)
