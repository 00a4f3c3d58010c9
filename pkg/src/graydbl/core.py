"""Finite double categories, validation and the fixture builders."""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import StructuralError

KINDS = ("object", "hcell", "vcell", "square")

HC1 = "horizontal 1-cell composition"
VC1 = "vertical 1-cell composition"
HC2 = "horizontal square composition"
VC2 = "vertical square composition"


@dataclass(frozen=True)
class CellRef:
    kind: str
    index: int


@dataclass(frozen=True)
class Violation:
    axiom: str
    cells: tuple

    def __str__(self):
        return f"{self.axiom}: " + ", ".join(map(str, self.cells))


@dataclass
class Report:
    violations: list = field(default_factory=list)
    limit: int = 50

    @property
    def ok(self):
        return not self.violations

    def add(self, axiom, *cells):
        if len(self.violations) < self.limit:
            self.violations.append(Violation(axiom, tuple(cells)))

    def axioms(self):
        return sorted({v.axiom for v in self.violations})

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(map(str, self.violations))


class Index:
    """Lookup tables over an enumerated double category."""

    def __init__(self, D):
        self.D = D
        self.objects = list(D.objects())
        self.hcells = list(D.hcells())
        self.vcells = list(D.vcells())
        self.squares = list(D.squares())
        self.h_between = defaultdict(list)
        self.h_from = defaultdict(list)
        self.v_between = defaultdict(list)
        self.v_from = defaultdict(list)
        self.sq_bnd = defaultdict(list)
        self.sq_left = defaultdict(list)
        self.sq_top = defaultdict(list)
        for h in self.hcells:
            s, t = D.hsrc(h), D.htgt(h)
            self.h_between[s, t].append(h)
            self.h_from[s].append(h)
        for v in self.vcells:
            s, t = D.vsrc(v), D.vtgt(v)
            self.v_between[s, t].append(v)
            self.v_from[s].append(v)
        for q in self.squares:
            self.sq_bnd[D.boundary(q)].append(q)
            self.sq_left[D.left(q)].append(q)
            self.sq_top[D.top(q)].append(q)
        self._vinv = {}
        self._hinv = {}

    def hpairs(self):
        for h in self.hcells:
            for k in self.h_from[self.D.htgt(h)]:
                yield h, k

    def vpairs(self):
        for f in self.vcells:
            for g in self.v_from[self.D.vtgt(f)]:
                yield f, g

    def hsq_pairs(self):
        for s in self.squares:
            for t in self.sq_left[self.D.right(s)]:
                yield s, t

    def vsq_pairs(self):
        for s in self.squares:
            for t in self.sq_top[self.D.bottom(s)]:
                yield s, t

    def vinv(self, s):
        """Vertical inverse of s, or None."""
        if s not in self._vinv:
            D = self.D
            top, bot, l, r = D.boundary(s)
            res = None
            if l == D.vId(D.vsrc(l)) and r == D.vId(D.vsrc(r)):
                for t in self.sq_bnd[bot, top, l, r]:
                    if D.vComp2(s, t) == D.sqVId(top) and D.vComp2(t, s) == D.sqVId(bot):
                        res = t
                        break
            self._vinv[s] = res
        return self._vinv[s]

    def hinv(self, s):
        """Horizontal inverse of s, or None."""
        if s not in self._hinv:
            D = self.D
            top, bot, l, r = D.boundary(s)
            res = None
            if top == D.hId(D.hsrc(top)) and bot == D.hId(D.hsrc(bot)):
                for t in self.sq_bnd[top, bot, r, l]:
                    if D.hComp2(s, t) == D.sqHId(l) and D.hComp2(t, s) == D.sqHId(r):
                        res = t
                        break
            self._hinv[s] = res
        return self._hinv[s]

    def vinvertible(self, top, bot, l, r):
        return [s for s in self.sq_bnd[top, bot, l, r] if self.vinv(s) is not None]

    def hinvertible(self, top, bot, l, r):
        return [s for s in self.sq_bnd[top, bot, l, r] if self.hinv(s) is not None]

    def counts(self):
        return dict(objects=len(self.objects), hcells=len(self.hcells),
                    vcells=len(self.vcells), squares=len(self.squares))


class DoubleCategory:
    """Protocol shared by table-backed and lazily computed double categories.

    Cells are hashable values.  hComp1/vComp1/hComp2/vComp2 take their
    arguments in diagrammatic order (first, then second).
    """

    name = "D"

    def objects(self):
        raise NotImplementedError

    def hcells(self):
        raise NotImplementedError

    def vcells(self):
        raise NotImplementedError

    def squares(self):
        raise NotImplementedError

    def boundary(self, s):
        return (self.top(s), self.bottom(s), self.left(s), self.right(s))

    def cells(self, kind):
        return {"object": self.objects, "hcell": self.hcells,
                "vcell": self.vcells, "square": self.squares}[kind]()

    def index(self):
        idx = self.__dict__.get("_index")
        if idx is None:
            idx = self.__dict__["_index"] = Index(self)
        return idx

    def counts(self):
        return self.index().counts()

    def describe(self, kind, cell):
        return f"{kind} {cell!r}"

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class FiniteDoubleCategory(DoubleCategory):
    """A double category given by complete tables.

    Cells of each kind are the integers 0..n-1.  ``hcells``/``vcells`` hold
    (source, target) pairs, ``squares`` hold (top, bottom, left, right).
    Composition tables map composable pairs to results.
    """

    def __init__(self, n_objects, hcells, vcells, squares, hid, vid, sqhid, sqvid,
                 hcomp1, vcomp1, hcomp2, vcomp2, name="D", names=None, labels=None):
        self.name = name
        self.n_objects = n_objects
        self.h = [tuple(x) for x in hcells]
        self.v = [tuple(x) for x in vcells]
        self.sq = [tuple(x) for x in squares]
        self.hid = list(hid)
        self.vid = list(vid)
        self.sqhid = list(sqhid)
        self.sqvid = list(sqvid)
        self.hcomp1 = dict(hcomp1)
        self.vcomp1 = dict(vcomp1)
        self.hcomp2 = dict(hcomp2)
        self.vcomp2 = dict(vcomp2)
        # display names and structured labels, per kind
        self.names = names or {}
        self.labels = labels or {}
        self._label_index = None

    def objects(self):
        return range(self.n_objects)

    def hcells(self):
        return range(len(self.h))

    def vcells(self):
        return range(len(self.v))

    def squares(self):
        return range(len(self.sq))

    def hsrc(self, h):
        return self.h[h][0]

    def htgt(self, h):
        return self.h[h][1]

    def vsrc(self, v):
        return self.v[v][0]

    def vtgt(self, v):
        return self.v[v][1]

    def top(self, s):
        return self.sq[s][0]

    def bottom(self, s):
        return self.sq[s][1]

    def left(self, s):
        return self.sq[s][2]

    def right(self, s):
        return self.sq[s][3]

    def boundary(self, s):
        return self.sq[s]

    def hId(self, x):
        return self.hid[x]

    def vId(self, x):
        return self.vid[x]

    def sqHId(self, v):
        return self.sqhid[v]

    def sqVId(self, h):
        return self.sqvid[h]

    def hComp1(self, h, k):
        return self.hcomp1.get((h, k))

    def vComp1(self, f, g):
        return self.vcomp1.get((f, g))

    def hComp2(self, s, t):
        return self.hcomp2.get((s, t))

    def vComp2(self, s, t):
        return self.vcomp2.get((s, t))

    def sizes(self):
        return dict(objects=self.n_objects, hcells=len(self.h),
                    vcells=len(self.v), squares=len(self.sq))

    def counts(self):
        return self.sizes()

    def name_of(self, kind, i):
        names = self.names.get(kind)
        if names and i < len(names) and names[i] is not None:
            return names[i]
        return f"{kind[0] if kind != 'square' else 'sq'}{i}"

    def describe(self, kind, cell):
        return f"{kind} {self.name_of(kind, cell)}"

    def find(self, kind, name):
        names = self.names.get(kind, [])
        return names.index(name)

    def cell_of_label(self, kind, label):
        if self._label_index is None:
            self._label_index = {k: {lab: i for i, lab in enumerate(v)}
                                 for k, v in self.labels.items()}
        return self._label_index[kind][label]

    def copy(self, name=None):
        return FiniteDoubleCategory(
            self.n_objects, self.h, self.v, self.sq, self.hid, self.vid,
            self.sqhid, self.sqvid, self.hcomp1, self.vcomp1, self.hcomp2,
            self.vcomp2, name=name or self.name,
            names={k: list(v) for k, v in self.names.items()},
            labels={k: list(v) for k, v in self.labels.items()})

    def transpose(self, name=None):
        """Swap the horizontal and vertical directions."""
        return FiniteDoubleCategory(
            self.n_objects, self.v, self.h,
            [(l, r, t, b) for (t, b, l, r) in self.sq],
            self.vid, self.hid, self.sqvid, self.sqhid,
            self.vcomp1, self.hcomp1, self.vcomp2, self.hcomp2,
            name=name or f"{self.name}^T",
            names={"object": self.names.get("object"), "hcell": self.names.get("vcell"),
                   "vcell": self.names.get("hcell"), "square": self.names.get("square")})

    def check_structure(self):
        """Raise StructuralError unless every table entry is well-indexed."""
        n = {"object": self.n_objects, "hcell": len(self.h),
             "vcell": len(self.v), "square": len(self.sq)}

        def need(kind, i, where):
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n[kind]:
                raise StructuralError(f"{where}: {i!r} is not a valid {kind} index")

        for i, st in enumerate(self.h):
            if len(st) != 2:
                raise StructuralError(f"hcell {i}: expected (source, target)")
            for x in st:
                need("object", x, f"hcell {i}")
        for i, st in enumerate(self.v):
            if len(st) != 2:
                raise StructuralError(f"vcell {i}: expected (source, target)")
            for x in st:
                need("object", x, f"vcell {i}")
        for i, b in enumerate(self.sq):
            if len(b) != 4:
                raise StructuralError(f"square {i}: expected (top, bottom, left, right)")
            need("hcell", b[0], f"square {i}")
            need("hcell", b[1], f"square {i}")
            need("vcell", b[2], f"square {i}")
            need("vcell", b[3], f"square {i}")
        for table, kind, size, label in ((self.hid, "hcell", n["object"], "hId"),
                                         (self.vid, "vcell", n["object"], "vId"),
                                         (self.sqhid, "square", n["vcell"], "sqHId"),
                                         (self.sqvid, "square", n["hcell"], "sqVId")):
            if len(table) != size:
                raise StructuralError(f"{label}: expected {size} entries, got {len(table)}")
            for x in table:
                need(kind, x, label)
        for table, kind, label in ((self.hcomp1, "hcell", "hComp1"), (self.vcomp1, "vcell", "vComp1"),
                                   (self.hcomp2, "square", "hComp2"), (self.vcomp2, "square", "vComp2")):
            for (a, b), c in table.items():
                need(kind, a, label)
                need(kind, b, label)
                need(kind, c, label)


def validate(D, limit=50):
    """Check every double-category axiom on D by exhaustive enumeration."""
    if isinstance(D, FiniteDoubleCategory):
        D.check_structure()
    rep = Report(limit=limit)
    d = D.describe
    idx = D.index()
    objs, hs, vs, sqs = idx.objects, idx.hcells, idx.vcells, idx.squares

    # boundaries of squares and identities
    for s in sqs:
        t, b, l, r = D.boundary(s)
        if not (D.hsrc(t) == D.vsrc(l) and D.htgt(t) == D.vsrc(r)
                and D.hsrc(b) == D.vtgt(l) and D.htgt(b) == D.vtgt(r)):
            rep.add("boundary coherence (square corners)", d("square", s))
    for x in objs:
        if D.hsrc(D.hId(x)) != x or D.htgt(D.hId(x)) != x:
            rep.add("boundary coherence (hId)", d("object", x))
        if D.vsrc(D.vId(x)) != x or D.vtgt(D.vId(x)) != x:
            rep.add("boundary coherence (vId)", d("object", x))
        if D.sqHId(D.vId(x)) != D.sqVId(D.hId(x)):
            rep.add("identity compatibility (sqHId(vId) = sqVId(hId))", d("object", x))
    for v in vs:
        if D.boundary(D.sqHId(v)) != (D.hId(D.vsrc(v)), D.hId(D.vtgt(v)), v, v):
            rep.add("boundary coherence (sqHId)", d("vcell", v))
    for h in hs:
        if D.boundary(D.sqVId(h)) != (h, h, D.vId(D.hsrc(h)), D.vId(D.htgt(h))):
            rep.add("boundary coherence (sqVId)", d("hcell", h))
    if not rep.ok:
        return rep

    hc1, vc1 = {}, {}
    for h, k in idx.hpairs():
        m = D.hComp1(h, k)
        if m is None:
            rep.add(f"totality ({HC1})", d("hcell", h), d("hcell", k))
            continue
        hc1[h, k] = m
        if D.hsrc(m) != D.hsrc(h) or D.htgt(m) != D.htgt(k):
            rep.add(f"boundary coherence ({HC1})", d("hcell", h), d("hcell", k))
    for f, g in idx.vpairs():
        m = D.vComp1(f, g)
        if m is None:
            rep.add(f"totality ({VC1})", d("vcell", f), d("vcell", g))
            continue
        vc1[f, g] = m
        if D.vsrc(m) != D.vsrc(f) or D.vtgt(m) != D.vtgt(g):
            rep.add(f"boundary coherence ({VC1})", d("vcell", f), d("vcell", g))
    hc2, vc2 = {}, {}
    for s, t in idx.hsq_pairs():
        m = D.hComp2(s, t)
        if m is None:
            rep.add(f"totality ({HC2})", d("square", s), d("square", t))
            continue
        hc2[s, t] = m
        want = (hc1.get((D.top(s), D.top(t))), hc1.get((D.bottom(s), D.bottom(t))), D.left(s), D.right(t))
        if D.boundary(m) != want:
            rep.add(f"boundary coherence ({HC2})", d("square", s), d("square", t))
    for s, t in idx.vsq_pairs():
        m = D.vComp2(s, t)
        if m is None:
            rep.add(f"totality ({VC2})", d("square", s), d("square", t))
            continue
        vc2[s, t] = m
        want = (D.top(s), D.bottom(t), vc1.get((D.left(s), D.left(t))), vc1.get((D.right(s), D.right(t))))
        if D.boundary(m) != want:
            rep.add(f"boundary coherence ({VC2})", d("square", s), d("square", t))
    if not rep.ok:
        return rep

    # unit laws
    for h in hs:
        if hc1[D.hId(D.hsrc(h)), h] != h or hc1[h, D.hId(D.htgt(h))] != h:
            rep.add(f"unit law ({HC1})", d("hcell", h))
    for v in vs:
        if vc1[D.vId(D.vsrc(v)), v] != v or vc1[v, D.vId(D.vtgt(v))] != v:
            rep.add(f"unit law ({VC1})", d("vcell", v))
    for s in sqs:
        if hc2[D.sqHId(D.left(s)), s] != s or hc2[s, D.sqHId(D.right(s))] != s:
            rep.add(f"unit law ({HC2})", d("square", s))
        if vc2[D.sqVId(D.top(s)), s] != s or vc2[s, D.sqVId(D.bottom(s))] != s:
            rep.add(f"unit law ({VC2})", d("square", s))

    # identities are functorial in the transverse direction
    for (h, k), m in hc1.items():
        if hc2[D.sqVId(h), D.sqVId(k)] != D.sqVId(m):
            rep.add("identity functoriality (sqVId)", d("hcell", h), d("hcell", k))
    for (f, g), m in vc1.items():
        if vc2[D.sqHId(f), D.sqHId(g)] != D.sqHId(m):
            rep.add("identity functoriality (sqHId)", d("vcell", f), d("vcell", g))

    # associativity
    for (h, k), hk in hc1.items():
        for m in idx.h_from[D.htgt(k)]:
            if hc1[hk, m] != hc1[h, hc1[k, m]]:
                rep.add(f"associativity ({HC1})", d("hcell", h), d("hcell", k), d("hcell", m))
    for (f, g), fg in vc1.items():
        for m in idx.v_from[D.vtgt(g)]:
            if vc1[fg, m] != vc1[f, vc1[g, m]]:
                rep.add(f"associativity ({VC1})", d("vcell", f), d("vcell", g), d("vcell", m))
    for (s, t), st in hc2.items():
        for u in idx.sq_left[D.right(t)]:
            if hc2[st, u] != hc2[s, hc2[t, u]]:
                rep.add(f"associativity ({HC2})", d("square", s), d("square", t), d("square", u))
    for (s, t), st in vc2.items():
        for u in idx.sq_top[D.bottom(t)]:
            if vc2[st, u] != vc2[s, vc2[t, u]]:
                rep.add(f"associativity ({VC2})", d("square", s), d("square", t), d("square", u))

    # middle-four interchange: a b / c d
    for (a, b), ab in hc2.items():
        for c in idx.sq_top[D.bottom(a)]:
            for dd in idx.sq_left[D.right(c)]:
                if D.top(dd) != D.bottom(b):
                    continue
                lhs = vc2[ab, hc2[c, dd]]
                rhs = hc2[vc2[a, c], vc2[b, dd]]
                if lhs != rhs:
                    rep.add("interchange", d("square", a), d("square", b), d("square", c), d("square", dd))
    return rep


class _Builder:
    """Assemble a FiniteDoubleCategory from named cells, filling unit compositions."""

    def __init__(self, name):
        self.name = name
        self.obj, self.h, self.v, self.sq = [], [], [], []
        self.hid, self.vid, self.sqhid, self.sqvid = {}, {}, {}, {}
        self.extra = {"h1": {}, "v1": {}, "h2": {}, "v2": {}}

    def object(self, name):
        x = len(self.obj)
        self.obj.append(name)
        self.hid[x] = self.hcell(f"1_{name}", x, x)
        self.vid[x] = self.vcell(f"1^{name}", x, x)
        s = self.square(f"1_{name}", self.hid[x], self.hid[x], self.vid[x], self.vid[x])
        self.sqhid[self.vid[x]] = s
        self.sqvid[self.hid[x]] = s
        return x

    def hcell(self, name, s, t):
        self.h.append((name, s, t))
        return len(self.h) - 1

    def vcell(self, name, s, t):
        self.v.append((name, s, t))
        return len(self.v) - 1

    def square(self, name, top, bottom, left, right):
        self.sq.append((name, top, bottom, left, right))
        return len(self.sq) - 1

    def gen_h(self, name, s, t):
        h = self.hcell(name, s, t)
        self.sqvid[h] = self.square(f"1_{name}", h, h, self.vid[s], self.vid[t])
        return h

    def gen_v(self, name, s, t):
        v = self.vcell(name, s, t)
        self.sqhid[v] = self.square(f"1_{name}", self.hid[s], self.hid[t], v, v)
        return v

    def build(self):
        hid = [self.hid[x] for x in range(len(self.obj))]
        vid = [self.vid[x] for x in range(len(self.obj))]
        sqhid = [self.sqhid[v] for v in range(len(self.v))]
        sqvid = [self.sqvid[h] for h in range(len(self.h))]
        h1, v1, h2, v2 = ({}, {}, {}, {})
        hid_set, vid_set = set(hid), set(vid)
        for a, (_, _, t) in enumerate(self.h):
            for b, (_, s, _) in enumerate(self.h):
                if s == t:
                    if a in hid_set:
                        h1[a, b] = b
                    elif b in hid_set:
                        h1[a, b] = a
        for a, (_, _, t) in enumerate(self.v):
            for b, (_, s, _) in enumerate(self.v):
                if s == t:
                    if a in vid_set:
                        v1[a, b] = b
                    elif b in vid_set:
                        v1[a, b] = a
        sqhid_set, sqvid_set = set(sqhid), set(sqvid)
        for a, (_, _, _, _, r) in enumerate(self.sq):
            for b, (_, _, _, l, _) in enumerate(self.sq):
                if l == r:
                    if a in sqhid_set:
                        h2[a, b] = b
                    elif b in sqhid_set:
                        h2[a, b] = a
        for a, (_, _, bot, _, _) in enumerate(self.sq):
            for b, (_, top, _, _, _) in enumerate(self.sq):
                if top == bot:
                    if a in sqvid_set:
                        v2[a, b] = b
                    elif b in sqvid_set:
                        v2[a, b] = a
        h1.update(self.extra["h1"])
        v1.update(self.extra["v1"])
        h2.update(self.extra["h2"])
        v2.update(self.extra["v2"])
        return FiniteDoubleCategory(
            len(self.obj), [(s, t) for _, s, t in self.h], [(s, t) for _, s, t in self.v],
            [b[1:] for b in self.sq], hid, vid, sqhid, sqvid, h1, v1, h2, v2,
            name=self.name,
            names={"object": list(self.obj), "hcell": [x[0] for x in self.h],
                   "vcell": [x[0] for x in self.v], "square": [x[0] for x in self.sq]})


@lru_cache(maxsize=None)
def empty():
    return _Builder("0").build()


@lru_cache(maxsize=None)
def terminal():
    b = _Builder("1")
    b.object("*")
    return b.build()


@lru_cache(maxsize=None)
def generatorG():
    """The double category freely generated by one square tau."""
    b = _Builder("G")
    X, Y, V, Z = (b.object(n) for n in "XYVZ")
    t = b.gen_h("t", X, Y)
    bb = b.gen_h("b", V, Z)
    l = b.gen_v("l", X, V)
    r = b.gen_v("r", Y, Z)
    b.square("tau", t, bb, l, r)
    return b.build()


@lru_cache(maxsize=None)
def freeArrowH():
    b = _Builder("arrowH")
    x, y = b.object("0"), b.object("1")
    b.gen_h("g", x, y)
    return b.build()


@lru_cache(maxsize=None)
def freeArrowV():
    return freeArrowH().transpose(name="arrowV")


def discrete(n_objects, name="disc", names=None):
    """Only identity cells."""
    b = _Builder(name)
    for i in range(n_objects):
        b.object(names[i] if names else str(i))
    return b.build()


def tabulate(D, name=None):
    """Turn any enumerable double category into a FiniteDoubleCategory.

    The original cells are kept as ``labels``.
    """
    idx = D.index()
    objs, hs, vs, sqs = idx.objects, idx.hcells, idx.vcells, idx.squares
    oi = {x: i for i, x in enumerate(objs)}
    hi = {x: i for i, x in enumerate(hs)}
    vi = {x: i for i, x in enumerate(vs)}
    si = {x: i for i, x in enumerate(sqs)}

    def look(table, x, what):
        try:
            return table[x]
        except KeyError:
            raise StructuralError(f"{what} {x!r} is not among the enumerated cells") from None

    hcells = [(oi[D.hsrc(h)], oi[D.htgt(h)]) for h in hs]
    vcells = [(oi[D.vsrc(v)], oi[D.vtgt(v)]) for v in vs]
    squares = [(hi[D.top(s)], hi[D.bottom(s)], vi[D.left(s)], vi[D.right(s)]) for s in sqs]
    hid = [look(hi, D.hId(x), "hId") for x in objs]
    vid = [look(vi, D.vId(x), "vId") for x in objs]
    sqhid = [look(si, D.sqHId(v), "sqHId") for v in vs]
    sqvid = [look(si, D.sqVId(h), "sqVId") for h in hs]
    h1 = {(hi[a], hi[b]): look(hi, D.hComp1(a, b), "hComp1") for a, b in idx.hpairs()}
    v1 = {(vi[a], vi[b]): look(vi, D.vComp1(a, b), "vComp1") for a, b in idx.vpairs()}
    h2 = {(si[a], si[b]): look(si, D.hComp2(a, b), "hComp2") for a, b in idx.hsq_pairs()}
    v2 = {(si[a], si[b]): look(si, D.vComp2(a, b), "vComp2") for a, b in idx.vsq_pairs()}
    names = {}
    if isinstance(D, FiniteDoubleCategory):
        names = {k: [D.name_of(k, c) for c in D.cells(k)] for k in KINDS}
    out = FiniteDoubleCategory(
        len(objs), hcells, vcells, squares, hid, vid, sqhid, sqvid, h1, v1, h2, v2,
        name=name or getattr(D, "name", "D"), names=names,
        labels={"object": list(objs), "hcell": list(hs), "vcell": list(vs), "square": list(sqs)})
    return out


class ProductDouble(DoubleCategory):
    """Lazy componentwise product; cells are pairs."""

    def __init__(self, A, B):
        self.A, self.B = A, B
        self.name = f"{A.name}x{B.name}"

    def objects(self):
        return [(a, b) for a in self.A.objects() for b in self.B.objects()]

    def hcells(self):
        return [(a, b) for a in self.A.hcells() for b in self.B.hcells()]

    def vcells(self):
        return [(a, b) for a in self.A.vcells() for b in self.B.vcells()]

    def squares(self):
        return [(a, b) for a in self.A.squares() for b in self.B.squares()]

    def _pair(op):
        def f(self, x, y=None):
            A, B = self.A, self.B
            if y is None:
                return (getattr(A, op)(x[0]), getattr(B, op)(x[1]))
            p = getattr(A, op)(x[0], y[0])
            q = getattr(B, op)(x[1], y[1])
            return None if p is None or q is None else (p, q)
        return f

    hsrc = _pair("hsrc")
    htgt = _pair("htgt")
    vsrc = _pair("vsrc")
    vtgt = _pair("vtgt")
    top = _pair("top")
    bottom = _pair("bottom")
    left = _pair("left")
    right = _pair("right")
    hId = _pair("hId")
    vId = _pair("vId")
    sqHId = _pair("sqHId")
    sqVId = _pair("sqVId")
    hComp1 = _pair("hComp1")
    vComp1 = _pair("vComp1")
    hComp2 = _pair("hComp2")
    vComp2 = _pair("vComp2")
    del _pair


def cartesianProduct(A, B, name=None):
    P = tabulate(ProductDouble(A, B), name=name or f"{A.name}x{B.name}")
    if isinstance(A, FiniteDoubleCategory) and isinstance(B, FiniteDoubleCategory):
        P.names = {k: [f"({A.name_of(k, a)},{B.name_of(k, b)})" for a, b in P.labels[k]]
                   for k in KINDS}
    return P


def isIsomorphic(A, B):
    """Return an isomorphism A -> B as a DoubleFunctor, or None."""
    from .functor import find_isomorphism
    return find_isomorphism(A, B)

