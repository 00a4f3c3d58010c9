"""Presentation of A (x) B by generators and relations, and bounded realization.

Horizontal 1-cells of the tensor are alternating paths of segments
("A", h, Y) and ("B", X, p); adjacent segments from the same side are
composed in that side, identities dropped.  Vertical 1-cells are the same
with vertical cells.  Squares are formal pasting words

    ("gen", key) | ("id", obj) | ("iv", hpath) | ("ih", vpath)
    | ("H", w1, w2) | ("V", w1, w2)

quotiented by the double-category axioms and the cone relations.  The
quotient is computed on words of bounded depth with a union-find carrying
congruence closure; the result is emitted only when it is closed under
composition and the representability counts agree.
"""

import json
from dataclasses import dataclass, field
from math import ceil, log2

from .core import FiniteDoubleCategory, Report, generatorG, tabulate, validate
from .errors import StructuralError, UnrealizedError
from .functor import DoubleFunctor, enumerateDoubleFunctors, identityFunctor
from .search import Budget
from .tensor import (TAGS, TensorCone, _identity_values, enumerateCones, equationSides,
                     expectedBoundary, precomposeCone)


# -- paths ---------------------------------------------------------------------

class _Paths:
    """Alternating paths in one direction ("h" or "v")."""

    def __init__(self, A, B, d):
        self.A, self.B = A, B
        if d == "h":
            self.src_, self.tgt_, self.comp, self.ident = "hsrc", "htgt", "hComp1", "hId"
        else:
            self.src_, self.tgt_, self.comp, self.ident = "vsrc", "vtgt", "vComp1", "vId"

    def seg_tgt(self, s):
        side, a, b = s
        if side == "A":
            return getattr(self.A, self.tgt_)(a), b
        return a, getattr(self.B, self.tgt_)(b)

    def tgt(self, p):
        return self.seg_tgt(p[1][-1]) if p[1] else p[0]

    def unit(self, o):
        return (o, ())

    def _is_id(self, s):
        side, a, b = s
        if side == "A":
            return a == getattr(self.A, self.ident)(getattr(self.A, self.src_)(a))
        return b == getattr(self.B, self.ident)(getattr(self.B, self.src_)(b))

    def single(self, side, a, b):
        """The path of the 1-cell a*Y (side A) or X*b (side B)."""
        if side == "A":
            src = (getattr(self.A, self.src_)(a), b)
        else:
            src = (a, getattr(self.B, self.src_)(b))
        s = (side, a, b)
        return (src, ()) if self._is_id(s) else (src, (s,))

    def cat(self, p, q):
        if self.tgt(p) != q[0]:
            raise StructuralError(f"paths {p!r} and {q!r} are not composable")
        out = list(p[1])
        for s in q[1]:
            while out and out[-1][0] == s[0]:
                last = out.pop()
                if s[0] == "A":
                    s = ("A", getattr(self.A, self.comp)(last[1], s[1]), s[2])
                else:
                    s = ("B", s[1], getattr(self.B, self.comp)(last[2], s[2]))
                if self._is_id(s):
                    s = None
                    break
            if s is not None:
                out.append(s)
        return (p[0], tuple(out))


def pathDepth(p):
    """Nesting depth of a path: 0 for identities, 1 for generators."""
    n = len(p[1])
    return 0 if n == 0 else 1 + ceil(log2(n))


# -- the symbolic codomain ---------------------------------------------------------

class _Free:
    """Stand-in codomain whose compositions build words instead of cells."""

    def __init__(self, hp, vp):
        self.hp, self.vp = hp, vp

    def hComp1(self, p, q): return self.hp.cat(p, q)
    def vComp1(self, p, q): return self.vp.cat(p, q)
    def hId(self, o): return (o, ())
    def vId(self, o): return (o, ())

    def sqVId(self, p):
        return ("id", p[0]) if not p[1] else ("iv", p)

    def sqHId(self, q):
        return ("id", q[0]) if not q[1] else ("ih", q)

    def hComp2(self, s, t): return ("H", s, t)
    def vComp2(self, s, t): return ("V", s, t)


class _SymCone:
    """The universal cone, written in words."""

    def __init__(self, A, B):
        self.A, self.B = A, B
        self.hp, self.vp = _Paths(A, B, "h"), _Paths(A, B, "v")
        self.C = _Free(self.hp, self.vp)
        self._fixed = None

    def oo(self, X, Y): return (X, Y)
    def ho(self, h, Y): return self.hp.single("A", h, Y)
    def oh(self, X, p): return self.hp.single("B", X, p)
    def vo(self, v, Y): return self.vp.single("A", v, Y)
    def ov(self, X, q): return self.vp.single("B", X, q)

    def so(self, w, Y):
        A = self.A
        t, _, l, _ = A.boundary(w)
        if w == A.sqVId(t):
            return self.C.sqVId(self.ho(t, Y))
        if w == A.sqHId(l):
            return self.C.sqHId(self.vo(l, Y))
        return ("gen", ("so", w, Y))

    def os(self, X, s):
        B = self.B
        t, _, l, _ = B.boundary(s)
        if s == B.sqVId(t):
            return self.C.sqVId(self.oh(X, t))
        if s == B.sqHId(l):
            return self.C.sqHId(self.ov(X, l))
        return ("gen", ("os", X, s))

    def fixed(self):
        if self._fixed is None:
            self._fixed = _identity_values(self)
        return self._fixed

    def get(self, tag, a, b):
        if tag == "so":
            return self.so(a, b)
        if tag == "os":
            return self.os(a, b)
        f = self.fixed()
        if (tag, a, b) in f:
            return f[tag, a, b]
        return ("gen", (tag, a, b))

    def hv(self, h, q): return self.get("hv", h, q)
    def vh(self, v, p): return self.get("vh", v, p)
    def hh(self, h, p): return self.get("hh", h, p)
    def hhi(self, h, p): return self.get("hhi", h, p)
    def vv(self, v, q): return self.get("vv", v, q)
    def vvi(self, v, q): return self.get("vvi", v, q)


# -- presentation --------------------------------------------------------------------

@dataclass
class TensorPresentation:
    A: object
    B: object
    objects: list
    hgens: list          # (key, source path, target object)
    vgens: list
    sqgens: list         # (key, frame)
    relations: list      # (family, witness, lhs, rhs)
    frames: dict = field(repr=False, default_factory=dict)

    def counts(self):
        return dict(objects=len(self.objects), hcells=len(self.hgens), vcells=len(self.vgens),
                    squares=len(self.sqgens), relations=len(self.relations))

    def toJSON(self):
        return {"schema": 1, "A": self.A.name, "B": self.B.name,
                "objects": [list(o) for o in self.objects],
                "hcell_generators": [_js(k) for k, _ in self.hgens],
                "vcell_generators": [_js(k) for k, _ in self.vgens],
                "square_generators": [{"key": _js(k), "frame": _js(f)} for k, f in self.sqgens],
                "relations": [{"family": fam, "witness": _js(w), "lhs": _js(l), "rhs": _js(r)}
                              for fam, w, l, r in self.relations]}

    def dumps(self):
        return json.dumps(self.toJSON())


def _js(x):
    if isinstance(x, (tuple, list)):
        return [_js(y) for y in x]
    if isinstance(x, (int, str)) or x is None:
        return x
    return repr(x)


def _nonid(D, kind):
    if kind == "hcell":
        ids = {D.hId(x) for x in D.objects()}
    elif kind == "vcell":
        ids = {D.vId(x) for x in D.objects()}
    else:
        ids = {D.sqHId(v) for v in D.vcells()} | {D.sqVId(h) for h in D.hcells()}
    return [c for c in D.cells(kind) if c not in ids]


def buildPresentation(A, B):
    """Generators and relations of A (x) B."""
    sym = _SymCone(A, B)
    C = sym.C
    objects = [(X, Y) for X in A.objects() for Y in B.objects()]
    hgens = [(("ho", h, Y), sym.ho(h, Y)) for h in _nonid(A, "hcell") for Y in B.objects()]
    hgens += [(("oh", X, p), sym.oh(X, p)) for X in A.objects() for p in _nonid(B, "hcell")]
    vgens = [(("vo", v, Y), sym.vo(v, Y)) for v in _nonid(A, "vcell") for Y in B.objects()]
    vgens += [(("ov", X, q), sym.ov(X, q)) for X in A.objects() for q in _nonid(B, "vcell")]
    nA = {k: _nonid(A, k) for k in ("hcell", "vcell", "square")}
    nB = {k: _nonid(B, k) for k in ("hcell", "vcell", "square")}
    keys = [("so", w, Y) for w in nA["square"] for Y in B.objects()]
    keys += [("os", X, s) for X in A.objects() for s in nB["square"]]
    keys += [("hv", h, q) for h in nA["hcell"] for q in nB["vcell"]]
    keys += [("vh", v, p) for v in nA["vcell"] for p in nB["hcell"]]
    for h in nA["hcell"]:
        for p in nB["hcell"]:
            keys += [("hh", h, p), ("hhi", h, p)]
    for v in nA["vcell"]:
        for q in nB["vcell"]:
            keys += [("vv", v, q), ("vvi", v, q)]
    frames = {}
    for k in keys:
        frames[k] = expectedBoundary(sym, *k)
    sqgens = [(k, frames[k]) for k in keys]

    rels = []

    def rel(fam, wit, lhs, rhs):
        if lhs != rhs:
            rels.append((fam, wit, lhs, rhs))

    # functoriality of the rows and columns on squares
    iA, iB = A.index(), B.index()
    hunitA, vunitA = set(map(A.sqHId, A.vcells())), set(map(A.sqVId, A.hcells()))
    hunitB, vunitB = set(map(B.sqHId, B.vcells())), set(map(B.sqVId, B.hcells()))
    for w, w2 in iA.hsq_pairs():
        if w in hunitA or w2 in hunitA:
            continue
        for Y in B.objects():
            rel("(i)", ("column", Y, "H", w, w2), ("H", sym.so(w, Y), sym.so(w2, Y)),
                sym.so(A.hComp2(w, w2), Y))
    for w, w2 in iA.vsq_pairs():
        if w in vunitA or w2 in vunitA:
            continue
        for Y in B.objects():
            rel("(i)", ("column", Y, "V", w, w2), ("V", sym.so(w, Y), sym.so(w2, Y)),
                sym.so(A.vComp2(w, w2), Y))
    for s, s2 in iB.hsq_pairs():
        if s in hunitB or s2 in hunitB:
            continue
        for X in A.objects():
            rel("(i)", ("row", X, "H", s, s2), ("H", sym.os(X, s), sym.os(X, s2)),
                sym.os(X, B.hComp2(s, s2)))
    for s, s2 in iB.vsq_pairs():
        if s in vunitB or s2 in vunitB:
            continue
        for X in A.objects():
            rel("(i)", ("row", X, "V", s, s2), ("V", sym.os(X, s), sym.os(X, s2)),
                sym.os(X, B.vComp2(s, s2)))
    # formal inverses
    for h in nA["hcell"]:
        for p in nB["hcell"]:
            a, b = sym.hh(h, p), sym.hhi(h, p)
            t, bt = frames["hh", h, p][:2]
            rel("(invertibility)", ("hh", h, p), ("V", a, b), C.sqVId(t))
            rel("(invertibility)", ("hhi", h, p), ("V", b, a), C.sqVId(bt))
    for v in nA["vcell"]:
        for q in nB["vcell"]:
            a, b = sym.vv(v, q), sym.vvi(v, q)
            l, r = frames["vv", v, q][2:]
            rel("(invertibility)", ("vv", v, q), ("H", a, b), C.sqHId(l))
            rel("(invertibility)", ("vvi", v, q), ("H", b, a), C.sqHId(r))
    for fam, wit, _, lhs, rhs in equationSides(A, B, C, sym, sym.get):
        rel(fam, wit, lhs(), rhs())
    P = TensorPresentation(A, B, objects, hgens, vgens, sqgens, rels, frames)
    P.sym = sym
    return P


def termFrame(P, t):
    """Frame of a word, checking that every composition in it is well formed."""
    sym = P.sym
    op = t[0]
    if op == "gen":
        return P.frames[t[1]]
    if op == "id":
        u = (t[1], ())
        return u, u, u, u
    if op == "iv":
        p = t[1]
        return p, p, (p[0], ()), (sym.hp.tgt(p), ())
    if op == "ih":
        q = t[1]
        return (q[0], ()), (sym.vp.tgt(q), ()), q, q
    a, b = termFrame(P, t[1]), termFrame(P, t[2])
    if op == "H":
        if a[3] != b[2]:
            raise StructuralError(f"horizontal composite with mismatched frames in {t!r}")
        return sym.hp.cat(a[0], b[0]), sym.hp.cat(a[1], b[1]), a[2], b[3]
    if a[1] != b[0]:
        raise StructuralError(f"vertical composite with mismatched frames in {t!r}")
    return a[0], b[1], sym.vp.cat(a[2], b[2]), sym.vp.cat(a[3], b[3])


def checkPresentation(P):
    """Every relation is well formed with equal frames on both sides."""
    rep = Report()
    for fam, wit, lhs, rhs in P.relations:
        try:
            if termFrame(P, lhs) != termFrame(P, rhs):
                rep.add("relation frames", fam, wit)
        except StructuralError as e:
            rep.add("relation well-formedness", fam, wit, str(e))
    return rep


# -- congruence closure on bounded words ---------------------------------------------------

class _Unbounded(Exception):
    pass


class _EGraph:
    def __init__(self, P, depth, budget):
        self.P, self.d, self.budget = P, depth, budget
        self.hp, self.vp = P.sym.hp, P.sym.vp
        self.parent, self.frame, self.depth = [], [], []
        self.hunit, self.vunit = [], []
        self.table = {}
        self.dirty = False

    def find(self, c):
        p = self.parent
        while p[c] != c:
            p[c] = p[p[c]]
            c = p[c]
        return c

    def _canon(self, n):
        if n[0] in ("H", "V"):
            return (n[0], self.find(n[1]), self.find(n[2]))
        return n

    def _node_depth(self, n):
        op = n[0]
        if op == "gen":
            return 1
        if op == "id":
            return 0
        if op in ("iv", "ih"):
            return pathDepth(n[1])
        return 1 + max(self.depth[self.find(n[1])], self.depth[self.find(n[2])])

    def node(self, n):
        """Class of a node, created if needed; units are absorbed."""
        op = n[0]
        if op in ("H", "V"):
            a, b = self.find(n[1]), self.find(n[2])
            fa, fb = self.frame[a], self.frame[b]
            if op == "H":
                if self.hunit[a]:
                    return b
                if self.hunit[b]:
                    return a
                if fa[3] != fb[2]:
                    raise StructuralError("horizontal composite with mismatched frames")
                fr = (self.hp.cat(fa[0], fb[0]), self.hp.cat(fa[1], fb[1]), fa[2], fb[3])
            else:
                if self.vunit[a]:
                    return b
                if self.vunit[b]:
                    return a
                if fa[1] != fb[0]:
                    raise StructuralError("vertical composite with mismatched frames")
                fr = (fa[0], fb[1], self.vp.cat(fa[2], fb[2]), self.vp.cat(fa[3], fb[3]))
            n = (op, a, b)
        elif op == "iv" and not n[1][1]:
            n = ("id", n[1][0])
        elif op == "ih" and not n[1][1]:
            n = ("id", n[1][0])
        if n in self.table:
            return self.find(self.table[n])
        if n[0] not in ("H", "V"):
            fr = termFrame(self.P, n)
        self.budget.spend()
        c = len(self.parent)
        self.parent.append(c)
        self.frame.append(fr)
        self.depth.append(self._node_depth(n))
        self.hunit.append(n[0] in ("id", "ih"))
        self.vunit.append(n[0] in ("id", "iv"))
        self.table[n] = c
        self.dirty = True
        return c

    def term(self, t):
        if t[0] in ("H", "V"):
            return self.node((t[0], self.term(t[1]), self.term(t[2])))
        return self.node(t)

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if self.frame[a] != self.frame[b]:
            raise StructuralError("identified squares with different frames")
        if b < a:
            a, b = b, a
        self.parent[b] = a
        self.depth[a] = min(self.depth[a], self.depth[b])
        self.hunit[a] = self.hunit[a] or self.hunit[b]
        self.vunit[a] = self.vunit[a] or self.vunit[b]
        self.dirty = True
        return True

    def rebuild(self):
        while True:
            changed = False
            new = {}
            for n, c in self.table.items():
                cn, c = self._canon(n), self.find(c)
                if cn in new and self.find(new[cn]) != c:
                    self.union(new[cn], c)
                    changed = True
                new[cn] = c
            self.table = new
            if not changed:
                break
        while True:
            changed = False
            for n, c in self.table.items():
                c = self.find(c)
                nd = self._node_depth(n)
                if nd < self.depth[c]:
                    self.depth[c] = nd
                    changed = True
            if not changed:
                break

    def active(self, c):
        return self.depth[self.find(c)] <= self.d

    def classes(self):
        return sorted({self.find(c) for c in self.table.values()})

    def members(self):
        m = {}
        for n, c in self.table.items():
            m.setdefault(self.find(c), []).append(n)
        return m

    # rules -----------------------------------------------------------------

    def _generate(self):
        act = [c for c in self.classes() if self.active(c)]
        by_left, by_top = {}, {}
        for c in act:
            by_left.setdefault(self.frame[c][2], []).append(c)
            by_top.setdefault(self.frame[c][0], []).append(c)
        for a in act:
            if not self.hunit[a]:
                for b in by_left.get(self.frame[a][3], ()):
                    if not self.hunit[b]:
                        self.node(("H", a, b))
            if not self.vunit[a]:
                for b in by_top.get(self.frame[a][1], ()):
                    if not self.vunit[b]:
                        self.node(("V", a, b))

    def _rules(self):
        mem = self.members()
        A = self.active
        for c, nodes in mem.items():
            for n in nodes:
                op = n[0]
                if op not in ("H", "V"):
                    continue
                a, b = self.find(n[1]), self.find(n[2])
                unit = self.hunit if op == "H" else self.vunit
                if unit[a]:
                    self.union(c, b)
                    continue
                if unit[b]:
                    self.union(c, a)
                    continue
                # identity squares compose to identity squares
                if op == "H" and self.vunit[a] and self.vunit[b]:
                    self.union(c, self.node(("iv", self.hp.cat(self.frame[a][0], self.frame[b][0]))))
                if op == "V" and self.hunit[a] and self.hunit[b]:
                    self.union(c, self.node(("ih", self.vp.cat(self.frame[a][2], self.frame[b][2]))))
                # associativity, both ways
                for m in mem.get(a, ()):
                    if m[0] == op:
                        x, y = self.find(m[1]), self.find(m[2])
                        if A(y) and A(b):
                            yb = self.node((op, y, b))
                            if A(x) and A(yb):
                                self.union(c, self.node((op, x, yb)))
                for m in mem.get(b, ()):
                    if m[0] == op:
                        y, z = self.find(m[1]), self.find(m[2])
                        if A(a) and A(y):
                            ay = self.node((op, a, y))
                            if A(ay) and A(z):
                                self.union(c, self.node((op, ay, z)))
                # interchange, both ways
                inner = "H" if op == "V" else "V"
                for m in mem.get(a, ()):
                    if m[0] != inner:
                        continue
                    for m2 in mem.get(b, ()):
                        if m2[0] != inner:
                            continue
                        x, y = self.find(m[1]), self.find(m[2])
                        z, w = self.find(m2[1]), self.find(m2[2])
                        if not all(map(A, (x, y, z, w))):
                            continue
                        fx, fy, fz, fw = (self.frame[k] for k in (x, y, z, w))
                        if op == "V":
                            # V(H(x,y), H(z,w)) = H(V(x,z), V(y,w))
                            if fx[1] != fz[0] or fy[1] != fw[0]:
                                continue
                            xz, yw = self.node(("V", x, z)), self.node(("V", y, w))
                            if A(xz) and A(yw):
                                self.union(c, self.node(("H", xz, yw)))
                        else:
                            # H(V(x,y), V(z,w)) = V(H(x,z), H(y,w))
                            if fx[3] != fz[2] or fy[3] != fw[2]:
                                continue
                            xz, yw = self.node(("H", x, z)), self.node(("H", y, w))
                            if A(xz) and A(yw):
                                self.union(c, self.node(("V", xz, yw)))

    def saturate(self):
        while True:
            self.dirty = False
            self._generate()
            self._rules()
            self.rebuild()
            if not self.dirty:
                return

    def representative(self, c, memo):
        """A least-depth word for a class."""
        c = self.find(c)
        if c in memo:
            return memo[c]
        best = None
        for n, k in self.table.items():
            if self.find(k) != c or self._node_depth(n) != self.depth[c]:
                continue
            if n[0] in ("H", "V"):
                w = (n[0], self.representative(n[1], memo), self.representative(n[2], memo))
            else:
                w = n
            if best is None or repr(w) < repr(best):
                best = w
        memo[c] = best
        return best


def _closure_paths(gens, paths, d):
    """All paths of depth <= d generated by the given ones; raises _Unbounded."""
    out = set(gens)
    frontier = list(out)
    while frontier:
        new = []
        for p in list(out):
            for q in frontier:
                for a, b in ((p, q), (q, p)):
                    if paths.tgt(a) != b[0]:
                        continue
                    r = paths.cat(a, b)
                    if r in out:
                        continue
                    if pathDepth(r) > d:
                        raise _Unbounded(f"1-cell composite of length {len(r[1])} exceeds depth {d}")
                    out.add(r)
                    new.append(r)
        frontier = new
    return out


# -- realization ---------------------------------------------------------------------

@dataclass
class RealizedTensor:
    A: object
    B: object
    category: FiniteDoubleCategory
    genMap: dict
    certificate: dict
    cone: TensorCone = None
    words: list = field(default=None, repr=False)
    tab: tuple = field(default=None, repr=False)

    def induced(self, c):
        """The double functor out of the realized tensor corresponding to a cone."""
        return inducedFunctor(self, c)


_CACHE = {}


def realizeTensor(A, B, maxDepth=2, certify=None, budget=None):
    """Realize A (x) B with words of depth at most maxDepth.

    ``certify`` lists codomains C for the count check
    |DblCat(T, C)| = |cones(A, B; C)|; the string "self" stands for T.
    Raises UnrealizedError when closure is not reached ("unbounded") or the
    certificate fails.
    """
    certify = tuple(certify) if certify is not None else (generatorG(), "self")
    key = (id(A), id(B), maxDepth, tuple(c if isinstance(c, str) else id(c) for c in certify))
    if key in _CACHE:
        return _CACHE[key][0]
    A0, B0 = A, B
    if not isinstance(A, FiniteDoubleCategory):
        A = tabulate(A)
    if not isinstance(B, FiniteDoubleCategory):
        B = tabulate(B)
    budget = budget or Budget()
    P = buildPresentation(A, B)
    sym = P.sym
    try:
        R = _realize(A, B, P, maxDepth, budget)
    except _Unbounded as e:
        raise UnrealizedError(f"unbounded: {A.name} (x) {B.name} not closed at depth {maxDepth}: {e}") from None
    T = R.category
    rep = validate(T)
    if not rep.ok:
        raise UnrealizedError(f"realized {T.name} fails validation: {rep.violations[0]}")
    cert = {"maxDepth": maxDepth, "counts": T.counts(), "codomains": []}
    for C in certify:
        C = T if C == "self" else C
        fs = enumerateDoubleFunctors(T, C, budget)
        cones = enumerateCones(A, B, C, budget)
        pre = {precompose(R, F).key() for F in fs}
        ok = len(fs) == len(cones) == len(pre)
        cert["codomains"].append({"codomain": C.name, "functors": len(fs), "cones": len(cones),
                                  "injective": len(pre) == len(fs)})
        if not ok:
            raise UnrealizedError(
                f"certificate failed for {T.name} against {C.name}: "
                f"{len(fs)} functors, {len(cones)} cones, {len(pre)} distinct restrictions")
    R.certificate = cert
    if A is not A0 or B is not B0:
        R.A, R.B = A0, B0
        R.tab = (A, B, _fromLabels(A0, A), _fromLabels(B0, B))
        R.cone = precomposeCone(R.cone, _toLabels(A0, A), _toLabels(B0, B)).tabulated()
    _CACHE[key] = (R, A0, B0)
    return R


def _fromLabels(X, T):
    """T -> X for a tabulation T of X."""
    if X is T:
        return identityFunctor(X)
    lab = T.labels
    return DoubleFunctor(T, X, *(lambda i, k=k: lab[k][i] for k in ("object", "hcell", "vcell", "square")))


def _toLabels(X, T):
    """X -> T for a tabulation T of X."""
    if X is T:
        return identityFunctor(X)
    return DoubleFunctor(X, T, *(lambda x, k=k: T.cell_of_label(k, x)
                                 for k in ("object", "hcell", "vcell", "square")))


def _realize(A, B, P, d, budget):
    sym = P.sym
    hp, vp = sym.hp, sym.vp
    hpaths = _closure_paths({p for _, p in P.hgens} | {(o, ()) for o in P.objects}, hp, d)
    vpaths = _closure_paths({p for _, p in P.vgens} | {(o, ()) for o in P.objects}, vp, d)
    E = _EGraph(P, d, budget)
    for p in hpaths:
        E.node(("iv", p))
    for q in vpaths:
        E.node(("ih", q))
    for k, _ in P.sqgens:
        E.node(("gen", k))
    for _, _, lhs, rhs in P.relations:
        E.union(E.term(lhs), E.term(rhs))
    E.rebuild()
    E.saturate()
    act = [c for c in E.classes() if E.active(c)]
    for c in act:
        for p in E.frame[c][:2]:
            if p not in hpaths:
                raise _Unbounded("a square has a horizontal boundary beyond the depth bound")
        for q in E.frame[c][2:]:
            if q not in vpaths:
                raise _Unbounded("a square has a vertical boundary beyond the depth bound")
    aset = set(act)
    for a in act:
        for b in act:
            for op, ok in (("H", E.frame[a][3] == E.frame[b][2]), ("V", E.frame[a][1] == E.frame[b][0])):
                if ok and E.node((op, a, b)) not in aset:
                    raise _Unbounded(f"a {op} composite needs a word deeper than {d}")
    return _emit(A, B, P, E, act, hpaths, vpaths)


def _emit(A, B, P, E, act, hpaths, vpaths):
    sym = P.sym
    objs = list(P.objects)
    oi = {o: i for i, o in enumerate(objs)}
    hs = sorted(hpaths, key=lambda p: (len(p[1]), repr(p)))
    vs = sorted(vpaths, key=lambda p: (len(p[1]), repr(p)))
    hi = {p: i for i, p in enumerate(hs)}
    vi = {p: i for i, p in enumerate(vs)}
    memo = {}
    words = {c: E.representative(c, memo) for c in act}
    order = sorted(act, key=lambda c: (E.depth[c], repr(words[c])))
    si = {c: i for i, c in enumerate(order)}
    hcells = [(oi[p[0]], oi[sym.hp.tgt(p)]) for p in hs]
    vcells = [(oi[q[0]], oi[sym.vp.tgt(q)]) for q in vs]
    squares = []
    for c in order:
        t, b, l, r = E.frame[c]
        squares.append((hi[t], hi[b], vi[l], vi[r]))
    hid = [hi[(o, ())] for o in objs]
    vid = [vi[(o, ())] for o in objs]
    cls = lambda n: si[E.node(n)]
    sqhid = [cls(("ih", q)) for q in vs]
    sqvid = [cls(("iv", p)) for p in hs]
    h1, v1, h2, v2 = {}, {}, {}, {}
    for p in hs:
        for q in hs:
            if sym.hp.tgt(p) == q[0]:
                h1[hi[p], hi[q]] = hi[sym.hp.cat(p, q)]
    for p in vs:
        for q in vs:
            if sym.vp.tgt(p) == q[0]:
                v1[vi[p], vi[q]] = vi[sym.vp.cat(p, q)]
    for a in order:
        for b in order:
            if E.frame[a][3] == E.frame[b][2]:
                h2[si[a], si[b]] = cls(("H", a, b))
            if E.frame[a][1] == E.frame[b][0]:
                v2[si[a], si[b]] = cls(("V", a, b))
    nm = lambda o: f"({A.name_of('object', o[0])},{B.name_of('object', o[1])})"
    T = FiniteDoubleCategory(
        len(objs), hcells, vcells, squares, hid, vid, sqhid, sqvid, h1, v1, h2, v2,
        name=f"{A.name}(x){B.name}",
        names={"object": [nm(o) for o in objs],
               "hcell": [_pname(A, B, p) for p in hs], "vcell": [_pname(A, B, q, "v") for q in vs],
               "square": [_wname(A, B, words[c]) for c in order]},
        labels={"object": objs, "hcell": hs, "vcell": vs, "square": [words[c] for c in order]})
    genMap = {}
    for k, _ in P.hgens:
        genMap[k] = hi[sym.hp.single("A", k[1], k[2]) if k[0] == "ho" else sym.hp.single("B", k[1], k[2])]
    for k, _ in P.vgens:
        genMap[k] = vi[sym.vp.single("A", k[1], k[2]) if k[0] == "vo" else sym.vp.single("B", k[1], k[2])]
    for k, _ in P.sqgens:
        genMap[k] = cls(("gen", k))
    R = RealizedTensor(A, B, T, genMap, {}, words=[words[c] for c in order])

    def cell(kind):
        return {"o": lambda a, b: oi[(a, b)],
                "ho": lambda a, b: hi[sym.ho(a, b)], "oh": lambda a, b: hi[sym.oh(a, b)],
                "vo": lambda a, b: vi[sym.vo(a, b)], "ov": lambda a, b: vi[sym.ov(a, b)]}[kind]

    maps = {"oo": cell("o"), "ho": cell("ho"), "oh": cell("oh"), "vo": cell("vo"), "ov": cell("ov")}
    for t in TAGS:
        if t not in maps:
            maps[t] = lambda a, b, t=t: si[E.term(sym.get(t, a, b))]
    R.cone = TensorCone(A, B, T, maps).tabulated()
    return R


def _pname(A, B, p, d="h"):
    if not p[1]:
        return "1"
    parts = []
    for side, a, b in p[1]:
        if side == "A":
            parts.append(f"{A.name_of(d + 'cell', a)}*{B.name_of('object', b)}")
        else:
            parts.append(f"{A.name_of('object', a)}*{B.name_of(d + 'cell', b)}")
    return ";".join(parts)


def _wname(A, B, w):
    op = w[0]
    if op == "gen":
        tag, a, b = w[1]
        ka, kb = {"o": "object", "h": "hcell", "v": "vcell", "s": "square"}[tag[0]], \
            {"o": "object", "h": "hcell", "v": "vcell", "s": "square"}[tag[1]]
        return f"{tag}({A.name_of(ka, a)},{B.name_of(kb, b)})"
    if op == "id":
        return "1"
    if op == "iv":
        return f"1[{_pname(A, B, w[1])}]"
    if op == "ih":
        return f"1[{_pname(A, B, w[1], 'v')}]"
    return f"{op}({_wname(A, B, w[1])},{_wname(A, B, w[2])})"


# -- functors out of the realized tensor ---------------------------------------------

def inducedFunctor(R, c):
    """The double functor T -> C agreeing with the cone c on generators."""
    if R.tab is not None:
        c = precomposeCone(c, R.tab[2], R.tab[3])
    T, C = R.category, c.C
    labels = T.labels

    def path(p, d):
        o = c.oo(*p[0])
        if not p[1]:
            return C.hId(o) if d == "h" else C.vId(o)
        cells = []
        for side, a, b in p[1]:
            if d == "h":
                cells.append(c.ho(a, b) if side == "A" else c.oh(a, b))
            else:
                cells.append(c.vo(a, b) if side == "A" else c.ov(a, b))
        out = cells[0]
        for x in cells[1:]:
            out = C.hComp1(out, x) if d == "h" else C.vComp1(out, x)
        return out

    def word(w):
        op = w[0]
        if op == "gen":
            return c.get(*w[1])
        if op == "id":
            return C.sqVId(C.hId(c.oo(*w[1])))
        if op == "iv":
            return C.sqVId(path(w[1], "h"))
        if op == "ih":
            return C.sqHId(path(w[1], "v"))
        a, b = word(w[1]), word(w[2])
        return C.hComp2(a, b) if op == "H" else C.vComp2(a, b)

    objs = {i: c.oo(*o) for i, o in enumerate(labels["object"])}
    hs = {i: path(p, "h") for i, p in enumerate(labels["hcell"])}
    vs = {i: path(p, "v") for i, p in enumerate(labels["vcell"])}
    sq = {i: word(w) for i, w in enumerate(labels["square"])}
    return DoubleFunctor(T, C, objs, hs, vs, sq, label=f"induced({c!r})")


def precompose(R, F):
    """The cone obtained by restricting F: T -> C along the universal cone."""
    from .tensor import postcomposeCone
    return postcomposeCone(R.cone, F).tabulated()
