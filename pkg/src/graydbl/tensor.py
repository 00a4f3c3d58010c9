"""Cones presenting double functors out of a Gray tensor product, and currying."""

from itertools import product

from .core import Report
from .errors import StructuralError
from .functor import DoubleFunctor, enumerateDoubleFunctors, validateFunctor
from .hom import HPseudo, Modification, VPseudo, hom
from .search import Budget, backtrack

# Tags of the cone maps.  The first letter refers to the cell of A, the second
# to the cell of B: o object, h hcell, v vcell, s square.  ``hhi`` and ``vvi``
# hold the inverses of the interchangers.
TAGS = ("oo", "ho", "oh", "vo", "ov", "so", "os", "hv", "vh", "hh", "hhi", "vv", "vvi")
_KINDS = {"o": "object", "h": "hcell", "v": "vcell", "s": "square"}


class TensorCone:
    """Data (a, b) -> a*b on pairs of cells of A and B, valued in C."""

    def __init__(self, A, B, C, maps):
        self.A, self.B, self.C = A, B, C
        self._m = {}
        for t in TAGS:
            m = maps[t]
            self._m[t] = m if isinstance(m, dict) else _Memo(m)
        self._key = None

    def get(self, tag, a, b):
        try:
            return self._m[tag][a, b]
        except KeyError:
            raise StructuralError(f"cone map {tag} undefined at {(a, b)!r}") from None

    def oo(self, X, Y): return self.get("oo", X, Y)
    def ho(self, h, Y): return self.get("ho", h, Y)
    def oh(self, X, p): return self.get("oh", X, p)
    def vo(self, v, Y): return self.get("vo", v, Y)
    def ov(self, X, q): return self.get("ov", X, q)
    def so(self, w, Y): return self.get("so", w, Y)
    def os(self, X, s): return self.get("os", X, s)
    def hv(self, h, q): return self.get("hv", h, q)
    def vh(self, v, p): return self.get("vh", v, p)
    def hh(self, h, p): return self.get("hh", h, p)
    def hhi(self, h, p): return self.get("hhi", h, p)
    def vv(self, v, q): return self.get("vv", v, q)
    def vvi(self, v, q): return self.get("vvi", v, q)

    def domains(self, tag):
        return self.A.cells(_KINDS[tag[0]]), self.B.cells(_KINDS[tag[1]])

    def key(self):
        if self._key is None:
            self._key = tuple(tuple(self.get(t, a, b) for a in da for b in db)
                              for t in TAGS for da, db in [self.domains(t)])
        return self._key

    def __eq__(self, other):
        if not isinstance(other, TensorCone):
            return NotImplemented
        return (self.A is other.A and self.B is other.B and self.C is other.C
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def tabulated(self):
        return TensorCone(self.A, self.B, self.C,
                          {t: {(a, b): self.get(t, a, b) for a in da for b in db}
                           for t in TAGS for da, db in [self.domains(t)]})

    def __repr__(self):
        return f"<cone {self.A.name} x {self.B.name} -> {self.C.name}>"


class _Memo(dict):
    def __init__(self, f):
        super().__init__()
        self.f = f

    def __missing__(self, k):
        v = self[k] = self.f(*k)
        return v


# -- boundaries ---------------------------------------------------------------

def expectedBoundary(c, tag, a, b):
    """The frame (top, bottom, left, right) a square-valued cone entry must have."""
    A, B, C = c.A, c.B, c.C
    if tag == "so":
        t, bt, l, r = A.boundary(a)
        return c.ho(t, b), c.ho(bt, b), c.vo(l, b), c.vo(r, b)
    if tag == "os":
        t, bt, l, r = B.boundary(b)
        return c.oh(a, t), c.oh(a, bt), c.ov(a, l), c.ov(a, r)
    if tag == "hv":
        X, X2, Y, Y2 = A.hsrc(a), A.htgt(a), B.vsrc(b), B.vtgt(b)
        return c.ho(a, Y), c.ho(a, Y2), c.ov(X, b), c.ov(X2, b)
    if tag == "vh":
        X, X2, Y, Y2 = A.vsrc(a), A.vtgt(a), B.hsrc(b), B.htgt(b)
        return c.oh(X, b), c.oh(X2, b), c.vo(a, Y), c.vo(a, Y2)
    if tag in ("hh", "hhi"):
        X, X2, Y, Y2 = A.hsrc(a), A.htgt(a), B.hsrc(b), B.htgt(b)
        top = C.hComp1(c.oh(X, b), c.ho(a, Y2))
        bot = C.hComp1(c.ho(a, Y), c.oh(X2, b))
        l, r = C.vId(c.oo(X, Y)), C.vId(c.oo(X2, Y2))
        return (top, bot, l, r) if tag == "hh" else (bot, top, l, r)
    if tag in ("vv", "vvi"):
        X, X2, Y, Y2 = A.vsrc(a), A.vtgt(a), B.vsrc(b), B.vtgt(b)
        left = C.vComp1(c.vo(a, Y), c.ov(X2, b))
        right = C.vComp1(c.ov(X, b), c.vo(a, Y2))
        t, bt = C.hId(c.oo(X, Y)), C.hId(c.oo(X2, Y2))
        return (t, bt, left, right) if tag == "vv" else (t, bt, right, left)
    raise ValueError(tag)


# -- the conditions ---------------------------------------------------------------

def _identity_values(c):
    """Entries fixed by the identity-collapse condition: (tag, a, b) -> value."""
    A, B, C = c.A, c.B, c.C
    out = {}
    for X in A.objects():
        hx, vx = A.hId(X), A.vId(X)
        for p in B.hcells():
            out["vh", vx, p] = out["hh", hx, p] = out["hhi", hx, p] = C.sqVId(c.oh(X, p))
        for q in B.vcells():
            out["hv", hx, q] = out["vv", vx, q] = out["vvi", vx, q] = C.sqHId(c.ov(X, q))
    for Y in B.objects():
        hy, vy = B.hId(Y), B.vId(Y)
        for h in A.hcells():
            out["hv", h, vy] = out["hh", h, hy] = out["hhi", h, hy] = C.sqVId(c.ho(h, Y))
        for v in A.vcells():
            out["vh", v, hy] = out["vv", v, vy] = out["vvi", v, vy] = C.sqHId(c.vo(v, Y))
    return out


def _square_equations(A, B, C, c, g):
    """(condition, witness, keys, thunk) with ``thunk()`` deciding the equation."""
    for cond, wit, keys, lhs, rhs in equationSides(A, B, C, c, g):
        yield cond, wit, keys, (lambda lhs=lhs, rhs=rhs: lhs() == rhs())


def equationSides(A, B, C, c, g):
    """The composition-expansion (vi) and naturality (vii) equations.

    Yields (condition, witness, keys, lhs, rhs) where ``keys`` are the square
    entries involved, ``g(tag, a, b)`` reads an entry and ``lhs()``/``rhs()``
    build the two sides in C.  ``c`` supplies the object, 1-cell and pure
    square entries.
    """
    iA, iB = A.index(), B.index()
    H2, V2 = C.hComp2, C.vComp2
    ivH = lambda h, Y: C.sqVId(c.ho(h, Y))
    ivB = lambda X, p: C.sqVId(c.oh(X, p))
    ihA = lambda v, Y: C.sqHId(c.vo(v, Y))
    ihB = lambda X, q: C.sqHId(c.ov(X, q))

    def eq(cond, wit, keys, lhs, rhs):
        return cond, wit, keys, lhs, rhs

    # (vi) mixed squares
    for h in iA.hcells:
        for q, q2 in iB.vpairs():
            qq = B.vComp1(q, q2)
            yield eq("(vi)", ("hv", h, q, q2), [("hv", h, q), ("hv", h, q2), ("hv", h, qq)],
                     lambda h=h, qq=qq: g("hv", h, qq),
                     lambda h=h, q=q, q2=q2: V2(g("hv", h, q), g("hv", h, q2)))
    for h, h2 in iA.hpairs():
        hh_ = A.hComp1(h, h2)
        for q in iB.vcells:
            yield eq("(vi)", ("hv", h, h2, q), [("hv", h, q), ("hv", h2, q), ("hv", hh_, q)],
                     lambda hh_=hh_, q=q: g("hv", hh_, q),
                     lambda h=h, h2=h2, q=q: H2(g("hv", h, q), g("hv", h2, q)))
    for v in iA.vcells:
        for p, p2 in iB.hpairs():
            pp = B.hComp1(p, p2)
            yield eq("(vi)", ("vh", v, p, p2), [("vh", v, p), ("vh", v, p2), ("vh", v, pp)],
                     lambda v=v, pp=pp: g("vh", v, pp),
                     lambda v=v, p=p, p2=p2: H2(g("vh", v, p), g("vh", v, p2)))
    for v, v2 in iA.vpairs():
        vv_ = A.vComp1(v, v2)
        for p in iB.hcells:
            yield eq("(vi)", ("vh", v, v2, p), [("vh", v, p), ("vh", v2, p), ("vh", vv_, p)],
                     lambda vv_=vv_, p=p: g("vh", vv_, p),
                     lambda v=v, v2=v2, p=p: V2(g("vh", v, p), g("vh", v2, p)))
    # (vi) interchangers
    for h in iA.hcells:
        X, X2 = A.hsrc(h), A.htgt(h)
        for p, p2 in iB.hpairs():
            pp = B.hComp1(p, p2)
            yield eq("(vi)", ("hh", h, p, p2), [("hh", h, p), ("hh", h, p2), ("hh", h, pp)],
                     lambda h=h, pp=pp: g("hh", h, pp),
                     lambda h=h, p=p, p2=p2, X=X, X2=X2: V2(H2(ivB(X, p), g("hh", h, p2)),
                                                            H2(g("hh", h, p), ivB(X2, p2))))
    for h, h2 in iA.hpairs():
        hh_ = A.hComp1(h, h2)
        for p in iB.hcells:
            Y, Y2 = B.hsrc(p), B.htgt(p)
            yield eq("(vi)", ("hh", h, h2, p), [("hh", h, p), ("hh", h2, p), ("hh", hh_, p)],
                     lambda hh_=hh_, p=p: g("hh", hh_, p),
                     lambda h=h, h2=h2, p=p, Y=Y, Y2=Y2: V2(H2(g("hh", h, p), ivH(h2, Y2)),
                                                            H2(ivH(h, Y), g("hh", h2, p))))
    for v in iA.vcells:
        X, X2 = A.vsrc(v), A.vtgt(v)
        for q, q2 in iB.vpairs():
            qq = B.vComp1(q, q2)
            yield eq("(vi)", ("vv", v, q, q2), [("vv", v, q), ("vv", v, q2), ("vv", v, qq)],
                     lambda v=v, qq=qq: g("vv", v, qq),
                     lambda v=v, q=q, q2=q2, X=X, X2=X2: H2(V2(g("vv", v, q), ihB(X2, q2)),
                                                            V2(ihB(X, q), g("vv", v, q2))))
    for v, v2 in iA.vpairs():
        vv_ = A.vComp1(v, v2)
        for q in iB.vcells:
            Y, Y2 = B.vsrc(q), B.vtgt(q)
            yield eq("(vi)", ("vv", v, v2, q), [("vv", v, q), ("vv", v2, q), ("vv", vv_, q)],
                     lambda vv_=vv_, q=q: g("vv", vv_, q),
                     lambda v=v, v2=v2, q=q, Y=Y, Y2=Y2: H2(V2(ihA(v, Y), g("vv", v2, q)),
                                                            V2(g("vv", v, q), ihA(v2, Y2))))
    # (vii) naturality of h*- and v*- at squares of B
    for s in iB.squares:
        t, b, l, r = B.boundary(s)
        for h in iA.hcells:
            X, X2 = A.hsrc(h), A.htgt(h)
            yield eq("(vii)", ("h", h, "square", s),
                     [("hv", h, r), ("hh", h, b), ("hh", h, t), ("hv", h, l)],
                     lambda s=s, h=h, r=r, b=b, X=X: V2(H2(c.os(X, s), g("hv", h, r)), g("hh", h, b)),
                     lambda s=s, h=h, t=t, l=l, X2=X2: V2(g("hh", h, t), H2(g("hv", h, l), c.os(X2, s))))
        for v in iA.vcells:
            X, X2 = A.vsrc(v), A.vtgt(v)
            yield eq("(vii)", ("v", v, "square", s),
                     [("vv", v, l), ("vh", v, b), ("vh", v, t), ("vv", v, r)],
                     lambda s=s, v=v, l=l, b=b, X=X: H2(g("vv", v, l), V2(c.os(X, s), g("vh", v, b))),
                     lambda s=s, v=v, t=t, r=r, X2=X2: H2(V2(g("vh", v, t), c.os(X2, s)), g("vv", v, r)))
    # (vii) compatibility of w*- at 1-cells of B
    for w in iA.squares:
        t, b, l, r = A.boundary(w)
        for p in iB.hcells:
            Y, Y2 = B.hsrc(p), B.htgt(p)
            yield eq("(vii)", ("square", w, "h", p),
                     [("vh", l, p), ("hh", b, p), ("hh", t, p), ("vh", r, p)],
                     lambda w=w, p=p, l=l, b=b, Y2=Y2: V2(H2(g("vh", l, p), c.so(w, Y2)), g("hh", b, p)),
                     lambda w=w, p=p, t=t, r=r, Y=Y: V2(g("hh", t, p), H2(c.so(w, Y), g("vh", r, p))))
        for q in iB.vcells:
            Y, Y2 = B.vsrc(q), B.vtgt(q)
            yield eq("(vii)", ("square", w, "v", q),
                     [("hv", b, q), ("vv", r, q), ("vv", l, q), ("hv", t, q)],
                     lambda w=w, q=q, b=b, r=r, Y=Y: H2(V2(c.so(w, Y), g("hv", b, q)), g("vv", r, q)),
                     lambda w=w, q=q, l=l, t=t, Y2=Y2: H2(g("vv", l, q), V2(g("hv", t, q), c.so(w, Y2))))


def _row(c, X):
    return DoubleFunctor(c.B, c.C, lambda Y: c.oo(X, Y), lambda p: c.oh(X, p),
                         lambda q: c.ov(X, q), lambda s: c.os(X, s))


def _col(c, Y):
    return DoubleFunctor(c.A, c.C, lambda X: c.oo(X, Y), lambda h: c.ho(h, Y),
                         lambda v: c.vo(v, Y), lambda w: c.so(w, Y))


def _frame_check(c):
    A, B, C = c.A, c.B, c.C
    for X in A.objects():
        for Y in B.objects():
            c.oo(X, Y)
    for tag in ("so", "os", "hv", "vh", "hh", "hhi", "vv", "vvi"):
        da, db = c.domains(tag)
        for a in da:
            for b in db:
                s = c.get(tag, a, b)
                want = expectedBoundary(c, tag, a, b)
                if C.boundary(s) != want:
                    raise StructuralError(f"cone entry {tag}{(a, b)!r} has the wrong frame")


def validateCone(c, limit=50):
    """Check a cone against the conditions making it a functor out of the tensor.

    Failing conditions are named "(i)" (functoriality in each variable),
    "(invertibility)", "(v)" (identity collapse), "(vi)" (composition
    expansion) and "(vii)" (naturality and compatibility).
    """
    A, B, C = c.A, c.B, c.C
    rep = Report(limit=limit)
    for X in A.objects():
        r = validateFunctor(_row(c, X))
        for viol in r.violations:
            rep.add("(i)", ("row", X), viol.axiom, *viol.cells)
    for Y in B.objects():
        r = validateFunctor(_col(c, Y))
        for viol in r.violations:
            rep.add("(i)", ("column", Y), viol.axiom, *viol.cells)
    if not rep.ok:
        return rep
    _frame_check(c)
    for h in A.hcells():
        for p in B.hcells():
            s, t = c.hh(h, p), c.hhi(h, p)
            top, bot = C.top(s), C.bottom(s)
            if C.vComp2(s, t) != C.sqVId(top) or C.vComp2(t, s) != C.sqVId(bot):
                rep.add("(invertibility)", ("hh", h, p))
    for v in A.vcells():
        for q in B.vcells():
            s, t = c.vv(v, q), c.vvi(v, q)
            l, r = C.left(s), C.right(s)
            if C.hComp2(s, t) != C.sqHId(l) or C.hComp2(t, s) != C.sqHId(r):
                rep.add("(invertibility)", ("vv", v, q))
    for (tag, a, b), want in _identity_values(c).items():
        if c.get(tag, a, b) != want:
            rep.add("(v)", (tag, a, b))
    for cond, wit, _, thunk in _square_equations(A, B, C, c, c.get):
        if not thunk():
            rep.add(cond, wit)
    return rep


# -- currying -------------------------------------------------------------------

def curryCone(c):
    """The double functor A -> [[B,C]] with X |-> X*-, h |-> h*-, and so on."""
    A, B, C = c.A, c.B, c.C
    T = hom(B, C)
    rows = {}

    def o(X):
        k = X if type(X) is int else id(X)
        if k not in rows:
            rows[k] = (X, _row(c, X))
        return rows[k][1]

    def on_h(h):
        return HPseudo(o(A.hsrc(h)), o(A.htgt(h)), lambda Y: c.ho(h, Y), lambda q: c.hv(h, q),
                       lambda p: c.hh(h, p), lambda p: c.hhi(h, p))

    def on_v(v):
        return VPseudo(o(A.vsrc(v)), o(A.vtgt(v)), lambda Y: c.vo(v, Y), lambda p: c.vh(v, p),
                       lambda q: c.vv(v, q), lambda q: c.vvi(v, q))

    from .functor import Component
    hm, vm = Component(on_h), Component(on_v)

    def on_s(w):
        t, b, l, r = A.boundary(w)
        return Modification(hm(t), hm(b), vm(l), vm(r), lambda Y: c.so(w, Y))

    return DoubleFunctor(A, T, o, hm, vm, on_s, label=f"curry({c!r})")


def uncurryFunctor(F):
    """The cone on (A, B) with values in C corresponding to F: A -> [[B,C]]."""
    A, T = F.dom, F.cod
    B, C = T.A, T.B
    maps = {
        "oo": lambda X, Y: F.obj(X).obj(Y), "oh": lambda X, p: F.obj(X).h(p),
        "ov": lambda X, q: F.obj(X).v(q), "os": lambda X, s: F.obj(X).sq(s),
        "ho": lambda h, Y: F.h(h).obj(Y), "hv": lambda h, q: F.h(h).v(q),
        "hh": lambda h, p: F.h(h).h(p), "hhi": lambda h, p: F.h(h).hinv(p),
        "vo": lambda v, Y: F.v(v).obj(Y), "vh": lambda v, p: F.v(v).h(p),
        "vv": lambda v, q: F.v(v).v(q), "vvi": lambda v, q: F.v(v).vinv(q),
        "so": lambda w, Y: F.sq(w).obj(Y),
    }
    return TensorCone(A, B, C, maps)


# -- operations on cones ------------------------------------------------------------

def postcomposeCone(c, K):
    """K applied to every entry of c."""
    ap = {"o": K.obj, "h": K.h, "v": K.v, "s": K.sq}
    kind_of = {"oo": "o", "ho": "h", "oh": "h", "vo": "v", "ov": "v"}
    maps = {t: (lambda a, b, t=t, f=ap[kind_of.get(t, "s")]: f(c.get(t, a, b))) for t in TAGS}
    return TensorCone(c.A, c.B, K.cod, maps)


def precomposeCone(c, F, G):
    """The cone (a, b) |-> F(a) * G(b) on F.dom and G.dom."""
    ap = {"o": "obj", "h": "h", "v": "v", "s": "sq"}
    maps = {}
    for t in TAGS:
        fa, gb = getattr(F, ap[t[0]]), getattr(G, ap[t[1]])
        maps[t] = lambda a, b, t=t, fa=fa, gb=gb: c.get(t, fa(a), gb(b))
    return TensorCone(F.dom, G.dom, c.C, maps)


def swapCone(c):
    """The cone on (B, A) given by (b, a) |-> a * b; interchangers get inverted."""
    sw = {"oo": "oo", "ho": "oh", "oh": "ho", "vo": "ov", "ov": "vo", "so": "os", "os": "so",
          "hv": "vh", "vh": "hv", "hh": "hhi", "hhi": "hh", "vv": "vvi", "vvi": "vv"}
    maps = {t: (lambda b, a, s=sw[t]: c.get(s, a, b)) for t in TAGS}
    return TensorCone(c.B, c.A, c.C, maps)


def productCone(A, B):
    """The cone into the cartesian product with identity interchangers."""
    from .core import cartesianProduct
    P = cartesianProduct(A, B)
    return _product_cone(A, B, P)


def _product_cone(A, B, P):
    f = lambda kind, a, b: P.cell_of_label(kind, (a, b))
    maps = {
        "oo": lambda X, Y: f("object", X, Y),
        "ho": lambda h, Y: f("hcell", h, B.hId(Y)), "oh": lambda X, p: f("hcell", A.hId(X), p),
        "vo": lambda v, Y: f("vcell", v, B.vId(Y)), "ov": lambda X, q: f("vcell", A.vId(X), q),
        "so": lambda w, Y: f("square", w, B.sqVId(B.hId(Y))),
        "os": lambda X, s: f("square", A.sqVId(A.hId(X)), s),
        "hv": lambda h, q: f("square", A.sqVId(h), B.sqHId(q)),
        "vh": lambda v, p: f("square", A.sqHId(v), B.sqVId(p)),
    }
    maps["hh"] = maps["hhi"] = lambda h, p: f("square", A.sqVId(h), B.sqVId(p))
    maps["vv"] = maps["vvi"] = lambda v, q: f("square", A.sqHId(v), B.sqHId(q))
    return TensorCone(A, B, P, maps)


# -- enumeration -------------------------------------------------------------------

def _stage2_vars(A, B):
    """Free square entries: pairs of non-identity 1-cells."""
    iA, iB = A.index(), B.index()
    hidA = {A.hId(x) for x in iA.objects}
    vidA = {A.vId(x) for x in iA.objects}
    hidB = {B.hId(y) for y in iB.objects}
    vidB = {B.vId(y) for y in iB.objects}
    hA = [h for h in iA.hcells if h not in hidA]
    vA = [v for v in iA.vcells if v not in vidA]
    hB = [p for p in iB.hcells if p not in hidB]
    vB = [q for q in iB.vcells if q not in vidB]
    out = ([("hv", h, q) for h in hA for q in vB] + [("vh", v, p) for v in vA for p in hB]
           + [("hh", h, p) for h in hA for p in hB] + [("vv", v, q) for v in vA for q in vB])
    return out


class _Partial:
    """Stage-one data (rows and columns) exposed through the cone interface."""

    def __init__(self, A, B, C, rows, cols):
        self.A, self.B, self.C = A, B, C
        self.rows, self.cols = rows, cols

    def oo(self, X, Y): return self.rows[X].obj(Y)
    def oh(self, X, p): return self.rows[X].h(p)
    def ov(self, X, q): return self.rows[X].v(q)
    def os(self, X, s): return self.rows[X].sq(s)
    def ho(self, h, Y): return self.cols[Y].h(h)
    def vo(self, v, Y): return self.cols[Y].v(v)
    def so(self, w, Y): return self.cols[Y].sq(w)


def _okey(x):
    return x


def enumerateCones(A, B, C, budget=None):
    """All valid cones on (A, B) with values in C.

    Rows X*- and columns -*Y are drawn from the double functors B -> C and
    A -> C agreeing on objects; the remaining square entries are found by
    backtracking under the conditions checked by validateCone.
    """
    budget = budget or Budget()
    iA, iB, iC = A.index(), B.index(), C.index()
    funB = enumerateDoubleFunctors(B, C, budget)
    funA = enumerateDoubleFunctors(A, C, budget)
    objsA, objsB = iA.objects, iB.objects
    cols_by_obj = {}
    for G in funA:
        cols_by_obj.setdefault(tuple(G.obj(X) for X in objsA), []).append(G)
    vars_ = _stage2_vars(A, B)
    pos = {k: i for i, k in enumerate(vars_)}
    out = []
    for row_choice in product(funB, repeat=len(objsA)):
        budget.spend()
        rows = dict(zip(objsA, row_choice))
        col_lists = []
        for Y in objsB:
            col_lists.append(cols_by_obj.get(tuple(rows[X].obj(Y) for X in objsA), []))
        for col_choice in product(*col_lists):
            budget.spend()
            cols = dict(zip(objsB, col_choice))
            part = _Partial(A, B, C, rows, cols)
            for sol in _stage2(part, vars_, pos, iC, budget):
                out.append(sol)
    return out


def _stage2(part, vars_, pos, iC, budget):
    A, B, C = part.A, part.B, part.C
    fixed = {}

    def fixed_of():
        # identity entries, computed lazily through the partial cone
        return _identity_values(_FixedView(part))

    fixed = fixed_of()
    a = [None] * len(vars_)

    def g(tag, x, y):
        key = ("hh" if tag == "hhi" else "vv" if tag == "vvi" else tag, x, y)
        if (tag, x, y) in fixed:
            return fixed[tag, x, y]
        i = pos.get(key)
        if i is None or a[i] is None:
            raise KeyError(key)
        val = a[i]
        if tag in ("hh", "vv"):
            return val[0]
        if tag in ("hhi", "vvi"):
            return val[1]
        return val

    cons = [[] for _ in vars_]
    for cond, wit, keys, thunk in _square_equations(A, B, C, part, g):
        idx = [pos[k] for k in keys if k in pos]
        if not idx:
            if not thunk():
                return
            continue
        cons[max(idx)].append(thunk)

    fake = _FrameView(part)

    def candidates(i, _a):
        tag, x, y = vars_[i]
        frame = expectedBoundary(fake, tag, x, y)
        if tag == "hh":
            return [(s, iC.vinv(s)) for s in iC.vinvertible(*frame)]
        if tag == "vv":
            return [(s, iC.hinv(s)) for s in iC.hinvertible(*frame)]
        return iC.sq_bnd.get(frame, ())

    def check(i, assignment):
        for j in range(i + 1, len(a)):
            a[j] = None
        for j in range(i + 1):
            a[j] = assignment[j]
        for thunk in cons[i]:
            if not thunk():
                return False
        return True

    for sol in backtrack(len(vars_), candidates, check, budget):
        entries = {}
        for k, val in zip(vars_, sol):
            tag, x, y = k
            if tag in ("hh", "vv"):
                entries[k] = val[0]
                entries[(tag + "i", x, y)] = val[1]
            else:
                entries[k] = val
        yield _assemble(part, fixed, entries)


class _FixedView(_Partial):
    def __init__(self, part):
        self.__dict__.update(part.__dict__)


class _FrameView(_FixedView):
    pass


def _assemble(part, fixed, entries):
    A, B, C = part.A, part.B, part.C
    maps = {}
    for t, fn in (("oo", part.oo), ("oh", part.oh), ("ov", part.ov), ("os", part.os),
                  ("ho", part.ho), ("vo", part.vo), ("so", part.so)):
        da = A.cells(_KINDS[t[0]])
        db = B.cells(_KINDS[t[1]])
        maps[t] = {(x, y): fn(x, y) for x in da for y in db}
    for t in ("hv", "vh", "hh", "hhi", "vv", "vvi"):
        da, db = A.cells(_KINDS[t[0]]), B.cells(_KINDS[t[1]])
        m = {}
        for x in da:
            for y in db:
                k = (t, x, y)
                m[x, y] = fixed[k] if k in fixed else entries[k]
        maps[t] = m
    return TensorCone(A, B, C, maps)


def countCones(A, B, C, budget=None):
    return len(enumerateCones(A, B, C, budget))


def checkAdjunction(A, B, C, budget=None):
    """Count both sides of cones(A, B; C) = DblCat(A, [[B,C]]) and check that
    currying and uncurrying are mutually inverse on them.

    Returns (ok, info) with the two counts and the first failing item, if any.
    """
    cones = enumerateCones(A, B, C, budget)
    fs = enumerateDoubleFunctors(A, hom(B, C), budget)
    info = {"cones": len(cones), "functors": len(fs)}
    for c in cones:
        if uncurryFunctor(curryCone(c)).tabulated() != c.tabulated():
            info["witness"] = ("uncurry(curry(c)) differs", c)
            return False, info
    for F in fs:
        if curryCone(uncurryFunctor(F)) != F:
            info["witness"] = ("curry(uncurry(F)) differs", F)
            return False, info
    return len(cones) == len(fs), info
