"""Pseudotransformations, modifications and the hom double categories."""

from .core import DoubleCategory, Report, tabulate, terminal
from .errors import StructuralError
from .functor import DoubleFunctor, Value, Component, enumerateDoubleFunctors, composeFunctors
from .search import Budget, backtrack


class HPseudo(Value):
    """Horizontal pseudotransformation x: F -> G.

    Components: x_A (hcell), x_f (square, per vcell f), x^h (vertically
    invertible square, per hcell h) with stored inverse.
    """

    __slots__ = ("src", "tgt", "dom", "cod", "_o", "_v", "_h", "_hi", "_key", "_hash")
    _comps = (("obj", "object"), ("v", "vcell"), ("h", "hcell"), ("hinv", "hcell"))

    def __init__(self, src, tgt, obj, v, h, hinv):
        self.src, self.tgt = src, tgt
        self.dom, self.cod = src.dom, src.cod
        self._o, self._v, self._h, self._hi = (Component(m) for m in (obj, v, h, hinv))
        self._key = self._hash = None

    def _head(self):
        return (self.src, self.tgt)

    def obj(self, a):
        return self._o(a)

    def v(self, f):
        return self._v(f)

    def h(self, h):
        return self._h(h)

    def hinv(self, h):
        return self._hi(h)

    def __repr__(self):
        return f"x<{self.src!r}->{self.tgt!r}>"


class VPseudo(Value):
    """Vertical pseudotransformation y: F -> H.

    Components: y_A (vcell), y_h (square, per hcell h), y^f (horizontally
    invertible square, per vcell f) with stored inverse.
    """

    __slots__ = ("src", "tgt", "dom", "cod", "_o", "_h", "_v", "_vi", "_key", "_hash")
    _comps = (("obj", "object"), ("h", "hcell"), ("v", "vcell"), ("vinv", "vcell"))

    def __init__(self, src, tgt, obj, h, v, vinv):
        self.src, self.tgt = src, tgt
        self.dom, self.cod = src.dom, src.cod
        self._o, self._h, self._v, self._vi = (Component(m) for m in (obj, h, v, vinv))
        self._key = self._hash = None

    def _head(self):
        return (self.src, self.tgt)

    def obj(self, a):
        return self._o(a)

    def h(self, h):
        return self._h(h)

    def v(self, f):
        return self._v(f)

    def vinv(self, f):
        return self._vi(f)

    def __repr__(self):
        return f"y<{self.src!r}->{self.tgt!r}>"


class Modification(Value):
    """A square with top x, bottom z (horizontal) and left y, right v (vertical)."""

    __slots__ = ("top", "bottom", "left", "right", "dom", "cod", "_o", "_key", "_hash")
    _comps = (("obj", "object"),)

    def __init__(self, top, bottom, left, right, comp):
        self.top, self.bottom, self.left, self.right = top, bottom, left, right
        self.dom, self.cod = top.dom, top.cod
        self._o = Component(comp)
        self._key = self._hash = None

    def _head(self):
        return (self.top, self.bottom, self.left, self.right)

    def obj(self, a):
        return self._o(a)

    def __repr__(self):
        return f"Theta<{self.top!r}|{self.left!r}>"


# -- identities and composites ------------------------------------------------

def identityHPseudo(F):
    B = F.cod
    return HPseudo(F, F, lambda a: B.hId(F.obj(a)), lambda f: B.sqHId(F.v(f)),
                   lambda h: B.sqVId(F.h(h)), lambda h: B.sqVId(F.h(h)))


def identityVPseudo(F):
    B = F.cod
    return VPseudo(F, F, lambda a: B.vId(F.obj(a)), lambda h: B.sqVId(F.h(h)),
                   lambda f: B.sqHId(F.v(f)), lambda f: B.sqHId(F.v(f)))


def composeHPseudo(z, x):
    """z after x, for x: F -> G and z: G -> K."""
    if x.tgt != z.src:
        raise StructuralError("horizontal pseudotransformations are not composable")
    A, B = x.dom, x.cod

    def ch(h):
        a, c = A.hsrc(h), A.htgt(h)
        return B.vComp2(B.hComp2(x.h(h), B.sqVId(z.obj(c))), B.hComp2(B.sqVId(x.obj(a)), z.h(h)))

    def chi(h):
        a, c = A.hsrc(h), A.htgt(h)
        return B.vComp2(B.hComp2(B.sqVId(x.obj(a)), z.hinv(h)), B.hComp2(x.hinv(h), B.sqVId(z.obj(c))))

    return HPseudo(x.src, z.tgt, lambda a: B.hComp1(x.obj(a), z.obj(a)),
                   lambda f: B.hComp2(x.v(f), z.v(f)), ch, chi)


def composeVPseudo(w, y):
    """w after y, for y: F -> H and w: H -> K."""
    if y.tgt != w.src:
        raise StructuralError("vertical pseudotransformations are not composable")
    A, B = y.dom, y.cod

    def cv(f):
        a, b = A.vsrc(f), A.vtgt(f)
        return B.hComp2(B.vComp2(B.sqHId(y.obj(a)), w.v(f)), B.vComp2(y.v(f), B.sqHId(w.obj(b))))

    def cvi(f):
        a, b = A.vsrc(f), A.vtgt(f)
        return B.hComp2(B.vComp2(y.vinv(f), B.sqHId(w.obj(b))), B.vComp2(B.sqHId(y.obj(a)), w.vinv(f)))

    return VPseudo(y.src, w.tgt, lambda a: B.vComp1(y.obj(a), w.obj(a)),
                   lambda h: B.vComp2(y.h(h), w.h(h)), cv, cvi)


def composeModH(P, Q):
    """Horizontal composite: P then Q (P.right = Q.left)."""
    if P.right != Q.left:
        raise StructuralError("modifications are not horizontally composable")
    B = P.cod
    return Modification(composeHPseudo(Q.top, P.top), composeHPseudo(Q.bottom, P.bottom),
                        P.left, Q.right, lambda a: B.hComp2(P.obj(a), Q.obj(a)))


def composeModV(P, Q):
    """Vertical composite: P then Q (P.bottom = Q.top)."""
    if P.bottom != Q.top:
        raise StructuralError("modifications are not vertically composable")
    B = P.cod
    return Modification(P.top, Q.bottom, composeVPseudo(Q.left, P.left),
                        composeVPseudo(Q.right, P.right), lambda a: B.vComp2(P.obj(a), Q.obj(a)))


# -- validation ----------------------------------------------------------------

def _frame(rep, what, B, s, want):
    if B.boundary(s) != want:
        raise StructuralError(f"frame mismatch at {what}")


def validateHPseudo(x):
    F, G, A, B = x.src, x.tgt, x.dom, x.cod
    rep = Report()
    d = A.describe
    idx = A.index()
    for a in idx.objects:
        xa = x.obj(a)
        if B.hsrc(xa) != F.obj(a) or B.htgt(xa) != G.obj(a):
            raise StructuralError(f"frame mismatch at component {d('object', a)}")
    for f in idx.vcells:
        a, b = A.vsrc(f), A.vtgt(f)
        _frame(rep, d("vcell", f), B, x.v(f), (x.obj(a), x.obj(b), F.v(f), G.v(f)))
    for h in idx.hcells:
        a, c = A.hsrc(h), A.htgt(h)
        want = (B.hComp1(F.h(h), x.obj(c)), B.hComp1(x.obj(a), G.h(h)), B.vId(F.obj(a)), B.vId(G.obj(c)))
        _frame(rep, d("hcell", h), B, x.h(h), want)
        _frame(rep, d("hcell", h) + " (inverse)", B, x.hinv(h), (want[1], want[0], want[2], want[3]))
        if (B.vComp2(x.h(h), x.hinv(h)) != B.sqVId(want[0])
                or B.vComp2(x.hinv(h), x.h(h)) != B.sqVId(want[1])):
            rep.add("(invertibility)", d("hcell", h))
    for a in idx.objects:
        if x.v(A.vId(a)) != B.sqVId(x.obj(a)):
            rep.add("(i) vertical functoriality", d("object", a))
        if x.h(A.hId(a)) != B.sqVId(x.obj(a)):
            rep.add("(ii) horizontal functoriality", d("object", a))
    for f, g in idx.vpairs():
        if x.v(A.vComp1(f, g)) != B.vComp2(x.v(f), x.v(g)):
            rep.add("(i) vertical functoriality", d("vcell", f), d("vcell", g))
    for h, k in idx.hpairs():
        want = B.vComp2(B.hComp2(B.sqVId(F.h(h)), x.h(k)), B.hComp2(x.h(h), B.sqVId(G.h(k))))
        if x.h(A.hComp1(h, k)) != want:
            rep.add("(ii) horizontal functoriality", d("hcell", h), d("hcell", k))
    for w in idx.squares:
        t, b, l, r = A.boundary(w)
        lhs = B.vComp2(B.hComp2(F.sq(w), x.v(r)), x.h(b))
        rhs = B.vComp2(x.h(t), B.hComp2(x.v(l), G.sq(w)))
        if lhs != rhs:
            rep.add("(iii) naturality", d("square", w))
    return rep


def validateVPseudo(y):
    F, H, A, B = y.src, y.tgt, y.dom, y.cod
    rep = Report()
    d = A.describe
    idx = A.index()
    for a in idx.objects:
        ya = y.obj(a)
        if B.vsrc(ya) != F.obj(a) or B.vtgt(ya) != H.obj(a):
            raise StructuralError(f"frame mismatch at component {d('object', a)}")
    for h in idx.hcells:
        a, c = A.hsrc(h), A.htgt(h)
        _frame(rep, d("hcell", h), B, y.h(h), (F.h(h), H.h(h), y.obj(a), y.obj(c)))
    for f in idx.vcells:
        a, b = A.vsrc(f), A.vtgt(f)
        want = (B.hId(F.obj(a)), B.hId(H.obj(b)), B.vComp1(y.obj(a), H.v(f)), B.vComp1(F.v(f), y.obj(b)))
        _frame(rep, d("vcell", f), B, y.v(f), want)
        _frame(rep, d("vcell", f) + " (inverse)", B, y.vinv(f), (want[0], want[1], want[3], want[2]))
        if (B.hComp2(y.v(f), y.vinv(f)) != B.sqHId(want[2])
                or B.hComp2(y.vinv(f), y.v(f)) != B.sqHId(want[3])):
            rep.add("(invertibility)", d("vcell", f))
    for a in idx.objects:
        if y.h(A.hId(a)) != B.sqHId(y.obj(a)):
            rep.add("(i) horizontal functoriality", d("object", a))
        if y.v(A.vId(a)) != B.sqHId(y.obj(a)):
            rep.add("(ii) vertical functoriality", d("object", a))
    for h, k in idx.hpairs():
        if y.h(A.hComp1(h, k)) != B.hComp2(y.h(h), y.h(k)):
            rep.add("(i) horizontal functoriality", d("hcell", h), d("hcell", k))
    for f, g in idx.vpairs():
        want = B.hComp2(B.vComp2(y.v(f), B.sqHId(H.v(g))), B.vComp2(B.sqHId(F.v(f)), y.v(g)))
        if y.v(A.vComp1(f, g)) != want:
            rep.add("(ii) vertical functoriality", d("vcell", f), d("vcell", g))
    for w in idx.squares:
        t, b, l, r = A.boundary(w)
        lhs = B.hComp2(y.v(l), B.vComp2(F.sq(w), y.h(b)))
        rhs = B.hComp2(B.vComp2(y.h(t), H.sq(w)), y.v(r))
        if lhs != rhs:
            rep.add("(iii) naturality", d("square", w))
    return rep


def validateModification(M):
    x, z, y, v = M.top, M.bottom, M.left, M.right
    A, B = M.dom, M.cod
    if not (x.src == y.src and x.tgt == v.src and z.src == y.tgt and z.tgt == v.tgt):
        raise StructuralError("modification frame: corners do not match")
    rep = Report()
    d = A.describe
    idx = A.index()
    for a in idx.objects:
        if B.boundary(M.obj(a)) != (x.obj(a), z.obj(a), y.obj(a), v.obj(a)):
            raise StructuralError(f"frame mismatch at component {d('object', a)}")
    for h in idx.hcells:
        a, c = A.hsrc(h), A.htgt(h)
        lhs = B.vComp2(B.hComp2(y.h(h), M.obj(c)), z.h(h))
        rhs = B.vComp2(x.h(h), B.hComp2(M.obj(a), v.h(h)))
        if lhs != rhs:
            rep.add("(i) horizontal compatibility", d("hcell", h))
    for f in idx.vcells:
        a, b = A.vsrc(f), A.vtgt(f)
        lhs = B.hComp2(B.vComp2(M.obj(a), z.v(f)), v.v(f))
        rhs = B.hComp2(y.v(f), B.vComp2(x.v(f), M.obj(b)))
        if lhs != rhs:
            rep.add("(ii) vertical compatibility", d("vcell", f))
    return rep


# -- enumeration ---------------------------------------------------------------

def _pairs_constraints(n_vars, items):
    cons = [[] for _ in range(n_vars)]
    for deps, fn in items:
        cons[max(deps)].append(fn)
    return cons


def enumerateHPseudo(F, G, budget=None, strict=False):
    """All horizontal pseudotransformations F -> G (x^h = identity when strict)."""
    A, B = F.dom, F.cod
    ia, ib = A.index(), B.index()
    objs, vcs, hcs = ia.objects, ia.vcells, ia.hcells
    po = {a: i for i, a in enumerate(objs)}
    pv = {f: len(objs) + i for i, f in enumerate(vcs)}
    ph = {h: len(objs) + len(vcs) + i for i, h in enumerate(hcs)}
    n = len(objs) + len(vcs) + len(hcs)
    plan = [None] * n
    for a in objs:
        plan[po[a]] = ("o", a)
    for f in vcs:
        plan[pv[f]] = ("v", f)
    for h in hcs:
        plan[ph[h]] = ("h", h)

    def candidates(i, s):
        tag, c = plan[i]
        if tag == "o":
            return ib.h_between.get((F.obj(c), G.obj(c)), ())
        if tag == "v":
            a, b = A.vsrc(c), A.vtgt(c)
            if c == A.vId(a):
                return [B.sqVId(s[po[a]])]
            return ib.sq_bnd.get((s[po[a]], s[po[b]], F.v(c), G.v(c)), ())
        a, cc = A.hsrc(c), A.htgt(c)
        top = B.hComp1(F.h(c), s[po[cc]])
        bot = B.hComp1(s[po[a]], G.h(c))
        if c == A.hId(a):
            return [B.sqVId(s[po[a]])]
        if strict:
            return [B.sqVId(top)] if top == bot else ()
        return ib.vinvertible(top, bot, B.vId(F.obj(a)), B.vId(G.obj(cc)))

    items = []
    for f, g in ia.vpairs():
        fg = A.vComp1(f, g)
        items.append(((pv[f], pv[g], pv[fg]),
                      lambda s, f=f, g=g, fg=fg: s[pv[fg]] == B.vComp2(s[pv[f]], s[pv[g]])))
    for h, k in ia.hpairs():
        hk = A.hComp1(h, k)
        items.append(((ph[h], ph[k], ph[hk]),
                      lambda s, h=h, k=k, hk=hk: s[ph[hk]] == B.vComp2(
                          B.hComp2(B.sqVId(F.h(h)), s[ph[k]]), B.hComp2(s[ph[h]], B.sqVId(G.h(k))))))
    for w in ia.squares:
        t, b, l, r = A.boundary(w)
        items.append(((pv[l], pv[r], ph[t], ph[b]),
                      lambda s, w=w, t=t, b=b, l=l, r=r:
                      B.vComp2(B.hComp2(F.sq(w), s[pv[r]]), s[ph[b]])
                      == B.vComp2(s[ph[t]], B.hComp2(s[pv[l]], G.sq(w)))))
    cons = _pairs_constraints(n, items)
    check = lambda i, s: all(fn(s) for fn in cons[i])
    out = []
    for s in backtrack(n, candidates, check, budget or Budget()):
        xo = {a: s[po[a]] for a in objs}
        xv = {f: s[pv[f]] for f in vcs}
        xh = {h: s[ph[h]] for h in hcs}
        xhi = {h: ib.vinv(xh[h]) for h in hcs}
        out.append(HPseudo(F, G, xo, xv, xh, xhi))
    return out


def enumerateVPseudo(F, H, budget=None, strict=False):
    """All vertical pseudotransformations F -> H (y^f = identity when strict)."""
    A, B = F.dom, F.cod
    ia, ib = A.index(), B.index()
    objs, hcs, vcs = ia.objects, ia.hcells, ia.vcells
    po = {a: i for i, a in enumerate(objs)}
    ph = {h: len(objs) + i for i, h in enumerate(hcs)}
    pv = {f: len(objs) + len(hcs) + i for i, f in enumerate(vcs)}
    n = len(objs) + len(hcs) + len(vcs)
    plan = [None] * n
    for a in objs:
        plan[po[a]] = ("o", a)
    for h in hcs:
        plan[ph[h]] = ("h", h)
    for f in vcs:
        plan[pv[f]] = ("v", f)

    def candidates(i, s):
        tag, c = plan[i]
        if tag == "o":
            return ib.v_between.get((F.obj(c), H.obj(c)), ())
        if tag == "h":
            a, cc = A.hsrc(c), A.htgt(c)
            if c == A.hId(a):
                return [B.sqHId(s[po[a]])]
            return ib.sq_bnd.get((F.h(c), H.h(c), s[po[a]], s[po[cc]]), ())
        a, b = A.vsrc(c), A.vtgt(c)
        left = B.vComp1(s[po[a]], H.v(c))
        right = B.vComp1(F.v(c), s[po[b]])
        if c == A.vId(a):
            return [B.sqHId(s[po[a]])]
        if strict:
            return [B.sqHId(left)] if left == right else ()
        return ib.hinvertible(B.hId(F.obj(a)), B.hId(H.obj(b)), left, right)

    items = []
    for h, k in ia.hpairs():
        hk = A.hComp1(h, k)
        items.append(((ph[h], ph[k], ph[hk]),
                      lambda s, h=h, k=k, hk=hk: s[ph[hk]] == B.hComp2(s[ph[h]], s[ph[k]])))
    for f, g in ia.vpairs():
        fg = A.vComp1(f, g)
        items.append(((pv[f], pv[g], pv[fg]),
                      lambda s, f=f, g=g, fg=fg: s[pv[fg]] == B.hComp2(
                          B.vComp2(s[pv[f]], B.sqHId(H.v(g))), B.vComp2(B.sqHId(F.v(f)), s[pv[g]]))))
    for w in ia.squares:
        t, b, l, r = A.boundary(w)
        items.append(((pv[l], pv[r], ph[t], ph[b]),
                      lambda s, w=w, t=t, b=b, l=l, r=r:
                      B.hComp2(s[pv[l]], B.vComp2(F.sq(w), s[ph[b]]))
                      == B.hComp2(B.vComp2(s[ph[t]], H.sq(w)), s[pv[r]])))
    cons = _pairs_constraints(n, items)
    check = lambda i, s: all(fn(s) for fn in cons[i])
    out = []
    for s in backtrack(n, candidates, check, budget or Budget()):
        yo = {a: s[po[a]] for a in objs}
        yh = {h: s[ph[h]] for h in hcs}
        yv = {f: s[pv[f]] for f in vcs}
        yvi = {f: ib.hinv(yv[f]) for f in vcs}
        out.append(VPseudo(F, H, yo, yh, yv, yvi))
    return out


def enumerateModifications(x, z, y, v, budget=None):
    """All modifications in the frame top x, bottom z, left y, right v."""
    A, B = x.dom, x.cod
    ia, ib = A.index(), B.index()
    objs = ia.objects
    po = {a: i for i, a in enumerate(objs)}

    def candidates(i, s):
        a = objs[i]
        return ib.sq_bnd.get((x.obj(a), z.obj(a), y.obj(a), v.obj(a)), ())

    items = []
    for h in ia.hcells:
        a, c = A.hsrc(h), A.htgt(h)
        items.append(((po[a], po[c]), lambda s, h=h, a=a, c=c:
                      B.vComp2(B.hComp2(y.h(h), s[po[c]]), z.h(h))
                      == B.vComp2(x.h(h), B.hComp2(s[po[a]], v.h(h)))))
    for f in ia.vcells:
        a, b = A.vsrc(f), A.vtgt(f)
        items.append(((po[a], po[b]), lambda s, f=f, a=a, b=b:
                      B.hComp2(B.vComp2(s[po[a]], z.v(f)), v.v(f))
                      == B.hComp2(y.v(f), B.vComp2(x.v(f), s[po[b]]))))
    cons = _pairs_constraints(len(objs), items)
    check = lambda i, s: all(fn(s) for fn in cons[i])
    return [Modification(x, z, y, v, {a: s[po[a]] for a in objs})
            for s in backtrack(len(objs), candidates, check, budget or Budget())]


# -- the hom double category ---------------------------------------------------

class Hom(DoubleCategory):
    """The double category [[A,B]] with lazily enumerated cells.

    With ``strict=True`` only transformations whose invertible components are
    identities are enumerated (the strict hom).
    """

    def __init__(self, A, B, strict=False, budget=None):
        self.A, self.B, self.strict = A, B, strict
        self.budget = budget
        self.name = f"{'<<' if strict else '[['}{A.name},{B.name}{'>>' if strict else ']]'}"
        self._cache = {}

    def _budget(self):
        return Budget(self.budget) if self.budget else Budget()

    def objects(self):
        if "o" not in self._cache:
            self._cache["o"] = enumerateDoubleFunctors(self.A, self.B, self._budget())
        return self._cache["o"]

    def hcells(self):
        if "h" not in self._cache:
            out = []
            for F in self.objects():
                for G in self.objects():
                    out.extend(enumerateHPseudo(F, G, self._budget(), self.strict))
            self._cache["h"] = out
        return self._cache["h"]

    def vcells(self):
        if "v" not in self._cache:
            out = []
            for F in self.objects():
                for H in self.objects():
                    out.extend(enumerateVPseudo(F, H, self._budget(), self.strict))
            self._cache["v"] = out
        return self._cache["v"]

    def squares(self):
        if "s" not in self._cache:
            hs, vs = self.hcells(), self.vcells()
            h_between = {}
            for x in hs:
                h_between.setdefault((x.src, x.tgt), []).append(x)
            v_from = {}
            for y in vs:
                v_from.setdefault(y.src, []).append(y)
            out = []
            for x in hs:
                for y in v_from.get(x.src, ()):
                    for v in v_from.get(x.tgt, ()):
                        for z in h_between.get((y.tgt, v.tgt), ()):
                            out.extend(enumerateModifications(x, z, y, v, self._budget()))
            self._cache["s"] = out
        return self._cache["s"]

    def hsrc(self, x):
        return x.src

    def htgt(self, x):
        return x.tgt

    def vsrc(self, y):
        return y.src

    def vtgt(self, y):
        return y.tgt

    def top(self, s):
        return s.top

    def bottom(self, s):
        return s.bottom

    def left(self, s):
        return s.left

    def right(self, s):
        return s.right

    def hId(self, F):
        return identityHPseudo(F)

    def vId(self, F):
        return identityVPseudo(F)

    def sqHId(self, y):
        B = self.B
        return Modification(identityHPseudo(y.src), identityHPseudo(y.tgt), y, y,
                            lambda a: B.sqHId(y.obj(a)))

    def sqVId(self, x):
        B = self.B
        return Modification(x, x, identityVPseudo(x.src), identityVPseudo(x.tgt),
                            lambda a: B.sqVId(x.obj(a)))

    def hComp1(self, x, z):
        return composeHPseudo(z, x)

    def vComp1(self, y, w):
        return composeVPseudo(w, y)

    def hComp2(self, P, Q):
        return composeModH(P, Q)

    def vComp2(self, P, Q):
        return composeModV(P, Q)


_HOMS = {}


def hom(A, B, strict=False):
    """The (cached) lazy hom double category."""
    key = (id(A), id(B), strict)
    if key not in _HOMS:
        _HOMS[key] = (A, B, Hom(A, B, strict))
    return _HOMS[key][2]


def buildHomDouble(A, B, budget=None):
    H = Hom(A, B, budget=budget) if budget else hom(A, B)
    return tabulate(H, name=H.name)


def buildStrictHomDouble(A, B, budget=None):
    H = Hom(A, B, strict=True, budget=budget) if budget else hom(A, B, strict=True)
    return tabulate(H, name=H.name)


def inclusionStrictHom(A, B):
    """The inclusion <<A,B>> -> [[A,B]] (cells are shared values)."""
    f = lambda c: c
    return DoubleFunctor(hom(A, B, strict=True), hom(A, B), f, f, f, f)


# -- functoriality in both arguments --------------------------------------------

def homMap(F, G, strict=False):
    """[[F,G]] : [[A,B]] -> [[A',B']] for F: A' -> A and G: B -> B'."""
    return hmap(F, G, hom(F.cod, G.dom, strict), hom(F.dom, G.cod, strict))


def hmap(F, G, S, T):
    """The action of [[F,G]] from hom S to hom T; F or G may be None (identity)."""
    fo = (lambda a: a) if F is None else F.obj
    fh = (lambda a: a) if F is None else F.h
    fv = (lambda a: a) if F is None else F.v
    fs = (lambda a: a) if F is None else F.sq
    go = (lambda a: a) if G is None else G.obj
    gh = (lambda a: a) if G is None else G.h
    gv = (lambda a: a) if G is None else G.v
    gs = (lambda a: a) if G is None else G.sq
    Ap, Bp = T.A, T.B

    def on_obj(H):
        return DoubleFunctor(Ap, Bp, lambda a: go(H.obj(fo(a))), lambda h: gh(H.h(fh(h))),
                             lambda f: gv(H.v(fv(f))), lambda s: gs(H.sq(fs(s))))

    om = Component(on_obj)

    def on_h(x):
        return HPseudo(om(x.src), om(x.tgt), lambda a: gh(x.obj(fo(a))), lambda f: gs(x.v(fv(f))),
                       lambda h: gs(x.h(fh(h))), lambda h: gs(x.hinv(fh(h))))

    def on_v(y):
        return VPseudo(om(y.src), om(y.tgt), lambda a: gv(y.obj(fo(a))), lambda h: gs(y.h(fh(h))),
                       lambda f: gs(y.v(fv(f))), lambda f: gs(y.vinv(fv(f))))

    hm = Component(on_h)
    vm = Component(on_v)

    def on_s(M):
        return Modification(hm(M.top), hm(M.bottom), vm(M.left), vm(M.right),
                            lambda a: gs(M.obj(fo(a))))

    return DoubleFunctor(S, T, om, hm, vm, on_s,
                         label=f"[[{'1' if F is None else F!r},{'1' if G is None else G!r}]]")


# -- the identification [[1,X]] = X ---------------------------------------------

def collapse(X):
    """[[1,X]] -> X, evaluating at the single object."""
    one = terminal()
    pt, ph, pv, ps = 0, one.hId(0), one.vId(0), one.sqHId(one.vId(0))
    return DoubleFunctor(hom(one, X), X, lambda F: F.obj(pt), lambda x: x.obj(pt),
                         lambda y: y.obj(pt), lambda M: M.obj(pt), label=f"collapse_{X.name}")


def pointFunctor(X, x):
    """The functor 1 -> X picking the object x."""
    one = terminal()
    return DoubleFunctor(one, X, {0: x}, {one.hId(0): X.hId(x)}, {one.vId(0): X.vId(x)},
                         {one.sqHId(one.vId(0)): X.sqHId(X.vId(x))}, label=f"pt({x!r})")


def expand(X):
    """X -> [[1,X]], the inverse of collapse."""
    one = terminal()
    H = hom(one, X)
    hid0, vid0 = one.hId(0), one.vId(0)
    memo = {}

    def o(x):
        k = x if type(x) is int else id(x)
        if k not in memo:
            memo[k] = (x, pointFunctor(X, x))
        return memo[k][1]

    def on_h(h):
        s = X.sqVId(h)
        return HPseudo(o(X.hsrc(h)), o(X.htgt(h)), {0: h}, {vid0: s}, {hid0: s}, {hid0: s})

    def on_v(v):
        s = X.sqHId(v)
        return VPseudo(o(X.vsrc(v)), o(X.vtgt(v)), {0: v}, {hid0: s}, {vid0: s}, {vid0: s})

    hm, vm = Component(on_h), Component(on_v)

    def on_s(s):
        t, b, l, r = X.boundary(s)
        return Modification(hm(t), hm(b), vm(l), vm(r), {0: s})

    return DoubleFunctor(X, H, o, hm, vm, on_s, label=f"expand_{X.name}")
