"""Monoids for the Gray tensor, in flattened form, and their conditions (i)-(vii).

A monoid on A is a unit object I and a cone A x A -> A, written a*b: an
n-cell times an m-cell is an (n+m)-cell, with interchangers h*p (vertically
invertible) and v*q (horizontally invertible).  The cone is stored with the
tags of TensorCone.
"""

from .core import Report
from .errors import StructuralError
from .functor import DoubleFunctor, validateFunctor
from .hom import pointFunctor
from .tensor import TAGS, TensorCone, curryCone, expectedBoundary

CONDITIONS = ("(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)")


class GrayMonoidData:
    """Carrier, unit object and the star maps, keyed by cone tag then (a, b)."""

    def __init__(self, carrier, unit, maps, name=None):
        self.carrier, self.unit = carrier, unit
        self.maps = {t: dict(maps[t]) for t in TAGS}
        self.name = name or f"monoid on {carrier.name}"

    def cone(self):
        A = self.carrier
        return TensorCone(A, A, A, self.maps)

    def star(self, tag, a, b):
        try:
            return self.maps[tag][a, b]
        except KeyError:
            raise StructuralError(f"star map {tag} undefined at {(a, b)!r}") from None

    def copy(self):
        return GrayMonoidData(self.carrier, self.unit, self.maps, self.name)

    def mutate(self, tag, a, b, value, unit=None):
        m = self.copy()
        m.maps[tag][a, b] = value
        if unit is not None:
            m.unit = unit
        return m

    def __repr__(self):
        return f"<GrayMonoidData {self.name}>"


def _all(A, kind):
    return list(A.cells(kind))


def _row(m, X):
    A, s = m.carrier, m.star
    return DoubleFunctor(A, A, lambda Y: s("oo", X, Y), lambda p: s("oh", X, p),
                         lambda q: s("ov", X, q), lambda w: s("os", X, w))


def _col(m, Y):
    A, s = m.carrier, m.star
    return DoubleFunctor(A, A, lambda X: s("oo", X, Y), lambda h: s("ho", h, Y),
                         lambda v: s("vo", v, Y), lambda w: s("so", w, Y))


_APPLY = {"object": "obj", "hcell": "h", "vcell": "v", "square": "sq"}


def _frames(m):
    c = m.cone()
    A = m.carrier
    for tag in ("so", "os", "hv", "vh", "hh", "hhi", "vv", "vvi"):
        da, db = c.domains(tag)
        for a in da:
            for b in db:
                if A.boundary(m.star(tag, a, b)) != expectedBoundary(c, tag, a, b):
                    raise StructuralError(f"star entry {tag}{(a, b)!r} has the wrong frame")


def checkGrayMonoid(m, limit=200):
    """Check conditions (i)-(vii) exhaustively; violations name the condition."""
    A, s, I = m.carrier, m.star, m.unit
    rep = Report(limit=limit)
    objs, hs, vs, sqs = (_all(A, k) for k in ("object", "hcell", "vcell", "square"))
    kinds = ("object", "hcell", "vcell", "square")

    # (i) X*- and -*X are double functors
    for X in objs:
        for side, F in (("X*-", _row(m, X)), ("-*X", _col(m, X))):
            for viol in validateFunctor(F).violations:
                rep.add("(i)", (side, X), viol.axiom, *viol.cells)
    if not rep.ok:
        return rep
    _frames(m)
    row, col = {X: _row(m, X) for X in objs}, {X: _col(m, X) for X in objs}

    # interchangers are invertible
    for h in hs:
        for p in hs:
            a, b = s("hh", h, p), s("hhi", h, p)
            if A.vComp2(a, b) != A.sqVId(A.top(a)) or A.vComp2(b, a) != A.sqVId(A.bottom(a)):
                rep.add("(invertibility)", ("h*p", h, p))
    for v in vs:
        for q in vs:
            a, b = s("vv", v, q), s("vvi", v, q)
            if A.hComp2(a, b) != A.sqHId(A.left(a)) or A.hComp2(b, a) != A.sqHId(A.right(a)):
                rep.add("(invertibility)", ("v*q", v, q))

    # (ii) I*- = 1 = -*I
    for k in kinds:
        for x in A.cells(k):
            if row[I].apply(k, x) != x:
                rep.add("(ii)", ("I*-", k, x))
            if col[I].apply(k, x) != x:
                rep.add("(ii)", ("-*I", k, x))

    # (iii) X*(Y*-) = (X*Y)*-,  X*(-*Y) = (X*-)*Y,  -*(X*Y) = (-*X)*Y
    for X in objs:
        for Y in objs:
            XY = s("oo", X, Y)
            for k in kinds:
                for x in A.cells(k):
                    if row[X].apply(k, row[Y].apply(k, x)) != row[XY].apply(k, x):
                        rep.add("(iii)", ("X*(Y*-)", X, Y, k, x))
                    if row[X].apply(k, col[Y].apply(k, x)) != col[Y].apply(k, row[X].apply(k, x)):
                        rep.add("(iii)", ("X*(-*Y)", X, Y, k, x))
                    if col[XY].apply(k, x) != col[Y].apply(k, col[X].apply(k, x)):
                        rep.add("(iii)", ("-*(X*Y)", X, Y, k, x))

    # (iv) mixed associativity: a 1-cell, an object and a 1-cell, in each bracketing
    for X in objs:
        for a_tag, a_cells, a_ho, a_oh in (("h", hs, "ho", "oh"), ("v", vs, "vo", "ov")):
            for b_tag, b_cells, b_ho, b_oh in (("h", hs, "ho", "oh"), ("v", vs, "vo", "ov")):
                tag = a_tag + b_tag
                for a in a_cells:
                    for b in b_cells:
                        ab = s(tag, a, b)
                        # a*(X*b) = (a*X)*b
                        if s(tag, a, s(b_oh, X, b)) != s(tag, s(a_ho, a, X), b):
                            rep.add("(iv)", ("a*(X*b)", tag, a, X, b))
                        # (X*a)*b = X*(a*b)
                        if s(tag, s(a_oh, X, a), b) != s("os", X, ab):
                            rep.add("(iv)", ("(X*a)*b", tag, X, a, b))
                        # a*(b*X) = (a*b)*X
                        if s(tag, a, s(b_ho, b, X)) != s("so", ab, X):
                            rep.add("(iv)", ("a*(b*X)", tag, a, b, X))

    # (v) identities collapse
    for X in objs:
        hX, vX = A.hId(X), A.vId(X)
        for h in hs:
            want = A.sqVId(s("ho", h, X))
            if s("hv", h, vX) != want or s("hh", h, hX) != want:
                rep.add("(v)", ("h*1", h, X))
            want = A.sqVId(s("oh", X, h))
            if s("vh", vX, h) != want or s("hh", hX, h) != want:
                rep.add("(v)", ("1*h", X, h))
        for v in vs:
            want = A.sqHId(s("vo", v, X))
            if s("vh", v, hX) != want or s("vv", v, vX) != want:
                rep.add("(v)", ("v*1", v, X))
            want = A.sqHId(s("ov", X, v))
            if s("hv", hX, v) != want or s("vv", vX, v) != want:
                rep.add("(v)", ("1*v", X, v))

    # (vi) composites
    H, V = A.hComp2, A.vComp2
    hpairs = [(a, b) for a in hs for b in hs if A.htgt(a) == A.hsrc(b)]
    vpairs = [(a, b) for a in vs for b in vs if A.vtgt(a) == A.vsrc(b)]
    for h in hs:
        X, X2 = A.hsrc(h), A.htgt(h)
        for q, q2 in vpairs:
            if s("hv", h, A.vComp1(q, q2)) != V(s("hv", h, q), s("hv", h, q2)):
                rep.add("(vi)", ("h*(q'.q)", h, q, q2))
        for p, p2 in hpairs:
            want = V(H(A.sqVId(s("oh", X, p)), s("hh", h, p2)),
                     H(s("hh", h, p), A.sqVId(s("oh", X2, p2))))
            if s("hh", h, A.hComp1(p, p2)) != want:
                rep.add("(vi)", ("h*(p'.p)", h, p, p2))
    for h, h2 in hpairs:
        for q in vs:
            if s("hv", A.hComp1(h, h2), q) != H(s("hv", h, q), s("hv", h2, q)):
                rep.add("(vi)", ("(h'.h)*q", h, h2, q))
        for p in hs:
            Y, Y2 = A.hsrc(p), A.htgt(p)
            want = V(H(s("hh", h, p), A.sqVId(s("ho", h2, Y2))),
                     H(A.sqVId(s("ho", h, Y)), s("hh", h2, p)))
            if s("hh", A.hComp1(h, h2), p) != want:
                rep.add("(vi)", ("(h'.h)*p", h, h2, p))
    for v in vs:
        X, X2 = A.vsrc(v), A.vtgt(v)
        for p, p2 in hpairs:
            if s("vh", v, A.hComp1(p, p2)) != H(s("vh", v, p), s("vh", v, p2)):
                rep.add("(vi)", ("v*(p'.p)", v, p, p2))
        for q, q2 in vpairs:
            want = H(V(s("vv", v, q), A.sqHId(s("ov", X2, q2))),
                     V(A.sqHId(s("ov", X, q)), s("vv", v, q2)))
            if s("vv", v, A.vComp1(q, q2)) != want:
                rep.add("(vi)", ("v*(q'.q)", v, q, q2))
    for v, v2 in vpairs:
        for p in hs:
            if s("vh", A.vComp1(v, v2), p) != V(s("vh", v, p), s("vh", v2, p)):
                rep.add("(vi)", ("(v'.v)*p", v, v2, p))
        for q in vs:
            Y, Y2 = A.vsrc(q), A.vtgt(q)
            want = H(V(A.sqHId(s("vo", v, Y)), s("vv", v2, q)),
                     V(s("vv", v, q), A.sqHId(s("vo", v2, Y2))))
            if s("vv", A.vComp1(v, v2), q) != want:
                rep.add("(vi)", ("(v'.v)*q", v, v2, q))

    for w in checkNaturality(m):
        rep.add("(vii)", w)
    return rep


def checkNaturality(m):
    """Condition (vii): the four pasting equalities, listed by failing witness."""
    A, s = m.carrier, m.star
    H, V = A.hComp2, A.vComp2
    out = []
    for w in A.squares():
        p, sb, q, r = A.boundary(w)
        for h in A.hcells():
            X, X2 = A.hsrc(h), A.htgt(h)
            # h with w on the right
            lhs = V(H(s("os", X, w), s("hv", h, r)), s("hh", h, sb))
            rhs = V(s("hh", h, p), H(s("hv", h, q), s("os", X2, w)))
            if lhs != rhs:
                out.append(("h*w", h, w))
            # w on the left with h
            lhs = V(H(s("vh", q, h), s("so", w, X2)), s("hh", sb, h))
            rhs = V(s("hh", p, h), H(s("so", w, X), s("vh", r, h)))
            if lhs != rhs:
                out.append(("w*h", w, h))
        for v in A.vcells():
            X, X2 = A.vsrc(v), A.vtgt(v)
            lhs = H(s("vv", v, q), V(s("os", X, w), s("vh", v, sb)))
            rhs = H(V(s("vh", v, p), s("os", X2, w)), s("vv", v, r))
            if lhs != rhs:
                out.append(("v*w", v, w))
            lhs = H(s("vv", q, v), V(s("hv", p, v), s("so", w, X2)))
            rhs = H(V(s("so", w, X), s("hv", sb, v)), s("vv", r, v))
            if lhs != rhs:
                out.append(("w*v", w, v))
    return out


def failedConditions(rep):
    return sorted({v.axiom for v in rep.violations})


# -- construction from a strict monoidal structure -----------------------------

def fromStrictMonoid(carrier, mult, unit):
    """Monoid data from a strict multiplication carrier x carrier -> carrier.

    ``mult.dom`` must be the tabulated cartesian product (labels are pairs).
    Raises StructuralError if mult is not strictly associative and unital.
    """
    A, P = carrier, mult.dom

    def at(kind, a, b):
        return mult.apply(kind, P.cell_of_label(kind, (a, b)))

    ido = lambda X: A.sqVId(A.hId(X))
    objs, hs, vs, sqs = (_all(A, k) for k in ("object", "hcell", "vcell", "square"))
    ident = {"object": lambda X: X, "hcell": A.hId, "vcell": A.vId, "square": ido}
    for k in ("object", "hcell", "vcell", "square"):
        cells = _all(A, k)
        u = ident[k](unit)
        for a in cells:
            if at(k, u, a) != a or at(k, a, u) != a:
                raise StructuralError(f"strict multiplication is not unital at {k} {a!r}")
            for b in cells:
                ab = at(k, a, b)
                for c in cells:
                    if at(k, ab, c) != at(k, a, at(k, b, c)):
                        raise StructuralError(
                            f"strict multiplication is not associative at {k} {(a, b, c)!r}")
    maps = {
        "oo": {(X, Y): at("object", X, Y) for X in objs for Y in objs},
        "ho": {(h, Y): at("hcell", h, A.hId(Y)) for h in hs for Y in objs},
        "oh": {(X, p): at("hcell", A.hId(X), p) for X in objs for p in hs},
        "vo": {(v, Y): at("vcell", v, A.vId(Y)) for v in vs for Y in objs},
        "ov": {(X, q): at("vcell", A.vId(X), q) for X in objs for q in vs},
        "so": {(w, Y): at("square", w, ido(Y)) for w in sqs for Y in objs},
        "os": {(X, w): at("square", ido(X), w) for X in objs for w in sqs},
        "hv": {(h, q): at("square", A.sqVId(h), A.sqHId(q)) for h in hs for q in vs},
        "vh": {(v, p): at("square", A.sqHId(v), A.sqVId(p)) for v in vs for p in hs},
        "hh": {(h, p): A.sqVId(at("hcell", h, p)) for h in hs for p in hs},
        "vv": {(v, q): A.sqHId(at("vcell", v, q)) for v in vs for q in vs},
    }
    maps["hhi"], maps["vvi"] = dict(maps["hh"]), dict(maps["vv"])
    return GrayMonoidData(A, unit, maps, name=f"strict monoid on {A.name}")


def monoidFunctors(m):
    """The pair I: 1 -> A and M: A -> [[A,A]] of the monoid."""
    return pointFunctor(m.carrier, m.unit), curryCone(m.cone())


# -- the induced multiplication on pairs of cells --------------------------------

class DerivedMultiplication:
    """Cell maps A x A -> A read off from the monoid data, with a report on
    how far they are from a double functor."""

    def __init__(self, m):
        self.m = m
        self.report = {}

    def obj(self, X, Y):
        return self.m.star("oo", X, Y)

    def h(self, h, k):
        A, s = self.m.carrier, self.m.star
        Y, X2 = A.hsrc(k), A.htgt(h)
        return A.hComp1(s("ho", h, Y), s("oh", X2, k))

    def v(self, f, g):
        A, s = self.m.carrier, self.m.star
        Y, X2 = A.vsrc(g), A.vtgt(f)
        return A.vComp1(s("vo", f, Y), s("ov", X2, g))

    def sq(self, w, t):
        A, s = self.m.carrier, self.m.star
        h, k, f, g = A.boundary(w)
        p, _, q, _ = A.boundary(t)
        Y, X3 = A.hsrc(p), A.htgt(k)
        row1 = A.hComp2(s("so", w, Y), s("vh", g, p))
        row2 = A.hComp2(s("hv", k, q), s("os", X3, t))
        return A.vComp2(row1, row2)

    def hFamily(self, h, p, k, sx):
        """The vertically invertible comparison from the composite of images
        of (h,p) and (k,sx) to the image of the composite."""
        A, s = self.m.carrier, self.m.star
        Y, X2, X3 = A.hsrc(p), A.htgt(h), A.htgt(k)
        return _paste_h(A, A.sqVId(s("ho", h, Y)), s("hh", k, p), A.sqVId(s("oh", X3, sx))), \
            _paste_h(A, A.sqVId(s("ho", h, Y)), s("hhi", k, p), A.sqVId(s("oh", X3, sx)))

    def vFamily(self, f, q, g, r):
        """The horizontally invertible comparison between the image of the
        composite (left) and the composite of images (right)."""
        A, s = self.m.carrier, self.m.star
        Y, X3 = A.vsrc(q), A.vtgt(g)
        parts = (A.sqHId(s("vo", f, Y)), s("vv", g, q), A.sqHId(s("ov", X3, r)))
        inv = (A.sqHId(s("vo", f, Y)), s("vvi", g, q), A.sqHId(s("ov", X3, r)))
        return _paste_v(A, *parts), _paste_v(A, *inv)


def _paste_h(A, *cells):
    out = cells[0]
    for c in cells[1:]:
        out = A.hComp2(out, c)
    return out


def _paste_v(A, *cells):
    out = cells[0]
    for c in cells[1:]:
        out = A.vComp2(out, c)
    return out


def derivedMultiplication(m):
    """The induced maps on pairs of cells and a report with keys
    ``identities``, ``hcomp_strict``, ``vcomp_strict`` (each ok or a witness)
    and ``families`` (frames and invertibility of the comparison cells).

    A composition counts as strictly preserved at a pair when the images agree
    and the comparison cell between them is an identity.
    """
    A = m.carrier
    d = DerivedMultiplication(m)
    objs, hs, vs = _all(A, "object"), _all(A, "hcell"), _all(A, "vcell")
    rep = {}
    bad = None
    for X in objs:
        for Y in objs:
            if (d.h(A.hId(X), A.hId(Y)) != A.hId(d.obj(X, Y))
                    or d.v(A.vId(X), A.vId(Y)) != A.vId(d.obj(X, Y))
                    or d.sq(A.sqVId(A.hId(X)), A.sqVId(A.hId(Y))) != A.sqVId(A.hId(d.obj(X, Y)))):
                bad = bad or ("identity", X, Y)
    rep["identities"] = bad or "ok"
    hp = [(a, b) for a in hs for b in hs if A.htgt(a) == A.hsrc(b)]
    vp = [(a, b) for a in vs for b in vs if A.vtgt(a) == A.vsrc(b)]
    hw = fam = None
    for h, k in hp:
        for p, sx in hp:
            lhs = A.hComp1(d.h(h, p), d.h(k, sx))
            rhs = d.h(A.hComp1(h, k), A.hComp1(p, sx))
            a, b = d.hFamily(h, p, k, sx)
            if (lhs != rhs or a != A.sqVId(lhs)) and hw is None:
                hw = ((h, p), (k, sx))
            if (A.top(a), A.bottom(a)) != (lhs, rhs) or A.vComp2(a, b) != A.sqVId(lhs) \
                    or A.vComp2(b, a) != A.sqVId(rhs):
                fam = fam or ("horizontal", (h, p), (k, sx))
    vw = None
    for f, g in vp:
        for q, r in vp:
            lhs = d.v(A.vComp1(f, g), A.vComp1(q, r))
            rhs = A.vComp1(d.v(f, q), d.v(g, r))
            a, b = d.vFamily(f, q, g, r)
            if (lhs != rhs or a != A.sqHId(lhs)) and vw is None:
                vw = ((f, q), (g, r))
            if (A.left(a), A.right(a)) != (lhs, rhs) or A.hComp2(a, b) != A.sqHId(lhs) \
                    or A.hComp2(b, a) != A.sqHId(rhs):
                fam = fam or ("vertical", (f, q), (g, r))
    rep["hcomp_strict"] = "ok" if hw is None else hw
    rep["vcomp_strict"] = "ok" if vw is None else vw
    rep["families"] = fam or "ok"
    d.report = rep
    return d
