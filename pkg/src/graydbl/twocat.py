"""2-categories, the Gray hom [A,B], the functors H, V and Sqr, and their comparison maps chi.

A 2-category is represented as a double category whose vertical 1-cells
are all identities: 1-cells are horizontal cells and 2-cells are squares
framed by identity verticals.  2-functors, pseudonatural transformations
and modifications are then DoubleFunctor, HPseudo and Modification values,
and the Gray hom [A,B] is the horizontal 2-category of [[A,B]].
"""

from .canonical import CheckResult, _compare, _compose, lFunctor
from .core import DoubleCategory, FiniteDoubleCategory, Report, _Builder, terminal, validate
from .errors import StructuralError
from .functor import Component, DoubleFunctor, identityFunctor, validateFunctor
from .hom import (HPseudo, Hom, Modification, VPseudo, enumerateModifications, expand, hmap,
                  hom, identityHPseudo, identityVPseudo, validateHPseudo, validateModification)


class TwoCat:
    """2-categorical vocabulary on top of the double category protocol."""

    def onecells(self):
        return self.hcells()

    def twocells(self):
        return self.squares()

    def src1(self, f):
        return self.hsrc(f)

    def tgt1(self, f):
        return self.htgt(f)

    def src2(self, a):
        return self.top(a)

    def tgt2(self, a):
        return self.bottom(a)

    def id1(self, x):
        return self.hId(x)

    def id2(self, f):
        return self.sqVId(f)

    def comp1(self, f, g):
        return self.hComp1(f, g)

    def vcomp(self, a, b):
        return self.vComp2(a, b)

    def hcomp(self, a, b):
        return self.hComp2(a, b)


class Finite2Category(TwoCat, FiniteDoubleCategory):
    """A 2-category given by tables.

    ``onecells`` are (source, target) pairs, ``twocells`` are (source 1-cell,
    target 1-cell) pairs; ``comp1`` composes 1-cells, ``vcomp`` stacks
    2-cells and ``hcomp`` pastes them side by side, all diagrammatically.
    """

    def __init__(self, n_objects, onecells, twocells, id1, id2, comp1, vcomp, hcomp,
                 name="A", names=None, labels=None, vid=None):
        onecells = [tuple(c) for c in onecells]
        if vid is None:
            vid = list(range(n_objects))
        vcells = [None] * n_objects
        for x, v in enumerate(vid):
            vcells[v] = (x, x)
        squares = [(s, t, vid[onecells[s][0]], vid[onecells[s][1]]) for s, t in twocells]
        sqhid = [None] * n_objects
        for x, v in enumerate(vid):
            sqhid[v] = id2[id1[x]]
        FiniteDoubleCategory.__init__(
            self, n_objects, onecells, vcells, squares, id1, vid, sqhid, id2,
            comp1, {(v, v): v for v in vid}, hcomp, vcomp, name=name,
            names=names, labels=labels)

    @classmethod
    def fromDouble(cls, D, name=None):
        """Reinterpret a vertically discrete FiniteDoubleCategory."""
        if not isVerticallyDiscrete(D):
            raise StructuralError(f"{D.name} has non-identity vertical 1-cells")
        return cls(D.n_objects, D.h, [(t, b) for t, b, _, _ in D.sq], D.hid, D.sqvid,
                   D.hcomp1, D.vcomp2, D.hcomp2, name=name or D.name,
                   names={k: list(v) for k, v in D.names.items()},
                   labels={k: list(v) for k, v in D.labels.items()}, vid=D.vid)


def isVerticallyDiscrete(D):
    return all(D.vsrc(v) == D.vtgt(v) and v == D.vId(D.vsrc(v)) for v in D.vcells())


def tabulate2(X, name=None):
    """Enumerate a (lazy) 2-category into a Finite2Category with labels."""
    from .core import tabulate
    return Finite2Category.fromDouble(tabulate(X, name=name or X.name))


# -- validation ----------------------------------------------------------------

def validate2Cat(A, limit=50):
    """Category axioms for 1-cells and both compositions of 2-cells, and interchange."""
    rep = Report([], limit)
    for v in A.vcells():
        if A.vsrc(v) != A.vtgt(v) or v != A.vId(A.vsrc(v)):
            rep.add("vertical discreteness", A.describe("vcell", v))
    if not rep.ok:
        return rep
    inner = validate(A, limit)
    rep.violations.extend(inner.violations)
    return rep


def _is2(D):
    if not isVerticallyDiscrete(D):
        raise StructuralError(f"{D.name} is not a 2-category")


def validate2Functor(F):
    _is2(F.dom)
    _is2(F.cod)
    return validateFunctor(F)


def validatePseudonat(x):
    """Pseudonaturality: unit, composition, naturality in 2-cells, invertibility."""
    return validateHPseudo(x)


def validate2Modification(M):
    B = M.top.cod
    for a in M.top.dom.objects():
        if M.left.obj(a) != B.vId(M.left.src.obj(a)) or M.right.obj(a) != B.vId(M.right.src.obj(a)):
            raise StructuralError("modification sides are not identities")
    return validateModification(M)


# -- constructors for 2-functors, pseudonatural transformations, modifications --

def twoFunctor(A, B, obj, one, two, label=None):
    """A 2-functor from object, 1-cell and 2-cell maps."""
    o = Component(obj)
    return DoubleFunctor(A, B, o, one, lambda v: B.vId(o(A.vsrc(v))), two, label=label)


def pseudonat(F, G, comp, psi, psiinv):
    """psi: F => G with 1-cell components comp(X) and 2-cells psi(f): Ff;comp(Y) => comp(X);Gf."""
    B, c = F.cod, Component(comp)
    return HPseudo(F, G, c, lambda v: B.sqVId(c(F.dom.vsrc(v))), psi, psiinv)


def twoModification(top, bottom, comp):
    return Modification(top, bottom, identityVPseudo(top.src), identityVPseudo(top.tgt), comp)


# -- the horizontal and vertical 2-categories ------------------------------------

class Transposed(DoubleCategory):
    """Lazy transpose: horizontal and vertical exchange roles."""

    def __init__(self, D):
        self.D = D
        self.name = f"{D.name}^T"

    def objects(self):
        return self.D.objects()

    def hcells(self):
        return self.D.vcells()

    def vcells(self):
        return self.D.hcells()

    def squares(self):
        return self.D.squares()

    def hsrc(self, x):
        return self.D.vsrc(x)

    def htgt(self, x):
        return self.D.vtgt(x)

    def vsrc(self, x):
        return self.D.hsrc(x)

    def vtgt(self, x):
        return self.D.htgt(x)

    def top(self, s):
        return self.D.left(s)

    def bottom(self, s):
        return self.D.right(s)

    def left(self, s):
        return self.D.top(s)

    def right(self, s):
        return self.D.bottom(s)

    def hId(self, x):
        return self.D.vId(x)

    def vId(self, x):
        return self.D.hId(x)

    def sqHId(self, v):
        return self.D.sqVId(v)

    def sqVId(self, h):
        return self.D.sqHId(h)

    def hComp1(self, a, b):
        return self.D.vComp1(a, b)

    def vComp1(self, a, b):
        return self.D.hComp1(a, b)

    def hComp2(self, s, t):
        return self.D.vComp2(s, t)

    def vComp2(self, s, t):
        return self.D.hComp2(s, t)


class Horizontal(TwoCat, DoubleCategory):
    """H(D): objects, horizontal 1-cells, squares framed by identity verticals."""

    def __init__(self, D, name=None):
        self.D = D
        self.name = name or f"H({D.name})"
        # hom data, so that hmap can build functors into H[[A,B]]
        base = D.D if isinstance(D, Transposed) else D
        self.A, self.B = getattr(base, "A", None), getattr(base, "B", None)
        self._cache = {}

    def objects(self):
        return self.D.objects()

    def hcells(self):
        return self.D.hcells()

    def vcells(self):
        if "v" not in self._cache:
            self._cache["v"] = [self.D.vId(x) for x in self.D.objects()]
        return self._cache["v"]

    def squares(self):
        if "s" not in self._cache:
            self._cache["s"] = self._squares()
        return self._cache["s"]

    def _squares(self):
        D = self.D
        if isinstance(D, Hom):
            out, between = [], {}
            for x in D.hcells():
                between.setdefault((x.src, x.tgt), []).append(x)
            for x in D.hcells():
                y, v = identityVPseudo(x.src), identityVPseudo(x.tgt)
                for z in between[(x.src, x.tgt)]:
                    out.extend(enumerateModifications(x, z, y, v, D._budget()))
            return out
        if isinstance(D, Transposed) and isinstance(D.D, Hom):
            K, out, between = D.D, [], {}
            for y in K.vcells():
                between.setdefault((y.src, y.tgt), []).append(y)
            for y in K.vcells():
                x, z = identityHPseudo(y.src), identityHPseudo(y.tgt)
                for v in between[(y.src, y.tgt)]:
                    out.extend(enumerateModifications(x, z, y, v, K._budget()))
            return out
        return [s for s in D.squares()
                if D.left(s) == D.vId(D.vsrc(D.left(s))) and D.right(s) == D.vId(D.vsrc(D.right(s)))]

    def hsrc(self, x):
        return self.D.hsrc(x)

    def htgt(self, x):
        return self.D.htgt(x)

    def vsrc(self, v):
        return self.D.vsrc(v)

    def vtgt(self, v):
        return self.D.vtgt(v)

    def top(self, s):
        return self.D.top(s)

    def bottom(self, s):
        return self.D.bottom(s)

    def left(self, s):
        return self.D.left(s)

    def right(self, s):
        return self.D.right(s)

    def hId(self, x):
        return self.D.hId(x)

    def vId(self, x):
        return self.D.vId(x)

    def sqHId(self, v):
        return self.D.sqHId(v)

    def sqVId(self, h):
        return self.D.sqVId(h)

    def hComp1(self, a, b):
        return self.D.hComp1(a, b)

    def vComp1(self, a, b):
        return self.D.vComp1(a, b)

    def hComp2(self, s, t):
        return self.D.hComp2(s, t)

    def vComp2(self, s, t):
        return self.D.vComp2(s, t)

    def describe(self, kind, cell):
        return self.D.describe(kind, cell)


_H, _V, _SQR = {}, {}, {}


def _cached(table, X, make):
    hit = table.get(id(X))
    if hit is None:
        hit = table[id(X)] = (X, make())
    return hit[1]


def horizontal2Cat(D):
    return _cached(_H, D, lambda: Horizontal(D))


def vertical2Cat(D):
    return _cached(_V, D, lambda: Horizontal(Transposed(D), name=f"V({D.name})"))


def grayHom2(A, B):
    """[A,B]: 2-functors, pseudonatural transformations and modifications."""
    H = hom(A, B)
    return _cached(_H, H, lambda: Horizontal(H, name=f"[{A.name},{B.name}]"))


def l2Functor(C, A, B):
    """l: [A,B] -> [[C,A],[C,B]], postcomposition of 2-functors."""
    return lFunctor(C, A, B, homf=grayHom2)


def horizontalFunctor(F):
    return DoubleFunctor(horizontal2Cat(F.dom), horizontal2Cat(F.cod), F.obj, F.h, F.v, F.sq,
                         label=f"H({F!r})")


def verticalFunctor(F):
    return DoubleFunctor(vertical2Cat(F.dom), vertical2Cat(F.cod), F.obj, F.v, F.h, F.sq,
                         label=f"V({F!r})")


def expand2(X):
    """X -> [1,X] for a 2-category X."""
    E = expand(X)
    return DoubleFunctor(X, grayHom2(terminal(), X), E.obj, E.h, E.v, E.sq, label=f"expand_{X.name}")


# -- the quintet construction ---------------------------------------------------

class Quintets(DoubleCategory):
    """Sqr(A): squares (t, b, l, r, a) with a a 2-cell t;r => l;b of A."""

    def __init__(self, A):
        self.A = A
        self.name = f"Sqr({A.name})"
        self._sq = None

    def objects(self):
        return self.A.objects()

    def hcells(self):
        return self.A.hcells()

    def vcells(self):
        return self.A.hcells()

    def squares(self):
        if self._sq is None:
            A = self.A
            split = {}
            for f in A.hcells():
                for g in A.hcells():
                    if A.htgt(f) == A.hsrc(g):
                        split.setdefault(A.hComp1(f, g), []).append((f, g))
            out = []
            for a in A.squares():
                for t, r in split.get(A.top(a), ()):
                    for l, b in split.get(A.bottom(a), ()):
                        out.append((t, b, l, r, a))
            self._sq = out
        return self._sq

    def hsrc(self, f):
        return self.A.hsrc(f)

    def htgt(self, f):
        return self.A.htgt(f)

    vsrc, vtgt = hsrc, htgt

    def top(self, s):
        return s[0]

    def bottom(self, s):
        return s[1]

    def left(self, s):
        return s[2]

    def right(self, s):
        return s[3]

    def boundary(self, s):
        return s[:4]

    def hId(self, x):
        return self.A.hId(x)

    vId = hId

    def sqHId(self, v):
        A = self.A
        return (A.hId(A.hsrc(v)), A.hId(A.htgt(v)), v, v, A.sqVId(v))

    def sqVId(self, h):
        A = self.A
        return (h, h, A.hId(A.hsrc(h)), A.hId(A.htgt(h)), A.sqVId(h))

    def hComp1(self, f, g):
        return self.A.hComp1(f, g)

    vComp1 = hComp1

    def hComp2(self, s, u):
        A = self.A
        t, b, l, _, a = s
        t2, b2, _, r2, c = u
        cell = A.vComp2(A.hComp2(A.sqVId(t), c), A.hComp2(a, A.sqVId(b2)))
        return (A.hComp1(t, t2), A.hComp1(b, b2), l, r2, cell)

    def vComp2(self, s, u):
        A = self.A
        t, _, l, r, a = s
        _, b2, l2, r2, c = u
        cell = A.vComp2(A.hComp2(a, A.sqVId(r2)), A.hComp2(A.sqVId(l), c))
        return (t, b2, A.hComp1(l, l2), A.hComp1(r, r2), cell)


def quintetSqr(A):
    """The quintet double category of a 2-category (lazy, cached)."""
    return _cached(_SQR, A, lambda: Quintets(A))


def sqrFunctor(F):
    """Sqr(F) for a 2-functor F."""
    def sq(s):
        t, b, l, r, a = s
        return (F.h(t), F.h(b), F.h(l), F.h(r), F.sq(a))
    return DoubleFunctor(quintetSqr(F.dom), quintetSqr(F.cod), F.obj, F.h, F.h, sq,
                         label=f"Sqr({F!r})")


# -- comparison maps chi --------------------------------------------------------

def chiH(A, B):
    """chi: H[[A,B]] -> [HA, HB]."""
    HA, HB = horizontal2Cat(A), horizontal2Cat(B)
    om = Component(lambda F: DoubleFunctor(HA, HB, F.obj, F.h, F.v, F.sq))
    hm = Component(lambda x: HPseudo(om(x.src), om(x.tgt), x.obj, x.v, x.h, x.hinv))
    vm = Component(lambda y: identityVPseudo(om(y.src)))

    def on_s(M):
        return Modification(hm(M.top), hm(M.bottom), vm(M.left), vm(M.right), M.obj)

    return DoubleFunctor(horizontal2Cat(hom(A, B)), grayHom2(HA, HB), om, hm, vm, on_s,
                         label=f"chiH_{A.name},{B.name}")


def chiV(A, B):
    """chi: V[[A,B]] -> [VA, VB]; a vertical transformation y goes to the
    pseudonatural transformation with components y_f^{-1}."""
    VA, VB = vertical2Cat(A), vertical2Cat(B)
    om = Component(lambda F: DoubleFunctor(VA, VB, F.obj, F.v, F.h, F.sq))
    hm = Component(lambda y: HPseudo(om(y.src), om(y.tgt), y.obj, y.h, y.vinv, y.v))
    vm = Component(lambda x: identityVPseudo(om(x.src)))

    def on_s(M):
        return Modification(hm(M.left), hm(M.right), vm(M.top), vm(M.bottom), M.obj)

    return DoubleFunctor(vertical2Cat(hom(A, B)), grayHom2(VA, VB), om, hm, vm, on_s,
                         label=f"chiV_{A.name},{B.name}")


def chiSqr(A, B):
    """chi: Sqr[A,B] -> [[Sqr A, Sqr B]]."""
    SA, SB, AB = quintetSqr(A), quintetSqr(B), grayHom2(A, B)
    om = Component(sqrFunctor)

    def on_h(p):
        H, K = p.src, p.tgt
        po = p.obj

        def vf(f):
            return (po(A.hsrc(f)), po(A.htgt(f)), H.h(f), K.h(f), p.hinv(f))

        def hf(f, inv=False):
            top, bot = B.hComp1(H.h(f), po(A.htgt(f))), B.hComp1(po(A.hsrc(f)), K.h(f))
            if inv:
                top, bot = bot, top
            return (top, bot, B.hId(H.obj(A.hsrc(f))), B.hId(K.obj(A.htgt(f))),
                    (p.hinv if inv else p.h)(f))

        return HPseudo(om(H), om(K), po, vf, hf, lambda f: hf(f, True))

    def on_v(p):
        H, K = p.src, p.tgt
        po = p.obj

        def hf(f):
            return (H.h(f), K.h(f), po(A.hsrc(f)), po(A.htgt(f)), p.h(f))

        def vf(f, inv=False):
            left, right = B.hComp1(po(A.hsrc(f)), K.h(f)), B.hComp1(H.h(f), po(A.htgt(f)))
            if inv:
                left, right = right, left
            return (B.hId(H.obj(A.hsrc(f))), B.hId(K.obj(A.htgt(f))), left, right,
                    (p.hinv if inv else p.h)(f))

        return VPseudo(om(H), om(K), po, hf, vf, lambda f: vf(f, True))

    hm, vm = Component(on_h), Component(on_v)

    def on_s(s):
        t, b, l, r, w = s
        return Modification(hm(t), hm(b), vm(l), vm(r),
                            lambda X: (t.obj(X), b.obj(X), l.obj(X), r.obj(X), w.obj(X)))

    return DoubleFunctor(quintetSqr(AB), hom(SA, SB), om, hm, vm, on_s,
                         label=f"chiSqr_{A.name},{B.name}")


# -- monoidality checks ----------------------------------------------------------

class Comparison:
    """A functor Phi between the double and 2-categorical worlds with its chi.

    ``homD``/``homC`` are the homs on the domain and codomain side.
    """

    def __init__(self, name, obj, fun, chi, homD, homC, unitD, unitC, point=None):
        self.name, self.obj, self.fun, self.chi = name, obj, fun, chi
        self.homD, self.homC = homD, homC
        self.unitD, self.unitC = unitD, unitC
        # the object of Phi(hom) standing for an object F of hom
        self.point = point or (lambda H, F: F)

    def lD(self, C, A, B):
        return lFunctor(C, A, B, homf=self.homD)

    def lC(self, C, A, B):
        return lFunctor(C, A, B, homf=self.homC)

    def expandD(self, X):
        return expand(X) if self.homD is hom else expand2(X)

    def expandC(self, X):
        return expand(X) if self.homC is hom else expand2(X)


def _unit_iso(one, P):
    """The identification of the unit with Phi(unit) (both have a single cell of each kind)."""
    pick = lambda kind: next(iter(P.cells(kind)))
    return DoubleFunctor(one, P, lambda _: pick("object"), lambda _: pick("hcell"),
                         lambda _: pick("vcell"), lambda _: pick("square"))


COMPARISONS = {}


def comparison(which):
    if not COMPARISONS:
        COMPARISONS["h"] = Comparison("H", horizontal2Cat, horizontalFunctor, chiH,
                                      hom, grayHom2, terminal, terminal)
        COMPARISONS["v"] = Comparison("V", vertical2Cat, verticalFunctor, chiV,
                                      hom, grayHom2, terminal, terminal)
        COMPARISONS["sqr"] = Comparison("Sqr", quintetSqr, sqrFunctor, chiSqr,
                                        grayHom2, hom, terminal, terminal)
    if which.lower() == "mnd" and "mnd" not in COMPARISONS:
        from . import mnd
        COMPARISONS["mnd"] = Comparison("Mnd", mnd.mndCategory, mnd.mndFunctor, mnd.chiMnd,
                                        hom, hom, terminal, terminal, mnd.identityMonad)
    try:
        return COMPARISONS[which.lower()]
    except KeyError:
        raise ValueError(f"unknown comparison {which!r}") from None


def checkChiAssoc(which, A, B, C):
    """chi; l^{Phi C}; [[chi,1]] = Phi(l^C); chi; [[1,chi]] : Phi[A,B] -> [Phi[C,A], [Phi C, Phi B]]."""
    P = comparison(which)
    ob, hD, hC = P.obj, P.homD, P.homC
    FA, FB, FC = ob(A), ob(B), ob(C)
    CA, CB = hD(C, A), hD(C, B)
    FCA, FCB = ob(CA), ob(CB)
    target = hC(FCA, hC(FC, FB))
    lhs = _compose(P.chi(A, B), P.lC(FC, FA, FB),
                   hmap(P.chi(C, A), None, hC(hC(FC, FA), hC(FC, FB)), target))
    rhs = _compose(P.fun(P.lD(C, A, B)), P.chi(CA, CB),
                   hmap(None, P.chi(C, B), hC(FCA, FCB), target))
    return _compare(f"chi{P.name} assoc", lhs, rhs)


def checkChiUnit(which, A):
    """Reduced unit conditions: chi sends the identity to the identity, and
    chi_{1,A} Phi(expand_A) followed by restriction along 1 = Phi(1) is expand_{Phi A}."""
    P = comparison(which)
    FA = P.obj(A)
    chi = P.chi(A, A)
    got = chi.obj(P.point(P.homD(A, A), identityFunctor(A)))
    if not got == identityFunctor(FA):
        return CheckResult(f"chi{P.name} unit", False, ("identity", got))
    one = terminal()
    F1 = P.obj(P.unitD())
    iso = _unit_iso(P.unitC(), F1)
    restrict = hmap(iso, None, P.homC(F1, FA), P.homC(P.unitC(), FA))
    lhs = _compose(P.fun(P.expandD(A)), P.chi(one, A), restrict)
    return _compare(f"chi{P.name} unit", lhs, P.expandC(FA))


# -- a few small 2-categories ----------------------------------------------------

def _two(name, cells):
    """Build a Finite2Category from objects, 1-cells and 2-cells given by name."""
    b = _Builder(name)
    objs = {n: b.object(n) for n in cells["objects"]}
    ones = {n: b.gen_h(n, objs[s], objs[t]) for n, s, t in cells.get("onecells", ())}
    twos = {}
    for n, s, t in cells.get("twocells", ()):
        x, y = b.h[ones[s]][1], b.h[ones[s]][2]
        twos[n] = b.square(n, ones[s], ones[t], b.vid[x], b.vid[y])
    return Finite2Category.fromDouble(b.build(), name=name)


def terminal2():
    return Finite2Category.fromDouble(terminal(), name="1")


def arrow2():
    return _two("arrow", {"objects": ["0", "1"], "onecells": [("f", "0", "1")]})


def walking2Cell():
    return _two("cell", {"objects": ["0", "1"], "onecells": [("f", "0", "1"), ("g", "0", "1")],
                         "twocells": [("a", "f", "g")]})


def iso2Cell():
    """Two parallel 1-cells and an invertible 2-cell between them."""
    b = _Builder("iso")
    x, y = b.object("0"), b.object("1")
    f, g = b.gen_h("f", x, y), b.gen_h("g", x, y)
    a = b.square("a", f, g, b.vid[x], b.vid[y])
    c = b.square("a'", g, f, b.vid[x], b.vid[y])
    b.extra["v2"].update({(a, c): b.sqvid[f], (c, a): b.sqvid[g]})
    return Finite2Category.fromDouble(b.build(), name="iso")


def idempotent2():
    """One object, an idempotent 1-cell e and a 2-cell 1 => e: a monad."""
    b = _Builder("idem")
    x = b.object("*")
    e = b.gen_h("e", x, x)
    ie = b.sqvid[e]
    eta = b.square("eta", b.hid[x], e, b.vid[x], b.vid[x])
    b.extra["h1"][e, e] = e
    b.extra["h2"].update({(ie, ie): ie, (eta, eta): eta, (eta, ie): ie, (ie, eta): ie})
    return Finite2Category.fromDouble(b.build(), name="idem")
