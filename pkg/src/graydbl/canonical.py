"""The canonical maps l, r, ev and f between hom double categories and their coherence."""

from .core import terminal
from .errors import StructuralError
from .functor import Component, DoubleFunctor, composeFunctors, functorsEqual, identityFunctor
from .hom import (HPseudo, Modification, VPseudo, collapse, expand, hmap, hom, homMap,
                  inclusionStrictHom,
                  identityHPseudo, identityVPseudo, pointFunctor)


class CheckResult:
    """Outcome of a pointwise comparison; ``witness`` is the first differing cell."""

    __slots__ = ("ok", "witness", "name")

    def __init__(self, name, ok, witness=None):
        self.name, self.ok, self.witness = name, ok, witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"{self.name}: {'ok' if self.ok else 'FAILED at ' + repr(self.witness)}"


def _compare(name, P, Q):
    if P.dom is not Q.dom or P.cod is not Q.cod:
        raise StructuralError(f"{name}: the two sides have different frames")
    ok, w = functorsEqual(P, Q)
    return CheckResult(name, ok, w)


def _compose(*Fs):
    """Diagrammatic composite of a chain of functors (first applied first)."""
    out = Fs[0]
    for F in Fs[1:]:
        out = composeFunctors(F, out)
    return out


def lFunctor(D, A, B, strict=False, homf=None):
    """l: [[A,B]] -> [[[[D,A]],[[D,B]]]], postcomposition.

    ``homf(X, Y)`` replaces the hom constructor; the same formulas give the
    2-categorical l on Gray homs.
    """
    homf = homf or (lambda X, Y: hom(X, Y, strict))
    S, DA, DB = homf(A, B), homf(D, A), homf(D, B)
    T = homf(DA, DB)
    om = Component(lambda G: hmap(None, G, DA, DB))

    def on_h(x):
        F0, F1 = om(x.src), om(x.tgt)

        def at(H):
            return HPseudo(F0.obj(H), F1.obj(H), lambda a: x.obj(H.obj(a)),
                           lambda f: x.v(H.v(f)), lambda h: x.h(H.h(h)),
                           lambda h: x.hinv(H.h(h)))

        X = Component(at)

        def vq(q):
            return Modification(X(q.src), X(q.tgt), F0.v(q), F1.v(q),
                                lambda a: x.v(q.obj(a)))

        def hp(p, inv=False):
            return Modification(DB.hComp1(F0.h(p), X(p.tgt)), DB.hComp1(X(p.src), F1.h(p)),
                                identityVPseudo(F0.obj(p.src)), identityVPseudo(F1.obj(p.tgt)),
                                lambda a: (x.hinv if inv else x.h)(p.obj(a)))

        def hpi(p):
            m = hp(p, True)
            return Modification(m.bottom, m.top, m.left, m.right, m.obj)

        return HPseudo(F0, F1, X, vq, hp, hpi)

    def on_v(y):
        F0, F1 = om(y.src), om(y.tgt)

        def at(H):
            return VPseudo(F0.obj(H), F1.obj(H), lambda a: y.obj(H.obj(a)),
                           lambda h: y.h(H.h(h)), lambda f: y.v(H.v(f)),
                           lambda f: y.vinv(H.v(f)))

        Y = Component(at)

        def hp(p):
            return Modification(F0.h(p), F1.h(p), Y(p.src), Y(p.tgt),
                                lambda a: y.h(p.obj(a)))

        def vq(q, inv=False):
            left, right = DB.vComp1(Y(q.src), F1.v(q)), DB.vComp1(F0.v(q), Y(q.tgt))
            if inv:
                left, right = right, left
            return Modification(identityHPseudo(F0.obj(q.src)), identityHPseudo(F1.obj(q.tgt)),
                                left, right, lambda a: (y.vinv if inv else y.v)(q.obj(a)))

        return VPseudo(F0, F1, Y, hp, vq, lambda q: vq(q, True))

    hm, vm = Component(on_h), Component(on_v)

    def on_s(M):
        top, bottom, left, right = hm(M.top), hm(M.bottom), vm(M.left), vm(M.right)
        return Modification(top, bottom, left, right,
                            lambda H: Modification(top.obj(H), bottom.obj(H), left.obj(H),
                                                   right.obj(H), lambda a: M.obj(H.obj(a))))

    return DoubleFunctor(S, T, om, hm, vm, on_s, label=f"l^{D.name}_{A.name},{B.name}")


def rFunctor(D, A, B, strict=False):
    """r: [[A,B]] -> [[[[B,D]],[[A,D]]]], precomposition."""
    S, BD, AD = hom(A, B, strict), hom(B, D, strict), hom(A, D, strict)
    T = hom(BD, AD, strict)
    om = Component(lambda F: hmap(F, None, BD, AD))

    def on_h(x):
        F0, F1 = om(x.src), om(x.tgt)

        def at(H):
            return HPseudo(F0.obj(H), F1.obj(H), lambda a: H.h(x.obj(a)),
                           lambda f: H.sq(x.v(f)), lambda h: H.sq(x.h(h)),
                           lambda h: H.sq(x.hinv(h)))

        X = Component(at)

        def vq(q):
            return Modification(X(q.src), X(q.tgt), F0.v(q), F1.v(q),
                                lambda a: q.h(x.obj(a)))

        def hp(p, inv=False):
            top, bottom = AD.hComp1(F0.h(p), X(p.tgt)), AD.hComp1(X(p.src), F1.h(p))
            if inv:
                top, bottom = bottom, top
            return Modification(top, bottom, identityVPseudo(F0.obj(p.src)),
                                identityVPseudo(F1.obj(p.tgt)),
                                lambda a: (p.h if inv else p.hinv)(x.obj(a)))

        return HPseudo(F0, F1, X, vq, hp, lambda p: hp(p, True))

    def on_v(y):
        F0, F1 = om(y.src), om(y.tgt)

        def at(H):
            return VPseudo(F0.obj(H), F1.obj(H), lambda a: H.v(y.obj(a)),
                           lambda h: H.sq(y.h(h)), lambda f: H.sq(y.v(f)),
                           lambda f: H.sq(y.vinv(f)))

        Y = Component(at)

        def hp(p):
            return Modification(F0.h(p), F1.h(p), Y(p.src), Y(p.tgt),
                                lambda a: p.v(y.obj(a)))

        def vq(q, inv=False):
            left, right = AD.vComp1(Y(q.src), F1.v(q)), AD.vComp1(F0.v(q), Y(q.tgt))
            if inv:
                left, right = right, left
            return Modification(identityHPseudo(F0.obj(q.src)), identityHPseudo(F1.obj(q.tgt)),
                                left, right, lambda a: (q.v if inv else q.vinv)(y.obj(a)))

        return VPseudo(F0, F1, Y, hp, vq, lambda q: vq(q, True))

    hm, vm = Component(on_h), Component(on_v)

    def on_s(M):
        top, bottom, left, right = hm(M.top), hm(M.bottom), vm(M.left), vm(M.right)
        return Modification(top, bottom, left, right,
                            lambda H: Modification(top.obj(H), bottom.obj(H), left.obj(H),
                                                   right.obj(H), lambda a: H.sq(M.obj(a))))

    return DoubleFunctor(S, T, om, hm, vm, on_s, label=f"r^{D.name}_{A.name},{B.name}")


def ev(D, B, rfun=None):
    """ev: B -> [[[[B,D]],D]], evaluation."""
    rfun = rfun or rFunctor
    one = terminal()
    BD = hom(B, D)
    return _compose(expand(B), rfun(D, one, B), homMap(identityFunctor(BD), collapse(D)))


def fFunctor(D, A, B, rfun=None, evfun=None):
    """f: [[A,[[B,D]]]] -> [[B,[[A,D]]]], exchange of arguments."""
    rfun, evfun = rfun or rFunctor, evfun or ev
    BD, AD = hom(B, D), hom(A, D)
    return _compose(rfun(D, A, BD), homMap(evfun(D, B), identityFunctor(AD)))


def lCartesianFunctor(D, A, B):
    """l on strict homs: <<A,B>> -> <<<<D,A>>,<<D,B>>>>."""
    return lFunctor(D, A, B, strict=True)


# -- coherence checks -----------------------------------------------------------

def checkLCommutation(A, B, C, D, lfun=None):
    """[[1,l^C_{D,B}]] l^D_{A,B} = [[l^C_{D,A},1]] l^{[[C,D]]}_{[[C,A]],[[C,B]]} l^C_{A,B}."""
    lf = lfun or lFunctor
    CD, CA, CB, DA = hom(C, D), hom(C, A), hom(C, B), hom(D, A)
    lhs = _compose(lf(D, A, B), homMap(identityFunctor(DA), lf(C, D, B)))
    rhs = _compose(lf(C, A, B), lf(CD, CA, CB),
                   homMap(lf(C, D, A), identityFunctor(hom(CD, CB))))
    return _compare("l commutation", lhs, rhs)


def checkLIdentity(A, B, lfun=None):
    """Evaluating l^A_{A,B} at the identity functor of A recovers [[A,B]]."""
    lf = lfun or lFunctor
    AA, AB = hom(A, A), hom(A, B)
    side = _compose(lf(A, A, B), homMap(pointFunctor(AA, identityFunctor(A)), identityFunctor(AB)),
                    collapse(AB))
    return _compare("l identity", side, identityFunctor(AB))


def checkRSquare(A, B, D, rfun=None, evfun=None):
    """[[1,ev_B]] = [[ev_A,1]] r^D_{[[B,D]],[[A,D]]} r^D_{A,B}."""
    rf, evf = rfun or rFunctor, evfun or ev
    BD, AD = hom(B, D), hom(A, D)
    lhs = homMap(identityFunctor(A), evf(D, B))
    rhs = _compose(rf(D, A, B), rf(D, BD, AD), homMap(evf(D, A), identityFunctor(hom(BD, D))))
    return _compare("r square", lhs, rhs)


def checkRIdentity(A, D, rfun=None, evfun=None):
    """[[ev_A,1]] ev_{[[A,D]]} = 1."""
    evf = evfun or ev
    AD = hom(A, D)
    side = _compose(evf(D, AD), homMap(evf(D, A), identityFunctor(D)))
    return _compare("r identity", side, identityFunctor(AD))


def checkFInvolution(A, B, D, ffun=None):
    """f_{B,A} f_{A,B} = 1 on [[A,[[B,D]]]]."""
    ff = ffun or fFunctor
    side = _compose(ff(D, A, B), ff(D, B, A))
    return _compare("f involution", side, identityFunctor(hom(A, hom(B, D))))


def checkLRPentagon(A, B, D, lfun=None, rfun=None, evfun=None):
    """[[ev^A_D,1]] l^{[[D,A]]}_{A,B} = [[ev^B_D,1]] r^B_{[[D,A]],[[D,B]]} l^D_{A,B}."""
    lf, rf, evf = lfun or lFunctor, rfun or rFunctor, evfun or ev
    DA, DB = hom(D, A), hom(D, B)
    lhs = _compose(lf(DA, A, B), homMap(evf(A, D), identityFunctor(hom(DA, B))))
    rhs = _compose(lf(D, A, B), rf(B, DA, DB), homMap(evf(B, D), identityFunctor(hom(DA, B))))
    return _compare("l r pentagon", lhs, rhs)


def checkLRSquare(A, B, C, lfun=None, evfun=None):
    """[[1,[[ev^A_C,1]]]] [[ev^A_{[[C,A]]},1]] l^{[[[[C,A]],A]]}_{A,B} = l^C_{A,B}."""
    lf, evf = lfun or lFunctor, evfun or ev
    CA, CB = hom(C, A), hom(C, B)
    CAA = hom(CA, A)
    side = _compose(lf(CAA, A, B), homMap(evf(A, CA), identityFunctor(hom(CAA, B))),
                    homMap(identityFunctor(CA), homMap(evf(A, C), identityFunctor(B))))
    return _compare("l r square", side, lf(C, A, B))


def checkLCartesianInclusion(A, B, C):
    """[[incl,1]] l incl = [[1,incl]] incl l_strict : <<A,B>> -> [[<<C,A>>,[[C,B]]]]."""
    sCA = hom(C, A, strict=True)
    CB = hom(C, B)
    incl_AB, incl_CA, incl_CB = inclusionStrictHom(A, B), inclusionStrictHom(C, A), inclusionStrictHom(C, B)
    lhs = _compose(incl_AB, lFunctor(C, A, B), hmap(incl_CA, None, hom(hom(C, A), CB), hom(sCA, CB)))
    sCB = hom(C, B, strict=True)
    rhs = _compose(lCartesianFunctor(C, A, B), inclusionStrictHom(sCA, sCB),
                   hmap(None, incl_CB, hom(sCA, sCB), hom(sCA, CB)))
    return _compare("l cartesian inclusion", lhs, rhs)
