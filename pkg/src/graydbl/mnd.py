"""The double category Mnd(A) of monads, its functoriality, and chi: Mnd[[A,B]] -> [[Mnd A, Mnd B]].

Cells are tuples:
  monad           (X, x, mu, eta)      x: X -> X, mu: x;x => x, eta: 1 => x
  horizontal map  (m, n, f, phi)       phi: f;y => x;f, identity verticals
  vertical map    (m, n, g, gamma)     gamma framed by x, z, g, g
  square          (top, bottom, left, right, w)
"""

from .core import DoubleCategory, tabulate
from .functor import Component, DoubleFunctor
from .hom import HPseudo, Modification, VPseudo, hom


def _sq(A, *cells):
    """Horizontal paste of several squares."""
    out = cells[0]
    for c in cells[1:]:
        out = A.hComp2(out, c)
    return out


def isMonad(A, X, x, mu, eta):
    ix = A.sqVId(x)
    assoc = (A.vComp2(A.hComp2(mu, ix), mu) == A.vComp2(A.hComp2(ix, mu), mu))
    return (assoc and A.vComp2(A.hComp2(eta, ix), mu) == ix
            and A.vComp2(A.hComp2(ix, eta), mu) == ix)


def isHMorphism(A, m, n, f, phi):
    (_, x, mx, ex), (_, y, my, ey) = m, n
    i = A.sqVId
    lhs = A.vComp2(A.hComp2(i(f), my), phi)
    rhs = A.vComp2(A.vComp2(A.hComp2(phi, i(y)), A.hComp2(i(x), phi)), A.hComp2(mx, i(f)))
    return lhs == rhs and A.vComp2(A.hComp2(i(f), ey), phi) == A.hComp2(ex, i(f))


def isVMorphism(A, m, n, g, gamma):
    (_, _, mx, ex), (_, _, mz, ez) = m, n
    return (A.vComp2(A.hComp2(gamma, gamma), mz) == A.vComp2(mx, gamma)
            and A.vComp2(ex, gamma) == A.vComp2(A.sqHId(g), ez))


def isMonadSquare(A, top, bottom, left, right, w):
    phi, phi2, gamma, gamma2 = top[3], bottom[3], left[3], right[3]
    return A.vComp2(A.hComp2(w, gamma2), phi2) == A.vComp2(phi, A.hComp2(gamma, w))


class Monads(DoubleCategory):
    """Mnd(A), enumerated lazily from A's cells."""

    def __init__(self, A):
        self.A = A
        self.name = f"Mnd({A.name})"
        self._cache = {}

    def _get(self, k, make):
        if k not in self._cache:
            self._cache[k] = make()
        return self._cache[k]

    def objects(self):
        def make():
            A, idx = self.A, self.A.index()
            out = []
            for X in idx.objects:
                v = A.vId(X)
                for x in idx.h_between.get((X, X), ()):
                    for mu in idx.sq_bnd.get((A.hComp1(x, x), x, v, v), ()):
                        for eta in idx.sq_bnd.get((A.hId(X), x, v, v), ()):
                            if isMonad(A, X, x, mu, eta):
                                out.append((X, x, mu, eta))
            return out
        return self._get("o", make)

    def hcells(self):
        def make():
            A, idx = self.A, self.A.index()
            out = []
            for m in self.objects():
                for n in self.objects():
                    X, x, Y, y = m[0], m[1], n[0], n[1]
                    for f in idx.h_between.get((X, Y), ()):
                        key = (A.hComp1(f, y), A.hComp1(x, f), A.vId(X), A.vId(Y))
                        for phi in idx.sq_bnd.get(key, ()):
                            if isHMorphism(A, m, n, f, phi):
                                out.append((m, n, f, phi))
            return out
        return self._get("h", make)

    def vcells(self):
        def make():
            A, idx = self.A, self.A.index()
            out = []
            for m in self.objects():
                for n in self.objects():
                    for g in idx.v_between.get((m[0], n[0]), ()):
                        for gamma in idx.sq_bnd.get((m[1], n[1], g, g), ()):
                            if isVMorphism(A, m, n, g, gamma):
                                out.append((m, n, g, gamma))
            return out
        return self._get("v", make)

    def squares(self):
        def make():
            A, idx = self.A, self.A.index()
            hb, vfrom = {}, {}
            for h in self.hcells():
                hb.setdefault((h[0], h[1]), []).append(h)
            for v in self.vcells():
                vfrom.setdefault(v[0], []).append(v)
            out = []
            for top in self.hcells():
                for left in vfrom.get(top[0], ()):
                    for right in vfrom.get(top[1], ()):
                        for bottom in hb.get((left[1], right[1]), ()):
                            key = (top[2], bottom[2], left[2], right[2])
                            for w in idx.sq_bnd.get(key, ()):
                                if isMonadSquare(A, top, bottom, left, right, w):
                                    out.append((top, bottom, left, right, w))
            return out
        return self._get("s", make)

    def hsrc(self, h):
        return h[0]

    def htgt(self, h):
        return h[1]

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

    def hId(self, m):
        A = self.A
        return (m, m, A.hId(m[0]), A.sqVId(m[1]))

    def vId(self, m):
        A = self.A
        return (m, m, A.vId(m[0]), A.sqVId(m[1]))

    def sqHId(self, v):
        return (self.hId(v[0]), self.hId(v[1]), v, v, self.A.sqHId(v[2]))

    def sqVId(self, h):
        return (h, h, self.vId(h[0]), self.vId(h[1]), self.A.sqVId(h[2]))

    def hComp1(self, h, k):
        A = self.A
        f, phi, g, kap = h[2], h[3], k[2], k[3]
        return (h[0], k[1], A.hComp1(f, g),
                A.vComp2(A.hComp2(A.sqVId(f), kap), A.hComp2(phi, A.sqVId(g))))

    def vComp1(self, u, w):
        A = self.A
        return (u[0], w[1], A.vComp1(u[2], w[2]), A.vComp2(u[3], w[3]))

    def hComp2(self, s, t):
        return (self.hComp1(s[0], t[0]), self.hComp1(s[1], t[1]), s[2], t[3],
                self.A.hComp2(s[4], t[4]))

    def vComp2(self, s, t):
        return (s[0], t[1], self.vComp1(s[2], t[2]), self.vComp1(s[3], t[3]),
                self.A.vComp2(s[4], t[4]))


_MND = {}


def mndCategory(A):
    """The lazy Mnd(A), cached per A."""
    hit = _MND.get(id(A))
    if hit is None:
        hit = _MND[id(A)] = (A, Monads(A))
    return hit[1]


def buildMnd(A):
    return tabulate(mndCategory(A), name=f"Mnd({A.name})")


def mndFunctor(F):
    """Mnd(F), acting componentwise."""
    o = Component(lambda m: (F.obj(m[0]), F.h(m[1]), F.sq(m[2]), F.sq(m[3])))
    h = Component(lambda c: (o(c[0]), o(c[1]), F.h(c[2]), F.sq(c[3])))
    v = Component(lambda c: (o(c[0]), o(c[1]), F.v(c[2]), F.sq(c[3])))

    def sq(s):
        return (h(s[0]), h(s[1]), v(s[2]), v(s[3]), F.sq(s[4]))

    return DoubleFunctor(mndCategory(F.dom), mndCategory(F.cod), o, h, v, sq, label=f"Mnd({F!r})")


def identityMonad(D, X):
    """The trivial monad on an object X of D."""
    i = D.hId(X)
    return (X, i, D.sqVId(i), D.sqVId(i))


def chiMnd(A, B):
    """chi: Mnd[[A,B]] -> [[Mnd A, Mnd B]]."""
    AB = hom(A, B)
    MA, MB = mndCategory(A), mndCategory(B)
    S, T = mndCategory(AB), hom(MA, MB)

    def on_obj(mon):
        Tf, t, theta, tau = mon
        th, ta = theta.obj, tau.obj

        def o(m):
            X, x, mu, eta = m
            tX, Tx = t.obj(X), Tf.h(x)
            mu2 = B.vComp2(_sq(B, B.sqVId(tX), t.h(x), B.sqVId(Tx)),
                           B.hComp2(th(X), Tf.sq(mu)))
            return (Tf.obj(X), B.hComp1(tX, Tx), mu2, B.hComp2(ta(X), Tf.sq(eta)))

        o = Component(o)

        def h(c):
            m, n, f, phi = c
            Y, y = n[0], n[1]
            row1 = B.hComp2(t.h(f), B.sqVId(Tf.h(y)))
            row2 = B.hComp2(B.sqVId(t.obj(m[0])), Tf.sq(phi))
            return (o(m), o(n), Tf.h(f), B.vComp2(row1, row2))

        def v(c):
            m, n, g, gamma = c
            return (o(m), o(n), Tf.v(g), B.hComp2(t.v(g), Tf.sq(gamma)))

        h, v = Component(h), Component(v)
        return DoubleFunctor(MA, MB, o, h, v,
                             lambda s: (h(s[0]), h(s[1]), v(s[2]), v(s[3]), Tf.sq(s[4])))

    om = Component(on_obj)

    def on_h(c):
        m, n, p, pi = c
        F0, F1 = om(m), om(n)
        t = m[1]

        def X(M):
            x = M[1]
            pX = p.obj(M[0])
            row1 = B.hComp2(pi.obj(M[0]), B.sqVId(n[0].h(x)))
            row2 = B.hComp2(B.sqVId(t.obj(M[0])), p.hinv(x))
            return (F0.obj(M), F1.obj(M), pX, B.vComp2(row1, row2))

        X = Component(X)

        def vf(g):
            return (X(g[0]), X(g[1]), F0.v(g), F1.v(g), p.v(g[2]))

        def hf(k, inv=False):
            top, bot = MB.hComp1(F0.h(k), X(k[1])), MB.hComp1(X(k[0]), F1.h(k))
            if inv:
                top, bot = bot, top
            return (top, bot, MB.vId(F0.obj(k[0])), MB.vId(F1.obj(k[1])),
                    (p.hinv if inv else p.h)(k[2]))

        return HPseudo(F0, F1, X, vf, hf, lambda k: hf(k, True))

    def on_v(c):
        m, n, r, rho = c
        F0, F1 = om(m), om(n)

        def Y(M):
            return (F0.obj(M), F1.obj(M), r.obj(M[0]), B.hComp2(rho.obj(M[0]), r.h(M[1])))

        Y = Component(Y)

        def hf(k):
            return (F0.h(k), F1.h(k), Y(k[0]), Y(k[1]), r.h(k[2]))

        def vf(g, inv=False):
            left, right = MB.vComp1(Y(g[0]), F1.v(g)), MB.vComp1(F0.v(g), Y(g[1]))
            if inv:
                left, right = right, left
            return (MB.hId(F0.obj(g[0])), MB.hId(F1.obj(g[1])), left, right,
                    (r.vinv if inv else r.v)(g[2]))

        return VPseudo(F0, F1, Y, hf, vf, lambda g: vf(g, True))

    hm, vm = Component(on_h), Component(on_v)

    def on_s(s):
        top, bottom, left, right = hm(s[0]), hm(s[1]), vm(s[2]), vm(s[3])
        w = s[4]
        return Modification(top, bottom, left, right,
                            lambda M: (top.obj(M), bottom.obj(M), left.obj(M), right.obj(M),
                                       w.obj(M[0])))

    return DoubleFunctor(S, T, om, hm, vm, on_s, label=f"chiMnd_{A.name},{B.name}")
