"""Broken double categories and perturbed canonical maps for negative tests."""

from graydbl.core import FiniteDoubleCategory, _Builder, generatorG
from graydbl.functor import DoubleFunctor
from graydbl.zoo import cyclicH


def wrongBoundary():
    D = generatorG().copy(name="G/bad-boundary")
    t = D.find("hcell", "t")
    top, bottom, l, r = D.sq[D.find("square", "tau")]
    D.sq[D.find("square", "tau")] = (top, t, l, r)
    return D


def brokenUnit():
    D = cyclicH(2).copy(name="H2/bad-unit")
    D.hcomp1[0, 1] = 0
    D.hcomp2[D.sqvid[0], D.sqvid[1]] = D.sqvid[0]
    return D


def nonAssociative():
    # a;a = b, a;b = b, b;a = a, b;b = a
    b = _Builder("nonassoc")
    b.object("*")
    a, c = b.gen_h("a", 0, 0), b.gen_h("b", 0, 0)
    for x, y, z in ((a, a, c), (a, c, c), (c, a, a), (c, c, a)):
        b.extra["h1"][x, y] = z
        b.extra["h2"][b.sqvid[x], b.sqvid[y]] = b.sqvid[z]
    return b.build()


def noInterchange():
    """Squares Z/2 x Z/2 side by side but Z/4 stacked."""
    idx = range(4)
    return FiniteDoubleCategory(
        1, [(0, 0)], [(0, 0)], [(0, 0, 0, 0)] * 4, [0], [0], [0], [0],
        {(0, 0): 0}, {(0, 0): 0},
        {(x, y): x ^ y for x in idx for y in idx},
        {(x, y): (x + y) % 4 for x in idx for y in idx}, name="xor/plus")


def partialComposition():
    D = generatorG().copy(name="G/partial")
    h, k = next(iter(D.hcomp1))
    del D.hcomp1[h, k]
    for s, t in [p for p in D.hcomp2 if (D.top(p[0]), D.top(p[1])) == (h, k)]:
        del D.hcomp2[s, t]
    return D


# axiom family expected from validate, per mutant
MUTANTS = {
    "boundary coherence": wrongBoundary,
    "unit law": brokenUnit,
    "associativity": nonAssociative,
    "interchange": noInterchange,
    "totality": partialComposition,
}


def constantOnObjects(F):
    """Same cell maps but every object sent to one image: no longer a functor."""
    first = F.obj(next(iter(F.dom.objects())))
    return DoubleFunctor(F.dom, F.cod, lambda x: first, F.h, F.v, F.sq)


def perturbed(fn):
    return lambda *a, **kw: constantOnObjects(fn(*a, **kw))


def perturbedOnce(fn):
    """Perturb only the first call, so one side of a law is wrong and the other is not."""
    calls = []

    def wrapped(*a, **kw):
        calls.append(a)
        F = fn(*a, **kw)
        return constantOnObjects(F) if len(calls) == 1 else F
    return wrapped
