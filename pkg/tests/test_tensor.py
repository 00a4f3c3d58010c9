import json

import pytest

from graydbl import zoo
from graydbl.core import freeArrowH, freeArrowV, generatorG, terminal
from graydbl.errors import StructuralError
from graydbl.functor import enumerateDoubleFunctors, validateFunctor
from graydbl.hom import hom
from graydbl.realize import buildPresentation, checkPresentation
from graydbl.tensor import (TAGS, TensorCone, checkAdjunction, countCones, curryCone,
                            enumerateCones, expectedBoundary, productCone, swapCone,
                            uncurryFunctor, validateCone)

one, aH, aV, G = terminal(), freeArrowH(), freeArrowV(), generatorG()


@pytest.mark.parametrize("A,B", [(aH, aH), (G, aV), (aH, G), (zoo.resolve("Sqr(iso2)"), aH)],
                         ids=lambda D: D.name)
def test_product_cone_validates(A, B):
    assert validateCone(productCone(A, B)).ok


def test_swap_is_an_involution():
    c = productCone(G, aH)
    assert validateCone(swapCone(c)).ok
    assert swapCone(swapCone(c)) == c


def test_expected_boundaries_of_entries():
    c = productCone(G, aH)
    for tag in ("so", "os", "hv", "vh", "hh", "hhi", "vv", "vvi"):
        da, db = c.domains(tag)
        for a in da:
            for b in db:
                assert c.C.boundary(c.get(tag, a, b)) == expectedBoundary(c, tag, a, b)


def test_undefined_entry_is_structural():
    c = TensorCone(aH, aH, aH, {t: {} for t in TAGS})
    with pytest.raises(StructuralError):
        c.get("oo", 0, 0)


def test_misframed_interchanger_is_structural():
    c = productCone(aH, aH).tabulated()
    g = aH.find("hcell", "g")
    m = {t: dict(c._m[t]) for t in TAGS}
    m["hhi"][g, g] = m["hh"][g, g] = c.C.sqVId(c.C.hId(0))
    with pytest.raises(StructuralError):
        validateCone(TensorCone(aH, aH, c.C, m))


@pytest.mark.parametrize("triple,n", [(("1", "G", "arrowH"), 3), (("arrowH", "arrowH", "arrowH"), 6),
                                      (("G", "G", "arrowH"), 6), (("arrowH", "arrowV", "G"), 9)])
def test_cone_counts(triple, n):
    # |cones(A,B;C)| = |DblCat(A,[[B,C]])|, computed from brute-force hom counts
    A, B, C = (zoo.resolve(x) for x in triple)
    assert countCones(A, B, C) == n


def test_all_cones_validate_and_curry():
    cones = enumerateCones(aH, aH, G)
    assert cones
    for c in cones:
        assert validateCone(c).ok
        F = curryCone(c)
        assert validateFunctor(F).ok
        assert uncurryFunctor(F).tabulated() == c.tabulated()


def test_uncurry_of_functors():
    for F in enumerateDoubleFunctors(aV, hom(aH, aH)):
        c = uncurryFunctor(F)
        assert validateCone(c).ok
        assert curryCone(c) == F


@pytest.mark.parametrize("triple", [("arrowV", "arrowH", "arrowHxarrowV"), ("G", "arrowH", "G")])
def test_adjunction(triple):
    ok, info = checkAdjunction(*(zoo.resolve(x) for x in triple))
    assert ok and info["cones"] == info["functors"]


# generator counts derived by hand: one generator per pair of a non-identity
# cell of one factor with an object of the other, plus the interchangers
@pytest.mark.parametrize("A,B,counts", [
    (aH, aH, (4, 4, 0, 2)), (aH, aV, (4, 2, 2, 1)), (G, one, (4, 2, 2, 1)), (G, G, (16, 16, 16, 32))],
    ids=lambda x: getattr(x, "name", ""))
def test_presentation_generators(A, B, counts):
    P = buildPresentation(A, B)
    c = P.counts()
    assert (c["objects"], c["hcells"], c["vcells"], c["squares"]) == counts
    assert checkPresentation(P).ok


def test_presentation_json():
    P = buildPresentation(aH, aV)
    doc = json.loads(P.dumps())
    assert doc["schema"] == 1 and len(doc["relations"]) == P.counts()["relations"]
    assert {r["family"] for r in doc["relations"]} <= {"(invertibility)", "(vi)", "(vii)"}
