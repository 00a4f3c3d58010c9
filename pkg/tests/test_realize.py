import pytest

from graydbl import zoo
from graydbl.core import freeArrowH, freeArrowV, generatorG, isIsomorphic, terminal, validate
from graydbl.errors import UnrealizedError
from graydbl.functor import countDoubleFunctors, validateFunctor
from graydbl.realize import precompose, realizeTensor
from graydbl.tensor import countCones, enumerateCones, validateCone

one, aH, aV, G = terminal(), freeArrowH(), freeArrowV(), generatorG()


def _c(D):
    c = D.counts()
    return (c["objects"], c["hcells"], c["vcells"], c["squares"])


@pytest.mark.parametrize("name", ["1", "G", "arrowH", "arrowV", "arrowHxarrowV", "Sqr(cell2)"])
def test_unit_tensors(name):
    B = zoo.resolve(name)
    assert isIsomorphic(realizeTensor(one, B).category, B) is not None
    assert isIsomorphic(realizeTensor(B, one).category, B) is not None


# counted by hand: in the 2x2 grid there are 4 identities, 4 edges and the two
# routes around the square; squares are the 10 identities plus h*p and its inverse
@pytest.mark.parametrize("A,B,counts", [(aH, aH, (4, 10, 4, 12)), (aH, aV, (4, 6, 6, 9)),
                                        (aV, aV, (4, 4, 10, 12))], ids=lambda x: getattr(x, "name", ""))
def test_arrow_tensors(A, B, counts):
    R = realizeTensor(A, B)
    assert _c(R.category) == counts
    assert validate(R.category).ok
    assert validateCone(R.cone).ok


def test_mixed_tensor_is_the_product_parallel_is_not():
    from graydbl.core import cartesianProduct
    assert isIsomorphic(realizeTensor(aH, aV).category, cartesianProduct(aH, aV)) is not None
    assert _c(realizeTensor(aH, aH).category) != _c(cartesianProduct(aH, aH))


def test_certificate_against_two_codomains():
    R = realizeTensor(aH, aH, certify=[G, aH, "self"])
    codomains = R.certificate["codomains"]
    assert [d["codomain"] for d in codomains][:2] == ["G", "arrowH"]
    for C in (G, aH):
        assert countDoubleFunctors(R.category, C) == countCones(aH, aH, C)


def test_depth_one_is_unbounded():
    with pytest.raises(UnrealizedError, match="unbounded"):
        realizeTensor(aH, aH, maxDepth=1)


def test_induced_functor_restricts_to_the_cone():
    R = realizeTensor(aH, aH)
    for c in enumerateCones(aH, aH, G):
        F = R.induced(c)
        assert validateFunctor(F).ok
        assert precompose(R, F) == c.tabulated()


def test_realization_is_cached():
    assert realizeTensor(aH, aV) is realizeTensor(aH, aV)
