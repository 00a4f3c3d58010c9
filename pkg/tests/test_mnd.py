import pytest

from graydbl import zoo
from graydbl.core import freeArrowH, generatorG, isIsomorphic, terminal, validate
from graydbl.functor import constantFunctor, enumerateDoubleFunctors, identityFunctor, validateFunctor
from graydbl.mnd import buildMnd, chiMnd, identityMonad, isMonad, mndCategory, mndFunctor
from graydbl.twocat import quintetSqr, terminal2
from oracles import MONAD_COUNTS, bruteMonadCount


@pytest.mark.parametrize("name", sorted(MONAD_COUNTS))
def test_monads_match_brute_force(name):
    D = zoo.resolve(name)
    M = buildMnd(D)
    assert M.counts()["objects"] == MONAD_COUNTS[name] == bruteMonadCount(D)


@pytest.mark.parametrize("name", ["1", "G", "arrowH", "Z2", "chain3", "Sqr(idem2)", "Sqr(cell2)"])
def test_mnd_validates(name):
    rep = validate(buildMnd(zoo.resolve(name)))
    assert rep.ok, str(rep)


def test_small_cases():
    one = terminal()
    assert isIsomorphic(buildMnd(one), one) is not None
    assert buildMnd(freeArrowH()).counts()["objects"] == 2
    assert isIsomorphic(buildMnd(quintetSqr(terminal2())), one) is not None


def test_free_categories_only_have_trivial_monads():
    # no non-identity endomorphisms, so Mnd(D) = D
    for D in (generatorG(), freeArrowH(), zoo.resolve("chain3")):
        assert isIsomorphic(buildMnd(D), D) is not None


def test_identity_monads():
    D = zoo.resolve("Sqr(idem2)")
    for X in D.objects():
        assert isMonad(D, *identityMonad(D, X))
    assert identityMonad(D, 0) in list(mndCategory(D).objects())


def test_mnd_is_functorial():
    A, B = generatorG(), zoo.resolve("Z2")
    for F in enumerateDoubleFunctors(A, B):
        assert validateFunctor(mndFunctor(F)).ok
    assert validateFunctor(mndFunctor(identityFunctor(B))).ok
    assert validateFunctor(mndFunctor(constantFunctor(B, terminal(), 0))).ok


@pytest.mark.parametrize("pair", [("1", "arrowH"), ("arrowH", "arrowH"), ("1", "Z2"), ("arrowV", "arrowH")])
def test_chi_validates(pair):
    A, B = (zoo.resolve(x) for x in pair)
    assert validateFunctor(chiMnd(A, B)).ok
