import pytest

from graydbl import zoo
from graydbl.core import freeArrowH, freeArrowV, generatorG, isIsomorphic, terminal
from graydbl.errors import ResourceError, StructuralError
from graydbl.functor import (DoubleFunctor, composeFunctors, constantFunctor,
                             countDoubleFunctors, enumerateDoubleFunctors, functorsEqual,
                             identityFunctor, inverseFunctor, validateFunctor)
from graydbl.search import Budget
from oracles import FUNCTOR_COUNTS, G_REPRESENTS, bruteFunctors


@pytest.mark.parametrize("pair", sorted(FUNCTOR_COUNTS))
def test_counts_match_brute_force(pair):
    a, b = pair
    assert countDoubleFunctors(zoo.resolve(a), zoo.resolve(b)) == FUNCTOR_COUNTS[pair]


@pytest.mark.parametrize("name", sorted(G_REPRESENTS))
def test_g_represents_squares(name):
    D = zoo.resolve(name)
    assert countDoubleFunctors(generatorG(), D) == len(list(D.squares())) == G_REPRESENTS[name]


@pytest.mark.parametrize("pair", [("G", "arrowHxarrowV"), ("chain3", "chain3"), ("arrowH", "G")])
def test_enumeration_agrees_with_brute_force(pair):
    A, B = (zoo.resolve(x) for x in pair)
    ours = {tuple(tuple(F.apply(k, x) for x in A.cells(k))
                  for k in ("object", "hcell", "vcell", "square"))
            for F in enumerateDoubleFunctors(A, B)}
    theirs = {tuple(tuple(m[x] for x in A.cells(k)) for m, k in
                    zip(f, ("object", "hcell", "vcell", "square")))
              for f in bruteFunctors(A, B)}
    assert ours == theirs


def test_enumerated_functors_validate():
    G = generatorG()
    D = zoo.resolve("Sqr(iso2)")
    fs = enumerateDoubleFunctors(G, D)
    assert fs and all(validateFunctor(F).ok for F in fs)


def test_identity_and_composition():
    G = generatorG()
    one = terminal()
    F = constantFunctor(G, one, 0)
    assert validateFunctor(F).ok
    assert functorsEqual(composeFunctors(F, identityFunctor(G)), F)[0]
    with pytest.raises(StructuralError):
        composeFunctors(F, F)


def test_equality_and_hash_by_tabulation():
    G = generatorG()
    I = identityFunctor(G)
    T = I.tabulated()
    assert I == T and hash(I) == hash(T)


def test_inverse_of_isomorphism():
    A, B = freeArrowH().transpose(), freeArrowV()
    F = isIsomorphic(A, B)
    assert F is not None
    Finv = inverseFunctor(F)
    assert functorsEqual(composeFunctors(Finv, F), identityFunctor(A))[0]


def test_boundary_violation_is_reported():
    A = freeArrowH()
    G = generatorG()
    bad = DoubleFunctor(A, G, lambda x: 0, lambda h: G.hId(0), lambda v: G.vId(0),
                        lambda s: G.sqVId(G.hId(0)))
    # sends the nonidentity arrow to an identity: still a functor
    assert validateFunctor(bad).ok
    g = A.find("hcell", "g")
    t = G.find("hcell", "t")
    worse = DoubleFunctor(A, G, lambda x: 0, lambda h: t if h == g else G.hId(0),
                          lambda v: G.vId(0), lambda s: G.sqVId(G.hId(0)))
    assert "boundary preservation" in validateFunctor(worse).axioms()


def test_out_of_range_images_raise():
    A = freeArrowH()
    one = terminal()
    F = DoubleFunctor(A, one, lambda x: 5, lambda x: 0, lambda x: 0, lambda x: 0)
    with pytest.raises(StructuralError):
        validateFunctor(F)


def test_budget_exhaustion():
    with pytest.raises(ResourceError):
        countDoubleFunctors(generatorG(), zoo.resolve("Sqr(iso2)"), budget=Budget(3))


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("GRAYDBL_BUDGET", "3")
    with pytest.raises(ResourceError):
        countDoubleFunctors(generatorG(), zoo.resolve("Sqr(iso2)"))
    monkeypatch.setenv("GRAYDBL_BUDGET", "zero")
    with pytest.raises(ValueError):
        Budget()
