import pytest

from graydbl import zoo
from graydbl.core import freeArrowH, generatorG, isIsomorphic, terminal, validate
from graydbl.functor import composeFunctors, functorsEqual, identityFunctor, validateFunctor
from graydbl.hom import (buildHomDouble, buildStrictHomDouble, collapse, composeHPseudo,
                         enumerateHPseudo, enumerateVPseudo, expand, hom, homMap,
                         identityHPseudo, inclusionStrictHom, validateHPseudo,
                         validateModification, validateVPseudo)
from oracles import HOM_COUNTS


def _ohv(D):
    c = D.counts()
    return (c["objects"], c["hcells"], c["vcells"])


@pytest.mark.parametrize("pair", sorted(HOM_COUNTS))
def test_hom_counts_match_brute_force(pair):
    A, B = (zoo.resolve(x) for x in pair)
    assert _ohv(buildHomDouble(A, B)) == HOM_COUNTS[pair]


@pytest.mark.parametrize("name", ["1", "G", "arrowH", "arrowV", "Gx1", "Sqr(cell2)", "chain3"])
def test_hom_from_terminal(name):
    A = zoo.resolve(name)
    assert isIsomorphic(buildHomDouble(terminal(), A), A) is not None


@pytest.mark.parametrize("name", ["G", "arrowH", "Sqr(iso2)"])
def test_hom_into_terminal(name):
    assert isIsomorphic(buildHomDouble(zoo.resolve(name), terminal()), terminal()) is not None


@pytest.mark.parametrize("pair", [("arrowH", "arrowH"), ("G", "G"), ("arrowV", "G"),
                                  ("arrowH", "Sqr(iso2)")])
def test_hom_validates(pair):
    A, B = (zoo.resolve(x) for x in pair)
    assert validate(buildHomDouble(A, B)).ok


def test_cells_validate_individually():
    H = hom(generatorG(), generatorG())
    assert all(validateHPseudo(x).ok for x in H.hcells())
    assert all(validateVPseudo(y).ok for y in H.vcells())
    assert all(validateModification(M).ok for M in H.squares())


def test_pseudo_components_are_invertible_in_iso_codomain():
    # with invertible 2-cells available, the hom has non-strict cells
    A, B = freeArrowH(), zoo.resolve("Sqr(iso2)")
    full, strict = buildHomDouble(A, B), buildStrictHomDouble(A, B)
    assert _ohv(strict)[1] < _ohv(full)[1]
    assert validate(strict).ok
    assert validateFunctor(inclusionStrictHom(A, B)).ok


def test_strict_equals_full_without_invertible_cells():
    A, B = generatorG(), generatorG()
    assert buildStrictHomDouble(A, B).counts() == buildHomDouble(A, B).counts()


def test_identity_is_a_unit_for_composition():
    H = hom(freeArrowH(), freeArrowH())
    for x in H.hcells():
        assert composeHPseudo(x, identityHPseudo(x.src)) == x
        assert composeHPseudo(identityHPseudo(x.tgt), x) == x


def test_enumeration_between_fixed_functors():
    H = hom(generatorG(), generatorG())
    F = H.objects()[0]
    for G in H.objects():
        for x in enumerateHPseudo(F, G):
            assert (x.src, x.tgt) == (F, G)
        for y in enumerateVPseudo(F, G):
            assert (y.src, y.tgt) == (F, G)


def test_collapse_and_expand_are_inverse():
    G = generatorG()
    c, e = collapse(G), expand(G)
    assert validateFunctor(c).ok and validateFunctor(e).ok
    assert functorsEqual(composeFunctors(c, e), identityFunctor(G))[0]


def test_hom_is_functorial():
    A, B = freeArrowH(), generatorG()
    I = homMap(identityFunctor(A), identityFunctor(B))
    assert validateFunctor(I).ok
    assert functorsEqual(I, identityFunctor(hom(A, B)))[0]
