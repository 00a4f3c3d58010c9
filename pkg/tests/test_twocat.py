import pytest

from graydbl import zoo
from graydbl.core import freeArrowH, freeArrowV, generatorG, isIsomorphic, terminal, validate
from graydbl.errors import StructuralError
from graydbl.functor import validateFunctor
from graydbl.twocat import (Finite2Category, arrow2, checkChiAssoc, checkChiUnit, chiH, chiSqr,
                            chiV, comparison, grayHom2, horizontal2Cat, idempotent2, iso2Cell,
                            isVerticallyDiscrete, l2Functor, quintetSqr, terminal2,
                            validate2Cat, validate2Functor, vertical2Cat, walking2Cell)

one, aH, aV, G = terminal(), freeArrowH(), freeArrowV(), generatorG()
TWO = [terminal2, arrow2, walking2Cell, iso2Cell, idempotent2]


@pytest.mark.parametrize("make", TWO, ids=lambda f: f.__name__)
def test_small_two_categories_validate(make):
    A = make()
    assert isVerticallyDiscrete(A)
    assert validate2Cat(A).ok
    assert validate(quintetSqr(A)).ok


def test_quintet_counts():
    # Sqr(arrow): squares f;r => l;b are commuting squares in {0 -> 1}
    assert zoo.resolve("Sqr(arrow2)").counts()["squares"] == 6
    assert isIsomorphic(quintetSqr(terminal2()), one) is not None


def test_horizontal_of_g_drops_tau():
    H = horizontal2Cat(G)
    assert validate2Cat(H).ok
    assert G.find("square", "tau") not in [s for s in H.squares()]
    assert len(list(H.squares())) == len(list(G.hcells()))
    V = vertical2Cat(G)
    assert len(list(V.onecells())) == len(list(G.vcells()))


def test_from_double_requires_vertical_discreteness():
    with pytest.raises(StructuralError):
        Finite2Category.fromDouble(G)


def test_gray_hom_of_two_categories():
    A, B = arrow2(), walking2Cell()
    H = grayHom2(A, B)
    assert validate2Cat(H).ok
    # the two constant 2-functors, and 0 -> 1 sent to f or to g
    assert len(list(H.objects())) == 4


def test_l2_is_a_two_functor():
    assert validate2Functor(l2Functor(arrow2(), arrow2(), walking2Cell())).ok


@pytest.mark.parametrize("which,A,B", [("h", aH, aH), ("h", G, aV), ("v", aV, aV), ("v", aH, G)],
                         ids=lambda x: getattr(x, "name", x))
def test_chi_h_v_are_two_functors(which, A, B):
    assert validate2Functor((chiH if which == "h" else chiV)(A, B)).ok


@pytest.mark.parametrize("A,B", [(arrow2(), arrow2()), (walking2Cell(), arrow2()), (iso2Cell(), terminal2())],
                         ids=lambda x: x.name)
def test_chi_sqr(A, B):
    assert validateFunctor(chiSqr(A, B)).ok


@pytest.mark.parametrize("which,args", [
    ("h", (one, one, one)), ("h", (aH, aH, one)), ("v", (aV, aV, one)),
    ("sqr", (terminal2(), terminal2(), terminal2())), ("sqr", (arrow2(), arrow2(), terminal2())),
    ("mnd", (one, aH, one))], ids=lambda x: x if isinstance(x, str) else "-".join(d.name for d in x))
def test_chi_assoc(which, args):
    assert checkChiAssoc(which, *args).ok


@pytest.mark.parametrize("which,A", [("h", one), ("h", G), ("v", G), ("sqr", terminal2()),
                                     ("sqr", arrow2()), ("mnd", aH)],
                         ids=lambda x: getattr(x, "name", x))
def test_chi_unit(which, A):
    assert checkChiUnit(which, A).ok


def test_unknown_comparison():
    with pytest.raises(ValueError):
        comparison("q")
