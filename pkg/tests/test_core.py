import pytest
from hypothesis import given, settings, strategies as st

from graydbl import zoo
from graydbl.core import (cartesianProduct, discrete, empty, freeArrowH, freeArrowV, generatorG,
                          isIsomorphic, tabulate, terminal, validate)
from graydbl.errors import GrayDblError, StructuralError
from helpers import MUTANTS
from oracles import COUNTS

SMALL = ["1", "G", "arrowH", "arrowV", "Z2", "disc2", "chain3", "Sqr(arrow2)"]


def _counts(D):
    c = D.counts()
    return (c["objects"], c["hcells"], c["vcells"], c["squares"])


@pytest.mark.parametrize("name", sorted(COUNTS))
def test_generator_counts(name):
    assert _counts(zoo.resolve(name)) == COUNTS[name]


@pytest.mark.parametrize("name", zoo.names())
def test_zoo_validates(name):
    rep = validate(zoo.resolve(name))
    assert rep.ok, str(rep)


@pytest.mark.parametrize("family", sorted(MUTANTS))
def test_mutant_names_its_axiom(family):
    rep = validate(MUTANTS[family]())
    assert not rep.ok
    assert any(a.startswith(family) for a in rep.axioms())
    assert all(v.cells for v in rep.violations)


def test_interchange_witness_is_four_squares():
    rep = validate(MUTANTS["interchange"]())
    v = next(v for v in rep.violations if v.axiom == "interchange")
    assert len(v.cells) == 4


def test_limit_caps_violations():
    rep = validate(MUTANTS["interchange"](), limit=3)
    assert len(rep.violations) == 3


def test_tau_boundary():
    G = generatorG()
    tau = G.find("square", "tau")
    t, b, l, r = G.boundary(tau)
    assert [G.name_of("hcell", t), G.name_of("hcell", b)] == ["t", "b"]
    assert [G.name_of("vcell", l), G.name_of("vcell", r)] == ["l", "r"]


def test_identity_laws_in_free_arrow():
    A = freeArrowH()
    g = A.find("hcell", "g")
    assert A.hComp1(A.hId(A.hsrc(g)), g) == g == A.hComp1(g, A.hId(A.htgt(g)))


def test_transpose_swaps_directions():
    G = generatorG()
    T = G.transpose()
    assert _counts(T) == (4, 6, 6, 9)
    assert isIsomorphic(T, G) is not None
    assert isIsomorphic(freeArrowH().transpose(), freeArrowV()) is not None
    assert isIsomorphic(freeArrowH(), freeArrowV()) is None


def test_empty_and_discrete():
    assert _counts(empty()) == (0, 0, 0, 0)
    assert validate(empty()).ok
    assert _counts(discrete(3)) == (3, 3, 3, 3)


def test_copy_is_independent():
    G = generatorG()
    D = G.copy()
    D.hcomp1.clear()
    assert G.hcomp1 and not validate(D).ok


def test_check_structure_rejects_bad_index():
    D = generatorG().copy()
    D.sq[0] = (99, 0, 0, 0)
    with pytest.raises(StructuralError):
        D.check_structure()


def test_unknown_zoo_name():
    with pytest.raises(GrayDblError):
        zoo.resolve("zoo:nope")
    assert zoo.resolve("zoo:G") is zoo.resolve("G")


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_products_validate_and_multiply(a, b):
    A, B = zoo.resolve(a), zoo.resolve(b)
    P = tabulate(cartesianProduct(A, B))
    assert validate(P).ok
    assert _counts(P) == tuple(x * y for x, y in zip(_counts(A), _counts(B)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_interchange_on_random_grids(name, data):
    D = zoo.resolve(name)
    sqs = list(D.squares())
    a = data.draw(st.sampled_from(sqs))
    right = [s for s in sqs if D.left(s) == D.right(a)]
    below = [s for s in sqs if D.top(s) == D.bottom(a)]
    if not right or not below:
        return
    b = data.draw(st.sampled_from(right))
    c = data.draw(st.sampled_from(below))
    corner = [s for s in sqs if D.top(s) == D.bottom(b) and D.left(s) == D.right(c)]
    if not corner:
        return
    d = data.draw(st.sampled_from(corner))
    H, V = D.hComp2, D.vComp2
    assert V(H(a, b), H(c, d)) == H(V(a, c), V(b, d))


def test_terminal_is_terminal():
    one = terminal()
    assert _counts(one) == (1, 1, 1, 1)
