import random

import pytest
from hypothesis import given, settings, strategies as st

from graydbl import zoo
from graydbl.errors import StructuralError
from graydbl.functor import validateFunctor
from graydbl.monoid import (CONDITIONS, checkGrayMonoid, checkNaturality, derivedMultiplication,
                            failedConditions, fromStrictMonoid, monoidFunctors)
from graydbl.tensor import validateCone

VALID = {"discrete": zoo.discreteMonoid, "terminal": zoo.terminalMonoid,
         "max-cyclic": zoo.maxTimesCyclic, "braided": zoo.braidedMonoid}

# failure sets fixed by how each mutant is built; the (iii) mutant is a
# non-associative magma on a discrete carrier, which breaks the associativity
# of the 1-cell and square parts (iv) along with (iii)
MUTANT_FAILURES = {"(i)": ["(i)"], "(ii)": ["(ii)"], "(iii)": ["(iii)", "(iv)"],
                   "(iv)": ["(iv)"], "(v)": ["(v)"], "(vi)": ["(vi)"], "(vii)": ["(vii)"]}


@pytest.mark.parametrize("name", sorted(VALID))
def test_valid_monoids(name):
    m = VALID[name]()
    rep = checkGrayMonoid(m)
    assert rep.ok, str(rep)
    assert validateCone(m.cone()).ok
    assert checkNaturality(m) == []


@pytest.mark.parametrize("cond", CONDITIONS)
def test_each_mutant_fails_its_condition(cond):
    m = zoo.monoidMutants()[cond]
    assert failedConditions(checkGrayMonoid(m)) == MUTANT_FAILURES[cond]


def test_mutants_are_distinct():
    named = {c: failedConditions(checkGrayMonoid(m)) for c, m in zoo.monoidMutants().items()}
    assert all(c in f for c, f in named.items()) and len(named) == 7


def test_braided_three_fails_only_expansion():
    assert failedConditions(checkGrayMonoid(zoo.braidedMonoid(3))) == ["(vi)"]


def test_failure_without_valid_cone_stops_early():
    rep = checkGrayMonoid(zoo.monoidMutants()["(i)"])
    assert failedConditions(rep) == ["(i)"]


def test_misframed_entry_is_structural():
    m = zoo.maxTimesCyclic()
    A = m.carrier
    h = next(h for h in A.hcells() if A.hsrc(h) != A.htgt(h))
    bad = m.mutate("hh", h, h, A.sqVId(A.hId(0)))
    with pytest.raises(StructuralError):
        checkGrayMonoid(bad)


def test_star_lookup():
    m = zoo.discreteMonoid()
    assert m.star("oo", 1, 1) == 0
    with pytest.raises(StructuralError):
        m.star("oo", 5, 5)


def test_strict_monoid_prechecks():
    with pytest.raises(StructuralError, match="unital"):
        fromStrictMonoid(zoo.resolve("disc2"), zoo.projectionFake(), 0)


def test_monoid_functors_validate():
    for name in ("discrete", "max-cyclic", "braided"):
        I, M = monoidFunctors(VALID[name]())
        assert validateFunctor(I).ok and validateFunctor(M).ok


def test_derived_multiplication_of_strict_monoid_is_strict():
    d = derivedMultiplication(zoo.maxTimesCyclic())
    assert d.report == {"identities": "ok", "hcomp_strict": "ok", "vcomp_strict": "ok",
                        "families": "ok"}


def test_derived_multiplication_of_braided_monoid_is_not_strict():
    d = derivedMultiplication(zoo.braidedMonoid(2))
    assert d.report["identities"] == "ok" and d.report["families"] == "ok"
    assert d.report["hcomp_strict"] != "ok" or d.report["vcomp_strict"] != "ok"


def test_discrete_derived_families_are_trivial():
    assert derivedMultiplication(zoo.discreteMonoid()).report["families"] == "ok"


def _randomize(m, rng, p):
    A = m.carrier
    frames = {}
    for s in A.squares():
        frames.setdefault(A.boundary(s), []).append(s)
    out = m.copy()
    for tag in ("hv", "vh", "hh", "vv"):
        for k, s in out.maps[tag].items():
            if rng.random() < p:
                out.maps[tag][k] = rng.choice(frames[A.boundary(s)])
    return out


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([0.1, 0.3, 0.6]), st.integers(0, 2))
def test_naturality_agrees_with_cone_validation(seed, p, which):
    base = [zoo.maxTimesCyclic, lambda: zoo.braidedMonoid(3), zoo.braidedMonoid][which]()
    m = _randomize(base, random.Random(seed), p)
    ours = checkNaturality(m)
    theirs = [v for v in validateCone(m.cone(), limit=10**6).violations if v.axiom == "(vii)"]
    assert len(ours) == len(theirs)
