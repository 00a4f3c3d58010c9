import json

import pytest

from graydbl import io, zoo
from graydbl.core import isIsomorphic, validate
from graydbl.errors import StructuralError
from graydbl.monoid import checkGrayMonoid, failedConditions


@pytest.mark.parametrize("name", ["1", "G", "arrowV", "Sqr(iso2)", "arrowHxZ3", "empty"])
def test_double_round_trip(name):
    D = zoo.resolve(name)
    doc = json.loads(io.dumps(io.doubleToJSON(D)))
    E = io.doubleFromJSON(doc)
    assert io.doubleToJSON(E) == doc
    assert validate(E).ok
    assert E.counts() == D.counts()


@pytest.mark.parametrize("name", ["terminal2", "arrow2", "cell2", "iso2", "idem2"])
def test_two_category_round_trip(name):
    A = zoo.resolve(name)
    doc = json.loads(io.dumps(io.twoToJSON(A)))
    B = io.twoFromJSON(doc)
    assert io.twoToJSON(B) == doc
    assert isIsomorphic(A, B) is not None


def test_two_category_needs_vertical_discreteness():
    with pytest.raises(StructuralError):
        io.twoToJSON(zoo.resolve("G"))


@pytest.mark.parametrize("make", [zoo.discreteMonoid, zoo.maxTimesCyclic, zoo.braidedMonoid])
def test_monoid_round_trip(make):
    m = make()
    doc = json.loads(io.dumps(io.monoidToJSON(m)))
    n = io.monoidFromJSON(doc)
    assert n.maps == m.maps and n.unit == m.unit
    assert checkGrayMonoid(n).ok


def test_monoid_with_named_carrier():
    m = zoo.monoidMutants()["(vi)"]
    doc = io.monoidToJSON(m, carrier_ref="zoo:X")
    with pytest.raises(StructuralError):
        io.monoidFromJSON(doc)
    n = io.monoidFromJSON(doc, resolve=lambda ref: m.carrier)
    assert failedConditions(checkGrayMonoid(n)) == ["(vi)"]


def test_schema_and_kind_are_checked():
    doc = io.doubleToJSON(zoo.resolve("G"))
    with pytest.raises(StructuralError, match="schema"):
        io.doubleFromJSON(dict(doc, schema=2))
    with pytest.raises(StructuralError, match="expected"):
        io.doubleFromJSON(dict(doc, kind="monoid"))
    with pytest.raises(StructuralError):
        io.doubleFromJSON([])


def test_malformed_documents():
    doc = io.doubleToJSON(zoo.resolve("G"))
    del doc["hcomp1"]
    with pytest.raises(StructuralError, match="malformed"):
        io.doubleFromJSON(doc)
    doc = io.doubleToJSON(zoo.resolve("G"))
    doc["squares"][0][1] = 40
    with pytest.raises(StructuralError):
        io.doubleFromJSON(doc)


def test_report_json_is_plain():
    rep = io.reportToJSON([{"check": "x", "ok": False, "witness": (1, object())}])
    assert rep["ok"] is False
    json.dumps(rep)
