"""JSON formats for double categories, monoid data and check reports.

Every document carries ``"schema": 1``.  Cells are referred to by index.

Double category::

    {"schema": 1, "kind": "double", "name": "...",
     "objects": ["X", ...],
     "hcells": [["f", src, tgt], ...], "vcells": [...],
     "squares": [["s", top, bottom, left, right], ...],
     "hid": [...], "vid": [...], "sqhid": [...], "sqvid": [...],
     "hcomp1": [[a, b, a;b], ...], "vcomp1": [...], "hcomp2": [...], "vcomp2": [...]}

2-category (vertical 1-cells omitted)::

    {"schema": 1, "kind": "2-category", "name": "...",
     "objects": [...], "onecells": [["f", src, tgt], ...],
     "twocells": [["a", source 1-cell, target 1-cell], ...],
     "id1": [...], "id2": [...],
     "comp1": [[f, g, f;g], ...], "vcomp": [...], "hcomp": [...]}

Monoid data::

    {"schema": 1, "kind": "monoid", "name": "...",
     "carrier": "zoo:NAME" or a double category document,
     "unit": object index,
     "maps": {"oo": [[a, b, a*b], ...], "ho": [...], ..., "vvi": [...]}}
"""

import json

from .core import FiniteDoubleCategory
from .errors import StructuralError
from .monoid import GrayMonoidData
from .tensor import TAGS
from .twocat import Finite2Category, isVerticallyDiscrete

SCHEMA = 1
_KINDS = ("object", "hcell", "vcell", "square")


def _triples(table):
    return [[a, b, c] for (a, b), c in sorted(table.items())]


def doubleToJSON(D):
    names = {k: [D.name_of(k, i) for i in D.cells(k)] for k in _KINDS}
    return {
        "schema": SCHEMA, "kind": "double", "name": D.name,
        "objects": names["object"],
        "hcells": [[n, s, t] for n, (s, t) in zip(names["hcell"], D.h)],
        "vcells": [[n, s, t] for n, (s, t) in zip(names["vcell"], D.v)],
        "squares": [[n, *b] for n, b in zip(names["square"], D.sq)],
        "hid": D.hid, "vid": D.vid, "sqhid": D.sqhid, "sqvid": D.sqvid,
        "hcomp1": _triples(D.hcomp1), "vcomp1": _triples(D.vcomp1),
        "hcomp2": _triples(D.hcomp2), "vcomp2": _triples(D.vcomp2),
    }


def _check_schema(doc, kind):
    if not isinstance(doc, dict):
        raise StructuralError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise StructuralError(f"unsupported schema {doc.get('schema')!r}, expected {SCHEMA}")
    if doc.get("kind", kind) != kind:
        raise StructuralError(f"expected a {kind} document, got {doc.get('kind')!r}")


def doubleFromJSON(doc):
    _check_schema(doc, "double")
    try:
        table = lambda key: {(a, b): c for a, b, c in doc[key]}
        D = FiniteDoubleCategory(
            len(doc["objects"]), [x[1:] for x in doc["hcells"]], [x[1:] for x in doc["vcells"]],
            [x[1:] for x in doc["squares"]], doc["hid"], doc["vid"], doc["sqhid"], doc["sqvid"],
            table("hcomp1"), table("vcomp1"), table("hcomp2"), table("vcomp2"),
            name=doc.get("name", "D"),
            names={"object": list(doc["objects"]),
                   "hcell": [x[0] for x in doc["hcells"]],
                   "vcell": [x[0] for x in doc["vcells"]],
                   "square": [x[0] for x in doc["squares"]]})
    except (KeyError, TypeError, ValueError) as e:
        raise StructuralError(f"malformed double category document: {e!r}") from None
    D.check_structure()
    return D


def twoToJSON(A):
    if not isVerticallyDiscrete(A):
        raise StructuralError(f"{A.name} is not a 2-category")
    names = {k: [A.name_of(k, i) for i in A.cells(k)] for k in ("object", "hcell", "square")}
    return {
        "schema": SCHEMA, "kind": "2-category", "name": A.name,
        "objects": names["object"],
        "onecells": [[n, s, t] for n, (s, t) in zip(names["hcell"], A.h)],
        "twocells": [[n, t, b] for n, (t, b, _, _) in zip(names["square"], A.sq)],
        "id1": A.hid, "id2": A.sqvid,
        "comp1": _triples(A.hcomp1), "vcomp": _triples(A.vcomp2), "hcomp": _triples(A.hcomp2),
    }


def twoFromJSON(doc):
    _check_schema(doc, "2-category")
    try:
        table = lambda key: {(a, b): c for a, b, c in doc[key]}
        A = Finite2Category(
            len(doc["objects"]), [x[1:] for x in doc["onecells"]],
            [x[1:] for x in doc["twocells"]], doc["id1"], doc["id2"],
            table("comp1"), table("vcomp"), table("hcomp"), name=doc.get("name", "A"),
            names={"object": list(doc["objects"]),
                   "hcell": [x[0] for x in doc["onecells"]],
                   "vcell": list(doc["objects"]),
                   "square": [x[0] for x in doc["twocells"]]})
    except (KeyError, TypeError, ValueError, IndexError) as e:
        raise StructuralError(f"malformed 2-category document: {e!r}") from None
    A.check_structure()
    return A


def monoidToJSON(m, carrier_ref=None):
    return {
        "schema": SCHEMA, "kind": "monoid", "name": m.name,
        "carrier": carrier_ref or doubleToJSON(m.carrier),
        "unit": m.unit,
        "maps": {t: _triples(m.maps[t]) for t in TAGS},
    }


def monoidFromJSON(doc, resolve=None):
    """``resolve`` turns a ``zoo:`` carrier reference into a double category."""
    _check_schema(doc, "monoid")
    try:
        ref = doc["carrier"]
        if isinstance(ref, str):
            if resolve is None:
                raise StructuralError("carrier given by name but no resolver supplied")
            A = resolve(ref)
        else:
            A = doubleFromJSON(ref)
        maps = {t: {(a, b): c for a, b, c in doc["maps"][t]} for t in TAGS}
        return GrayMonoidData(A, doc["unit"], maps, name=doc.get("name"))
    except (KeyError, TypeError, ValueError) as e:
        raise StructuralError(f"malformed monoid document: {e!r}") from None


def _plain(x):
    """Make witnesses JSON-friendly."""
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return repr(x)


def reportToJSON(results):
    """``results`` are dicts with at least "check" and "ok"."""
    return {"schema": SCHEMA, "ok": all(r["ok"] for r in results),
            "checks": [_plain(r) for r in results]}


def dumps(doc):
    return json.dumps(doc, indent=1, sort_keys=False)


def load(path):
    with open(path) as fh:
        return json.load(fh)
