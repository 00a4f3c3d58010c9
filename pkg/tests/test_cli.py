import io as _io
import json
import os

import pytest

from graydbl.cli import FAIL, OK, RESOURCE, USAGE, execute, main

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def run(*argv):
    out = _io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--json")
    doc = json.loads(text)
    assert doc["exit"] == code
    return code, doc


@pytest.mark.parametrize("argv", [
    ["validate", "zoo:G"],
    ["validate", os.path.join(DATA, "arrow.json")],
    ["validate", os.path.join(DATA, "cell2.json")],
    ["functors", "zoo:G", "zoo:arrowHxarrowV"],
    ["hom", "zoo:arrowH", "zoo:arrowH", "--validate"],
    ["strict-hom", "zoo:arrowH", "zoo:Sqr(iso2)", "--validate"],
    ["canonical-check", "l-id", "zoo:arrowH", "zoo:G"],
    ["canonical-check", "f-involution", "zoo:1", "zoo:arrowH", "zoo:G"],
    ["tensor", "present", "zoo:arrowH", "zoo:arrowH"],
    ["tensor", "realize", "zoo:arrowH", "zoo:arrowV"],
    ["tensor", "adjunction-check", "zoo:G", "zoo:G", "zoo:arrowH"],
    ["coherence", "pentagon", "zoo:1", "zoo:1", "zoo:1", "zoo:1"],
    ["coherence", "hexagon", "zoo:arrowH", "zoo:1", "zoo:1"],
    ["sqr", "zoo:iso2"],
    ["h2", "zoo:G"],
    ["v2", "zoo:G"],
    ["chi", "h", "zoo:arrowH", "zoo:arrowH", "--check-assoc", "zoo:1", "--check-unit"],
    ["chi", "sqr", "zoo:arrow2", "zoo:arrow2", "--check-assoc", "zoo:terminal2"],
    ["mnd", "zoo:Sqr(idem2)"],
    ["mnd", "build", "zoo:arrowH"],
    ["mnd", "chi", "zoo:1", "zoo:arrowH", "--check"],
    ["monoid", "check", os.path.join(DATA, "discrete-monoid.json")],
    ["monoid", "check", "zoo:monoid:braided"],
], ids=lambda a: " ".join(os.path.basename(x) for x in a))
def test_passing_commands(argv):
    code, doc = run_json(*argv)
    assert code == OK, doc
    assert doc["ok"] and doc["schema"] == 1


def test_text_output():
    code, text = run("validate", "zoo:arrowH")
    assert code == OK and text.startswith("PASS validate arrowH")


def test_failing_monoid_reports_conditions():
    code, doc = run_json("monoid", "check", os.path.join(DATA, "broken-unit.json"))
    assert code == FAIL
    assert doc["checks"][0]["conditions"] == ["(ii)"]
    code, doc = run_json("monoid", "check", "zoo:monoid:mutant(vi)")
    assert code == FAIL and doc["checks"][0]["conditions"] == ["(vi)"]


def test_failing_validation_has_witness(tmp_path):
    from graydbl import io
    from helpers import noInterchange
    p = tmp_path / "bad.json"
    p.write_text(io.dumps(io.doubleToJSON(noInterchange())))
    code, doc = run_json("validate", str(p))
    assert code == FAIL
    assert doc["checks"][0]["violations"]


def test_usage_errors():
    assert run("validate", "zoo:nothing")[0] == USAGE
    assert run("frobnicate")[0] == USAGE
    assert run()[0] == USAGE
    assert run("coherence", "pentagon", "zoo:1")[0] == USAGE
    assert run("validate", "zoo:G", "--budget", "0")[0] == USAGE
    assert run("mnd", "chi", "zoo:1")[0] == USAGE


def test_unbounded_realization_is_a_resource_failure():
    code, doc = run_json("tensor", "realize", "zoo:arrowH", "zoo:arrowH", "--depth", "1")
    assert code == RESOURCE and "unbounded" in doc["checks"][0]["error"]


def test_budget_exhaustion_is_a_resource_failure():
    code, _ = run("functors", "zoo:G", "zoo:Sqr(iso2)", "--budget", "2")
    assert code == RESOURCE
    assert "GRAYDBL_BUDGET" not in os.environ or os.environ["GRAYDBL_BUDGET"] != "2"


def test_config_file(tmp_path):
    cfg = tmp_path / "c.conf"
    cfg.write_text("budget = 2\n")
    assert run("functors", "zoo:G", "zoo:Sqr(iso2)", "--config", str(cfg))[0] == RESOURCE
    assert run("functors", "zoo:G", "zoo:Sqr(iso2)", "--config", str(cfg), "--budget", "100000")[0] == OK
    assert run("validate", "zoo:G", "--config", str(tmp_path / "missing"))[0] == USAGE


def test_suite(tmp_path):
    code, doc = run_json("suite", "run", os.path.join(DATA, "suite.json"))
    assert code == OK and len(doc["checks"]) == 8
    suite = {"format": "json", "checks": [
        {"name": "ok", "args": ["validate", "zoo:1"]},
        {"name": "bad", "args": ["monoid", "check", "zoo:monoid:mutant(iii)"]}]}
    p = tmp_path / "s.json"
    p.write_text(json.dumps(suite))
    code, text = run("suite", "run", str(p))
    doc = json.loads(text)
    assert code == FAIL and [c["ok"] for c in doc["checks"]] == [True, False]


@pytest.mark.parametrize("cfg", [{"checks": 3}, {"checks": [], "budget": -1},
                                 {"checks": [{"args": ["validate"]}]}, {"checks": [], "format": "xml"},
                                 {"checks": [{"name": "x", "args": ["validate", "zoo:nope"]}]}])
def test_bad_suites(tmp_path, cfg):
    p = tmp_path / "s.json"
    p.write_text(json.dumps(cfg))
    assert execute(["suite", "run", str(p)])[0] == USAGE
