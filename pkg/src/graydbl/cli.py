"""Command-line front end.

Exit status: 0 when every requested check passes, 1 on an axiom or law
failure, 2 when a budget runs out or a tensor cannot be realized, 3 on usage
errors (bad arguments, unknown names, unreadable files).
"""

import argparse
import configparser
import os
import sys

from . import io, zoo
from .errors import GrayDblError, ResourceError, StructuralError, UnrealizedError
from .search import BUDGET_ENV

OK, FAIL, RESOURCE, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- resolving arguments -----------------------------------------------------------

def resolveDouble(ref):
    """A zoo name (``zoo:G``) or a path to a double category JSON file."""
    if ref.startswith("zoo:") or not os.path.exists(ref):
        try:
            return zoo.resolve(ref)
        except GrayDblError:
            raise UsageError(f"unknown double category {ref!r}") from None
    try:
        doc = io.load(ref)
        if isinstance(doc, dict) and doc.get("kind") == "2-category":
            return io.twoFromJSON(doc)
        return io.doubleFromJSON(doc)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read {ref}: {e}") from None


def resolveTwo(ref):
    from .twocat import TwoCat, Finite2Category, isVerticallyDiscrete
    D = resolveDouble(ref)
    if isinstance(D, TwoCat):
        return D
    if isVerticallyDiscrete(D):
        return Finite2Category.fromDouble(D, name=D.name)
    raise UsageError(f"{ref} is not a 2-category (it has nonidentity vertical 1-cells)")


MONOIDS = {"discrete": zoo.discreteMonoid, "terminal": zoo.terminalMonoid,
           "max-cyclic": zoo.maxTimesCyclic, "braided": zoo.braidedMonoid}


def resolveMonoid(ref):
    key = ref[4:] if ref.startswith("zoo:") else ref
    if key.startswith("monoid:"):
        name = key[len("monoid:"):]
        if name in MONOIDS:
            return MONOIDS[name]()
        mut = zoo.monoidMutants()
        if name.startswith("mutant") and name[len("mutant"):] in mut:
            return mut[name[len("mutant"):]]
        raise UsageError(f"unknown monoid fixture {ref!r}")
    try:
        doc = io.load(ref)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read {ref}: {e}") from None
    return io.monoidFromJSON(doc, resolve=resolveDouble)


def _counts(D):
    c = D.counts()
    return {k: c[k] for k in ("objects", "hcells", "vcells", "squares")}


def _result(check, ok, **extra):
    out = {"check": check, "ok": bool(ok)}
    out.update(extra)
    return out


def _from_check(r, **extra):
    """A CheckResult turned into a report entry."""
    out = _result(r.name, r.ok, **extra)
    if not r.ok:
        out["witness"] = r.witness
    return out


def _from_report(check, rep, **extra):
    out = _result(check, rep.ok, **extra)
    if not rep.ok:
        out["violations"] = [{"axiom": v.axiom, "cells": v.cells} for v in rep.violations]
    return out


# -- subcommands ------------------------------------------------------------------

def cmdValidate(a):
    from .core import validate
    D = resolveDouble(a.category)
    return [_from_report(f"validate {D.name}", validate(D), counts=_counts(D))]


def cmdFunctors(a):
    from .functor import countDoubleFunctors
    A, B = resolveDouble(a.A), resolveDouble(a.B)
    n = countDoubleFunctors(A, B)
    return [_result(f"functors {A.name} -> {B.name}", True, count=n)]


def _hom(a, strict):
    from .core import validate
    from .hom import buildHomDouble, buildStrictHomDouble
    A, B = resolveDouble(a.A), resolveDouble(a.B)
    H = (buildStrictHomDouble if strict else buildHomDouble)(A, B)
    rep = validate(H) if a.validate else None
    name = f"{'strict-hom' if strict else 'hom'} {A.name} {B.name}"
    if rep is None:
        return [_result(name, True, counts=_counts(H))]
    return [_from_report(name, rep, counts=_counts(H))]


def cmdHom(a):
    return _hom(a, False)


def cmdStrictHom(a):
    return _hom(a, True)


CANONICAL = {
    "l-comm": ("checkLCommutation", 4), "l-id": ("checkLIdentity", 2),
    "r-square": ("checkRSquare", 3), "r-id": ("checkRIdentity", 2),
    "lr-pentagon": ("checkLRPentagon", 3), "lr-square": ("checkLRSquare", 3),
    "f-involution": ("checkFInvolution", 3),
}


def cmdCanonical(a):
    from . import canonical
    fname, arity = CANONICAL[a.law]
    if len(a.args) != arity:
        raise UsageError(f"canonical-check {a.law} takes {arity} double categories")
    args = [resolveDouble(x) for x in a.args]
    return [_from_check(getattr(canonical, fname)(*args), args=[x.name for x in args])]


def cmdTensor(a):
    from .realize import buildPresentation, checkPresentation, realizeTensor
    from .tensor import checkAdjunction
    if a.op == "adjunction-check":
        if len(a.args) != 3:
            raise UsageError("tensor adjunction-check takes A B C")
        A, B, C = (resolveDouble(x) for x in a.args)
        ok, info = checkAdjunction(A, B, C)
        return [_result(f"adjunction {A.name} {B.name} {C.name}", ok, **info)]
    if len(a.args) != 2:
        raise UsageError(f"tensor {a.op} takes A B")
    A, B = (resolveDouble(x) for x in a.args)
    if a.op == "present":
        P = buildPresentation(A, B)
        rep = checkPresentation(P)
        out = _from_report(f"presentation {A.name} (x) {B.name}", rep, counts=P.counts())
        if a.full:
            out["presentation"] = P.toJSON()
        return [out]
    R = realizeTensor(A, B, maxDepth=a.depth)
    return [_result(f"realize {A.name} (x) {B.name}", True, certificate=R.certificate)]


COHERENCE = {"pentagon": ("checkPentagon", 4), "triangle": ("checkTriangle", 3),
             "hexagon": ("checkHexagon", 3), "eps-a-l": ("checkEpsALTriangle", 3)}


def cmdCoherence(a):
    from . import coherence
    fname, arity = COHERENCE[a.law]
    if len(a.args) != arity:
        raise UsageError(f"coherence {a.law} takes {arity} double categories")
    args = [resolveDouble(x) for x in a.args]
    return [_from_check(getattr(coherence, fname)(*args, depth=a.depth),
                        args=[x.name for x in args])]


def cmdSqr(a):
    from .core import validate
    from .twocat import quintetSqr
    X = resolveTwo(a.category)
    S = quintetSqr(X)
    return [_from_report(f"Sqr({X.name})", validate(S), counts=_counts(S))]


def _two_of(a, which):
    from .twocat import horizontal2Cat, validate2Cat, vertical2Cat
    D = resolveDouble(a.category)
    T = (horizontal2Cat if which == "h" else vertical2Cat)(D)
    return [_from_report(T.name, validate2Cat(T), counts=_counts(T))]


def cmdH2(a):
    return _two_of(a, "h")


def cmdV2(a):
    return _two_of(a, "v")


def cmdChi(a):
    from .functor import validateFunctor
    from .twocat import checkChiAssoc, checkChiUnit, comparison
    res = (lambda x: resolveTwo(x)) if a.which == "sqr" else resolveDouble
    A, B = res(a.A), res(a.B)
    P = comparison(a.which)
    out = [_from_report(f"chi{P.name} {A.name} {B.name}", validateFunctor(P.chi(A, B)))]
    if a.check_assoc:
        C = res(a.check_assoc)
        out.append(_from_check(checkChiAssoc(a.which, A, B, C), args=[A.name, B.name, C.name]))
    if a.check_unit:
        for X in (A, B) if A is not B else (A,):
            out.append(_from_check(checkChiUnit(a.which, X), args=[X.name]))
    return out


def cmdMnd(a):
    """``mnd A``, ``mnd build A`` or ``mnd chi A B [--check]``."""
    from .core import validate
    from .mnd import mndCategory
    args = list(a.args)
    if args[0] == "chi":
        if len(args) != 3:
            raise UsageError("mnd chi takes two double categories")
        a.which, a.A, a.B = "mnd", args[1], args[2]
        a.check_assoc, a.check_unit = (args[2] if a.check else None), a.check
        return cmdChi(a)
    if args[0] == "build":
        args = args[1:]
    if len(args) != 1:
        raise UsageError("mnd build takes one double category")
    M = mndCategory(resolveDouble(args[0]))
    return [_from_report(M.name, validate(M), counts=_counts(M))]


def cmdMonoid(a):
    from .monoid import checkGrayMonoid, failedConditions
    m = resolveMonoid(a.file)
    rep = checkGrayMonoid(m)
    out = _from_report(f"monoid {m.name}", rep)
    if not rep.ok:
        out["conditions"] = failedConditions(rep)
    return [out]


def cmdSuite(a):
    try:
        cfg = io.load(a.suite_file)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read {a.suite_file}: {e}") from None
    checks, budget, depth = _parse_suite(cfg)
    defaults = dict(a.defaults)
    defaults.update({k: v for k, v in (("budget", budget), ("depth", depth)) if v is not None})
    base = os.path.dirname(os.path.abspath(a.suite_file))
    results, worst = [], OK
    for chk in checks:
        code, rs = execute([_relative_to(base, x) for x in chk["args"]], defaults)
        worst = max(worst, code)
        results.append({"check": chk["name"], "ok": code == OK, "exit": code, "results": rs})
    return results, worst


def _relative_to(base, arg):
    """Suite file arguments are paths relative to the suite file, if such a file exists."""
    if not isinstance(arg, str) or arg.startswith(("-", "zoo:")) or os.path.isabs(arg):
        return arg
    path = os.path.join(base, arg)
    return path if os.path.exists(path) else arg


def _parse_suite(cfg):
    if not isinstance(cfg, dict) or not isinstance(cfg.get("checks"), list):
        raise UsageError("suite config must be an object with a list of checks")
    budget, depth = cfg.get("budget"), cfg.get("depth")
    for key, val in (("budget", budget), ("depth", depth)):
        if val is not None and (not isinstance(val, int) or val <= 0):
            raise UsageError(f"suite {key} must be a positive integer")
    if cfg.get("format", "text") not in ("text", "json"):
        raise UsageError("suite format must be text or json")
    for i, chk in enumerate(cfg["checks"]):
        if not isinstance(chk, dict) or not isinstance(chk.get("args"), list) or "name" not in chk:
            raise UsageError(f"suite check {i} needs a name and an args list")
        for x in chk["args"]:
            if isinstance(x, str) and x.startswith("zoo:") and not x.startswith("zoo:monoid:"):
                try:
                    zoo.resolve(x)
                except GrayDblError:
                    raise UsageError(f"suite check {chk['name']!r}: unknown name {x}") from None
    return cfg["checks"], budget, depth


# -- parser -----------------------------------------------------------------------

def _config_defaults(path):
    """Key/value defaults (budget, depth) from a small config file."""
    cp = configparser.ConfigParser()
    try:
        with open(path) as fh:
            cp.read_string("[graydbl]\n" + fh.read())
    except (OSError, configparser.Error) as e:
        raise UsageError(f"cannot read config {path}: {e}") from None
    sec = cp["graydbl"]
    out = {}
    for key in ("budget", "depth"):
        if key in sec:
            try:
                out[key] = int(sec[key].strip().strip('"'))
            except ValueError:
                raise UsageError(f"config {key} must be an integer") from None
    return out


def buildParser():
    def common(q, default):
        q.add_argument("--json", action="store_true", default=default, help="print a JSON report")
        q.add_argument("--budget", type=int, default=default, help="enumeration budget (candidates)")
        q.add_argument("--config", default=default,
                       help="key = value file with defaults for budget and depth")

    p = _Parser(prog="graydbl", description="Checks for finite double categories and the Gray tensor.")
    common(p, None)
    p.set_defaults(json=False)
    # the same flags after the subcommand; SUPPRESS keeps them from
    # overwriting values given before it
    shared = _Parser(add_help=False)
    common(shared, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def cat(name, fn, *pos, **kw):
        s = sub.add_parser(name, parents=[shared], **kw)
        for x in pos:
            s.add_argument(x)
        s.set_defaults(fn=fn)
        return s

    cat("validate", cmdValidate, "category", help="validate a double category")
    cat("functors", cmdFunctors, "A", "B", help="count double functors A -> B")
    for name, fn in (("hom", cmdHom), ("strict-hom", cmdStrictHom)):
        s = cat(name, fn, "A", "B", help=f"build the {name} double category")
        s.add_argument("--validate", action="store_true")
    s = cat("canonical-check", cmdCanonical, help="coherence laws of the canonical maps")
    s.add_argument("law", choices=sorted(CANONICAL))
    s.add_argument("args", nargs="+")
    s = cat("tensor", cmdTensor, help="Gray tensor products")
    s.add_argument("op", choices=("present", "realize", "adjunction-check"))
    s.add_argument("args", nargs="+")
    s.add_argument("--depth", type=int, default=None)
    s.add_argument("--full", action="store_true", help="include the presentation itself")
    s = cat("coherence", cmdCoherence, help="coherence of the closed monoidal structure")
    s.add_argument("law", choices=sorted(COHERENCE))
    s.add_argument("args", nargs="+")
    s.add_argument("--depth", type=int, default=None)
    cat("sqr", cmdSqr, "category", help="quintet double category of a 2-category")
    cat("h2", cmdH2, "category", help="horizontal 2-category")
    cat("v2", cmdV2, "category", help="vertical 2-category")
    s = cat("chi", cmdChi, help="comparison maps chi")
    s.add_argument("which", choices=("h", "v", "sqr", "mnd"))
    s.add_argument("A")
    s.add_argument("B")
    s.add_argument("--check-assoc", metavar="C")
    s.add_argument("--check-unit", action="store_true")
    s = cat("mnd", cmdMnd, help="double category of monads")
    s.add_argument("args", nargs="+", metavar="[build|chi] A [B]")
    s.add_argument("--check", action="store_true", help="with chi: associativity and unit checks")
    s = sub.add_parser("monoid", parents=[shared], help="monoids for the Gray tensor")
    s.add_argument("op", choices=("check",))
    s.add_argument("file")
    s.set_defaults(fn=cmdMonoid)
    s = sub.add_parser("suite", parents=[shared], help="run a configured list of checks")
    s.add_argument("op", choices=("run",))
    s.add_argument("suite_file", metavar="config.json")
    s.set_defaults(fn=cmdSuite)
    return p


def execute(argv, defaults=None):
    """Run one command; returns (exit status, list of result dicts).

    ``defaults`` (budget, depth) apply where neither a flag nor --config sets them.
    """
    from .coherence import DEPTH
    saved = os.environ.get(BUDGET_ENV)
    try:
        a = buildParser().parse_args(argv)
        if a.command is None:
            raise UsageError("a command is required")
        defaults = dict(defaults or {})
        if a.config:
            defaults.update(_config_defaults(a.config))
        a.defaults = defaults
        budget = a.budget if a.budget is not None else defaults.get("budget")
        if budget is not None:
            if budget <= 0:
                raise UsageError("budget must be positive")
            os.environ[BUDGET_ENV] = str(budget)
        if hasattr(a, "depth"):
            a.depth = a.depth if a.depth is not None else defaults.get("depth", DEPTH)
            if a.depth <= 0:
                raise UsageError("depth must be positive")
        if a.fn is cmdSuite:
            results, code = cmdSuite(a)
            return code, results
        results = a.fn(a)
    except UsageError as e:
        return USAGE, [_result("usage", False, error=str(e))]
    except (ResourceError, UnrealizedError) as e:
        return RESOURCE, [_result("resource", False, error=str(e))]
    except (StructuralError, ValueError) as e:
        return FAIL, [_result("structure", False, error=str(e))]
    finally:
        if saved is None:
            os.environ.pop(BUDGET_ENV, None)
        else:
            os.environ[BUDGET_ENV] = saved
    return (OK if all(r["ok"] for r in results) else FAIL), results


def _print_text(results, out, indent=""):
    for r in results:
        status = "PASS" if r["ok"] else "FAIL"
        extra = {k: v for k, v in r.items() if k not in ("check", "ok", "results")}
        print(f"{indent}{status} {r['check']}" + (f"  {io._plain(extra)}" if extra else ""), file=out)
        if "results" in r:
            _print_text(r["results"], out, indent + "  ")


def main(argv=None, out=None):
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else argv
    code, results = execute(argv)
    as_json = "--json" in argv
    if not as_json and len(argv) >= 3 and argv[-3:-1] == ["suite", "run"]:
        try:
            as_json = io.load(argv[-1]).get("format") == "json"
        except (OSError, ValueError, AttributeError):
            pass
    if as_json:
        doc = io.reportToJSON(results)
        doc["exit"] = code
        print(io.dumps(doc), file=out)
    else:
        _print_text(results, out)
    return code


if __name__ == "__main__":
    sys.exit(main())
