"""Double functors: validation, composition and exhaustive enumeration."""

from .core import HC1, HC2, VC1, VC2, FiniteDoubleCategory, Report
from .errors import StructuralError
from .search import Budget, backtrack


class Component:
    """A component map given by a dict or by a memoized function."""

    __slots__ = ("f", "memo", "is_dict")

    def __init__(self, f):
        self.is_dict = isinstance(f, dict)
        self.f = f
        self.memo = {}

    def __call__(self, x):
        if self.is_dict:
            try:
                return self.f[x]
            except KeyError:
                raise StructuralError(f"component map undefined at {x!r}") from None
        key = x if type(x) is int else id(x)
        hit = self.memo.get(key)
        if hit is not None and (hit[0] is x or type(x) is int):
            return hit[1]
        y = self.f(x)
        self.memo[key] = (x, y)
        return y


class Value:
    """Base for structured cells of hom double categories.

    Subclasses set ``_comps`` to (attribute, domain kind) pairs; equality and
    hashing tabulate the components over the enumerated domain.
    """

    __slots__ = ()
    _comps = ()

    def _head(self):
        raise NotImplementedError

    def key(self):
        k = self._key
        if k is None:
            dom = self.dom
            k = (type(self).__name__,) + self._head() + tuple(
                tuple(getattr(self, a)(x) for x in dom.cells(kind)) for a, kind in self._comps)
            self._key = k
        return k

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        if self.dom is not other.dom or self.cod is not other.cod:
            return False
        return self.key() == other.key()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((id(self.dom), id(self.cod), self.key()))
        return h


class DoubleFunctor(Value):
    __slots__ = ("dom", "cod", "_o", "_h", "_v", "_s", "_key", "_hash", "label")
    _comps = (("obj", "object"), ("h", "hcell"), ("v", "vcell"), ("sq", "square"))

    def __init__(self, dom, cod, obj, h, v, sq, label=None):
        self.dom, self.cod = dom, cod
        self._o, self._h, self._v, self._s = (Component(m) for m in (obj, h, v, sq))
        self._key = self._hash = None
        self.label = label

    def _head(self):
        return ()

    def obj(self, x):
        return self._o(x)

    def h(self, x):
        return self._h(x)

    def v(self, x):
        return self._v(x)

    def sq(self, x):
        return self._s(x)

    def apply(self, kind, x):
        return {"object": self._o, "hcell": self._h, "vcell": self._v, "square": self._s}[kind](x)

    def __repr__(self):
        if self.label:
            return self.label
        try:
            return "F[" + ",".join(map(repr, self.key()[1])) + "]"
        except Exception:
            return f"<functor {self.dom.name}->{self.cod.name}>"

    def tabulated(self):
        """An equal functor backed by dicts (forces evaluation)."""
        D = self.dom
        return DoubleFunctor(D, self.cod, *({x: self.apply(k, x) for x in D.cells(k)}
                                            for k in ("object", "hcell", "vcell", "square")),
                             label=self.label)


def identityFunctor(A):
    f = lambda x: x
    return DoubleFunctor(A, A, f, f, f, f, label=f"1_{A.name}")


def constantFunctor(A, B, x):
    """The functor A -> B collapsing everything onto the object x."""
    h, v, s = B.hId(x), B.vId(x), B.sqHId(B.vId(x))
    return DoubleFunctor(A, B, lambda _: x, lambda _: h, lambda _: v, lambda _: s)


def composeFunctors(G, F):
    """G after F."""
    if F.cod is not G.dom:
        raise StructuralError(f"cannot compose: codomain {F.cod.name} is not domain {G.dom.name}")
    return DoubleFunctor(F.dom, G.cod, lambda x: G.obj(F.obj(x)), lambda x: G.h(F.h(x)),
                         lambda x: G.v(F.v(x)), lambda x: G.sq(F.sq(x)))


def _check_images(F):
    B = F.cod
    if not isinstance(B, FiniteDoubleCategory):
        return
    n = B.sizes()
    for kind, key in (("object", "objects"), ("hcell", "hcells"), ("vcell", "vcells"), ("square", "squares")):
        for x in F.dom.cells(kind):
            y = F.apply(kind, x)
            if not isinstance(y, int) or not 0 <= y < n[key]:
                raise StructuralError(f"image of {kind} {x!r} is not a {kind} of {B.name}: {y!r}")


def validateFunctor(F):
    A, B = F.dom, F.cod
    _check_images(F)
    rep = Report()
    d = A.describe
    idx = A.index()
    for h in idx.hcells:
        if B.hsrc(F.h(h)) != F.obj(A.hsrc(h)) or B.htgt(F.h(h)) != F.obj(A.htgt(h)):
            rep.add("boundary preservation", d("hcell", h))
    for v in idx.vcells:
        if B.vsrc(F.v(v)) != F.obj(A.vsrc(v)) or B.vtgt(F.v(v)) != F.obj(A.vtgt(v)):
            rep.add("boundary preservation", d("vcell", v))
    for s in idx.squares:
        t, b, l, r = A.boundary(s)
        if B.boundary(F.sq(s)) != (F.h(t), F.h(b), F.v(l), F.v(r)):
            rep.add("boundary preservation", d("square", s))
    if not rep.ok:
        return rep
    for x in idx.objects:
        if F.h(A.hId(x)) != B.hId(F.obj(x)) or F.v(A.vId(x)) != B.vId(F.obj(x)):
            rep.add("identity preservation", d("object", x))
    for v in idx.vcells:
        if F.sq(A.sqHId(v)) != B.sqHId(F.v(v)):
            rep.add("identity preservation", d("vcell", v))
    for h in idx.hcells:
        if F.sq(A.sqVId(h)) != B.sqVId(F.h(h)):
            rep.add("identity preservation", d("hcell", h))
    for a, b in idx.hpairs():
        if F.h(A.hComp1(a, b)) != B.hComp1(F.h(a), F.h(b)):
            rep.add(f"composition preservation ({HC1})", d("hcell", a), d("hcell", b))
    for a, b in idx.vpairs():
        if F.v(A.vComp1(a, b)) != B.vComp1(F.v(a), F.v(b)):
            rep.add(f"composition preservation ({VC1})", d("vcell", a), d("vcell", b))
    for a, b in idx.hsq_pairs():
        if F.sq(A.hComp2(a, b)) != B.hComp2(F.sq(a), F.sq(b)):
            rep.add(f"composition preservation ({HC2})", d("square", a), d("square", b))
    for a, b in idx.vsq_pairs():
        if F.sq(A.vComp2(a, b)) != B.vComp2(F.sq(a), F.sq(b)):
            rep.add(f"composition preservation ({VC2})", d("square", a), d("square", b))
    return rep


def functorsEqual(F, G):
    """Pointwise equality; returns (True, None) or (False, witness)."""
    for kind in ("object", "hcell", "vcell", "square"):
        for x in F.dom.cells(kind):
            if F.apply(kind, x) != G.apply(kind, x):
                return False, (kind, x)
    return True, None


def _search(A, B, injective=False, budget=None):
    """Backtracking over object, hcell, vcell, square images of A in B."""
    ia, ib = A.index(), B.index()
    cells = ([("object", x) for x in ia.objects] + [("hcell", x) for x in ia.hcells]
             + [("vcell", x) for x in ia.vcells] + [("square", x) for x in ia.squares])
    pos = {c: i for i, c in enumerate(cells)}
    n = len(cells)
    P = lambda kind, x: pos[kind, x]
    constraints = [[] for _ in range(n)]

    def add(kind, a, b, c, comp):
        i = max(P(kind, a), P(kind, b), P(kind, c))
        constraints[i].append((P(kind, a), P(kind, b), P(kind, c), comp))

    hids = {A.hId(x) for x in ia.objects}
    vids = {A.vId(x) for x in ia.objects}
    for a, b in ia.hpairs():
        if a not in hids and b not in hids:
            add("hcell", a, b, A.hComp1(a, b), B.hComp1)
    for a, b in ia.vpairs():
        if a not in vids and b not in vids:
            add("vcell", a, b, A.vComp1(a, b), B.vComp1)
    sqh = {A.sqHId(v) for v in ia.vcells}
    sqv = {A.sqVId(h) for h in ia.hcells}
    for a, b in ia.hsq_pairs():
        if a not in sqh and b not in sqh:
            add("square", a, b, A.hComp2(a, b), B.hComp2)
    for a, b in ia.vsq_pairs():
        if a not in sqv and b not in sqv:
            add("square", a, b, A.vComp2(a, b), B.vComp2)

    plan = []
    for kind, x in cells:
        if kind == "object":
            plan.append(("object", None))
        elif kind == "hcell":
            s, t = P("object", A.hsrc(x)), P("object", A.htgt(x))
            plan.append(("hid", s) if x in hids else ("h", (s, t)))
        elif kind == "vcell":
            s, t = P("object", A.vsrc(x)), P("object", A.vtgt(x))
            plan.append(("vid", s) if x in vids else ("v", (s, t)))
        else:
            t, b, l, r = A.boundary(x)
            if x in sqv:
                plan.append(("sqvid", P("hcell", t)))
            elif x in sqh:
                plan.append(("sqhid", P("vcell", l)))
            else:
                plan.append(("sq", (P("hcell", t), P("hcell", b), P("vcell", l), P("vcell", r))))

    def candidates(i, a):
        tag, arg = plan[i]
        if tag == "object":
            return ib.objects
        if tag == "hid":
            return [B.hId(a[arg])]
        if tag == "vid":
            return [B.vId(a[arg])]
        if tag == "h":
            return ib.h_between.get((a[arg[0]], a[arg[1]]), ())
        if tag == "v":
            return ib.v_between.get((a[arg[0]], a[arg[1]]), ())
        if tag == "sqvid":
            return [B.sqVId(a[arg])]
        if tag == "sqhid":
            return [B.sqHId(a[arg])]
        return ib.sq_bnd.get(tuple(a[j] for j in arg), ())

    kind_start = {}
    for i, (kind, _) in enumerate(cells):
        kind_start.setdefault(kind, i)

    def check(i, a):
        for p, q, r, comp in constraints[i]:
            if comp(a[p], a[q]) != a[r]:
                return False
        if injective:
            j0 = kind_start[cells[i][0]]
            v = a[i]
            for j in range(j0, i):
                if a[j] == v:
                    return False
        return True

    for sol in backtrack(n, candidates, check, budget):
        maps = {"object": {}, "hcell": {}, "vcell": {}, "square": {}}
        for (kind, x), y in zip(cells, sol):
            maps[kind][x] = y
        yield DoubleFunctor(A, B, maps["object"], maps["hcell"], maps["vcell"], maps["square"])


def enumerateDoubleFunctors(A, B, budget=None):
    """All double functors A -> B in lexicographic order of their cell maps."""
    return list(_search(A, B, budget=budget or Budget()))


def countDoubleFunctors(A, B, budget=None):
    return sum(1 for _ in _search(A, B, budget=budget or Budget()))


def find_isomorphism(A, B, budget=None):
    if A.counts() != B.counts():
        return None
    for F in _search(A, B, injective=True, budget=budget or Budget()):
        return F
    return None


def inverseFunctor(F):
    """Inverse of a bijective functor."""
    maps = []
    for kind in ("object", "hcell", "vcell", "square"):
        m = {F.apply(kind, x): x for x in F.dom.cells(kind)}
        maps.append(m)
    return DoubleFunctor(F.cod, F.dom, *maps)
