"""Named fixtures: small double categories, 2-categories and monoid data.

Names are looked up with or without the ``zoo:`` prefix.
"""

from functools import lru_cache

from .core import (_Builder, cartesianProduct, discrete, empty, freeArrowH, freeArrowV,
                   generatorG, tabulate, terminal)
from .errors import GrayDblError
from .functor import DoubleFunctor
from .monoid import GrayMonoidData, fromStrictMonoid


@lru_cache(maxsize=None)
def cyclicDegenerate(n):
    """One object, identity 1-cells and squares Z/n under both compositions."""
    b = _Builder(f"Z{n}")
    b.object("*")
    sq = [0] + [b.square(f"g{i}", 0, 0, 0, 0) for i in range(1, n)]
    for i in range(n):
        for j in range(n):
            b.extra["h2"][sq[i], sq[j]] = b.extra["v2"][sq[i], sq[j]] = sq[(i + j) % n]
    return b.build()


@lru_cache(maxsize=None)
def cyclicH(n):
    """Z/n as a one-object double category with only horizontal 1-cells."""
    b = _Builder(f"H{n}")
    b.object("*")
    hs = [0] + [b.gen_h(f"a{i}", 0, 0) for i in range(1, n)]
    for i in range(n):
        for j in range(n):
            k = hs[(i + j) % n]
            b.extra["h1"][hs[i], hs[j]] = k
            b.extra["h2"][b.sqvid[hs[i]], b.sqvid[hs[j]]] = b.sqvid[k]
    return b.build()


@lru_cache(maxsize=None)
def idempotentH():
    """One object and one horizontal 1-cell a with a;a = a."""
    b = _Builder("idemH")
    b.object("*")
    a = b.gen_h("a", 0, 0)
    b.extra["h1"][a, a] = a
    b.extra["h2"][b.sqvid[a], b.sqvid[a]] = b.sqvid[a]
    return b.build()


@lru_cache(maxsize=None)
def orDegenerate():
    """One object, identity 1-cells and squares {0, 1} under max in both directions."""
    b = _Builder("B")
    b.object("*")
    s = b.square("e", 0, 0, 0, 0)
    b.extra["h2"][s, s] = b.extra["v2"][s, s] = s
    return b.build()


@lru_cache(maxsize=None)
def chain(n, name=None):
    """The poset 0 < 1 < ... < n-1 as a horizontal category, one hcell per pair i <= j."""
    b = _Builder(name or f"chain{n}")
    objs = [b.object(str(i)) for i in range(n)]
    hc = {(i, i): b.hid[i] for i in objs}
    for i in objs:
        for j in objs:
            if i < j:
                hc[i, j] = b.gen_h(f"{i}<{j}", i, j)
    for (i, j), a in hc.items():
        for (j2, k), c in hc.items():
            if j == j2 and i != j and j != k:
                b.extra["h1"][a, c] = hc[i, k]
                b.extra["h2"][b.sqvid[a], b.sqvid[c]] = b.sqvid[hc[i, k]]
    return b.build()


def _two_cats():
    from . import twocat
    return {"arrow2": twocat.arrow2, "cell2": twocat.walking2Cell, "iso2": twocat.iso2Cell,
            "idem2": twocat.idempotent2, "terminal2": twocat.terminal2}


def _sqr(name):
    from .twocat import quintetSqr
    return lambda: tabulate(quintetSqr(_two_cats()[name]()), name=f"Sqr({name})")


_DOUBLE = {
    "1": terminal, "terminal": terminal, "empty": empty, "G": generatorG,
    "arrowH": freeArrowH, "arrowV": freeArrowV,
    "disc2": lambda: discrete(2, name="disc2"),
    "Z2": lambda: cyclicDegenerate(2), "Z3": lambda: cyclicDegenerate(3),
    "chain3": lambda: chain(3),
    "arrowHxarrowV": lambda: cartesianProduct(freeArrowH(), freeArrowV()),
    "arrowHxarrowH": lambda: cartesianProduct(freeArrowH(), freeArrowH()),
    "Gx1": lambda: cartesianProduct(generatorG(), terminal()),
    "arrowHxZ3": lambda: monoidCarrier(),
    "Sqr(arrow2)": _sqr("arrow2"), "Sqr(cell2)": _sqr("cell2"), "Sqr(iso2)": _sqr("iso2"),
    "Sqr(idem2)": _sqr("idem2"),
}

_cache = {}


def names():
    return sorted(_DOUBLE) + sorted(_two_cats())


def resolve(name):
    """The zoo double category (or 2-category) called ``name``."""
    key = name[4:] if name.startswith("zoo:") else name
    if key not in _cache:
        make = _DOUBLE.get(key) or _two_cats().get(key)
        if make is None:
            raise GrayDblError(f"unknown zoo entry {name!r}")
        _cache[key] = make()
    return _cache[key]


def soundnessZoo():
    """The double categories every validator must accept."""
    return [resolve(n) for n in ("1", "G", "arrowH", "arrowV", "arrowHxarrowV", "Gx1",
                                 "arrowHxarrowH", "Sqr(arrow2)", "Sqr(cell2)", "Sqr(iso2)")]


# -- monoid fixtures ------------------------------------------------------------

def _mult_functor(A, op):
    """Strict multiplication on A from ``op(kind, a, b)`` on cells of A."""
    P = cartesianProduct(A, A)

    def f(kind):
        return lambda c: op(kind, *P.labels[kind][c])

    return DoubleFunctor(P, A, f("object"), f("hcell"), f("vcell"), f("square"))


def discreteMonoid():
    """The discrete double category on Z/2, with identity interchangers."""
    A = resolve("disc2")
    ids = {"object": lambda x: x, "hcell": A.hId, "vcell": A.vId,
           "square": lambda x: A.sqVId(A.hId(x))}
    objs = list(A.objects())

    def op(kind, a, b):
        src = {o: ids[kind](o) for o in objs}
        inv = {v: k for k, v in src.items()}
        return src[(inv[a] + inv[b]) % 2]

    return fromStrictMonoid(A, _mult_functor(A, op), 0)


def terminalMonoid():
    A = terminal()
    return fromStrictMonoid(A, _mult_functor(A, lambda kind, a, b: 0), 0)


@lru_cache(maxsize=None)
def monoidCarrier():
    """arrowH x Z3: two objects, an arrow, and Z/3 worth of squares on every frame."""
    return cartesianProduct(freeArrowH(), cyclicDegenerate(3), name="arrowHxZ3")


def maxTimesCyclic():
    """arrowH x Z3 with (max, +): a strict monoid with nontrivial squares."""
    A = monoidCarrier()
    H, Z = freeArrowH(), cyclicDegenerate(3)
    hcell = {(H.hsrc(h), H.htgt(h)): h for h in H.hcells()}

    def onH(kind, a, b):
        if kind == "object":
            return max(a, b)
        if kind == "hcell":
            return hcell[max(H.hsrc(a), H.hsrc(b)), max(H.htgt(a), H.htgt(b))]
        if kind == "vcell":
            return H.vId(max(H.vsrc(a), H.vsrc(b)))
        return H.sqVId(onH("hcell", H.top(a), H.top(b)))

    def onZ(kind, a, b):
        return Z.hComp2(a, b) if kind == "square" else 0

    def op(kind, a, b):
        (a1, a2), (b1, b2) = A.labels[kind][a], A.labels[kind][b]
        return A.cell_of_label(kind, (onH(kind, a1, b1), onZ(kind, a2, b2)))

    unit = A.cell_of_label("object", (0, 0))
    return fromStrictMonoid(A, _mult_functor(A, op), unit)


@lru_cache(maxsize=None)
def braidCarrier(n=2):
    """Z/n horizontally, Z/n vertically and Z/n on every square frame."""
    HV = cartesianProduct(cyclicH(n), cyclicH(n).transpose(name=f"V{n}"), name=f"H{n}xV{n}")
    A = cartesianProduct(HV, cyclicDegenerate(n), name=f"H{n}xV{n}xZ{n}")
    A.factors = HV
    return A


def _sum(K, kind, a, b, vertical=False):
    """The group operation on cells of a one-object fixture whose cells form
    groups; squares are added along the direction their nonidentity cells lie in."""
    if kind == "object":
        return a
    if kind == "hcell":
        return K.hComp1(a, b)
    if kind == "vcell":
        return K.vComp1(a, b)
    return K.vComp2(a, b) if vertical else K.hComp2(a, b)


def braidedMonoid(n=2):
    """Addition on braidCarrier(n), except that a*a and b*b for the generators
    a (horizontal) and b (vertical) are a nonidentity square on the identity frame.

    For n = 2 this satisfies every condition; for n > 2 the interchangers are
    no longer additive in each variable and condition (vi) fails.
    """
    A = braidCarrier(n)
    HV, Z = A.factors, cyclicDegenerate(n)
    H, V = cyclicH(n), cyclicH(n).transpose()

    def op(kind, a, b):
        (a12, a3), (b12, b3) = A.labels[kind][a], A.labels[kind][b]
        (a1, a2), (b1, b2) = HV.labels[kind][a12], HV.labels[kind][b12]
        ab = HV.cell_of_label(kind, (_sum(H, kind, a1, b1), _sum(V, kind, a2, b2, True)))
        return A.cell_of_label(kind, (ab, _sum(Z, kind, a3, b3)))

    m = fromStrictMonoid(A, _mult_functor(A, op), 0)
    frame = HV.cell_of_label("square", (0, 0))
    e, e_inv = (A.cell_of_label("square", (frame, k)) for k in (1, n - 1))
    a = A.cell_of_label("hcell", (HV.cell_of_label("hcell", (1, 0)), 0))
    b = A.cell_of_label("vcell", (HV.cell_of_label("vcell", (0, 1)), 0))
    for tag, g, s in (("hh", a, e), ("hhi", a, e_inv)):
        m.maps[tag][g, g] = A.hComp2(m.maps[tag][g, g], s)
    for tag, g, s in (("vv", b, e), ("vvi", b, e_inv)):
        m.maps[tag][g, g] = A.vComp2(m.maps[tag][g, g], s)
    m.name = f"braided monoid on {A.name}"
    return m


def idempotentCollapse():
    """The componentwise strict monoid on idemH x B with a*1 set to the square
    (1_a, e): every condition but identity collapse survives."""
    H, Bq = idempotentH(), orDegenerate()
    A = cartesianProduct(H, Bq, name="idemHxB")

    def op(kind, a, b):
        (a1, a2), (b1, b2) = A.labels[kind][a], A.labels[kind][b]
        return A.cell_of_label(kind, (_sum(H, kind, a1, b1), _sum(Bq, kind, a2, b2)))

    m = fromStrictMonoid(A, _mult_functor(A, op), 0)
    a = A.cell_of_label("hcell", (1, 0))
    e = A.cell_of_label("square", (0, 1))
    return m.mutate("hv", a, A.vId(0), A.hComp2(m.maps["hv"][a, A.vId(0)], e))


def magmaData(table, unit, name="magma"):
    """Monoid data on a discrete carrier from a multiplication table on objects;
    the table need not be associative."""
    n = len(table)
    A = discrete(n, name=f"disc{n}")
    obj = {"object": lambda x: x, "hcell": A.hId, "vcell": A.vId,
           "square": lambda x: A.sqVId(A.hId(x))}
    back = {k: {f(x): x for x in A.objects()} for k, f in obj.items()}
    kind_of = {"oo": ("object",) * 2, "ho": ("hcell", "object"), "oh": ("object", "hcell"),
               "vo": ("vcell", "object"), "ov": ("object", "vcell"),
               "so": ("square", "object"), "os": ("object", "square"),
               "hv": ("hcell", "vcell"), "vh": ("vcell", "hcell"), "hh": ("hcell", "hcell"),
               "hhi": ("hcell", "hcell"), "vv": ("vcell", "vcell"), "vvi": ("vcell", "vcell")}
    out = {"object": "object", "ho": "hcell", "oh": "hcell", "vo": "vcell", "ov": "vcell"}
    maps = {}
    for tag, (ka, kb) in kind_of.items():
        kc = "object" if tag == "oo" else out.get(tag, "square")
        maps[tag] = {(obj[ka](x), obj[kb](y)): obj[kc](table[x][y])
                     for x in A.objects() for y in A.objects()}
    return GrayMonoidData(A, unit, maps, name=name)


def _replace_squares(m, tag, pick):
    """Copy of m with every square entry ``tag`` at (a, b) replaced by pick(a, b, old)."""
    m = m.copy()
    m.maps[tag] = {k: pick(k[0], k[1], v) for k, v in m.maps[tag].items()}
    return m


def monoidMutants():
    """One fixture per condition (i)-(vii), each violating that condition."""
    A = monoidCarrier()
    base = maxTimesCyclic()
    g = A.cell_of_label("hcell", (2, 0))
    one = A.cell_of_label("object", (1, 0))
    lab = A.labels["square"]

    def shift(s, k=1):
        (h, z) = lab[s]
        return A.cell_of_label("square", (h, (z + k) % 3))

    def kill(X, w, s):
        return A.cell_of_label("square", (lab[s][0], 0)) if X == one else s

    out = {}
    # the top edge of h*- no longer preserved
    out["(i)"] = base.mutate("ho", g, 0, A.hId(0))
    # the unit object moved
    out["(ii)"] = base.mutate("oo", 0, 0, 0, unit=one)
    # a unital but non-associative table on three objects
    out["(iii)"] = magmaData([[0, 1, 2], [1, 2, 1], [2, 1, 0]], 0, name="nonassociative magma")
    # g*g shifted, together with its inverse
    hh = base.maps["hh"][g, g]
    out["(iv)"] = base.mutate("hh", g, g, shift(hh)).mutate("hhi", g, g, shift(hh, 2))
    # the interchanger no longer additive in each variable
    out["(vi)"] = braidedMonoid(3)
    # X*- killing every square for the absorbing object
    out["(vii)"] = _replace_squares(base, "os", kill)
    # a*1 made a nonidentity idempotent square
    out["(v)"] = idempotentCollapse()
    for k, v in out.items():
        v.name = f"mutant {k}"
    return out


def projectionFake(A=None):
    """(a, b) |-> a on a carrier: associative but without a two-sided unit."""
    A = A or resolve("disc2")
    return _mult_functor(A, lambda kind, a, b: a)
