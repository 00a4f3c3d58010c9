"""Unit, counit, associator, unitors and symmetry of the tensor, and their coherence checks.

Everything here goes through realized tensors, so each operation raises
UnrealizedError when a tensor it needs cannot be realized at the given depth.
"""

from .canonical import CheckResult, _compare, _compose, fFunctor, lFunctor
from .core import terminal
from .functor import functorsEqual, identityFunctor
from .hom import expand, hmap, hom, pointFunctor
from .realize import precompose, realizeTensor
from .tensor import curryCone, swapCone, uncurryFunctor

DEPTH = 2


def tensor(A, B, depth=DEPTH):
    return realizeTensor(A, B, depth)


def unitEta(A, B, depth=DEPTH):
    """eta: A -> [[B, A(x)B]], the curried universal cone."""
    return curryCone(tensor(A, B, depth).cone)


def counitEpsilon(A, B):
    """The cone on ([[B,A]], B) with values in A corresponding to the identity of [[B,A]]."""
    return uncurryFunctor(identityFunctor(hom(B, A)))


def counitFunctor(A, B, depth=DEPTH):
    """epsilon: [[B,A]](x)B -> A."""
    R = tensor(hom(B, A), B, depth)
    return R.induced(counitEpsilon(A, B))


def assocHomMap(A, B, C, depth=DEPTH):
    """a^C_{A,B} = [[eta,1]] l^B_{A(x)B,C} : [[A(x)B, C]] -> [[A, [[B,C]]]]."""
    R = tensor(A, B, depth)
    T = R.category
    eta = curryCone(R.cone)
    BT, BC = hom(B, T), hom(B, C)
    return _compose(lFunctor(B, T, C), hmap(eta, None, hom(BT, BC), hom(A, BC)))


def leftUnitor(B, depth=DEPTH):
    """lambda_B: 1(x)B -> B, from the cone (*, b) |-> b."""
    one = terminal()
    R = tensor(one, B, depth)
    return R.induced(uncurryFunctor(pointFunctor(hom(B, B), identityFunctor(B))))


def rightUnitor(A, depth=DEPTH):
    """rho_A: A(x)1 -> A, from the cone (a, *) |-> a."""
    R = tensor(A, terminal(), depth)
    return R.induced(uncurryFunctor(expand(A)))


def unitors(A, depth=DEPTH):
    return rightUnitor(A, depth), leftUnitor(A, depth)


def symmetry(A, B, depth=DEPTH):
    """phi_{A,B}: A(x)B -> B(x)A, obtained from the universal cone of B(x)A through f."""
    R, S = tensor(A, B, depth), tensor(B, A, depth)
    U = S.category
    eta = curryCone(S.cone)
    c = uncurryFunctor(fFunctor(U, B, A).obj(eta))
    return R.induced(c)


def symmetryFromSwap(A, B, depth=DEPTH):
    """phi_{A,B} read off directly: (a, b) |-> b * a with inverted interchangers."""
    R, S = tensor(A, B, depth), tensor(B, A, depth)
    return R.induced(swapCone(S.cone))


def isIsomorphism(F):
    """F is bijective on every kind of cell."""
    for kind in ("object", "hcell", "vcell", "square"):
        src = list(F.dom.cells(kind))
        img = {F.apply(kind, x) for x in src}
        if len(img) != len(src) or len(img) != len(list(F.cod.cells(kind))):
            return False
    return True


# -- checks --------------------------------------------------------------------

def checkEpsALTriangle(C, P, K, depth=DEPTH):
    """a^K_{[[C,P]],C} [[eps^C_P, 1]] = l^C_{P,K} : [[P,K]] -> [[[[C,P]],[[C,K]]]]."""
    CP = hom(C, P)
    R = tensor(CP, C, depth)
    eps = counitFunctor(P, C, depth)
    lhs = _compose(hmap(eps, None, hom(P, K), hom(R.category, K)), assocHomMap(CP, C, K, depth))
    return _compare("eps a l triangle", lhs, lFunctor(C, P, K))


def checkTriangle(A, B, K, depth=DEPTH):
    """a^K_{1,B} [[lambda_B, 1]] = expand : [[B,K]] -> [[1,[[B,K]]]].

    A is the variable of the surrounding Yoneda argument; its right unitor
    is checked to be an isomorphism.
    """
    one = terminal()
    lam = leftUnitor(B, depth)
    rho = rightUnitor(A, depth)
    if not isIsomorphism(rho):
        return CheckResult("triangle", False, ("right unitor not invertible", A.name))
    if not isIsomorphism(lam):
        return CheckResult("triangle", False, ("left unitor not invertible", B.name))
    T = tensor(one, B, depth).category
    lhs = _compose(hmap(lam, None, hom(B, K), hom(T, K)), assocHomMap(one, B, K, depth))
    return _compare("triangle", lhs, expand(hom(B, K)))


def checkPentagon(B, C, P, K, depth=DEPTH):
    """[[1, a^K_{B,C}]] l^{B(x)C}_{P,K} = [[a^P_{B,C}, 1]] l^B_{[[C,P]],[[C,K]]} l^C_{P,K}."""
    T = tensor(B, C, depth).category
    TP, TK = hom(T, P), hom(T, K)
    CP, CK = hom(C, P), hom(C, K)
    BCK = hom(B, CK)
    lhs = _compose(lFunctor(T, P, K), hmap(None, assocHomMap(B, C, K, depth), hom(TP, TK), hom(TP, BCK)))
    rhs = _compose(lFunctor(C, P, K), lFunctor(B, CP, CK),
                   hmap(assocHomMap(B, C, P, depth), None, hom(hom(B, CP), BCK), hom(TP, BCK)))
    return _compare("pentagon", lhs, rhs)


def checkHexagon(A, C, K, depth=DEPTH):
    """a^K_{A,C} [[phi_{A,C}, 1]] = f^K_{C,A} a^K_{C,A} : [[C(x)A, K]] -> [[A,[[C,K]]]]."""
    phi = symmetry(A, C, depth)
    if not isIsomorphism(phi):
        return CheckResult("hexagon", False, ("symmetry not invertible", A.name, C.name))
    S = tensor(C, A, depth).category
    T = tensor(A, C, depth).category
    lhs = _compose(hmap(phi, None, hom(S, K), hom(T, K)), assocHomMap(A, C, K, depth))
    rhs = _compose(assocHomMap(C, A, K, depth), fFunctor(K, C, A))
    return _compare("hexagon", lhs, rhs)


def checkSymmetryInvolution(A, B, depth=DEPTH):
    """phi_{B,A} phi_{A,B} = 1 and phi agrees with the swapped universal cone."""
    phi, psi = symmetry(A, B, depth), symmetry(B, A, depth)
    r = _compare("symmetry involution", _compose(phi, psi), identityFunctor(phi.dom))
    if not r:
        return r
    return _compare("symmetry via swap", phi, symmetryFromSwap(A, B, depth))


def checkAdjunctionTriangle(A, B, depth=DEPTH):
    """[[1, eps^B_A]] eta^B_{[[B,A]]} = 1 on [[B,A]]."""
    BA = hom(B, A)
    eps = counitFunctor(A, B, depth)
    eta = unitEta(BA, B, depth)
    T = eps.dom
    side = _compose(eta, hmap(None, eps, hom(B, T), BA))
    return _compare("adjunction triangle", side, identityFunctor(BA))


def checkAssocCurry(A, B, C, depth=DEPTH):
    """a^C_{A,B} is bijective on every cell kind and sends F to curry(F restricted)."""
    R = tensor(A, B, depth)
    a = assocHomMap(A, B, C, depth)
    for F in a.dom.objects():
        ok, w = functorsEqual(a.obj(F), curryCone(precompose(R, F)))
        if not ok:
            return CheckResult("assoc curry", False, (F, w))
    if not isIsomorphism(a):
        return CheckResult("assoc curry", False, "not bijective")
    return CheckResult("assoc curry", True)
