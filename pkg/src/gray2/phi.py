"""Phi(I, m) = [k]([n_1] x [m], ..., [n_k] x [m]) and the comparison functors.

A 1-cell of Phi(I, m) in hom(i, j) is a tuple ((a_s, c_s))_{i < s <= j} with
a_s in [n_s] and c_s in [m].

``nu`` sends a Gray cell (path, a, b) of I (x)colax [m] to ((a_s, c_s))_s
where c_s is the second coordinate at which the path takes its s-th step in
the first coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import from_poset, product_cat
from .gray import gray_colax
from .poset import column_tuple, ordinal_poset
from .probe import Cocone, WideSpan, corrupt_cocone, verify_pushout
from .theta2 import DeltaMor, Theta2Mor, Theta2Obj, identity, plan_lookup
from .twocat import (CatGraph, TwoCat, TwoFunctor, cotensor, discrete_twocat, free_linear,
                     realize)


@dataclass(frozen=True)
class PhiSpec:
    I: Theta2Obj
    m: int


def linear(m: int) -> Theta2Obj:
    """[m] viewed as the Theta_2 object [m](0,...,0)."""
    return Theta2Obj(m, (0,) * m)


def phi_obj(I: Theta2Obj, m: int, check="auto") -> TwoCat:
    if isinstance(I, PhiSpec):
        I, m = I.I, I.m
    lab = [product_cat(from_poset(ordinal_poset(n)), from_poset(ordinal_poset(m))) for n in I.ns]
    return free_linear(CatGraph(lab), check=check, name=f"Phi({I},[{m}])")


def phi_mor(F: Theta2Mor, mu: DeltaMor, source: TwoCat = None, target: TwoCat = None,
            check=False) -> TwoFunctor:
    """Phi(F, mu): components (a_r, c_r) go to (psi_{r t}(a_r), mu(c_r))."""
    S = source if source is not None else phi_obj(F.source, mu.source)
    T = target if target is not None else phi_obj(F.target, mu.target)
    mv = mu.values
    plan = plan_lookup(F)

    def c1(i, j, x):
        return tuple((v[x[r][0]], mv[x[r][1]]) for r, v in plan(i, j))

    def c2(i, j, x):
        out = []
        for r, v in plan(i, j):
            (a, a2), (c, c2_) = x[r]
            out.append(((v[a], v[a2]), (mv[c], mv[c2_])))
        return tuple(out)

    return TwoFunctor.from_maps(S, T, F.phi, c1, c2, check=check)


def nu(I: Theta2Obj, m: int, source: TwoCat = None, target: TwoCat = None,
       check=True) -> TwoFunctor:
    """I (x)colax [m] -> Phi(I, m); checked to be a strict 2-functor by default."""
    S = source if source is not None else gray_colax(I, linear(m))
    T = target if target is not None else phi_obj(I, m)

    def c1(p, q, f):
        cols = column_tuple(f[0], p[1])
        return tuple(zip(f[1], cols))

    def c2(p, q, a):
        c0 = column_tuple(a[0][0], p[1])
        c1_ = column_tuple(a[0][1], p[1])
        return tuple((x, (u, v)) for x, u, v in zip(a[1], c0, c1_))

    return TwoFunctor.from_maps(S, T, lambda p: p[0], c1, c2, check=check)


def eta_prime(I: Theta2Obj, m: int, target: TwoCat = None, check=True) -> TwoFunctor:
    """realize(I) -> Phi(I, m)^[m]: a 1-cell a goes to the diagonal c |-> ((a_s, c))_s."""
    P = phi_obj(I, m)
    T = target if target is not None else cotensor(P, m)
    arrow = from_poset(ordinal_poset(m))

    def diag(a):
        obs = tuple(tuple((x, c) for x in a) for c in arrow.objects)
        mors = tuple(tuple(((x, x), u) for x in a) for u in arrow.morphisms)
        return (obs, mors)

    def c2(i, j, al):
        src = tuple(x for x, _ in al)
        tgt = tuple(y for _, y in al)
        comps = tuple(tuple(((x, y), (c, c)) for x, y in al) for c in arrow.objects)
        return (diag(src), diag(tgt), comps)

    return TwoFunctor.from_maps(realize(I), T, lambda x: x, lambda i, j, a: diag(a), c2,
                                check=check)


def constant_diagram(P: TwoCat, m: int, target: TwoCat = None) -> TwoFunctor:
    """P -> P^[m] sending every cell to the constant [m]-shaped diagram on it."""
    T = target if target is not None else cotensor(P, m)
    arrow = from_poset(ordinal_poset(m))

    def const(x, y, f):
        H = P.homs[(x, y)]
        return (tuple(f for _ in arrow.objects), tuple(H.ident[f] for _ in arrow.morphisms))

    def c2(x, y, a):
        H = P.homs[(x, y)]
        return (const(x, y, H.src[a]), const(x, y, H.tgt[a]), tuple(a for _ in arrow.objects))

    return TwoFunctor.from_maps(P, T, lambda x: x, const, c2, check=False)


def realize_to_phi0(I: Theta2Obj) -> TwoFunctor:
    """The canonical isomorphism realize(I) -> Phi(I, 0)."""
    def c2(i, j, al):
        return tuple((x, (0, 0)) for x in al)

    return TwoFunctor.from_maps(realize(I), phi_obj(I, 0), lambda x: x,
                                lambda i, j, a: tuple((x, 0) for x in a), c2, check=False)


def naturality_holds(F: Theta2Mor, mu: DeltaMor, cache: dict = None) -> bool:
    """nu . (F (x) mu) == Phi(F, mu) . nu, compared cell by cell."""
    from .gray import gray_colax_mor
    cache = {} if cache is None else cache

    def get(key, make):
        if key not in cache:
            cache[key] = make()
        return cache[key]

    I, J, m, n = F.source, F.target, mu.source, mu.target
    GS = get(("gray", I, m), lambda: gray_colax(I, linear(m), check=False))
    GT = get(("gray", J, n), lambda: gray_colax(J, linear(n), check=False))
    PS = get(("phi", I, m), lambda: phi_obj(I, m, check=False))
    PT = get(("phi", J, n), lambda: phi_obj(J, n, check=False))
    nS = get(("nu", I, m), lambda: nu(I, m, GS, PS, check=False))
    nT = get(("nu", J, n), lambda: nu(J, n, GT, PT, check=False))
    muT = Theta2Mor(linear(m), linear(n), mu,
                    {ij: DeltaMor(0, 0, (0,)) for ij in _pairs(mu)})
    g = gray_colax_mor(F, muT, GS, GT)
    p = phi_mor(F, mu, PS, PT)
    return g.then(nT).key() == nS.then(p).key()


def _pairs(phi):
    return [(i, j) for i in range(1, phi.source + 1) for j in range(phi(i - 1) + 1, phi(i) + 1)]


# -- the pushout square ---------------------------------------------------------

def odot_square(I: Theta2Obj, m: int):
    """The square  iota_0 I x [m] -> I (x)colax [m] -> Phi(I, m) <- iota_0 I
    as a wide span plus cocone."""
    G = gray_colax(I, linear(m))
    P = phi_obj(I, m)
    objs = [(x, i) for x in range(I.k + 1) for i in range(m + 1)]
    cols = free_linear(CatGraph([product_cat()] * m))       # [m] as a 1-category
    homs = {((x, i), (x, j)): cols.homs[(i, j)] for (x, i) in objs for j in range(i, m + 1)}
    A = TwoCat(objs, homs, {p: () for p in objs}, lambda *a: a[3] + a[4],
               lambda *a: a[3] + a[4], name="iota0 I x [m]")
    D = discrete_twocat(range(I.k + 1))
    D.name = "iota0 I"
    to_gray = TwoFunctor.from_maps(
        A, G, lambda p: p,
        lambda p, q, f: ("V" * len(f), (), (0,) * len(f)),
        lambda p, q, a: (("V" * len(a), "V" * len(a)), (), ((0, 0),) * len(a)))
    to_disc = TwoFunctor.from_maps(A, D, lambda p: p[0], lambda p, q, f: (),
                                   lambda p, q, a: ())
    leg_nu = nu(I, m, G, P)
    leg_disc = TwoFunctor.from_maps(D, P, lambda x: x, lambda x, y, f: (), lambda x, y, a: ())
    span = WideSpan(tips={"gray": G, "iota0": D}, bases={"A": A},
                    arrows=[("A", "gray", to_gray), ("A", "iota0", to_disc)])
    return span, Cocone(P, {"gray": leg_nu, "iota0": leg_disc})


def check_odot_pushout(I: Theta2Obj, m: int, probes, corrupt: str = None, budget=None):
    span, cocone = odot_square(I, m)
    if corrupt:
        cocone = corrupt_cocone(cocone, corrupt)
    return verify_pushout(span, cocone, probes, budget=budget,
                          name=f"odot square for ({I}, [{m}])" + (" [corrupted]" if corrupt else ""))


def co_segal_outer(I: Theta2Obj, m: int):
    """Phi(I, m) glued from Phi([1](n_s), m) along Phi([0], m)."""
    from .theta2 import C0
    P = phi_obj(I, m)
    idm = DeltaMor.identity(m)
    tips, bases, arrows, legs = {}, {}, [], {}
    pieces = []
    for s in range(1, I.k + 1):
        piece = Theta2Obj(1, (I.ns[s - 1],))
        inc = Theta2Mor(piece, I, DeltaMor(1, I.k, (s - 1, s)),
                        {(1, s): DeltaMor.identity(I.ns[s - 1])})
        tips[f"piece{s}"] = phi_obj(piece, m)
        legs[f"piece{s}"] = phi_mor(inc, idm, tips[f"piece{s}"], P)
        pieces.append(piece)
    for s in range(1, I.k):
        bases[f"v{s}"] = phi_obj(C0, m)
        for t, end in ((s, 1), (s + 1, 0)):
            f = Theta2Mor(C0, pieces[t - 1], DeltaMor(0, 1, (end,)), {})
            arrows.append((f"v{s}", f"piece{t}", phi_mor(f, idm, bases[f"v{s}"], tips[f"piece{t}"])))
    if I.k == 0:
        tips["piece0"] = phi_obj(C0, m)
        legs["piece0"] = phi_mor(identity(C0), idm, tips["piece0"], P)
    return WideSpan(tips, bases, arrows), Cocone(P, legs)


def co_segal_inner(n: int, m: int):
    """Phi([1](n), m) glued from n copies of Phi([1](1), m) along Phi([1](0), m)."""
    from .theta2 import C1, C2
    top = Theta2Obj(1, (n,))
    P = phi_obj(top, m)
    idm = DeltaMor.identity(m)
    one = DeltaMor.identity(1)
    tips, bases, arrows, legs = {}, {}, [], {}
    for s in range(1, n + 1):
        tips[f"seg{s}"] = phi_obj(C2, m)
        g = Theta2Mor(C2, top, one, {(1, 1): DeltaMor(1, n, (s - 1, s))})
        legs[f"seg{s}"] = phi_mor(g, idm, tips[f"seg{s}"], P)
    for s in range(1, n):
        bases[f"v{s}"] = phi_obj(C1, m)
        for t, end in ((s, 1), (s + 1, 0)):
            f = Theta2Mor(C1, C2, one, {(1, 1): DeltaMor(0, 1, (end,))})
            arrows.append((f"v{s}", f"seg{t}", phi_mor(f, idm, bases[f"v{s}"], tips[f"seg{t}"])))
    if n == 0:
        tips["seg0"] = phi_obj(C1, m)
        legs["seg0"] = phi_mor(identity(C1), idm, tips["seg0"], P)
    return WideSpan(tips, bases, arrows), Cocone(P, legs)


def naturality_cases(kmax: int = 2, nmax: int = 2, mmax: int = 2):
    """(F, id_m) for every Theta_2 map F in the bounded universe, then
    (id_I, mu) for every mu: [m] -> [n]."""
    from .theta2 import delta_maps, morphisms, objects_up_to
    objs = objects_up_to(kmax, nmax)
    for I in objs:
        for J in objs:
            for F in morphisms(I, J):
                for m in range(mmax + 1):
                    yield F, DeltaMor.identity(m)
    for I in objs:
        for m in range(mmax + 1):
            for n in range(mmax + 1):
                for mu in delta_maps(m, n):
                    yield identity(I), mu


def naturality_sweep(kmax: int = 2, nmax: int = 2, mmax: int = 2):
    """Number of squares checked and the first one that fails (or None)."""
    cache = {}
    count = 0
    for F, mu in naturality_cases(kmax, nmax, mmax):
        count += 1
        if not naturality_holds(F, mu, cache):
            return count, (F, mu)
    return count, None
