"""Colax and lax Gray tensor products of Theta_2 cells.

``gray_colax(I, J)`` has objects (i, j) and

    hom((i, j), (i', j')) = MaxCh([i, i'] x [j, j']) x I(i, i') x J(j, j')

with composition concatenating paths and composing componentwise.  A 1-cell
is a triple (path, a, b) with ``path`` a string over H/V (H steps move the
first coordinate); a 2-cell is ((path, path'), alpha, beta).
"""

from __future__ import annotations

from .fincat import from_poset, product_cat
from .poset import max_chain_poset
from .theta2 import Theta2Mor, Theta2Obj
from .twocat import (TwoCat, TwoFunctor, product_twocat, realize, realize_cell_maps,
                     realize_mor, relabel_objects)

_MAXCH_CACHE: dict = {}


def _maxch(k, m):
    key = (k, m)
    if key not in _MAXCH_CACHE:
        _MAXCH_CACHE[key] = from_poset(max_chain_poset(k, m))
    return _MAXCH_CACHE[key]


def gray_colax_of(X: TwoCat, Y: TwoCat, kx: int, ky: int, check="auto", name="") -> TwoCat:
    """Gray product of two realized linear 2-categories with objects 0..kx and 0..ky."""
    objs = [(i, j) for i in range(kx + 1) for j in range(ky + 1)]
    homs = {}
    for (i, j) in objs:
        for (i2, j2) in objs:
            if i <= i2 and j <= j2:
                homs[((i, j), (i2, j2))] = product_cat(_maxch(i2 - i, j2 - j), X.hom(i, i2),
                                                       Y.hom(j, j2))
    hx1, hy1, hx2, hy2 = X.hcomp1, Y.hcomp1, X.hcomp2, Y.hcomp2

    def h1(p, q, r, f, g):
        return (f[0] + g[0], hx1(p[0], q[0], r[0], f[1], g[1]), hy1(p[1], q[1], r[1], f[2], g[2]))

    def h2(p, q, r, a, b):
        return ((a[0][0] + b[0][0], a[0][1] + b[0][1]),
                hx2(p[0], q[0], r[0], a[1], b[1]), hy2(p[1], q[1], r[1], a[2], b[2]))

    unit = {(i, j): ("", X.unit[i], Y.unit[j]) for i, j in objs}
    return TwoCat(objs, homs, unit, h1, h2, check=check, name=name)


def gray_colax(I: Theta2Obj, J: Theta2Obj, check="auto") -> TwoCat:
    return gray_colax_of(realize(I), realize(J), I.k, J.k, check=check,
                         name=f"{I} (x)colax {J}")


def gray_lax(I: Theta2Obj, J: Theta2Obj, check="auto") -> TwoCat:
    """gray_colax(J, I) with objects renamed (j, i) -> (i, j)."""
    G = gray_colax(J, I, check=check)
    mapping = {(j, i): (i, j) for (j, i) in G.objects}
    order = [(i, j) for i in range(I.k + 1) for j in range(J.k + 1)]
    X = relabel_objects(G, mapping, order=order)
    X.name = f"{I} (x)lax {J}"
    return X


def map_path(path: str, start: tuple, phi_i, phi_j) -> str:
    """Image of a grid path under (phi_i, phi_j); degenerate steps disappear."""
    i, j = start
    out = []
    for s in path:
        if s == "H":
            out.append("H" * (phi_i(i + 1) - phi_i(i)))
            i += 1
        else:
            out.append("V" * (phi_j(j + 1) - phi_j(j)))
            j += 1
    return "".join(out)


def gray_colax_mor(F: Theta2Mor, G: Theta2Mor, source: TwoCat = None,
                   target: TwoCat = None, check=False) -> TwoFunctor:
    S = source if source is not None else gray_colax(F.source, G.source)
    T = target if target is not None else gray_colax(F.target, G.target)
    f1, f2 = realize_cell_maps(F)
    g1, g2 = realize_cell_maps(G)
    pf, pg = F.phi, G.phi
    paths: dict = {}

    def mp(path, p):
        k = (path, p)
        if k not in paths:
            paths[k] = map_path(path, p, pf, pg)
        return paths[k]

    def obj(p):
        return (pf.values[p[0]], pg.values[p[1]])

    def c1(p, q, f):
        return (mp(f[0], p), f1(p[0], q[0], f[1]), g1(p[1], q[1], f[2]))

    def c2(p, q, a):
        return ((mp(a[0][0], p), mp(a[0][1], p)),
                f2(p[0], q[0], a[1]), g2(p[1], q[1], a[2]))

    return TwoFunctor.from_maps(S, T, obj, c1, c2, check=check)


def product_realized(I: Theta2Obj, J: Theta2Obj) -> TwoCat:
    P = product_twocat(realize(I), realize(J))
    P.name = f"{I} x {J}"
    return P


def to_product(I: Theta2Obj, J: Theta2Obj, source: TwoCat = None, target: TwoCat = None,
               check=False) -> TwoFunctor:
    """Forget the path coordinate: gray_colax(I, J) -> I x J."""
    S = source if source is not None else gray_colax(I, J)
    T = target if target is not None else product_realized(I, J)
    return TwoFunctor.from_maps(S, T, lambda p: p, lambda p, q, f: (f[1], f[2]),
                                lambda p, q, a: (a[1], a[2]), check=check)


def gray_cell_str(cell) -> str:
    """Render a 1-cell (path, a, b) as ``(path=HV, i=..., j=...)``."""
    path, a, b = cell
    return f"(path={path or 'e'}, i={_fmt(a)}, j={_fmt(b)})"


def _fmt(x):
    if isinstance(x, tuple):
        return "(" + ",".join(_fmt(y) for y in x) + ")"
    return str(x)


# -- the three wide-pushout decompositions -----------------------------------------

GRAY_CASES = ("sq", "cyl", "cube")


def _path_leg(src: TwoCat, G: TwoCat, path: str) -> TwoFunctor:
    """realize([n](...)) -> Gray product along a path from (0, 0).

    Step s of the chain becomes step s of ``path``; its component goes to the
    I-cell if the step is H and to the J-cell if it is V.
    """
    pos = [(0, 0)]
    for d in path:
        i, j = pos[-1]
        pos.append((i + 1, j) if d == "H" else (i, j + 1))

    def split(i, j, x):
        seg = path[i:j]
        return (tuple(c for d, c in zip(seg, x) if d == "H"),
                tuple(c for d, c in zip(seg, x) if d == "V"))

    def c1(i, j, x):
        a, b = split(i, j, x)
        return (path[i:j], a, b)

    def c2(i, j, x):
        a, b = split(i, j, x)
        return ((path[i:j], path[i:j]), a, b)

    return TwoFunctor.from_maps(src, G, lambda i: pos[i], c1, c2)


def _free_leg(src: TwoCat, tgt: TwoCat, obj, c1, c2) -> TwoFunctor:
    """A 2-functor out of a one-hom free 2-category given on the generating hom."""
    def f1(x, y, f):
        return c1(f[0]) if f else tgt.unit[obj(x)]

    def f2(x, y, a):
        if a:
            return c2(a[0])
        u = tgt.unit[obj(x)]
        return tgt.id2(obj(x), obj(x), u)

    return TwoFunctor.from_maps(src, tgt, obj, f1, f2)


def graytenscolim_diagram(case: str):
    """Wide span and cocone exhibiting a small Gray product as a gluing.

    sq:   C1 (x) C1 = [2](0,0) u_C1 C2 u_C1 [2](0,0)
    cyl:  C2 (x) C1 = [2](1,0) u_C2 [1]([1]^2) u_C2 [2](0,1)
    cube: C2 (x) C2 = [2](1,1) u_[1]([1]^2) [1]([1]^3) u_[1]([1]^2) [2](1,1)
    """
    from .fincat import product_cat
    from .poset import ordinal_poset
    from .theta2 import C1, C2, DeltaMor
    from .twocat import CatGraph, free_linear

    paths = ("HV", "VH")
    arrow = from_poset(ordinal_poset(1))
    if case == "sq":
        I, J = C1, C1
        G = gray_colax(I, J)
        L = R = Theta2Obj(2, (0, 0))
        tips = {"left": realize(L), "mid": realize(C2), "right": realize(R)}
        legs = {"left": _path_leg(tips["left"], G, "HV"), "right": _path_leg(tips["right"], G, "VH"),
                "mid": TwoFunctor.from_maps(
                    tips["mid"], G, lambda i: (i, i),
                    lambda i, j, f: (paths[f[0]], (0,), (0,)) if f else G.unit[(i, i)],
                    lambda i, j, a: (((paths[a[0][0]], paths[a[0][1]]), ((0, 0),), ((0, 0),))
                                     if a else G.id2((i, i), (i, i), G.unit[(i, i)])))}
        pt = DeltaMor(0, 0, (0,))
        comp = Theta2Mor(C1, L, DeltaMor(1, 2, (0, 2)), {(1, 1): pt, (1, 2): pt})
        bases = {"b0": realize(C1), "b1": realize(C1)}
        arrows = []
        for b, tip, s in (("b0", "left", 0), ("b1", "right", 1)):
            arrows.append((b, tip, realize_mor(comp, bases[b], tips[tip])))
            arrows.append((b, "mid", realize_mor(
                Theta2Mor(C1, C2, DeltaMor.identity(1), {(1, 1): DeltaMor(0, 1, (s,))}),
                bases[b], tips["mid"])))
    elif case == "cyl":
        I, J = C2, C1
        G = gray_colax(I, J)
        L, R = Theta2Obj(2, (1, 0)), Theta2Obj(2, (0, 1))
        sq = product_cat(arrow, arrow)
        tips = {"left": realize(L), "mid": free_linear(CatGraph([sq]), name="[1]([1]^2)"),
                "right": realize(R)}
        legs = {"left": _path_leg(tips["left"], G, "HV"), "right": _path_leg(tips["right"], G, "VH"),
                "mid": _free_leg(tips["mid"], G, lambda i: (i, i),
                                 lambda x: (paths[x[0]], (x[1],), (0,)),
                                 lambda a: ((paths[a[0][0]], paths[a[0][1]]), (a[1],), ((0, 0),)))}
        idm, cst = DeltaMor.identity(1), DeltaMor(1, 0, (0, 0))
        to_tip = {"left": Theta2Mor(C2, L, DeltaMor(1, 2, (0, 2)), {(1, 1): idm, (1, 2): cst}),
                  "right": Theta2Mor(C2, R, DeltaMor(1, 2, (0, 2)), {(1, 1): cst, (1, 2): idm})}
        bases = {"b0": realize(C2), "b1": realize(C2)}
        arrows = []
        for b, tip, s in (("b0", "left", 0), ("b1", "right", 1)):
            arrows.append((b, tip, realize_mor(to_tip[tip], bases[b], tips[tip])))
            arrows.append((b, "mid", _free_leg(bases[b], tips["mid"], lambda i: i,
                                               lambda x, s=s: ((s, x),),
                                               lambda a, s=s: (((s, s), a),))))
    elif case == "cube":
        I, J = C2, C2
        G = gray_colax(I, J)
        L = R = Theta2Obj(2, (1, 1))
        tips = {"left": realize(L),
                "mid": free_linear(CatGraph([product_cat(arrow, arrow, arrow)]), name="[1]([1]^3)"),
                "right": realize(R)}
        legs = {"left": _path_leg(tips["left"], G, "HV"), "right": _path_leg(tips["right"], G, "VH"),
                "mid": _free_leg(tips["mid"], G, lambda i: (i, i),
                                 lambda x: (paths[x[0]], (x[1],), (x[2],)),
                                 lambda a: ((paths[a[0][0]], paths[a[0][1]]), (a[1],), (a[2],)))}
        sq = product_cat(arrow, arrow)
        bases = {"b0": free_linear(CatGraph([sq]), name="[1]([1]^2)"),
                 "b1": free_linear(CatGraph([sq]), name="[1]([1]^2)")}
        arrows = []
        for b, tip, s in (("b0", "left", 0), ("b1", "right", 1)):
            # the right-hand [2](1,1) meets its V step first, so swap the pair
            flip = (lambda x: x) if s == 0 else (lambda x: (x[1], x[0]))
            arrows.append((b, tip, _free_leg(bases[b], tips[tip], lambda i: 2 * i,
                                             lambda x, flip=flip: flip(x),
                                             lambda a, flip=flip: flip(a))))
            arrows.append((b, "mid", _free_leg(bases[b], tips["mid"], lambda i: i,
                                               lambda x, s=s: ((s,) + x,),
                                               lambda a, s=s: (((s, s),) + a,))))
    else:
        raise ValueError(f"unknown case {case!r}; expected one of {GRAY_CASES}")
    from .probe import Cocone, WideSpan
    return WideSpan(tips, bases, arrows), Cocone(G, legs)


def check_graytenscolim(case: str, probes, corrupt: str = None, budget=None):
    from .probe import corrupt_cocone, verify_pushout
    span, cocone = graytenscolim_diagram(case)
    if corrupt:
        cocone = corrupt_cocone(cocone, corrupt)
    label = {"sq": "C1 (x) C1", "cyl": "C2 (x) C1", "cube": "C2 (x) C2"}[case]
    return verify_pushout(span, cocone, probes, budget=budget,
                          name=f"gluing of {label} ({case})" + (" [corrupted]" if corrupt else ""))
