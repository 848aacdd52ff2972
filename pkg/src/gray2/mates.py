"""Adjunctions, squares and mates inside a finite strict 2-category.

All composites are diagrammatic: ``f;g`` is f followed by g, and a 2-cell
whiskered as ``f * a * g`` is ``hcomp2(id_f, hcomp2(a, id_g))``.

Squares have corners x0 (top left), x1 (top right), y0 (bottom left),
y1 (bottom right) and sides top: x0 -> x1, bottom: y0 -> y1,
left: x0 -> y0, right: x1 -> y1.  A colax filler goes left;bottom =>
top;right, a lax filler goes top;right => left;bottom.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .fincat import FinCat, from_poset, functor_cat
from .poset import FinPoset, _hashable, _jsonable
from .twocat import TwoCat


class MateError(ValueError):
    pass


# -- test-bed 2-categories ------------------------------------------------------

def monotone_maps(p: FinPoset, q: FinPoset) -> list[tuple]:
    """Monotone maps as tuples of images in p's element order."""
    els = p.elements
    out = []
    img: list = []

    def rec(i):
        if i == len(els):
            out.append(tuple(img))
            return
        for y in q.elements:
            if all(q.le(img[j], y) for j in range(i) if p.le(els[j], els[i])) and \
               all(q.le(y, img[j]) for j in range(i) if p.le(els[i], els[j])):
                img.append(y)
                rec(i + 1)
                img.pop()

    rec(0)
    return out


def pos_twocat(ps, check="auto") -> TwoCat:
    """Objects 0..len(ps)-1; hom(i, j) is the poset of monotone maps, pointwise order."""
    ps = list(ps)
    homs = {}
    for i, p in enumerate(ps):
        for j, q in enumerate(ps):
            maps = monotone_maps(p, q)
            leq = [(f, g) for f in maps for g in maps if all(q.le(a, b) for a, b in zip(f, g))]
            homs[(i, j)] = from_poset(FinPoset(maps, leq, check=False))
    idx = [{e: n for n, e in enumerate(p.elements)} for p in ps]

    def h1(i, j, k, f, g):
        return tuple(g[idx[j][y]] for y in f)

    def h2(i, j, k, a, b):
        return (h1(i, j, k, a[0], b[0]), h1(i, j, k, a[1], b[1]))

    unit = {i: tuple(p.elements) for i, p in enumerate(ps)}
    X = TwoCat(range(len(ps)), homs, unit, h1, h2, check=check, name="Pos")
    return X


def cat_twocat(cats, check="auto") -> TwoCat:
    """Objects 0..len(cats)-1; hom(i, j) = Fun(C_i, C_j) with natural transformations."""
    cats = list(cats)
    homs = {(i, j): functor_cat(c, d) for i, c in enumerate(cats) for j, d in enumerate(cats)}

    def h1(i, j, k, F, G):
        D = cats[j]
        dob = {x: n for n, x in enumerate(D.objects)}
        dmor = {m: n for n, m in enumerate(D.morphisms)}
        return (tuple(G[0][dob[y]] for y in F[0]), tuple(G[1][dmor[m]] for m in F[1]))

    def h2(i, j, k, a, b):
        C, D, E = cats[i], cats[j], cats[k]
        dob = {x: n for n, x in enumerate(D.objects)}
        dmor = {m: n for n, m in enumerate(D.morphisms)}
        G = b[0]
        comps = []
        for n, x in enumerate(C.objects):
            ax = a[2][n]                       # F x -> F' x in D
            fx2 = a[1][0][n]                   # F' x
            comps.append(E.comp[(G[1][dmor[ax]], b[2][dob[fx2]])])
        return (h1(i, j, k, a[0], b[0]), h1(i, j, k, a[1], b[1]), tuple(comps))

    unit = {}
    for i, c in enumerate(cats):
        unit[i] = (tuple(c.objects), tuple(c.morphisms))
    return TwoCat(range(len(cats)), homs, unit, h1, h2, check=check, name="Cat")


def idempotent_monoid() -> FinCat:
    """One object, morphisms {1, e} with e;e = e."""
    return FinCat(["*"], ["1", "e"], {"1": "*", "e": "*"}, {"1": "*", "e": "*"}, {"*": "1"},
                  {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"})


# -- cell arithmetic -----------------------------------------------------------

def comp1(X: TwoCat, objs, cells):
    """Composite of a path of 1-cells through objects objs[0] -> ... -> objs[-1]."""
    if len(cells) == 0:
        return X.unit[objs[0]]
    acc = cells[0]
    for n in range(1, len(cells)):
        acc = X.hcomp1(objs[0], objs[n], objs[n + 1], acc, cells[n])
    return acc


def whisker(X: TwoCat, x, y, z, w, f, a, g):
    """f * a * g for f: x -> y, a in hom(y, z), g: z -> w."""
    inner = X.hcomp2(y, z, w, a, X.id2(z, w, g))
    return X.hcomp2(x, y, w, X.id2(x, y, f), inner)


def vcomp_all(X: TwoCat, x, y, cells):
    acc = cells[0]
    for c in cells[1:]:
        acc = X.vcomp(x, y, acc, c)
    return acc


def two_cells(X: TwoCat, x, y, f, g):
    H = X.hom(x, y)
    return [a for a in H.morphisms if H.src[a] == f and H.tgt[a] == g]


# -- adjunctions ------------------------------------------------------------------

@dataclass(frozen=True)
class AdjunctionData:
    ambient: TwoCat
    A: object
    B: object
    l: object           # A -> B
    r: object           # B -> A
    unit: object        # id_A => l;r in hom(A, A)
    counit: object      # r;l => id_B in hom(B, B)

    def key(self):
        return (self.A, self.B, self.l, self.r, self.unit, self.counit)

    def to_json(self):
        j = _jsonable
        return {"A": j(self.A), "B": j(self.B), "l": j(self.l), "r": j(self.r),
                "unit": j(self.unit), "counit": j(self.counit)}

    @classmethod
    def from_json(cls, X: TwoCat, data, check=True):
        h = _hashable
        adj = cls(X, h(data["A"]), h(data["B"]), h(data["l"]), h(data["r"]),
                  h(data["unit"]), h(data["counit"]))
        if check and not check_triangle(adj):
            raise MateError("triangle identities fail")
        return adj


def identity_adjunction(X: TwoCat, A) -> AdjunctionData:
    u = X.unit[A]
    i = X.id2(A, A, u)
    return AdjunctionData(X, A, A, u, u, i, i)


def triangle_composites(adj: AdjunctionData):
    """The two triangle composites (on l and on r)."""
    X, A, B, l, r = adj.ambient, adj.A, adj.B, adj.l, adj.r
    il, ir = X.id2(A, B, l), X.id2(B, A, r)
    tl = X.vcomp(A, B, X.hcomp2(A, A, B, adj.unit, il), X.hcomp2(A, B, B, il, adj.counit))
    tr = X.vcomp(B, A, X.hcomp2(B, A, A, ir, adj.unit), X.hcomp2(B, B, A, adj.counit, ir))
    return tl, tr


def check_triangle(adj: AdjunctionData) -> bool:
    X = adj.ambient
    try:
        tl, tr = triangle_composites(adj)
    except KeyError:
        return False
    return tl == X.id2(adj.A, adj.B, adj.l) and tr == X.id2(adj.B, adj.A, adj.r)


def find_adjunctions(X: TwoCat, max_candidates: int = 10_000_000) -> list[AdjunctionData]:
    """All (l, r, unit, counit) satisfying the triangle identities, in canonical order."""
    out = []
    tried = 0
    for A in X.objects:
        for B in X.objects:
            if not X.has_hom(A, B) or not X.has_hom(B, A):
                continue
            HAB, HBA = X.hom(A, B), X.hom(B, A)
            uA, uB = X.unit[A], X.unit[B]
            for l in HAB.objects:
                for r in HBA.objects:
                    lr = X.hcomp1(A, B, A, l, r)
                    rl = X.hcomp1(B, A, B, r, l)
                    for e in two_cells(X, A, A, uA, lr):
                        for c in two_cells(X, B, B, rl, uB):
                            tried += 1
                            if tried > max_candidates:
                                raise MateError("candidate budget exceeded")
                            adj = AdjunctionData(X, A, B, l, r, e, c)
                            if check_triangle(adj):
                                out.append(adj)
    return out


def galois_pairs(p: FinPoset, q: FinPoset):
    """Independent oracle: (l, r) monotone with l(x) <= y iff x <= r(y)."""
    ls, rs = monotone_maps(p, q), monotone_maps(q, p)
    pi = {e: n for n, e in enumerate(p.elements)}
    qi = {e: n for n, e in enumerate(q.elements)}
    out = []
    for l in ls:
        for r in rs:
            if all(q.le(l[pi[x]], y) == p.le(x, r[qi[y]]) for x in p.elements for y in q.elements):
                out.append((l, r))
    return out


# -- squares ----------------------------------------------------------------------

@dataclass(frozen=True)
class Square2:
    ambient: TwoCat
    x0: object
    x1: object
    y0: object
    y1: object
    top: object
    bottom: object
    left: object
    right: object
    filler: object
    direction: str      # "colax" or "lax"

    def boundary(self):
        X = self.ambient
        lb = X.hcomp1(self.x0, self.y0, self.y1, self.left, self.bottom)
        tr = X.hcomp1(self.x0, self.x1, self.y1, self.top, self.right)
        return (lb, tr) if self.direction == "colax" else (tr, lb)

    def validate(self):
        X = self.ambient
        if self.direction not in ("colax", "lax"):
            raise MateError(f"bad direction {self.direction!r}")
        s, t = self.boundary()
        H = X.hom(self.x0, self.y1)
        if self.filler not in H._mindex or H.src[self.filler] != s or H.tgt[self.filler] != t:
            raise MateError("filler does not match the square's boundary")
        return self

    def key(self):
        return (self.x0, self.x1, self.y0, self.y1, self.top, self.bottom, self.left,
                self.right, self.filler, self.direction)

    def to_json(self):
        j = _jsonable
        return {k: j(getattr(self, k)) for k in
                ("x0", "x1", "y0", "y1", "top", "bottom", "left", "right", "filler", "direction")}

    @classmethod
    def from_json(cls, X, data):
        h = _hashable
        return cls(X, *(h(data[k]) for k in ("x0", "x1", "y0", "y1", "top", "bottom", "left",
                                              "right", "filler")), data["direction"]).validate()


def mate(sq: Square2, top_adj: AdjunctionData, bottom_adj: AdjunctionData) -> Square2:
    """Transpose a square across the adjunctions on its top and bottom sides.

    colax (top l, bottom l', left a, right b, phi: a;l' => l;b) goes to
    lax (top r, bottom r', left b, right a) with filler
    r;a => r;a;l';r' => r;l;b;r' => b;r', and back.
    """
    X = sq.ambient
    if top_adj.ambient is not X or bottom_adj.ambient is not X:
        raise MateError("adjunctions live in a different ambient")
    if sq.direction == "colax":
        l, r, eta, eps = top_adj.l, top_adj.r, top_adj.unit, top_adj.counit
        l2, r2, eta2, eps2 = bottom_adj.l, bottom_adj.r, bottom_adj.unit, bottom_adj.counit
        A, B, A2, B2 = sq.x0, sq.x1, sq.y0, sq.y1
        if (sq.top, sq.bottom) != (l, l2) or (top_adj.A, top_adj.B) != (A, B) \
                or (bottom_adj.A, bottom_adj.B) != (A2, B2):
            raise MateError("square sides do not match the left adjoints")
        a, b, phi = sq.left, sq.right, sq.filler
        ra = X.hcomp1(B, A, A2, r, a)
        s1 = X.hcomp2(B, A2, A2, X.id2(B, A2, ra), eta2)
        s2 = whisker(X, B, A, B2, A2, r, phi, r2)
        br2 = X.hcomp1(B, B2, A2, b, r2)
        s3 = X.hcomp2(B, B, A2, eps, X.id2(B, A2, br2))
        psi = vcomp_all(X, B, A2, [s1, s2, s3])
        return Square2(X, B, A, B2, A2, r, r2, b, a, psi, "lax").validate()
    if sq.direction == "lax":
        l, r, eta, eps = top_adj.l, top_adj.r, top_adj.unit, top_adj.counit
        l2, r2, eta2, eps2 = bottom_adj.l, bottom_adj.r, bottom_adj.unit, bottom_adj.counit
        B, A, B2, A2 = sq.x0, sq.x1, sq.y0, sq.y1
        if (sq.top, sq.bottom) != (r, r2) or (top_adj.A, top_adj.B) != (A, B) \
                or (bottom_adj.A, bottom_adj.B) != (A2, B2):
            raise MateError("square sides do not match the right adjoints")
        b, a, psi = sq.left, sq.right, sq.filler
        al2 = X.hcomp1(A, A2, B2, a, l2)
        s1 = X.hcomp2(A, A, B2, eta, X.id2(A, B2, al2))
        s2 = whisker(X, A, B, A2, B2, l, psi, l2)
        lb = X.hcomp1(A, B, B2, l, b)
        s3 = X.hcomp2(A, B2, B2, X.id2(A, B2, lb), eps2)
        phi = vcomp_all(X, A, B2, [s1, s2, s3])
        return Square2(X, A, B, A2, B2, l, l2, a, b, phi, "colax").validate()
    raise MateError(f"bad direction {sq.direction!r}")


def squares_over(X: TwoCat, top_adj: AdjunctionData, bottom_adj: AdjunctionData,
                 direction="colax"):
    """All squares of the given direction with the adjunctions' left (colax) or
    right (lax) adjoints as top and bottom."""
    if direction == "colax":
        x0, x1, y0, y1, top, bottom = (top_adj.A, top_adj.B, bottom_adj.A, bottom_adj.B,
                                       top_adj.l, bottom_adj.l)
    else:
        x0, x1, y0, y1, top, bottom = (top_adj.B, top_adj.A, bottom_adj.B, bottom_adj.A,
                                       top_adj.r, bottom_adj.r)
    out = []
    if not (X.has_hom(x0, y0) and X.has_hom(x1, y1)):
        return out
    for a in X.hom(x0, y0).objects:
        for b in X.hom(x1, y1).objects:
            lb = X.hcomp1(x0, y0, y1, a, bottom)
            tr = X.hcomp1(x0, x1, y1, top, b)
            s, t = (lb, tr) if direction == "colax" else (tr, lb)
            for phi in two_cells(X, x0, y1, s, t):
                out.append(Square2(X, x0, x1, y0, y1, top, bottom, a, b, phi, direction))
    return out


def paste_horizontal(s1: Square2, s2: Square2) -> Square2:
    """Colax: s1 then s2 side by side (s1.right == s2.left).  Lax: s1 on the right of s2
    in the picture, i.e. tops compose s2.top ; s1.top ... see ``paste_lax``."""
    X = s1.ambient
    if s1.direction != "colax" or s2.direction != "colax":
        raise MateError("paste_horizontal takes colax squares")
    if s1.right != s2.left or (s1.x1, s1.y1) != (s2.x0, s2.y0):
        raise MateError("squares do not share a side")
    A, B, C = s1.x0, s1.x1, s2.x1
    A2, B2, C2 = s1.y0, s1.y1, s2.y1
    top = X.hcomp1(A, B, C, s1.top, s2.top)
    bottom = X.hcomp1(A2, B2, C2, s1.bottom, s2.bottom)
    p1 = X.hcomp2(A, B2, C2, s1.filler, X.id2(B2, C2, s2.bottom))
    p2 = X.hcomp2(A, B, C2, X.id2(A, B, s1.top), s2.filler)
    return Square2(X, A, C, A2, C2, top, bottom, s1.left, s2.right,
                   X.vcomp(A, C2, p1, p2), "colax").validate()


def paste_lax(s_outer: Square2, s_inner: Square2) -> Square2:
    """Lax squares r2: C -> B over r1: B -> A: s_outer has top C -> B, s_inner top B -> A."""
    X = s_outer.ambient
    if s_outer.direction != "lax" or s_inner.direction != "lax":
        raise MateError("paste_lax takes lax squares")
    if s_outer.right != s_inner.left or (s_outer.x1, s_outer.y1) != (s_inner.x0, s_inner.y0):
        raise MateError("squares do not share a side")
    C, B, A = s_outer.x0, s_outer.x1, s_inner.x1
    C2, B2, A2 = s_outer.y0, s_outer.y1, s_inner.y1
    top = X.hcomp1(C, B, A, s_outer.top, s_inner.top)
    bottom = X.hcomp1(C2, B2, A2, s_outer.bottom, s_inner.bottom)
    p1 = X.hcomp2(C, B, A2, X.id2(C, B, s_outer.top), s_inner.filler)
    p2 = X.hcomp2(C, B2, A2, s_outer.filler, X.id2(B2, A2, s_inner.bottom))
    return Square2(X, C, A, C2, A2, top, bottom, s_outer.left, s_inner.right,
                   X.vcomp(C, A2, p1, p2), "lax").validate()


def compose_adjunctions(adj1: AdjunctionData, adj2: AdjunctionData) -> AdjunctionData:
    """(l1;l2) -| (r2;r1) for l1: A -> B, l2: B -> C."""
    X = adj1.ambient
    A, B, C = adj1.A, adj1.B, adj2.B
    if adj2.A != B:
        raise MateError("adjunctions are not composable")
    l = X.hcomp1(A, B, C, adj1.l, adj2.l)
    r = X.hcomp1(C, B, A, adj2.r, adj1.r)
    unit = X.vcomp(A, A, adj1.unit, whisker(X, A, B, B, A, adj1.l, adj2.unit, adj1.r))
    counit = X.vcomp(C, C, whisker(X, C, B, B, C, adj2.r, adj1.counit, adj2.l), adj2.counit)
    return AdjunctionData(X, A, C, l, r, unit, counit)


# -- compatible squares of left adjoints ----------------------------------------------

def inverse_2cell(X: TwoCat, x, y, a) -> Optional[object]:
    H = X.hom(x, y)
    for b in H.morphisms:
        if H.src[b] == H.tgt[a] and H.tgt[b] == H.src[a]:
            if H.comp[(a, b)] == H.ident[H.src[a]] and H.comp[(b, a)] == H.ident[H.tgt[a]]:
                return b
    return None


@dataclass
class LaxFunAdjReport:
    mate: Square2
    unit_lhs: object
    unit_rhs: object
    counit_lhs: object
    counit_rhs: object

    @property
    def ok(self):
        return self.unit_lhs == self.unit_rhs and self.counit_lhs == self.counit_rhs


def laxfunadj_unit_counit(sq: Square2, top_adj: AdjunctionData,
                          bottom_adj: AdjunctionData) -> LaxFunAdjReport:
    """For a colax square of left adjoints with invertible filler phi: a;l' => l;b,
    build the mate psi: r;a => b;r' and compare the two 2-cell equations

        a => l;r;a => l;b;r' => a;l';r'    against   a * eta'
        r;l;b => r;a;l' => b;r';l' => b    against   eps * b

    where the middle steps use psi and the outer ones use phi^-1.
    """
    X = sq.ambient
    if sq.direction != "colax":
        raise MateError("expected a colax square of left adjoints")
    A, B, A2, B2 = sq.x0, sq.x1, sq.y0, sq.y1
    iota = inverse_2cell(X, A, B2, sq.filler)
    if iota is None:
        raise MateError("filler is not invertible")
    m = mate(sq, top_adj, bottom_adj)
    psi = m.filler
    l, r, l2, r2 = top_adj.l, top_adj.r, bottom_adj.l, bottom_adj.r
    a, b = sq.left, sq.right
    eta, eps, eta2, eps2 = top_adj.unit, top_adj.counit, bottom_adj.unit, bottom_adj.counit
    ida = X.id2(A, A2, a)
    # unit square, in hom(A, A2)
    u1 = X.hcomp2(A, A, A2, eta, ida)                                   # a => l;r;a
    u2 = X.hcomp2(A, B, A2, X.id2(A, B, l), psi)                         # => l;b;r'
    u3 = X.hcomp2(A, B2, A2, iota, X.id2(B2, A2, r2))                    # => a;l';r'
    unit_lhs = vcomp_all(X, A, A2, [u1, u2, u3])
    unit_rhs = X.hcomp2(A, A2, A2, ida, eta2)
    # counit square, in hom(B, B2)
    idb = X.id2(B, B2, b)
    c1 = X.hcomp2(B, A, B2, X.id2(B, A, r), iota)                        # r;l;b => r;a;l'
    c2 = X.hcomp2(B, A2, B2, psi, X.id2(A2, B2, l2))                     # => b;r';l'
    c3 = X.hcomp2(B, B2, B2, idb, eps2)                                  # => b
    counit_lhs = vcomp_all(X, B, B2, [c1, c2, c3])
    counit_rhs = X.hcomp2(B, B, B2, eps, idb)
    return LaxFunAdjReport(m, unit_lhs, unit_rhs, counit_lhs, counit_rhs)


def perturb_counit(adj: AdjunctionData) -> Optional[AdjunctionData]:
    """Another counit with the same boundary, if the ambient has one."""
    X = adj.ambient
    H = X.hom(adj.B, adj.B)
    for c in H.morphisms:
        if c != adj.counit and H.src[c] == H.src[adj.counit] and H.tgt[c] == H.tgt[adj.counit]:
            return replace(adj, counit=c)
    return None
