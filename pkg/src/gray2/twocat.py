"""Finite strict 2-categories and strict 2-functors.

A :class:`TwoCat` stores its hom-categories as :class:`FinCat` values and its
horizontal composition as two callables

    hcomp1(x, y, z, f, g)   1-cells f: x -> y, g: y -> z
    hcomp2(x, y, z, a, b)   2-cells a in hom(x, y), b in hom(y, z)

both in diagrammatic order.  Everything the search kernel needs is read off a
cached flat view (:meth:`TwoCat.flat`) that numbers objects, 1-cells and
2-cells canonically: objects in order, homs in (x, y) order, cells in the
hom-category's own order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Optional, Sequence

import numpy as np

from .fincat import (FinCat, component_map, discrete, from_poset,
                     functor_cat, opposite, pi0, product_cat)
from .poset import _hashable, _jsonable, ordinal_poset
from .theta2 import Theta2Mor, Theta2Obj, plan_lookup

EMPTY = FinCat((), (), {}, {}, {}, {}, check=False)

# check="auto" validates on construction when the associativity sweep is at most this many steps
AUTO_CHECK_LIMIT = 300_000


class TwoCatError(ValueError):
    pass


class Flat:
    """Canonical numbering of the cells of a TwoCat plus composition facts."""

    def __init__(self, X: "TwoCat"):
        objs = X.objects
        self.oidx = {x: i for i, x in enumerate(objs)}
        self.homs = [(x, y) for x in objs for y in objs if X.has_hom(x, y)]
        self.hidx = {}
        self.cells1, self.cells2 = [], []
        self.c1idx, self.c2idx = {}, {}
        self.hom_cells1, self.hom_cells2 = {}, {}
        for x, y in self.homs:
            H = X.homs[(x, y)]
            self.hom_cells1[(x, y)] = range(len(self.cells1), len(self.cells1) + len(H.objects))
            for f in H.objects:
                self.c1idx[(x, y, f)] = len(self.cells1)
                self.cells1.append((x, y, f))
            self.hom_cells2[(x, y)] = range(len(self.cells2), len(self.cells2) + len(H.morphisms))
            for a in H.morphisms:
                self.c2idx[(x, y, a)] = len(self.cells2)
                self.cells2.append((x, y, a))
        c1, c2, oi = self.c1idx, self.c2idx, self.oidx
        self.src1 = [oi[x] for x, _, _ in self.cells1]
        self.tgt1 = [oi[y] for _, y, _ in self.cells1]
        self.src2 = [c1[(x, y, X.homs[(x, y)].src[a])] for x, y, a in self.cells2]
        self.tgt2 = [c1[(x, y, X.homs[(x, y)].tgt[a])] for x, y, a in self.cells2]
        self.id1 = [c1[(x, x, X.unit[x])] for x in objs]
        self.id2 = [c2[(x, y, X.homs[(x, y)].ident[f])] for x, y, f in self.cells1]
        self._X = X
        self.n0, self.n1, self.n2 = len(objs), len(self.cells1), len(self.cells2)
        self._tables = None


    # composition facts are only built when the search kernel or a validator asks
    @cached_property
    def vfacts(self):
        X, c2 = self._X, self.c2idx
        vf = []
        for x, y in self.homs:
            H = X.homs[(x, y)]
            for (a, b), c in H.comp.items():
                vf.append((c2[(x, y, a)], c2[(x, y, b)], c2[(x, y, c)]))
        vf.sort()
        return vf

    @cached_property
    def h1facts(self):
        self._hfacts()
        return self._h1f

    @cached_property
    def h2facts(self):
        self._hfacts()
        return self._h2f

    def _hfacts(self):
        X, c1, c2 = self._X, self.c1idx, self.c2idx
        h1f, h2f = [], []
        for x, y in self.homs:
            for z in X.objects:
                if not X.has_hom(y, z):
                    continue
                A, B = X.homs[(x, y)], X.homs[(y, z)]
                for f in A.objects:
                    for g in B.objects:
                        h1f.append((c1[(x, y, f)], c1[(y, z, g)],
                                    c1[(x, z, X.hcomp1(x, y, z, f, g))]))
                for a in A.morphisms:
                    for b in B.morphisms:
                        h2f.append((c2[(x, y, a)], c2[(y, z, b)],
                                    c2[(x, z, X.hcomp2(x, y, z, a, b))]))
        self._h1f, self._h2f = h1f, h2f


class TwoCat:
    __slots__ = ("objects", "homs", "unit", "_h1", "_h2", "_flat", "name")

    def __init__(self, objects, homs: dict, unit: dict, hcomp1: Callable, hcomp2: Callable,
                 check="auto", name: str = ""):
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise TwoCatError("duplicate objects")
        self.homs = {k: v for k, v in homs.items() if len(v.objects) > 0}
        self.unit = dict(unit)
        self._h1 = hcomp1
        self._h2 = hcomp2
        self._flat = None
        self.name = name
        if check == "auto":
            check = self.validation_cost() <= AUTO_CHECK_LIMIT
        if check:
            self.validate()

    # -- access ----------------------------------------------------------------
    def has_hom(self, x, y) -> bool:
        return (x, y) in self.homs

    def hom(self, x, y) -> FinCat:
        return self.homs.get((x, y), EMPTY)

    def hcomp1(self, x, y, z, f, g):
        return self._h1(x, y, z, f, g)

    def hcomp2(self, x, y, z, a, b):
        return self._h2(x, y, z, a, b)

    def id2(self, x, y, f):
        return self.homs[(x, y)].ident[f]

    def vcomp(self, x, y, a, b):
        """a then b in hom(x, y)."""
        return self.homs[(x, y)].comp[(a, b)]

    def whisker_left(self, x, y, z, f, b):
        """f * b for a 1-cell f: x -> y and a 2-cell b in hom(y, z)."""
        return self._h2(x, y, z, self.homs[(x, y)].ident[f], b)

    def whisker_right(self, x, y, z, a, g):
        return self._h2(x, y, z, a, self.homs[(y, z)].ident[g])

    def flat(self) -> Flat:
        if self._flat is None:
            self._flat = Flat(self)
        return self._flat

    def size(self):
        return (len(self.objects), sum(len(h.objects) for h in self.homs.values()),
                sum(len(h.morphisms) for h in self.homs.values()))

    def validation_cost(self) -> int:
        """Number of composable 2-cell triples (the dominant term of validate)."""
        n2 = {k: len(h.morphisms) for k, h in self.homs.items()}
        into, outof = {}, {}
        for (x, y), n in n2.items():
            into[y] = into.get(y, 0) + n
            outof[x] = outof.get(x, 0) + n
        return sum(into.get(x, 0) * n * outof.get(y, 0) for (x, y), n in n2.items())

    def __repr__(self):
        n0, n1, n2 = self.size()
        label = f"{self.name}: " if self.name else ""
        return f"TwoCat({label}{n0} objects, {n1} 1-cells, {n2} 2-cells)"

    # -- validation ------------------------------------------------------------
    def validate(self):
        objs = self.objects
        for (x, y), H in self.homs.items():
            if x not in objs or y not in objs:
                raise TwoCatError(f"hom {(x, y)!r} mentions unknown objects")
            H.validate()
        for x in objs:
            if not self.has_hom(x, x) or self.unit.get(x) not in self.homs[(x, x)]._oindex:
                raise TwoCatError(f"missing identity 1-cell at {x!r}")
        for (x, y), A in self.homs.items():
            for z in objs:
                if not self.has_hom(y, z):
                    continue
                B = self.homs[(y, z)]
                if not self.has_hom(x, z):
                    raise TwoCatError(f"composite hom {(x, z)!r} is empty")
                C = self.homs[(x, z)]
                for f in A.objects:
                    for g in B.objects:
                        if self._h1(x, y, z, f, g) not in C._oindex:
                            raise TwoCatError(f"hcomp1 at {(x, y, z, f, g)!r} leaves hom")
                for a in A.morphisms:
                    for b in B.morphisms:
                        c = self._h2(x, y, z, a, b)
                        if c not in C._mindex:
                            raise TwoCatError(f"hcomp2 at {(x, y, z, a, b)!r} leaves hom")
                        if (C.src[c] != self._h1(x, y, z, A.src[a], B.src[b])
                                or C.tgt[c] != self._h1(x, y, z, A.tgt[a], B.tgt[b])):
                            raise TwoCatError(f"hcomp2 at {(x, y, z, a, b)!r} has wrong boundary")
                for f in A.objects:
                    for g in B.objects:
                        if self._h2(x, y, z, A.ident[f], B.ident[g]) != C.ident[self._h1(x, y, z, f, g)]:
                            raise TwoCatError(f"hcomp2 does not preserve identities at {(f, g)!r}")
                for (a, a2), aa in A.comp.items():
                    for (b, b2), bb in B.comp.items():
                        lhs = self._h2(x, y, z, aa, bb)
                        rhs = C.comp[(self._h2(x, y, z, a, b), self._h2(x, y, z, a2, b2))]
                        if lhs != rhs:
                            raise TwoCatError(f"interchange fails at {(a, a2, b, b2)!r}")
        for (x, y), A in self.homs.items():
            ux, uy = self.unit[x], self.unit[y]
            ix, iy = self.homs[(x, x)].ident[ux], self.homs[(y, y)].ident[uy]
            for f in A.objects:
                if self._h1(x, x, y, ux, f) != f or self._h1(x, y, y, f, uy) != f:
                    raise TwoCatError(f"unit law fails at 1-cell {f!r}")
            for a in A.morphisms:
                if self._h2(x, x, y, ix, a) != a or self._h2(x, y, y, a, iy) != a:
                    raise TwoCatError(f"unit law fails at 2-cell {a!r}")
        for (w, x), A in self.homs.items():
            for y in objs:
                if not self.has_hom(x, y):
                    continue
                B = self.homs[(x, y)]
                for z in objs:
                    if not self.has_hom(y, z):
                        continue
                    C = self.homs[(y, z)]
                    for a in A.morphisms:
                        for b in B.morphisms:
                            ab = self._h2(w, x, y, a, b)
                            for c in C.morphisms:
                                if (self._h2(w, y, z, ab, c)
                                        != self._h2(w, x, z, a, self._h2(x, y, z, b, c))):
                                    raise TwoCatError(f"associativity fails at {(a, b, c)!r}")
        # 1-cell associativity follows from the 2-cell one via identities

    # -- serialization -----------------------------------------------------------
    def to_json(self) -> dict:
        j = _jsonable
        F = self.flat()
        return {
            "objects": [j(x) for x in self.objects],
            "homs": [{"src": j(x), "tgt": j(y), "category": self.homs[(x, y)].to_json()}
                     for x, y in F.homs],
            "units": [[j(x), j(self.unit[x])] for x in self.objects],
            "hcomp1": [[j(F.cells1[a][2]), j(F.cells1[b][2]), j(F.cells1[c][2]),
                        j(F.cells1[a][0]), j(F.cells1[a][1]), j(F.cells1[b][1])]
                       for a, b, c in F.h1facts],
            "hcomp2": [[j(F.cells2[a][2]), j(F.cells2[b][2]), j(F.cells2[c][2]),
                        j(F.cells2[a][0]), j(F.cells2[a][1]), j(F.cells2[b][1])]
                       for a, b, c in F.h2facts],
        }

    @classmethod
    def from_json(cls, data, check=True) -> "TwoCat":
        if isinstance(data, str):
            data = json.loads(data)
        h = _hashable
        objs = [h(x) for x in data["objects"]]
        homs = {(h(e["src"]), h(e["tgt"])): FinCat.from_json(e["category"]) for e in data["homs"]}
        unit = {h(x): h(u) for x, u in data["units"]}
        t1 = {(h(x), h(y), h(z), h(f), h(g)): h(c) for f, g, c, x, y, z in data["hcomp1"]}
        t2 = {(h(x), h(y), h(z), h(a), h(b)): h(c) for a, b, c, x, y, z in data["hcomp2"]}
        return cls(objs, homs, unit, _table_lookup(t1), _table_lookup(t2), check=check)

    def to_dot(self, name: str = "X") -> str:
        lines = [f"digraph {json.dumps(name)} {{"]
        for x in self.objects:
            lines.append(f"  {json.dumps(_label(x))};")
        for (x, y), H in self.homs.items():
            if x == y and len(H.objects) == 1:
                continue
            for f in H.objects:
                if x == y and f == self.unit[x]:
                    continue
                n2 = sum(1 for a in H.morphisms if H.src[a] == f and H.tgt[a] != f)
                lines.append(f"  {json.dumps(_label(x))} -> {json.dumps(_label(y))} "
                             f"[label={json.dumps(_label(f) + (f' [{n2} out]' if n2 else ''))}];")
        lines.append("}")
        return "\n".join(lines)

    def to_text(self) -> str:
        out = [repr(self)]
        for (x, y), H in self.homs.items():
            out.append(f"hom({_label(x)}, {_label(y)}): {len(H.objects)} 1-cells, "
                       f"{len(H.non_identity_morphisms())} non-identity 2-cells")
        return "\n".join(out)


def _label(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(_label(y) for y in x) + ")"
    return str(x)


def _table_lookup(table):
    def f(x, y, z, a, b):
        return table[(x, y, z, a, b)]
    return f


def _concat(x, y, z, a, b):
    return a + b


# -- 2-functors ------------------------------------------------------------------

class TwoFunctor:
    """Strict 2-functor stored as flat index tuples into the target's cells."""

    __slots__ = ("source", "target", "f0", "f1", "f2")

    def __init__(self, source: TwoCat, target: TwoCat, f0, f1, f2, check: bool = True):
        self.source, self.target = source, target
        self.f0, self.f1, self.f2 = tuple(f0), tuple(f1), tuple(f2)
        if check:
            bad = functor_violation(self)
            if bad is not None:
                raise TwoCatError(f"not a strict 2-functor: {bad}")

    @classmethod
    def from_maps(cls, source: TwoCat, target: TwoCat, obj, cell1, cell2, check=True):
        """Build from id-level maps: ``obj(x)``, ``cell1(x, y, f)``, ``cell2(x, y, a)``.

        Cell maps return ids inside the target hom between the images of x, y.
        """
        S, T = source.flat(), target.flat()
        ob = {x: obj(x) for x in source.objects}
        f0 = [T.oidx[ob[x]] for x in source.objects]
        try:
            f1 = [T.c1idx[(ob[x], ob[y], cell1(x, y, f))] for x, y, f in S.cells1]
            f2 = [T.c2idx[(ob[x], ob[y], cell2(x, y, a))] for x, y, a in S.cells2]
        except KeyError as e:
            raise TwoCatError(f"cell image not in target: {e}") from None
        return cls(source, target, f0, f1, f2, check=check)

    def obj(self, x):
        return self.target.objects[self.f0[self.source.flat().oidx[x]]]

    def cell1(self, x, y, f):
        return self.target.flat().cells1[self.f1[self.source.flat().c1idx[(x, y, f)]]][2]

    def cell2(self, x, y, a):
        return self.target.flat().cells2[self.f2[self.source.flat().c2idx[(x, y, a)]]][2]

    def then(self, other: "TwoFunctor") -> "TwoFunctor":
        if self.target is not other.target and self.target is not other.source:
            pass
        return TwoFunctor(self.source, other.target, [other.f0[i] for i in self.f0],
                          [other.f1[i] for i in self.f1], [other.f2[i] for i in self.f2],
                          check=False)

    def key(self):
        return self.f0 + self.f1 + self.f2

    def is_injective(self) -> bool:
        return all(len(set(f)) == len(f) for f in (self.f0, self.f1, self.f2))

    def is_locally_full(self) -> bool:
        S, T = self.source.flat(), self.target.flat()
        for x, y in S.homs:
            img1 = {self.f1[i] for i in S.hom_cells1[(x, y)]}
            tx, ty = self.target.objects[self.f0[S.oidx[x]]], self.target.objects[self.f0[S.oidx[y]]]
            if img1 != set(T.hom_cells1[(tx, ty)]):
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, TwoFunctor) and self.key() == other.key()
                and len(self.f0) == len(other.f0) and len(self.f1) == len(other.f1))

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"TwoFunctor(f0={self.f0}, f1={self.f1}, f2={self.f2})"

    def to_json(self) -> dict:
        j = _jsonable
        S, T = self.source.flat(), self.target.flat()
        return {
            "objects": [[j(x), j(self.target.objects[i])] for x, i in zip(self.source.objects, self.f0)],
            "cells1": [[j(c), j(T.cells1[i])] for c, i in zip(S.cells1, self.f1)],
            "cells2": [[j(c), j(T.cells2[i])] for c, i in zip(S.cells2, self.f2)],
        }


def functor_violation(F: TwoFunctor) -> Optional[str]:
    """First violated 2-functor law as a message, or None."""
    S, T = F.source.flat(), F.target.flat()
    f0, f1, f2 = F.f0, F.f1, F.f2
    if (len(f0), len(f1), len(f2)) != (S.n0, S.n1, S.n2):
        return "map sizes do not match the source"
    for i in range(S.n1):
        if T.src1[f1[i]] != f0[S.src1[i]] or T.tgt1[f1[i]] != f0[S.tgt1[i]]:
            return f"1-cell {S.cells1[i]!r} has wrong boundary image"
    for i in range(S.n2):
        if T.src2[f2[i]] != f1[S.src2[i]] or T.tgt2[f2[i]] != f1[S.tgt2[i]]:
            return f"2-cell {S.cells2[i]!r} has wrong boundary image"
    for i in range(S.n0):
        if T.id1[f0[i]] != f1[S.id1[i]]:
            return f"identity 1-cell at {F.source.objects[i]!r} not preserved"
    for i in range(S.n1):
        if T.id2[f1[i]] != f2[S.id2[i]]:
            return f"identity 2-cell on {S.cells1[i]!r} not preserved"
    X = F.target
    c1, c2 = T.cells1, T.cells2
    for a, b, c in S.vfacts:
        x, y, u = c2[f2[a]]
        if T.c2idx[(x, y, X.vcomp(x, y, u, c2[f2[b]][2]))] != f2[c]:
            return f"vertical composite {S.cells2[a]!r};{S.cells2[b]!r} not preserved"
    for a, b, c in S.h1facts:
        x, y, u = c1[f1[a]]
        _, z, v = c1[f1[b]]
        if T.c1idx[(x, z, X.hcomp1(x, y, z, u, v))] != f1[c]:
            return f"horizontal composite {S.cells1[a]!r}*{S.cells1[b]!r} not preserved"
    for a, b, c in S.h2facts:
        x, y, u = c2[f2[a]]
        _, z, v = c2[f2[b]]
        if T.c2idx[(x, z, X.hcomp2(x, y, z, u, v))] != f2[c]:
            return f"horizontal composite {S.cells2[a]!r}*{S.cells2[b]!r} not preserved"
    return None


def identity_functor(X: TwoCat) -> TwoFunctor:
    F = X.flat()
    return TwoFunctor(X, X, range(F.n0), range(F.n1), range(F.n2), check=False)


# -- target tables for the search kernel ---------------------------------------------

def target_tables(X: TwoCat) -> dict:
    F = X.flat()
    if F._tables is not None:
        return F._tables
    n0, n1, n2 = F.n0, F.n1, F.n2
    i32 = np.int32
    hom_of1 = [F.src1[c] * n0 + F.tgt1[c] for c in range(n1)]
    hstart = np.zeros(n0 * n0 + 1, dtype=i32)
    for h in hom_of1:
        hstart[h + 1] += 1
    hstart = np.cumsum(hstart).astype(i32)
    # cells are already grouped by hom in (x, y) order
    hlist = np.arange(n1, dtype=i32)
    loc1 = np.zeros(n1, dtype=i32)
    hsize1 = np.diff(hstart).astype(i32)
    for c in range(n1):
        loc1[c] = c - hstart[hom_of1[c]]
    # 2-cells by source 1-cell
    out2 = [[] for _ in range(n1)]
    for c in range(n2):
        out2[F.src2[c]].append(c)
    ostart = np.zeros(n1 + 1, dtype=i32)
    ostart[1:] = np.cumsum([len(o) for o in out2])
    olist = np.array([c for o in out2 for c in o], dtype=i32)
    outpos2 = np.zeros(n2, dtype=i32)
    for o in out2:
        for p, c in enumerate(o):
            outpos2[c] = p
    voff = np.zeros(n2, dtype=i32)
    acc = 0
    for c in range(n2):
        voff[c] = acc
        acc += len(out2[F.tgt2[c]])
    vtab = np.full(acc, -1, dtype=i32)
    for a, b, c in F.vfacts:
        vtab[voff[a] + outpos2[b]] = c
    hom_of2 = [hom_of1[F.src2[c]] for c in range(n2)]
    hsize2 = np.zeros(n0 * n0, dtype=i32)
    loc2 = np.zeros(n2, dtype=i32)
    for c in range(n2):
        loc2[c] = hsize2[hom_of2[c]]
        hsize2[hom_of2[c]] += 1
    nhom = n0 * n0
    poff1 = np.full(nhom * nhom, -1, dtype=i32)
    poff2 = np.full(nhom * nhom, -1, dtype=i32)
    acc1 = acc2 = 0
    for x in range(n0):
        for y in range(n0):
            hxy = x * n0 + y
            if hsize1[hxy] == 0:
                continue
            for z in range(n0):
                hyz = y * n0 + z
                if hsize1[hyz] == 0:
                    continue
                poff1[hxy * nhom + hyz] = acc1
                acc1 += int(hsize1[hxy]) * int(hsize1[hyz])
                poff2[hxy * nhom + hyz] = acc2
                acc2 += int(hsize2[hxy]) * int(hsize2[hyz])
    h1tab = np.full(acc1, -1, dtype=i32)
    h2tab = np.full(acc2, -1, dtype=i32)
    for a, b, c in F.h1facts:
        ha, hb = hom_of1[a], hom_of1[b]
        h1tab[poff1[ha * nhom + hb] + loc1[a] * hsize1[hb] + loc1[b]] = c
    for a, b, c in F.h2facts:
        ha, hb = hom_of2[a], hom_of2[b]
        h2tab[poff2[ha * nhom + hb] + loc2[a] * hsize2[hb] + loc2[b]] = c
    tab = {
        "n0": n0, "n1": n1, "n2": n2, "nhom": nhom,
        "id1": np.array(F.id1, dtype=i32), "id2": np.array(F.id2, dtype=i32),
        "src1": np.array(F.src1, dtype=i32), "tgt1": np.array(F.tgt1, dtype=i32),
        "src2": np.array(F.src2, dtype=i32), "tgt2": np.array(F.tgt2, dtype=i32),
        "hstart": hstart, "hlist": hlist, "ostart": ostart, "olist": olist,
        "outpos2": outpos2, "voff": voff, "vtab": vtab,
        "homid1": np.array(hom_of1, dtype=i32), "loc1": loc1, "hsize1": hsize1, "poff1": poff1,
        "h1tab": h1tab,
        "homid2": np.array(hom_of2, dtype=i32), "loc2": loc2, "hsize2": hsize2, "poff2": poff2,
        "h2tab": h2tab,
    }
    F._tables = tab
    return tab


def _vlook(T, a, b):
    if T["src2"][b] != T["tgt2"][a]:
        return -1
    return int(T["vtab"][T["voff"][a] + T["outpos2"][b]])


def _hlook(T, level, a, b):
    s = str(level)
    homid, loc, hsize, poff, tab = (T["homid" + s], T["loc" + s], T["hsize" + s],
                                    T["poff" + s], T["h" + s + "tab"])
    off = poff[homid[a] * T["nhom"] + homid[b]]
    if off < 0:
        return -1
    return int(tab[off + loc[a] * hsize[homid[b]] + loc[b]])


# -- basic constructions ---------------------------------------------------------

def terminal_twocat() -> TwoCat:
    return realize(Theta2Obj(0, ()))


def discrete_twocat(objects) -> TwoCat:
    """Only identity 1- and 2-cells."""
    objects = tuple(objects)
    one = product_cat()
    return TwoCat(objects, {(x, x): one for x in objects}, {x: () for x in objects},
                  _concat, _concat, check=False)


def locally_discrete(c: FinCat) -> TwoCat:
    """A 1-category viewed as a 2-category with identity 2-cells only."""
    homs = {}
    for x in c.objects:
        for y in c.objects:
            ms = c.hom(x, y)
            if ms:
                homs[(x, y)] = discrete(ms)
    comp = c.comp

    def h1(x, y, z, f, g):
        return comp[(f, g)]

    def h2(x, y, z, a, b):
        h = comp[(a[0], b[0])]
        return (h, h)

    return TwoCat(c.objects, homs, dict(c.ident), h1, h2, check=False)


@dataclass(frozen=True)
class CatGraph:
    """Linear Cat-graph 0 -> 1 -> ... -> n with edge labels C_1..C_n."""

    labels: tuple

    def __init__(self, labels: Sequence[FinCat]):
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def n(self):
        return len(self.labels)


def free_linear(g: CatGraph, check="auto", name: str = "") -> TwoCat:
    """hom(i, j) = C_{i+1} x ... x C_j; composition concatenates tuples."""
    n = g.n
    homs = {(i, j): product_cat(*g.labels[i:j]) for i in range(n + 1) for j in range(i, n + 1)}
    return TwoCat(range(n + 1), homs, {i: () for i in range(n + 1)}, _concat, _concat,
                  check=check, name=name)


def realize(I: Theta2Obj, check="auto") -> TwoCat:
    """The strict 2-category [k]([n_1], ..., [n_k]); cached, so treat it as read-only."""
    return _realize(I, check == "auto" or bool(check))


@lru_cache(maxsize=256)
def _realize(I: Theta2Obj, check: bool) -> TwoCat:
    return free_linear(CatGraph([from_poset(ordinal_poset(n)) for n in I.ns]),
                       check="auto" if check else False, name=str(I))


def realize_cell_maps(f: Theta2Mor):
    """Id-level maps (i, j, cell) -> image cell of realize_mor(f)."""
    hom_plan = plan_lookup(f)

    def c1(i, j, a):
        return tuple(v[a[r]] for r, v in hom_plan(i, j))

    def c2(i, j, a):
        return tuple((v[a[r][0]], v[a[r][1]]) for r, v in hom_plan(i, j))

    return c1, c2


def realize_mor(f: Theta2Mor, source: TwoCat = None, target: TwoCat = None) -> TwoFunctor:
    """Object map phi; a 1-cell (a_{i+1}, ..., a_j) goes to (psi_{r t}(a_r))_t."""
    S = source if source is not None else realize(f.source)
    T = target if target is not None else realize(f.target)
    c1, c2 = realize_cell_maps(f)
    return TwoFunctor.from_maps(S, T, f.phi, c1, c2, check=False)


def product_twocat(X: TwoCat, Y: TwoCat, check="auto") -> TwoCat:
    objs = [(x, y) for x in X.objects for y in Y.objects]
    homs = {}
    for (x, x2) in X.homs:
        for (y, y2) in Y.homs:
            homs[((x, y), (x2, y2))] = product_cat(X.homs[(x, x2)], Y.homs[(y, y2)])

    def h1(p, q, r, f, g):
        return (X.hcomp1(p[0], q[0], r[0], f[0], g[0]), Y.hcomp1(p[1], q[1], r[1], f[1], g[1]))

    def h2(p, q, r, a, b):
        return (X.hcomp2(p[0], q[0], r[0], a[0], b[0]), Y.hcomp2(p[1], q[1], r[1], a[1], b[1]))

    return TwoCat(objs, homs, {(x, y): (X.unit[x], Y.unit[y]) for x, y in objs}, h1, h2,
                  check=check)


def cotensor(X: TwoCat, n: int, check=False) -> TwoCat:
    """Same objects; hom(x, y) = Fun([n], X(x, y)), composition pointwise.

    Valid whenever X is, so it is not re-validated unless asked.
    """
    arrow = from_poset(ordinal_poset(n))
    homs = {k: functor_cat(arrow, H) for k, H in X.homs.items()}
    nob = len(arrow.objects)

    def h1(x, y, z, F, G):
        obs = tuple(X.hcomp1(x, y, z, F[0][i], G[0][i]) for i in range(nob))
        mors = tuple(X.hcomp2(x, y, z, a, b) for a, b in zip(F[1], G[1]))
        return (obs, mors)

    def h2(x, y, z, s, t):
        return (h1(x, y, z, s[0], t[0]), h1(x, y, z, s[1], t[1]),
                tuple(X.hcomp2(x, y, z, a, b) for a, b in zip(s[2], t[2])))

    unit = {}
    for x in X.objects:
        u = X.unit[x]
        unit[x] = ((u,) * nob, (X.homs[(x, x)].ident[u],) * len(arrow.morphisms))
    return TwoCat(X.objects, homs, unit, h1, h2, check=check, name=f"{X.name}^[{n}]")


def evaluation(X: TwoCat, n: int, vertex: int, cot: TwoCat = None) -> TwoFunctor:
    """ev_vertex: X^[n] -> X."""
    C = cot if cot is not None else cotensor(X, n)
    return TwoFunctor.from_maps(C, X, lambda x: x, lambda x, y, F: F[0][vertex],
                                lambda x, y, t: t[2][vertex], check=False)


def two_op(X: TwoCat) -> TwoCat:
    return TwoCat(X.objects, {k: opposite(H) for k, H in X.homs.items()}, X.unit, X._h1, X._h2,
                  check=False, name=f"{X.name}^2op" if X.name else "")


def one_op(X: TwoCat) -> TwoCat:
    h1, h2 = X._h1, X._h2
    return TwoCat(X.objects, {(y, x): H for (x, y), H in X.homs.items()}, X.unit,
                  lambda x, y, z, f, g: h1(z, y, x, g, f),
                  lambda x, y, z, a, b: h2(z, y, x, b, a),
                  check=False, name=f"{X.name}^1op" if X.name else "")


def relabel_objects(X: TwoCat, mapping: dict, order=None) -> TwoCat:
    inv = {v: k for k, v in mapping.items()}
    objs = order if order is not None else [mapping[x] for x in X.objects]
    h1, h2 = X._h1, X._h2
    return TwoCat(objs, {(mapping[x], mapping[y]): H for (x, y), H in X.homs.items()},
                  {mapping[x]: u for x, u in X.unit.items()},
                  lambda x, y, z, f, g: h1(inv[x], inv[y], inv[z], f, g),
                  lambda x, y, z, a, b: h2(inv[x], inv[y], inv[z], a, b), check=False)


def localize_2morphisms(X: TwoCat) -> FinCat:
    """Invert all 2-cells: hom-sets become connected components of the homs."""
    comps = {}
    for k, H in X.homs.items():
        if not H.is_posetal():
            raise TwoCatError(f"hom {k!r} is not a poset; localization is only supported for posetal homs")
        comps[k] = (pi0(H), component_map(H))
    mors, src, tgt = [], {}, {}
    for (x, y), (cs, _) in comps.items():
        for i in range(len(cs)):
            m = (x, y, i)
            mors.append(m)
            src[m], tgt[m] = x, y
    ident = {x: (x, x, comps[(x, x)][1][X.unit[x]]) for x in X.objects}
    comp = {}
    for (x, y), (cs, _) in comps.items():
        for z in X.objects:
            if (y, z) not in comps:
                continue
            cs2 = comps[(y, z)][0]
            cm = comps[(x, z)][1]
            for i, ci in enumerate(cs):
                f = min(ci, key=X.homs[(x, y)].obj_index)
                for j, cj in enumerate(cs2):
                    g = min(cj, key=X.homs[(y, z)].obj_index)
                    comp[((x, y, i), (y, z, j))] = (x, z, cm[X.hcomp1(x, y, z, f, g)])
    return FinCat(X.objects, mors, src, tgt, ident, comp)


# -- enumeration -------------------------------------------------------------------

def enumerate_two_functors(src: TwoCat, tgt: TwoCat, budget: int = None, limit: int = 0,
                           backend: str = None) -> list[TwoFunctor]:
    """All strict 2-functors src -> tgt in canonical order."""
    from .search import search
    rows = search(src, tgt, budget=budget, limit=limit, backend=backend)
    return rows_to_functors(src, tgt, rows)


def count_two_functors(src: TwoCat, tgt: TwoCat, budget: int = None, backend: str = None) -> int:
    from .search import search
    return len(search(src, tgt, budget=budget, backend=backend))


def rows_to_functors(src, tgt, rows) -> list[TwoFunctor]:
    S = src.flat()
    n0, n1 = S.n0, S.n1
    out = []
    for r in rows.tolist():
        out.append(TwoFunctor(src, tgt, r[:n0], r[n0:n0 + n1], r[n0 + n1:], check=False))
    return out


def iso_two_cats(X: TwoCat, Y: TwoCat, budget: int = None, backend: str = None):
    """A strict isomorphism X -> Y and its inverse, or None."""
    from .search import search
    if X.size() != Y.size():
        return None
    rows = search(X, Y, budget=budget, limit=1, injective=True, backend=backend)
    if len(rows) == 0:
        return None
    F = rows_to_functors(X, Y, rows)[0]
    inv0 = _invert(F.f0)
    inv1 = _invert(F.f1)
    inv2 = _invert(F.f2)
    G = TwoFunctor(Y, X, inv0, inv1, inv2, check=False)
    return F, G


def _invert(seq):
    out = [0] * len(seq)
    for i, v in enumerate(seq):
        out[v] = i
    return out


def is_iso(X: TwoCat, Y: TwoCat, **kw) -> bool:
    return iso_two_cats(X, Y, **kw) is not None
