"""Finite categories as explicit composition tables.

Composition is stored diagrammatically: ``comp[(f, g)]`` is "f then g"
(defined exactly when ``tgt(f) == src(g)``).  ``compose(g, f)`` is the usual
``g . f`` and is provided for readability.
"""

from __future__ import annotations

import itertools
import json
from typing import Hashable, Iterable, Optional

from .poset import FinPoset, _hashable, _jsonable


class CategoryError(ValueError):
    pass


class FinCat:
    __slots__ = ("objects", "morphisms", "src", "tgt", "ident", "comp", "_oindex", "_mindex",
                 "_out", "_hash", "_between", "_posetal")

    def __init__(self, objects: Iterable[Hashable], morphisms: Iterable[Hashable],
                 src: dict, tgt: dict, ident: dict, comp: dict, check: bool = True):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        self.comp = dict(comp)
        self._oindex = {x: i for i, x in enumerate(self.objects)}
        self._mindex = {f: i for i, f in enumerate(self.morphisms)}
        self._hash = None
        self._between = None
        self._posetal = None
        if len(self._oindex) != len(self.objects) or len(self._mindex) != len(self.morphisms):
            raise CategoryError("duplicate ids")
        out: dict = {x: [] for x in self.objects}
        for f in self.morphisms:
            out[self.src[f]].append(f)
        self._out = out
        if check:
            self.validate()

    # -- checks ------------------------------------------------------------
    def validate(self):
        obs, mors = self._oindex, self._mindex
        for f in self.morphisms:
            if self.src.get(f) not in obs or self.tgt.get(f) not in obs:
                raise CategoryError(f"morphism {f!r} has bad endpoints")
        for x in self.objects:
            i = self.ident.get(x)
            if i not in mors or self.src[i] != x or self.tgt[i] != x:
                raise CategoryError(f"bad identity at {x!r}")
        for f in self.morphisms:
            for g in self._out[self.tgt[f]]:
                h = self.comp.get((f, g))
                if h is None:
                    raise CategoryError(f"composite of {f!r}, {g!r} missing")
                if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                    raise CategoryError(f"composite of {f!r}, {g!r} has wrong endpoints")
        for (f, g) in self.comp:
            if f not in mors or g not in mors or self.tgt[f] != self.src[g]:
                raise CategoryError(f"composite defined on non-composable pair {(f, g)!r}")
        for f in self.morphisms:
            if self.comp[(self.ident[self.src[f]], f)] != f or self.comp[(f, self.ident[self.tgt[f]])] != f:
                raise CategoryError(f"unit law fails at {f!r}")
        for f in self.morphisms:
            for g in self._out[self.tgt[f]]:
                fg = self.comp[(f, g)]
                for h in self._out[self.tgt[g]]:
                    if self.comp[(fg, h)] != self.comp[(f, self.comp[(g, h)])]:
                        raise CategoryError(f"associativity fails at {(f, g, h)!r}")

    # -- access ------------------------------------------------------------
    def then(self, f, g):
        return self.comp[(f, g)]

    def compose(self, g, f):
        return self.comp[(f, g)]

    def hom(self, x, y):
        return list(self.between(x, y))

    def between(self, x, y) -> tuple:
        """Morphisms x -> y, from an index built on first use."""
        if self._between is None:
            b: dict = {}
            for f in self.morphisms:
                b.setdefault((self.src[f], self.tgt[f]), []).append(f)
            self._between = {k: tuple(v) for k, v in b.items()}
        return self._between.get((x, y), ())

    def out_of(self, x):
        return self._out[x]

    def obj_index(self, x) -> int:
        return self._oindex[x]

    def mor_index(self, f) -> int:
        return self._mindex[f]

    def is_identity(self, f) -> bool:
        return self.ident[self.src[f]] == f

    def is_posetal(self) -> bool:
        if self._posetal is None:
            self._posetal = self._check_posetal()
        return self._posetal

    def _check_posetal(self) -> bool:
        seen = set()
        for f in self.morphisms:
            key = (self.src[f], self.tgt[f])
            if key in seen:
                return False
            seen.add(key)
        # antisymmetry: no nonidentity loops or 2-cycles
        for f in self.morphisms:
            if self.src[f] == self.tgt[f] and not self.is_identity(f):
                return False
        return not any((self.tgt[f], self.src[f]) in seen for f in self.morphisms
                       if self.src[f] != self.tgt[f])

    def non_identity_morphisms(self):
        return [f for f in self.morphisms if not self.is_identity(f)]

    def __len__(self):
        return len(self.objects)

    def _key(self):
        return (self.objects, self.morphisms, tuple(self.src[f] for f in self.morphisms),
                tuple(self.tgt[f] for f in self.morphisms),
                tuple(self.ident[x] for x in self.objects),
                frozenset(self.comp.items()))

    def __eq__(self, other):
        return isinstance(other, FinCat) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"FinCat({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        j = _jsonable
        return {
            "objects": [j(x) for x in self.objects],
            "morphisms": [{"id": j(f), "src": j(self.src[f]), "tgt": j(self.tgt[f])}
                          for f in self.morphisms],
            "identities": [[j(x), j(self.ident[x])] for x in self.objects],
            "composition": [[j(f), j(g), j(h)] for (f, g), h in sorted(
                self.comp.items(), key=lambda kv: (self._mindex[kv[0][0]], self._mindex[kv[0][1]]))],
        }

    @classmethod
    def from_json(cls, data) -> "FinCat":
        if isinstance(data, str):
            data = json.loads(data)
        h = _hashable
        mors = [h(m["id"]) for m in data["morphisms"]]
        return cls([h(x) for x in data["objects"]], mors,
                   {h(m["id"]): h(m["src"]) for m in data["morphisms"]},
                   {h(m["id"]): h(m["tgt"]) for m in data["morphisms"]},
                   {h(x): h(i) for x, i in data["identities"]},
                   {(h(f), h(g)): h(k) for f, g, k in data["composition"]})


class FinFunctor:
    """A functor between finite categories, validated on construction."""

    __slots__ = ("source", "target", "ob", "mor")

    def __init__(self, source: FinCat, target: FinCat, ob: dict, mor: dict, check: bool = True):
        self.source = source
        self.target = target
        self.ob = dict(ob)
        self.mor = dict(mor)
        if check:
            self.validate()

    def validate(self):
        S, T = self.source, self.target
        for x in S.objects:
            if self.ob.get(x) not in T._oindex:
                raise CategoryError(f"object {x!r} not mapped into target")
        for f in S.morphisms:
            g = self.mor.get(f)
            if g not in T._mindex:
                raise CategoryError(f"morphism {f!r} not mapped into target")
            if T.src[g] != self.ob[S.src[f]] or T.tgt[g] != self.ob[S.tgt[f]]:
                raise CategoryError(f"endpoints not preserved at {f!r}")
        for x in S.objects:
            if self.mor[S.ident[x]] != T.ident[self.ob[x]]:
                raise CategoryError(f"identity not preserved at {x!r}")
        for (f, g), h in S.comp.items():
            if T.comp[(self.mor[f], self.mor[g])] != self.mor[h]:
                raise CategoryError(f"composition not preserved at {(f, g)!r}")

    def __call__(self, x):
        return self.ob[x] if x in self.ob else self.mor[x]

    def then(self, other: "FinFunctor") -> "FinFunctor":
        return FinFunctor(self.source, other.target,
                          {x: other.ob[y] for x, y in self.ob.items()},
                          {f: other.mor[g] for f, g in self.mor.items()}, check=False)

    def key(self) -> tuple:
        """Canonical hashable form: images in source object/morphism order."""
        return (tuple(self.ob[x] for x in self.source.objects),
                tuple(self.mor[f] for f in self.source.morphisms))

    def is_injective(self) -> bool:
        return (len(set(self.ob.values())) == len(self.ob)
                and len(set(self.mor.values())) == len(self.mor))

    def is_full(self) -> bool:
        S, T = self.source, self.target
        for x in S.objects:
            for y in S.objects:
                img = {self.mor[f] for f in S.hom(x, y)}
                if img != set(T.hom(self.ob[x], self.ob[y])):
                    return False
        return True

    def __eq__(self, other):
        return (isinstance(other, FinFunctor) and self.source == other.source
                and self.target == other.target and self.ob == other.ob and self.mor == other.mor)

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FinFunctor({self.key()!r})"


def identity_functor(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects}, {f: f for f in c.morphisms}, check=False)


# -- constructions ------------------------------------------------------------

def from_poset(p: FinPoset) -> FinCat:
    """Poset as a category: one morphism (a, b) for each a <= b."""
    mors = p.pairs()
    up: dict = {}
    for a, b in mors:
        up.setdefault(a, []).append(b)
    comp = {((a, b), (b, c)): (a, c) for a, b in mors for c in up.get(b, ())}
    return FinCat(p.elements, mors, {m: m[0] for m in mors}, {m: m[1] for m in mors},
                  {x: (x, x) for x in p.elements}, comp, check=False)


def discrete(objects) -> FinCat:
    objects = tuple(objects)
    return FinCat(objects, [(x, x) for x in objects], {(x, x): x for x in objects},
                  {(x, x): x for x in objects}, {x: (x, x) for x in objects},
                  {((x, x), (x, x)): (x, x) for x in objects}, check=False)


def terminal() -> FinCat:
    return product_cat()


def product_cat(*cats: FinCat) -> FinCat:
    """n-ary product with tuple ids; ``product_cat()`` is the terminal category."""
    objs = list(itertools.product(*(c.objects for c in cats)))
    mors = list(itertools.product(*(c.morphisms for c in cats)))
    src = {m: tuple(c.src[f] for c, f in zip(cats, m)) for m in mors}
    tgt = {m: tuple(c.tgt[f] for c, f in zip(cats, m)) for m in mors}
    ident = {x: tuple(c.ident[a] for c, a in zip(cats, x)) for x in objs}
    comp = {}
    # composable pairs factor componentwise
    per = [list(c.comp.items()) for c in cats]
    for combo in itertools.product(*per):
        f = tuple(kv[0][0] for kv in combo)
        g = tuple(kv[0][1] for kv in combo)
        comp[(f, g)] = tuple(kv[1] for kv in combo)
    return FinCat(objs, mors, src, tgt, ident, comp, check=False)


def opposite(c: FinCat) -> FinCat:
    return FinCat(c.objects, c.morphisms, c.tgt, c.src, c.ident,
                  {(g, f): h for (f, g), h in c.comp.items()}, check=False)


def pi0(c: FinCat) -> list[frozenset]:
    """Connected components (zig-zag classes), ordered by first object."""
    parent = {x: x for x in c.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in c.morphisms:
        a, b = find(c.src[f]), find(c.tgt[f])
        if a != b:
            if c.obj_index(a) < c.obj_index(b):
                parent[b] = a
            else:
                parent[a] = b
    groups: dict = {}
    for x in c.objects:
        groups.setdefault(find(x), []).append(x)
    return [frozenset(v) for v in groups.values()]


def component_map(c: FinCat) -> dict:
    """Object -> index of its connected component in ``pi0(c)``."""
    return {x: i for i, comp in enumerate(pi0(c)) for x in comp}


# -- functors and natural transformations ------------------------------------

def enumerate_functors(c: FinCat, d: FinCat) -> list[FinFunctor]:
    """All functors c -> d, by backtracking with early composition checks.

    Object images are chosen first (in object order), then morphism images;
    each morphism is checked against every composite whose factors are
    already assigned.
    """
    objs, mors = c.objects, c.morphisms
    results = []
    # composites grouped by the morphism that completes them in index order
    checks: dict = {f: [] for f in mors}
    idx = c._mindex
    for (f, g), h in c.comp.items():
        last = max((f, g, h), key=idx.__getitem__)
        checks[last].append((f, g, h))
    ob: dict = {}
    mor: dict = {}

    def assign_mors(i):
        if i == len(mors):
            results.append(FinFunctor(c, d, ob, mor, check=False))
            return
        f = mors[i]
        a, b = ob[c.src[f]], ob[c.tgt[f]]
        if c.is_identity(f):
            cands = [d.ident[a]]
        else:
            cands = d.hom(a, b)
        for g in cands:
            mor[f] = g
            if all(d.comp[(mor[x], mor[y])] == mor[z] for x, y, z in checks[f]):
                assign_mors(i + 1)
        mor.pop(f, None)

    def assign_obs(i):
        if i == len(objs):
            assign_mors(0)
            return
        for y in d.objects:
            ob[objs[i]] = y
            if all(d.hom(ob[c.src[f]], ob[c.tgt[f]]) for f in c.morphisms
                   if c.src[f] in ob and c.tgt[f] in ob):
                assign_obs(i + 1)
        ob.pop(objs[i], None)

    assign_obs(0)
    results.sort(key=lambda F: _sort_key(F.key(), c, d))
    return results


def _sort_key(key, c, d):
    obs, ms = key
    return (tuple(d.obj_index(y) for y in obs), tuple(d.mor_index(g) for g in ms))


def functor_cat(c: FinCat, d: FinCat) -> FinCat:
    """Fun(c, d): functors as objects, natural transformations as morphisms.

    Object ids are functor keys ``(object images, morphism images)``; a
    morphism id is ``(source key, target key, components)`` with components
    listed in c's object order.  Composition is vertical composition.
    """
    functors = enumerate_functors(c, d)
    keys = [F.key() for F in functors]
    fmap = dict(zip(keys, functors))
    nat = []
    if d.is_posetal():
        # into a poset a transformation exists iff F <= G pointwise, and is unique
        for F, kF in zip(functors, keys):
            for G, kG in zip(functors, keys):
                comps = []
                for x in c.objects:
                    h = d.between(F.ob[x], G.ob[x])
                    if not h:
                        break
                    comps.append(h[0])
                else:
                    nat.append((kF, kG, tuple(comps)))
    else:
        for F, kF in zip(functors, keys):
            for G, kG in zip(functors, keys):
                nat.extend((kF, kG, comps) for comps in _natural_transformations(c, d, F, G))
    src = {t: t[0] for t in nat}
    tgt = {t: t[1] for t in nat}
    ident = {k: (k, k, tuple(d.ident[fmap[k].ob[x]] for x in c.objects)) for k in keys}
    by_src: dict = {}
    for t in nat:
        by_src.setdefault(t[0], []).append(t)
    comp = {}
    for t in nat:
        for u in by_src[t[1]]:
            comp[(t, u)] = (t[0], u[1], tuple(d.comp[(a, b)] for a, b in zip(t[2], u[2])))
    return FinCat(keys, nat, src, tgt, ident, comp, check=False)


def _natural_transformations(c, d, F, G):
    objs = c.objects
    out = []
    comps: list = []

    def rec(i):
        if i == len(objs):
            out.append(tuple(comps))
            return
        x = objs[i]
        for a in d.hom(F.ob[x], G.ob[x]):
            comps.append(a)
            ok = True
            # naturality for every morphism between already-assigned objects
            for f in c.morphisms:
                s, t = c.src[f], c.tgt[f]
                si, ti = c.obj_index(s), c.obj_index(t)
                if max(si, ti) != i:
                    continue
                if d.comp[(comps[si], G.mor[f])] != d.comp[(F.mor[f], comps[ti])]:
                    ok = False
                    break
            if ok:
                rec(i + 1)
            comps.pop()

    rec(0)
    return out


def functor_from_key(c: FinCat, d: FinCat, key) -> FinFunctor:
    obs, ms = key
    return FinFunctor(c, d, dict(zip(c.objects, obs)), dict(zip(c.morphisms, ms)), check=False)


def evaluate(c: FinCat, d: FinCat, x) -> FinFunctor:
    """Evaluation functor Fun(c, d) -> d at the object x of c."""
    fc = functor_cat(c, d)
    i = c.obj_index(x)
    return FinFunctor(fc, d, {k: k[0][i] for k in fc.objects},
                      {t: t[2][i] for t in fc.morphisms}, check=False)


def fincat_iso(c: FinCat, d: FinCat) -> Optional[FinFunctor]:
    """An isomorphism of categories c -> d, or None."""
    if (len(c.objects), len(c.morphisms)) != (len(d.objects), len(d.morphisms)):
        return None
    from .twocat import locally_discrete, iso_two_cats
    pair = iso_two_cats(locally_discrete(c), locally_discrete(d))
    if pair is None:
        return None
    F = pair[0]
    ob = {x: F.obj(x) for x in c.objects}
    mor = {f: F.cell1(c.src[f], c.tgt[f], f) for f in c.morphisms}
    return FinFunctor(c, d, ob, mor)
