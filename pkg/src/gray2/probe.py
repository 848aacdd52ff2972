"""Yoneda-probe verification of wide pushouts of finite 2-categories.

A wide span has *tips* (the pieces) and *bases* (the overlaps) with every
arrow going from a base to a tip.  A cocone gives an apex and a leg from
each tip.  For a probe X the check compares Map(apex, X) with the limit of
Map(tip, X) over the span: restriction along the legs must be a bijection.
This is a check against a finite probe family, not a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .search import search
from .theta2 import C2, objects_up_to
from .twocat import TwoCat, TwoFunctor, cotensor, realize, terminal_twocat


class DiagramError(ValueError):
    pass


@dataclass
class WideSpan:
    tips: dict                      # name -> TwoCat
    bases: dict                     # name -> TwoCat
    arrows: list                    # (base name, tip name, TwoFunctor)


@dataclass
class Cocone:
    apex: TwoCat
    legs: dict                      # tip name -> TwoFunctor into apex


@dataclass
class ProbeResult:
    probe: str
    maps_from_apex: int
    limit_size: int
    injective: bool
    surjective: bool
    witness: Optional[str] = None

    @property
    def ok(self):
        return self.injective and self.surjective

    def to_json(self):
        return {"probe": self.probe, "maps_from_apex": self.maps_from_apex,
                "limit": self.limit_size, "injective": self.injective,
                "surjective": self.surjective, "ok": self.ok, "witness": self.witness}

    def line(self):
        status = "ok" if self.ok else "FAIL"
        s = f"{status:4} {self.probe}: |Map(apex,X)|={self.maps_from_apex} |lim|={self.limit_size}"
        if self.witness:
            s += f"  witness: {self.witness}"
        return s


@dataclass
class PushoutReport:
    name: str
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def first_failure(self):
        return next((r for r in self.results if not r.ok), None)

    def to_json(self):
        return {"check": self.name, "ok": self.ok, "scope": "verified against probe family",
                "probes": [r.to_json() for r in self.results]}

    def lines(self):
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name} (verified against probe family)"
        return [head] + ["  " + r.line() for r in self.results]


def _restriction_index(F: TwoFunctor) -> np.ndarray:
    """Column indices that restrict a row over F.target to a row over F.source."""
    T = F.target.flat()
    f0 = np.asarray(F.f0, dtype=np.int64)
    f1 = np.asarray(F.f1, dtype=np.int64) + T.n0
    f2 = np.asarray(F.f2, dtype=np.int64) + T.n0 + T.n1
    return np.concatenate([f0, f1, f2])


def _row_keys(rows: np.ndarray):
    rows = np.ascontiguousarray(rows)
    return [r.tobytes() for r in rows]


def check_cocone(span: WideSpan, cocone: Cocone) -> Optional[str]:
    """None if every base has a single composite into the apex."""
    seen = {}
    for b, t, a in span.arrows:
        if t not in cocone.legs:
            raise DiagramError(f"no leg for tip {t!r}")
        comp = a.then(cocone.legs[t]).key()
        if b in seen and seen[b][1] != comp:
            return f"base {b!r}: composites through {seen[b][0]!r} and {t!r} differ"
        seen.setdefault(b, (t, comp))
    return None


def verify_pushout(span: WideSpan, cocone: Cocone, probes, budget=None, name="pushout",
                   backend=None) -> PushoutReport:
    bad = check_cocone(span, cocone)
    if bad is not None:
        raise DiagramError(f"cocone does not commute: {bad}")
    report = PushoutReport(name)
    tips = list(span.tips)
    for pname, X in probes:
        maps = {t: search(span.tips[t], X, budget=budget, backend=backend) for t in tips}
        # restriction keys along each arrow
        by_tip = {t: [] for t in tips}
        for b, t, a in span.arrows:
            by_tip[t].append((b, _row_keys(maps[t][:, _restriction_index(a)])))
        fixed_before = set()
        plans = []
        for t in tips:
            cons, new = [], {}
            for b, keys in by_tip[t]:
                if b in fixed_before:
                    cons.append((b, keys))
                else:
                    new.setdefault(b, []).append(keys)
            rows = range(len(maps[t]))
            # several arrows from one new base into this tip must agree
            alive = [i for i in rows if all(len({k[i] for k in ks}) == 1 for ks in new.values())]
            index = {}
            for i in alive:
                index.setdefault(tuple(keys[i] for _, keys in cons), []).append(i)
            plans.append((t, [b for b, _ in cons], {b: ks[0] for b, ks in new.items()}, index))
            fixed_before.update(new)
        # image of Map(apex, X)
        apex_rows = search(cocone.apex, X, budget=budget, backend=backend)
        tip_lookup = {t: {k: i for i, k in enumerate(_row_keys(maps[t]))} for t in tips}
        images = {}
        witness = None
        injective = True
        for n, row in enumerate(apex_rows):
            img = tuple(tip_lookup[t][row[_restriction_index(cocone.legs[t])].tobytes()]
                        for t in tips)
            if img in images and injective:
                injective = False
                witness = (f"apex functors #{images[img]} and #{n} restrict to the same "
                           f"family {dict(zip(tips, img))}")
            images.setdefault(img, n)
        limit_count, missing = _join(plans, images)
        surjective = len(images) == limit_count
        if surjective is False and witness is None and missing is not None:
            witness = f"compatible family {dict(zip(tips, missing))} has no extension to the apex"
        report.results.append(ProbeResult(pname, len(apex_rows), limit_count, injective,
                                          surjective, witness))
    return report


def _join(plans, images):
    """Count compatible families; also return the first one missing from ``images``."""
    count = 0
    missing = None
    base_key = {}
    chosen = []

    def rec(p):
        nonlocal count, missing
        if p == len(plans):
            count += 1
            if missing is None and tuple(chosen) not in images:
                missing = tuple(chosen)
            return
        t, cons, new, index = plans[p]
        key = tuple(base_key[b] for b in cons)
        for i in index.get(key, ()):
            chosen.append(i)
            for b, keys in new.items():
                base_key[b] = keys[i]
            rec(p + 1)
            chosen.pop()
        for b in new:
            base_key.pop(b, None)

    rec(0)
    return count, missing


# -- probe family -----------------------------------------------------------------

def default_probes(chain_max: int = 1):
    """Realized cells [k](n) with k <= 2, n_i <= 1, the cotensor of C_2 by [1],
    and the 2-category of monotone maps between chains [0]..[chain_max]."""
    from .mates import pos_twocat
    from .poset import ordinal_poset
    out = [(str(I), realize(I)) for I in objects_up_to(2, 1)]
    out.append((f"{C2}^[1]", cotensor(realize(C2), 1)))
    chains = [ordinal_poset(n) for n in range(chain_max + 1)]
    out.append((f"Pos([0]..[{chain_max}])", pos_twocat(chains)))
    return out


def select_probes(probes, names):
    if not names:
        return probes
    want = set(names)
    picked = [(n, X) for n, X in probes if n in want]
    unknown = want - {n for n, _ in picked}
    if unknown:
        raise KeyError(f"unknown probes: {sorted(unknown)}")
    return picked


def corrupt_cocone(cocone: Cocone, mode: str = "collapse") -> Cocone:
    """A cocone that still commutes but is not universal.

    ``collapse`` sends everything to the terminal 2-category; ``localize``
    keeps the apex objects and 1-cell components but identifies all 2-cells
    of each hom with its identities.
    """
    if mode == "collapse":
        T = terminal_twocat()
        legs = {t: TwoFunctor(L.source, T, [0] * len(L.f0), [0] * len(L.f1), [0] * len(L.f2),
                              check=False) for t, L in cocone.legs.items()}
        return Cocone(T, legs)
    if mode == "localize":
        from .twocat import locally_discrete, localize_2morphisms
        A = cocone.apex
        L = localize_2morphisms(A)
        Q = locally_discrete(L)
        comp = {}
        from .fincat import component_map
        for k, H in A.homs.items():
            comp[k] = component_map(H)

        def c1(x, y, f):
            return (x, y, comp[(x, y)][f])

        def c2(x, y, a):
            m = c1(x, y, A.homs[(x, y)].src[a])
            return (m, m)

        q = TwoFunctor.from_maps(A, Q, lambda x: x, c1, c2, check=False)
        return Cocone(Q, {t: leg.then(q) for t, leg in cocone.legs.items()})
    raise ValueError(f"unknown corruption mode {mode!r}")


# -- the Segal gluing of free linear 2-categories --------------------------------------

def segal_diagram(cats, name=None):
    """[n](C_1, ..., C_n) as n copies of [1](C_i) glued end to end along points."""
    from .twocat import CatGraph, free_linear
    cats = list(cats)
    whole = free_linear(CatGraph(cats), name=name or "")
    pt = terminal_twocat()
    tips, bases, arrows, legs = {}, {}, [], {}
    if not cats:
        tips["pt"] = pt
        legs["pt"] = TwoFunctor.from_maps(pt, whole, lambda x: x, lambda x, y, f: f,
                                          lambda x, y, a: a)
        return WideSpan(tips, bases, arrows), Cocone(whole, legs)
    for s, c in enumerate(cats, start=1):
        piece = free_linear(CatGraph([c]))
        tips[s] = piece
        legs[s] = TwoFunctor.from_maps(piece, whole, lambda x, s=s: x + s - 1,
                                       lambda x, y, f: f, lambda x, y, a: a)
    for s in range(1, len(cats)):
        bases[f"v{s}"] = pt
        arrows.append((f"v{s}", s, TwoFunctor.from_maps(pt, tips[s], lambda x: 1,
                                                         lambda x, y, f: (), lambda x, y, a: ())))
        arrows.append((f"v{s}", s + 1, TwoFunctor.from_maps(pt, tips[s + 1], lambda x: 0,
                                                             lambda x, y, f: (), lambda x, y, a: ())))
    return WideSpan(tips, bases, arrows), Cocone(whole, legs)


def check_segal(cats, probes, corrupt: str = None, budget=None, name=None):
    span, cocone = segal_diagram(cats, name=name)
    if corrupt:
        cocone = corrupt_cocone(cocone, corrupt)
    label = name or f"Segal gluing of [{len(cats)}](...)"
    return verify_pushout(span, cocone, probes, budget=budget,
                          name=label + (" [corrupted]" if corrupt else ""))
