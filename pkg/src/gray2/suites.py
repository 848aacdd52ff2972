"""The verification suites behind ``gray2 verify``.

Every suite returns a list of :class:`Check`.  With ``corrupt`` set, each check
is run against a deliberately broken input and is expected to fail with a
witness.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Optional

from .fincat import from_poset, product_cat
from .poset import all_posets, ordinal_poset

SUITES = ("segal", "graytenscolim", "phieq", "odot", "mates")


@dataclass
class Check:
    name: str
    ok: bool
    details: list = field(default_factory=list)
    witness: Optional[str] = None
    data: dict = field(default_factory=dict)

    def to_json(self):
        d = {"check": self.name, "ok": self.ok, "witness": self.witness}
        d.update(self.data)
        return d

    def lines(self):
        out = [f"{'PASS' if self.ok else 'FAIL'} {self.name}"]
        out += ["  " + s for s in self.details]
        if self.witness and not self.ok:
            out.append(f"  witness: {self.witness}")
        return out


@dataclass
class SuiteConfig:
    probes: list
    budget: Optional[int] = None
    corrupt: Optional[str] = None       # None, "collapse" or "localize"


def from_pushout(report) -> Check:
    bad = report.first_failure()
    return Check(report.name, report.ok, [r.line() for r in report.results],
                 witness=None if bad is None else f"probe {bad.probe}: {bad.witness}",
                 data={"scope": "verified against probe family",
                       "probes": [r.to_json() for r in report.results]})


def _simple(name, ok, witness=None, **data) -> Check:
    return Check(name, bool(ok), witness=None if ok else witness, data=data)


# -- segal ------------------------------------------------------------------------

def segal_shapes():
    a = from_poset(ordinal_poset(1))
    return {"[0]": from_poset(ordinal_poset(0)), "[1]": a, "[1]x[1]": product_cat(a, a)}


def suite_segal(cfg: SuiteConfig, nmax: int = 3):
    from .probe import check_segal
    shapes = segal_shapes()
    out = []
    for n in range(nmax + 1):
        for combo in itertools.product(shapes, repeat=n):
            name = f"[{n}]({','.join(combo)}) glued from its pieces"
            rep = check_segal([shapes[c] for c in combo], cfg.probes, corrupt=cfg.corrupt,
                              budget=cfg.budget, name=name)
            out.append(from_pushout(rep))
    return out


# -- gray ------------------------------------------------------------------------------

def suite_graytenscolim(cfg: SuiteConfig):
    from .gray import GRAY_CASES, check_graytenscolim
    return [from_pushout(check_graytenscolim(c, cfg.probes, corrupt=cfg.corrupt, budget=cfg.budget))
            for c in GRAY_CASES]


# -- phi -------------------------------------------------------------------------------

def _iso_check(name, X, Y) -> Check:
    from .twocat import iso_two_cats
    found = iso_two_cats(X, Y) is not None
    return _simple(name, found, witness=f"no isomorphism: sizes {X.size()} vs {Y.size()}",
                   sizes=[list(X.size()), list(Y.size())])


def suite_phieq(cfg: SuiteConfig):
    from .phi import (co_segal_inner, co_segal_outer, constant_diagram, eta_prime, phi_mor,
                      phi_obj, realize_to_phi0)
    from .probe import corrupt_cocone, verify_pushout
    from .theta2 import C1, C2, DeltaMor, identity, objects_up_to
    from .twocat import CatGraph, cotensor, evaluation, free_linear, realize

    bad = cfg.corrupt is not None
    a = from_poset(ordinal_poset(1))
    out = []
    # generator cases; the corrupted run compares against the m = 0 shapes instead
    out.append(_iso_check("Phi(C1,[1]) is C2", phi_obj(C1, 1), realize(C1 if bad else C2)))
    sq = free_linear(CatGraph([product_cat(a, a)]), name="[1]([1]x[1])")
    out.append(_iso_check("Phi(C2,[1]) is [1]([1]x[1])", phi_obj(C2, 1), realize(C2) if bad else sq))

    # eta' on the generators picks out a non-identity 2-cell; the corrupted run
    # replaces it by the constant diagram on its value at 0
    up = a.morphisms.index((0, 1))
    for I in (C1, C2):
        P = phi_obj(I, 1)
        cot = cotensor(P, 1)
        e = eta_prime(I, 1, cot)
        if bad:
            e = e.then(evaluation(P, 1, 0, cot)).then(constant_diagram(P, 1, cot))
        fl = e.source.flat()
        H = P.homs[(0, 1)]
        cells, missed = 0, []
        for n, (x, y, f) in enumerate(fl.cells1):
            if (x, y) != (0, 1):
                continue
            cells += 1
            img = cot.flat().cells1[e.f1[n]][2]
            if H.is_identity(img[1][up]):        # image of 0 -> 1 in [1]
                missed.append(f"{f} |-> identity 2-cell on {img[0][0]}")
        out.append(_simple(f"eta' on {I} picks non-identity 2-cells", not missed,
                           witness="; ".join(missed[:2]), cells=cells))

    # ev_0 . eta' agrees with Phi(id, 0) . (realize(I) = Phi(I, 0))
    cases = [(I, m) for I in objects_up_to(2, 2) for m in range(2)]
    cases += [(I, 2) for I in objects_up_to(1, 2)]
    fails = []
    for I, m in cases:
        P = phi_obj(I, m)
        cot = cotensor(P, m)
        vertex = m if bad and m > 0 else 0
        lhs = eta_prime(I, m, cot, check=False).then(evaluation(P, m, vertex, cot)).key()
        rhs = realize_to_phi0(I).then(
            phi_mor(identity(I), DeltaMor(0, m, (0,)), phi_obj(I, 0), P)).key()
        if lhs != rhs:
            fails.append(f"{I}, m={m}")
    out.append(_simple(f"ev_0 . eta' = Phi(id, d_0) on {len(cases)} cases", not fails,
                       witness="differs at " + "; ".join(fails[:3]), cases=len(cases)))

    # co-Segal decompositions of Phi
    for I in objects_up_to(2, 1):
        if I.k < 2:
            continue
        for m in range(2):
            span, cocone = co_segal_outer(I, m)
            if bad:
                cocone = corrupt_cocone(cocone, cfg.corrupt)
            out.append(from_pushout(verify_pushout(span, cocone, cfg.probes, budget=cfg.budget,
                                                   name=f"Phi({I},[{m}]) glued over [{I.k}]")))
    for n in range(2, 4):
        for m in range(2):
            span, cocone = co_segal_inner(n, m)
            if bad:
                cocone = corrupt_cocone(cocone, cfg.corrupt)
            out.append(from_pushout(verify_pushout(span, cocone, cfg.probes, budget=cfg.budget,
                                                   name=f"Phi([1]({n}),[{m}]) glued over [{n}]")))
    return out


def suite_odot(cfg: SuiteConfig):
    from .phi import check_odot_pushout
    from .theta2 import C1, C2
    return [from_pushout(check_odot_pushout(I, 1, cfg.probes, corrupt=cfg.corrupt,
                                            budget=cfg.budget)) for I in (C1, C2)]


# -- mates ---------------------------------------------------------------------------

def suite_mates(cfg: SuiteConfig):
    from . import mates as M
    bad = cfg.corrupt is not None
    out = []
    ps = [p for n in range(1, 4) for p in all_posets(n)]
    X = M.pos_twocat(ps)
    adjs = M.find_adjunctions(X)
    if bad:
        # swap in a non-posetal ambient where a counit can be perturbed
        E = M.cat_twocat([M.idempotent_monoid()])
        base = M.find_adjunctions(E)
        broken = [M.perturb_counit(a) for a in base]
        broken = [b for b in broken if b is not None]
        tri = [M.check_triangle(b) for b in broken]
        w = None
        if broken:
            tl, tr = M.triangle_composites(broken[0])
            w = (f"counit {broken[0].counit!r}: triangle composites {tl!r}, {tr!r} "
                 f"are not identities")
        out.append(_simple("triangle identities with a perturbed counit", broken and all(tri),
                           witness=w or "no perturbation available", adjunctions=len(broken)))
    else:
        tri_ok = all(M.check_triangle(a) for a in adjs)
        oracle = 0
        for i, p in enumerate(ps):
            for j, q in enumerate(ps):
                oracle += len(M.galois_pairs(p, q))
        out.append(_simple("adjunctions in Pos(posets of size <= 3) match Galois pairs",
                           tri_ok and oracle == len(adjs),
                           witness=f"found {len(adjs)}, oracle {oracle}",
                           found=len(adjs), oracle=oracle))
        rights = {}
        uniq = True
        for a in adjs:
            prev = rights.setdefault((a.A, a.B, a.l), a.r)
            uniq &= prev == a.r
        out.append(_simple("right adjoints are unique", uniq, witness="two right adjoints"))

    # mate twice is the identity; squares with invertible fillers also get the
    # unit and counit equations of the induced adjunction checked
    count, wrong = 0, None
    inv, wrong_inv = 0, None
    for ta in adjs:
        for ba in adjs:
            for d in ("colax", "lax"):
                for sq in M.squares_over(X, ta, ba, d):
                    m1 = M.mate(sq, ta, ba)
                    m2 = m1 if bad else M.mate(m1, ta, ba)
                    count += 1
                    if m2.key() != sq.key() and wrong is None:
                        wrong = f"square {sq.to_json()} came back as {m2.to_json()}"
                    if bad or d != "colax" or M.inverse_2cell(X, sq.x0, sq.y1, sq.filler) is None:
                        continue
                    inv += 1
                    wrong_inv = wrong_inv or _laxfun_failure(M, sq, ta, ba)
    # with parallel 2-cells; corrupted runs use a counit that breaks the triangles
    E = M.cat_twocat([M.idempotent_monoid()])
    eadj = M.find_adjunctions(E)
    if bad:
        eadj = [M.perturb_counit(a) or a for a in eadj]
    for ta in eadj:
        for ba in eadj:
            for sq in M.squares_over(E, ta, ba):
                if M.inverse_2cell(E, sq.x0, sq.y1, sq.filler) is None:
                    continue
                inv += 1
                wrong_inv = wrong_inv or _laxfun_failure(M, sq, ta, ba)
    out.append(_simple(f"mate of mate is the identity on {count} squares", wrong is None,
                       witness=wrong, squares=count))
    out.append(_simple(f"unit/counit equations of the mate on {inv} invertible squares",
                       wrong_inv is None, witness=wrong_inv, squares=inv))

    # pasting then mating = mating then pasting, all posets with at most two elements
    C = M.pos_twocat([p for n in range(1, 3) for p in all_posets(n)])
    cadj = M.find_adjunctions(C)
    pairs, wrong = 0, None
    for t1, t2 in itertools.product(cadj, repeat=2):
        if t1.B != t2.A:
            continue
        tc = M.compose_adjunctions(t1, t2)
        for b1, b2 in itertools.product(cadj, repeat=2):
            if b1.B != b2.A:
                continue
            bc = M.compose_adjunctions(b1, b2)
            s2s = M.squares_over(C, t2, b2)
            for s1 in M.squares_over(C, t1, b1):
                for s2 in s2s:
                    if s1.right != s2.left:
                        continue
                    pairs += 1
                    lhs = M.mate(M.paste_horizontal(s1, s2), tc, bc)
                    rhs = M.paste_lax(M.mate(s2, t2, b2), M.mate(s1, t1, b1))
                    if bad:
                        rhs = M.mate(s1, t1, b1)
                    if lhs.key() != rhs.key() and wrong is None:
                        wrong = f"pasting {s1.to_json()} with {s2.to_json()}"
    out.append(_simple(f"mates respect pasting on {pairs} square pairs", wrong is None,
                       witness=wrong, pairs=pairs))

    # the same calculus where 2-cells are not determined by their boundary
    eadj = M.find_adjunctions(E)
    cnt, wrong = 0, None
    for ta in eadj:
        for ba in eadj:
            for d in ("colax", "lax"):
                for sq in M.squares_over(E, ta, ba, d):
                    cnt += 1
                    back = M.mate(M.mate(sq, ta, ba), ta, ba)
                    if bad:
                        back = M.mate(sq, ta, ba)
                    if back.key() != sq.key() and wrong is None:
                        wrong = f"square {sq.to_json()} came back as {back.to_json()}"
    out.append(_simple(f"mate involution with parallel 2-cells ({cnt} squares)", wrong is None,
                       witness=wrong, squares=cnt))
    return out


def _laxfun_failure(M, sq, ta, ba):
    rep = M.laxfunadj_unit_counit(sq, ta, ba)
    if rep.ok:
        return None
    return (f"square {sq.to_json()}: unit {rep.unit_lhs!r} vs {rep.unit_rhs!r}, "
            f"counit {rep.counit_lhs!r} vs {rep.counit_rhs!r}")


RUNNERS = {"segal": suite_segal, "graytenscolim": suite_graytenscolim, "phieq": suite_phieq,
           "odot": suite_odot, "mates": suite_mates}


def run_suite(name: str, cfg: SuiteConfig):
    names = SUITES if name == "all" else (name,)
    res = {}
    for n in names:
        t = time.perf_counter()
        checks = RUNNERS[n](cfg)
        res[n] = (checks, time.perf_counter() - t)
    return res
