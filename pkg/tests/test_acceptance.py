"""The twelve acceptance criteria, each timed against its limit.

Run with ``pytest tests/test_acceptance.py -v`` (the PASS/FAIL lines appear in
the terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import time
from math import comb

import pytest

from conftest import ACCEPTANCE_LINES
from gray2.fincat import fincat_iso, from_poset, product_cat
from gray2.gray import GRAY_CASES, check_graytenscolim, gray_colax, gray_colax_of, gray_lax
from gray2.phi import check_odot_pushout, naturality_sweep, nu, phi_obj
from gray2.poset import max_chain_poset, ordinal_poset
from gray2.probe import default_probes
from gray2.suites import SUITES, SuiteConfig, run_suite, suite_mates, suite_segal
from gray2.theta2 import C1, C2, Theta2Obj, objects_up_to
from gray2.twocat import CatGraph, free_linear, is_iso, localize_2morphisms, realize, two_op

ARROW = from_poset(ordinal_poset(1))


@pytest.fixture(scope="module")
def probes():
    return default_probes()


def record(n, title, limit, fn):
    t = time.perf_counter()
    ok, detail = fn()
    secs = time.perf_counter() - t
    in_time = limit is None or secs <= limit
    status = "PASS" if ok and in_time else "FAIL"
    lim = "no limit" if limit is None else f"limit {limit}s"
    line = f"{status} criterion {n:2d}: {title} [{secs:.2f}s, {lim}] {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert in_time, line


def test_01_shuffle_counts():
    def run():
        bad = [(k, m) for k in range(7) for m in range(7)
               if len(max_chain_poset(k, m).elements) != comb(k + m, k)]
        return not bad, f"49 pairs, mismatches {bad}"
    record(1, "|MaxCh(k,m)| = binomial(k+m,k) for k,m <= 6", 1, run)


def test_02_gray_square():
    def run():
        G = gray_colax(C1, C1)
        H = G.hom((0, 0), (1, 1))
        chain = fincat_iso(H, ARROW) is not None
        others = all(len(K.objects) == 1 and len(K.morphisms) == 1
                     for k, K in G.homs.items() if k != ((0, 0), (1, 1)))
        return len(G.objects) == 4 and chain and others, \
            f"{len(G.objects)} objects, hom(00,11) {len(H.objects)}-chain"
    record(2, "colax square C1 (x) C1", 1, run)


def test_03_gray_cylinder():
    def run():
        G = gray_colax(C2, C1)
        H = G.hom((0, 0), (1, 1))
        pasting = fincat_iso(H, product_cat(ARROW, ARROW)) is not None
        lowest = H.objects[0] == ("HV", (0,), (0,))
        top = ("VH", (1,), (0,))
        top_ok = all(H.between(f, top) for f in H.objects)
        loc = fincat_iso(localize_2morphisms(G), product_cat(ARROW, ARROW)) is not None
        return len(H.objects) == 4 and pasting and lowest and top_ok and loc, \
            f"hom(00,11) has {len(H.objects)} 1-cells; localization iso to [1]x[1]: {loc}"
    record(3, "cylinder C2 (x) C1 and its localization", 5, run)


def test_04_graytenscolim(probes):
    def run():
        reps = [check_graytenscolim(c, probes) for c in GRAY_CASES]
        return all(r.ok for r in reps), \
            ", ".join(f"{c}: {'ok' if r.ok else r.first_failure().line()}"
                      for c, r in zip(GRAY_CASES, reps)) + f" ({len(probes)} probes)"
    record(4, "sq, cyl, cube gluings are wide pushouts", 120, run)


def test_05_segal(probes):
    def run():
        checks = suite_segal(SuiteConfig(probes))
        bad = [c for c in checks if not c.ok]
        return not bad and len(checks) == 40, \
            f"{len(checks)} shapes, failing: {[c.name for c in bad][:3]}"
    record(5, "[n](C1..Cn) glued from its pieces, n <= 3", 60, run)


def test_06_phi_generators():
    def run():
        a = is_iso(phi_obj(C1, 1), realize(C2))
        sq = free_linear(CatGraph([product_cat(ARROW, ARROW)]))
        b = is_iso(phi_obj(C2, 1), sq)
        return a and b, f"Phi(C1,1)=C2: {a}, Phi(C2,1)=[1]([1]x[1]): {b}"
    record(6, "Phi on the generating cells", 1, run)


def test_07_nu():
    def run():
        cases = [(I, m) for I in objects_up_to(2, 2) for m in range(3)]
        for I, m in cases:
            nu(I, m, check=True)
        count, bad = naturality_sweep(2, 2, 2)
        return bad is None, f"nu valid on {len(cases)} cases; {count} naturality squares" + \
            ("" if bad is None else f"; fails at {bad}")
    record(7, "nu is a 2-functor and natural", 60, run)


def test_08_odot(probes):
    def run():
        good = [check_odot_pushout(I, 1, probes) for I in (C1, C2)]
        bad = [check_odot_pushout(I, 1, probes, corrupt="collapse") for I in (C1, C2)]
        ok = all(r.ok for r in good) and not any(r.ok for r in bad)
        return ok, f"clean: {[r.ok for r in good]}, corrupted: {[r.ok for r in bad]}"
    record(8, "odot pushout square for C1 and C2", 30, run)


def test_09_mates():
    def run():
        checks = suite_mates(SuiteConfig([]))
        bad = [c.name for c in checks if not c.ok]
        return not bad, "; ".join(c.name for c in checks)
    record(9, "mate calculus over Pos(posets of size <= 3)", 120, run)


def test_10_duality():
    def run():
        objs = objects_up_to(2, 1)
        bad = [(str(I), str(J)) for I in objs for J in objs
               if not is_iso(two_op(gray_lax(I, J)),
                             gray_colax_of(two_op(realize(I)), two_op(realize(J)), I.k, J.k))]
        return not bad, f"{len(objs) ** 2} pairs, failing {bad[:3]}"
    record(10, "2-op of the lax product is the colax product of 2-ops", 60, run)


def test_11_localization():
    def run():
        bad = []
        for k in range(4):
            for l in range(4):
                L = localize_2morphisms(gray_colax(Theta2Obj(k, (0,) * k), Theta2Obj(l, (0,) * l)))
                P = product_cat(from_poset(ordinal_poset(k)), from_poset(ordinal_poset(l)))
                if fincat_iso(L, P) is None:
                    bad.append((k, l))
        return not bad, f"16 pairs, failing {bad}"
    record(11, "localizing [k] (x) [l] gives [k] x [l]", 10, run)


def test_12_negative_controls(probes):
    def run():
        res = run_suite("all", SuiteConfig(probes, corrupt="collapse"))
        summary, ok = [], True
        for name in SUITES:
            checks = res[name][0]
            failed = [c for c in checks if not c.ok]
            witnessed = bool(failed) and all(c.witness for c in failed)
            ok &= witnessed
            summary.append(f"{name}: {len(failed)}/{len(checks)} fail")
        return ok, ", ".join(summary)
    record(12, "every suite fails with a witness under --corrupt", None, run)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
