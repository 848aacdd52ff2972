"""Compile 2-functor search problems and dispatch to a kernel backend.

The compiled extension ``_csearch`` is used when it imports; otherwise the
pure-Python ``_search`` runs the identical loop.  Set ``GRAY2_BACKEND=python``
to force the fallback.
"""

from __future__ import annotations

import heapq
import os

import numpy as np

from . import _search
from ._search import BR_C1, BR_C2, BR_OBJ, DERIVE, F_H1, F_H2, F_ID1, F_ID2, F_S1, F_S2, F_T1, F_T2, F_V

try:
    from . import _csearch
except ImportError:  # pragma: no cover - depends on the build
    _csearch = None

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search finished."""

    def __init__(self, nodes, budget):
        super().__init__(f"search budget of {budget} nodes exceeded")
        self.nodes = nodes
        self.budget = budget


def available_backends():
    out = ["python"]
    if _csearch is not None:
        out.insert(0, "cython")
    return out


def default_backend():
    forced = os.environ.get("GRAY2_BACKEND", "").strip().lower()
    if forced in ("python", "py"):
        return "python"
    return "cython" if _csearch is not None else "python"


def default_budget():
    env = os.environ.get("GRAY2_BUDGET")
    if env:
        try:
            return int(float(env))
        except ValueError:
            pass
    return DEFAULT_BUDGET


def _facts(F):
    """All source facts as (kind, out, in1, in2) over global variable indices."""
    n0, n1 = F.n0, F.n1
    o1 = lambda c: n0 + c
    o2 = lambda c: n0 + n1 + c
    facts = []
    for c in range(F.n1):
        facts.append((F_S1, F.src1[c], o1(c), -1))
        facts.append((F_T1, F.tgt1[c], o1(c), -1))
    for c in range(F.n2):
        facts.append((F_S2, o1(F.src2[c]), o2(c), -1))
        facts.append((F_T2, o1(F.tgt2[c]), o2(c), -1))
    for x in range(n0):
        facts.append((F_ID1, o1(F.id1[x]), x, -1))
    for c in range(n1):
        facts.append((F_ID2, o2(F.id2[c]), o1(c), -1))
    for a, b, c in F.vfacts:
        facts.append((F_V, o2(c), o2(a), o2(b)))
    for a, b, c in F.h1facts:
        facts.append((F_H1, o1(c), o1(a), o1(b)))
    for a, b, c in F.h2facts:
        facts.append((F_H2, o2(c), o2(a), o2(b)))
    return facts


DERIVABLE = {F_ID1, F_ID2, F_V, F_H1, F_H2}


def compile_program(X, colors=None) -> dict:
    """Order the variables of a search from X and attach derivations and checks."""
    F = X.flat()
    n0, n1, n2 = F.n0, F.n1, F.n2
    nv = n0 + n1 + n2
    level = [0] * n0 + [1] * n1 + [2] * n2
    facts = _facts(F)
    touching = [[] for _ in range(nv)]
    missing = []
    for fi, (k, out, a, b) in enumerate(facts):
        vs = {out, a} if b < 0 else {out, a, b}
        missing.append(len(vs))
        for v in vs:
            touching[v].append(fi)
    # a 1-cell is "decomposable" if it is a composite of two non-identity 1-cells
    units = set(F.id1)
    decomposable = set()
    for a, b, c in F.h1facts:
        if a not in units and b not in units:
            decomposable.add(c)
    # likewise a 2-cell that is a vertical composite of two non-identity 2-cells
    ids2 = set(F.id2)
    vdecomp = set()
    for a, b, c in F.vfacts:
        if a not in ids2 and b not in ids2:
            vdecomp.add(c)
    # readiness: boundary variables of each cell
    bnd = {}
    for c in range(n1):
        bnd[n0 + c] = (F.src1[c], F.tgt1[c])
    for c in range(n2):
        bnd[n0 + n1 + c] = (n0 + F.src2[c], n0 + F.tgt2[c])
    waiting_on = [[] for _ in range(nv)]
    for v, (s, t) in bnd.items():
        waiting_on[s].append(v)
        if t != s:
            waiting_on[t].append(v)
    assigned = [False] * nv
    used_fact = [False] * len(facts)
    conn = [0] * n0
    ready2, ready1 = [], []
    derivable = []
    steps = []      # (var, kind, a, b, fact)
    step_checks = []

    def inputs_done(fi):
        k, out, a, b = facts[fi]
        return assigned[a] and (b < 0 or assigned[b])

    def push_ready(v):
        if assigned[v]:
            return
        s, t = bnd[v]
        if assigned[s] and assigned[t]:
            if level[v] == 2:
                c = v - n0 - n1
                deferred = F.src2[c] in decomposable or F.tgt2[c] in decomposable
                heapq.heappush(ready2, (deferred, c in vdecomp, v))
            else:
                heapq.heappush(ready1, ((v - n0) in decomposable, v))

    def assign(v, kind, a=-1, b=-1, fact=-1):
        assigned[v] = True
        steps.append((v, kind, a, b, fact))
        if fact >= 0:
            used_fact[fact] = True
        chk = []
        for fi in touching[v]:
            missing[fi] -= 1
            k, out, x, y = facts[fi]
            if missing[fi] == 0 and not used_fact[fi]:
                chk.append(fi)
            elif missing[fi] == 1 and k in DERIVABLE and not assigned[out] and not used_fact[fi]:
                derivable.append(fi)
        step_checks.append(chk)
        if level[v] == 0:
            for w in waiting_on[v]:
                push_ready(w)
            for fi in touching[v]:
                k, out, x, y = facts[fi]
                if k in (F_S1, F_T1):
                    c = x - n0
                    other = F.tgt1[c] if F.src1[c] == v else F.src1[c]
                    conn[other] += 1
        else:
            for w in waiting_on[v]:
                push_ready(w)

    while len(steps) < nv:
        fi = None
        while derivable:
            cand = derivable.pop()
            k, out, a, b = facts[cand]
            if not assigned[out] and inputs_done(cand):
                fi = cand
                break
        if fi is not None:
            assign(facts[fi][1], DERIVE, fact=fi)
            continue
        # cells hanging off composite 1-cells wait until all generators are placed
        while ready2 and assigned[ready2[0][-1]]:
            heapq.heappop(ready2)
        while ready1 and assigned[ready1[0][-1]]:
            heapq.heappop(ready1)
        free_obj = not all(assigned[:n0])
        if ready2 and not ready2[0][0]:
            v = heapq.heappop(ready2)[-1]
            assign(v, BR_C2, n0 + F.src2[v - n0 - n1], n0 + F.tgt2[v - n0 - n1])
            continue
        if ready1 and not ready1[0][0]:
            v = heapq.heappop(ready1)[-1]
            assign(v, BR_C1, F.src1[v - n0], F.tgt1[v - n0])
            continue
        if not free_obj and ready2:
            v = heapq.heappop(ready2)[-1]
            assign(v, BR_C2, n0 + F.src2[v - n0 - n1], n0 + F.tgt2[v - n0 - n1])
            continue
        if not free_obj and ready1:
            v = heapq.heappop(ready1)[-1]
            assign(v, BR_C1, F.src1[v - n0], F.tgt1[v - n0])
            continue
        best = None
        for x in range(n0):
            if not assigned[x] and (best is None or conn[x] > conn[best]):
                best = x
        if best is None:
            raise RuntimeError("variable ordering stalled")
        assign(best, BR_OBJ)

    i32 = np.int32
    cstart = [0]
    checks = []
    for chk in step_checks:
        checks.extend(chk)
        cstart.append(len(checks))
    if colors is None:
        vcolor = np.zeros(nv, dtype=i32)
    else:
        vcolor = np.asarray(colors, dtype=i32)
    fk = np.array([f[0] for f in facts], dtype=i32)
    return {
        "nvars": nv, "nsteps": len(steps), "n0": n0, "n1": n1, "n2": n2,
        "svar": np.array([s[0] for s in steps], dtype=i32),
        "skind": np.array([s[1] for s in steps], dtype=i32),
        "sa": np.array([s[2] for s in steps], dtype=i32),
        "sb": np.array([s[3] for s in steps], dtype=i32),
        "sfact": np.array([s[4] for s in steps], dtype=i32),
        "cstart": np.array(cstart, dtype=i32), "checks": np.array(checks, dtype=i32),
        "fkind": fk, "fout": np.array([f[1] for f in facts], dtype=i32),
        "fin1": np.array([f[2] for f in facts], dtype=i32),
        "fin2": np.array([f[3] for f in facts], dtype=i32),
        "vlevel": np.array(level, dtype=i32), "vcolor": vcolor,
    }


def _cell_colors(X):
    """Isomorphism-invariant colour tuples for objects, 1-cells and 2-cells."""
    F = X.flat()
    out1 = [0] * F.n1
    in1 = [0] * F.n1
    for c in range(F.n2):
        if F.src2[c] != F.tgt2[c]:
            out1[F.src2[c]] += 1
            in1[F.tgt2[c]] += 1
    hsz = {}
    for c in range(F.n1):
        k = (F.src1[c], F.tgt1[c])
        hsz[k] = hsz.get(k, 0) + 1
    oc = []
    for x in range(F.n0):
        outs = tuple(sorted(n for (s, t), n in hsz.items() if s == x and t != x))
        ins = tuple(sorted(n for (s, t), n in hsz.items() if t == x and s != x))
        oc.append((outs, ins, hsz.get((x, x), 0)))
    units = set(F.id1)
    c1 = [(oc[F.src1[c]], oc[F.tgt1[c]], out1[c], in1[c], c in units) for c in range(F.n1)]
    idents = set(F.id2)
    c2 = [(c1[F.src2[c]], c1[F.tgt2[c]], c in idents) for c in range(F.n2)]
    return oc, c1, c2


def _shared_colors(X, Y):
    cx, cy = _cell_colors(X), _cell_colors(Y)
    table = {}
    res = []
    for cols in (cx, cy):
        lev = []
        for level_cols in cols:
            lev.append([table.setdefault(c, len(table)) for c in level_cols])
        res.append(lev)
    return res


def search(X, Y, budget=None, limit=0, injective=False, backend=None) -> np.ndarray:
    """Rows of target indices (objects, 1-cells, 2-cells), canonically sorted."""
    from .twocat import target_tables
    budget = default_budget() if budget is None else int(budget)
    backend = backend or default_backend()
    if injective:
        (x0, x1, x2), (y0, y1, y2) = _shared_colors(X, Y)
        P = compile_program(X, colors=x0 + x1 + x2)
        T = dict(target_tables(Y))
        T["col0"], T["col1"], T["col2"] = (np.array(c, dtype=np.int32) for c in (y0, y1, y2))
    else:
        P = compile_program(X)
        T = dict(target_tables(Y))
        T["col0"] = np.zeros(T["n0"], dtype=np.int32)
        T["col1"] = np.zeros(T["n1"], dtype=np.int32)
        T["col2"] = np.zeros(T["n2"], dtype=np.int32)
    nv = P["nvars"]
    if nv > 0 and T["n0"] == 0:
        return np.zeros((0, nv), dtype=np.int32)
    try:
        if backend == "cython":
            if _csearch is None:
                raise RuntimeError("compiled backend not available")
            sols, nodes = _csearch.run(P, T, int(limit), budget, bool(injective))
        else:
            sols, nodes = _search.run(P, T, int(limit), budget, bool(injective))
    except OverflowError as e:
        raise BudgetExceeded(e.args[0] if e.args else budget + 1, budget) from None
    arr = np.asarray(sols, dtype=np.int32).reshape(len(sols), nv)
    if len(arr) > 1:
        order = np.lexsort(arr.T[::-1])
        arr = arr[order]
    return arr
