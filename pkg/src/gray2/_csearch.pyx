# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_search.run``; same program and table layout."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int32_t i32

cdef enum:
    BR_OBJ = 0
    BR_C1 = 1
    BR_C2 = 2
    DERIVE = 3

cdef enum:
    F_ID1 = 0
    F_ID2 = 1
    F_V = 2
    F_H1 = 3
    F_H2 = 4
    F_S1 = 5
    F_T1 = 6
    F_S2 = 7
    F_T2 = 8


cdef struct Tables:
    int n0
    int nhom
    i32* id1
    i32* id2
    i32* src1
    i32* tgt1
    i32* src2
    i32* tgt2
    i32* voff
    i32* outpos2
    i32* vtab
    i32* homid1
    i32* loc1
    i32* hsize1
    i32* poff1
    i32* h1tab
    i32* homid2
    i32* loc2
    i32* hsize2
    i32* poff2
    i32* h2tab


cdef inline int lookup(int kind, int x, int y, Tables* T) nogil:
    cdef int off
    if kind == F_ID1:
        return T.id1[x]
    if kind == F_ID2:
        return T.id2[x]
    if kind == F_S1:
        return T.src1[x]
    if kind == F_T1:
        return T.tgt1[x]
    if kind == F_S2:
        return T.src2[x]
    if kind == F_T2:
        return T.tgt2[x]
    if kind == F_V:
        if T.src2[y] != T.tgt2[x]:
            return -1
        return T.vtab[T.voff[x] + T.outpos2[y]]
    if kind == F_H1:
        off = T.poff1[T.homid1[x] * T.nhom + T.homid1[y]]
        if off < 0:
            return -1
        return T.h1tab[off + T.loc1[x] * T.hsize1[T.homid1[y]] + T.loc1[y]]
    off = T.poff2[T.homid2[x] * T.nhom + T.homid2[y]]
    if off < 0:
        return -1
    return T.h2tab[off + T.loc2[x] * T.hsize2[T.homid2[y]] + T.loc2[y]]


cdef inline i32* ptr(cnp.ndarray a):
    return <i32*> cnp.PyArray_DATA(a)


def _arr(x):
    a = np.ascontiguousarray(x, dtype=np.int32)
    if a.size == 0:
        a = np.zeros(1, dtype=np.int32)
    return a


def run(dict P, dict T, long limit, long long budget, bint injective):
    """Return (solutions, nodes); raises OverflowError past the budget."""
    cdef int nvars = P["nvars"]
    cdef int nsteps = P["nsteps"]
    if nsteps == 0:
        return [[]], 0
    keep = {}
    for name in ("svar", "skind", "sa", "sb", "sfact", "cstart", "checks", "fkind", "fout",
              "fin1", "fin2", "vlevel", "vcolor"):
        keep["P" + name] = _arr(P[name])
    for name in ("id1", "id2", "src1", "tgt1", "src2", "tgt2", "voff", "outpos2", "vtab",
              "homid1", "loc1", "hsize1", "poff1", "h1tab", "homid2", "loc2", "hsize2",
              "poff2", "h2tab", "hstart", "hlist", "ostart", "olist", "col0", "col1", "col2"):
        keep["T" + name] = _arr(T[name])
    cdef Tables tb
    tb.n0 = T["n0"]
    tb.nhom = T["nhom"]
    tb.id1 = ptr(keep["Tid1"]); tb.id2 = ptr(keep["Tid2"])
    tb.src1 = ptr(keep["Tsrc1"]); tb.tgt1 = ptr(keep["Ttgt1"])
    tb.src2 = ptr(keep["Tsrc2"]); tb.tgt2 = ptr(keep["Ttgt2"])
    tb.voff = ptr(keep["Tvoff"]); tb.outpos2 = ptr(keep["Toutpos2"]); tb.vtab = ptr(keep["Tvtab"])
    tb.homid1 = ptr(keep["Thomid1"]); tb.loc1 = ptr(keep["Tloc1"])
    tb.hsize1 = ptr(keep["Thsize1"]); tb.poff1 = ptr(keep["Tpoff1"]); tb.h1tab = ptr(keep["Th1tab"])
    tb.homid2 = ptr(keep["Thomid2"]); tb.loc2 = ptr(keep["Tloc2"])
    tb.hsize2 = ptr(keep["Thsize2"]); tb.poff2 = ptr(keep["Tpoff2"]); tb.h2tab = ptr(keep["Th2tab"])

    cdef i32* svar = ptr(keep["Psvar"])
    cdef i32* skind = ptr(keep["Pskind"])
    cdef i32* sa = ptr(keep["Psa"])
    cdef i32* sb = ptr(keep["Psb"])
    cdef i32* sfact = ptr(keep["Psfact"])
    cdef i32* cstart = ptr(keep["Pcstart"])
    cdef i32* checks = ptr(keep["Pchecks"])
    cdef i32* fk = ptr(keep["Pfkind"])
    cdef i32* fo = ptr(keep["Pfout"])
    cdef i32* f1 = ptr(keep["Pfin1"])
    cdef i32* f2 = ptr(keep["Pfin2"])
    cdef i32* vlevel = ptr(keep["Pvlevel"])
    cdef i32* vcol = ptr(keep["Pvcolor"])
    cdef i32* hstart = ptr(keep["Thstart"])
    cdef i32* hlist = ptr(keep["Thlist"])
    cdef i32* ostart = ptr(keep["Tostart"])
    cdef i32* olist = ptr(keep["Tolist"])
    cdef i32* tcol[3]
    tcol[0] = ptr(keep["Tcol0"]); tcol[1] = ptr(keep["Tcol1"]); tcol[2] = ptr(keep["Tcol2"])

    used0 = np.zeros(max(1, T["n0"]), dtype=np.int32)
    used1 = np.zeros(max(1, T["n1"]), dtype=np.int32)
    used2 = np.zeros(max(1, T["n2"]), dtype=np.int32)
    cdef i32* used[3]
    used[0] = ptr(used0); used[1] = ptr(used1); used[2] = ptr(used2)

    valarr = np.full(nvars, -1, dtype=np.int32)
    posarr = np.zeros(nsteps + 1, dtype=np.int32)
    endarr = np.zeros(nsteps + 1, dtype=np.int32)
    cdef i32* val = ptr(valarr)
    cdef i32* pos = ptr(posarr)
    cdef i32* end = ptr(endarr)

    sols = []
    cdef long long nodes = 0
    cdef int depth = 0, s, v, lev, p, k, x, f, c, r, h, b
    cdef bint ok
    cdef int nt0 = T["n0"]

    # candidate range of step 0
    k = skind[0]
    if k == BR_OBJ:
        pos[0] = 0; end[0] = nt0
    else:
        pos[0] = 0; end[0] = 1

    while depth >= 0:
        s = depth
        v = svar[s]
        lev = vlevel[v]
        if val[v] >= 0 and injective:
            used[lev][val[v]] = 0
        val[v] = -1
        if pos[s] >= end[s]:
            depth -= 1
            continue
        p = pos[s]
        pos[s] = p + 1
        k = skind[s]
        if k == BR_OBJ:
            x = p
        elif k == BR_C1:
            x = hlist[p]
        elif k == BR_C2:
            x = olist[p]
        else:
            f = sfact[s]
            b = val[f2[f]] if f2[f] >= 0 else -1
            x = lookup(fk[f], val[f1[f]], b, &tb)
            if x < 0:
                continue
        nodes += 1
        if nodes > budget:
            raise OverflowError(nodes)
        if tcol[lev][x] != vcol[v]:
            continue
        if injective and used[lev][x]:
            continue
        val[v] = x
        ok = True
        for c in range(cstart[s], cstart[s + 1]):
            f = checks[c]
            b = val[f2[f]] if f2[f] >= 0 else -1
            r = lookup(fk[f], val[f1[f]], b, &tb)
            if r != val[fo[f]]:
                ok = False
                break
        if not ok:
            val[v] = -1
            continue
        if injective:
            used[lev][x] = 1
        if s + 1 == nsteps:
            sols.append(valarr.copy())
            if injective:
                used[lev][x] = 0
            val[v] = -1
            if limit > 0 and len(sols) >= limit:
                return [a.tolist() for a in sols], nodes
            continue
        depth = s + 1
        k = skind[depth]
        if k == BR_OBJ:
            pos[depth] = 0; end[depth] = nt0
        elif k == BR_C1:
            h = val[sa[depth]] * nt0 + val[sb[depth]]
            pos[depth] = hstart[h]; end[depth] = hstart[h + 1]
        elif k == BR_C2:
            c = val[sa[depth]]
            pos[depth] = ostart[c]; end[depth] = ostart[c + 1]
        else:
            pos[depth] = 0; end[depth] = 1
    return [a.tolist() for a in sols], nodes
