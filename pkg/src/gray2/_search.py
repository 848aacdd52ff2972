"""Pure-Python backtracking kernel for 2-functor enumeration.

The program is a flat integer encoding (see ``search.compile_program``):
variables are source objects, 1-cells and 2-cells; each step either branches
over target candidates or derives the variable from a composition fact.
``_csearch`` implements the same loop in Cython.
"""

# step kinds
BR_OBJ, BR_C1, BR_C2, DERIVE = 0, 1, 2, 3
# fact kinds
F_ID1, F_ID2, F_V, F_H1, F_H2, F_S1, F_T1, F_S2, F_T2 = range(9)


def _lookup(kind, x, y, T):
    if kind == F_ID1:
        return T["id1"][x]
    if kind == F_ID2:
        return T["id2"][x]
    if kind == F_S1:
        return T["src1"][x]
    if kind == F_T1:
        return T["tgt1"][x]
    if kind == F_S2:
        return T["src2"][x]
    if kind == F_T2:
        return T["tgt2"][x]
    if kind == F_V:
        if T["src2"][y] != T["tgt2"][x]:
            return -1
        return T["vtab"][T["voff"][x] + T["outpos2"][y]]
    if kind == F_H1:
        off = T["poff1"][T["homid1"][x] * T["nhom"] + T["homid1"][y]]
        if off < 0:
            return -1
        return T["h1tab"][off + T["loc1"][x] * T["hsize1"][T["homid1"][y]] + T["loc1"][y]]
    off = T["poff2"][T["homid2"][x] * T["nhom"] + T["homid2"][y]]
    if off < 0:
        return -1
    return T["h2tab"][off + T["loc2"][x] * T["hsize2"][T["homid2"][y]] + T["loc2"][y]]


def run(P, T, limit, budget, injective):
    """Return (solutions, nodes).  Raises OverflowError when over budget."""
    P = {k: (v.tolist() if hasattr(v, "tolist") else v) for k, v in P.items()}
    T = {k: (v.tolist() if hasattr(v, "tolist") else v) for k, v in T.items()}
    nvars = P["nvars"]
    nsteps = P["nsteps"]
    svar, skind, sa, sb, sfact = P["svar"], P["skind"], P["sa"], P["sb"], P["sfact"]
    cstart, checks = P["cstart"], P["checks"]
    fk, fo, f1, f2 = P["fkind"], P["fout"], P["fin1"], P["fin2"]
    vlevel, vcol = P["vlevel"], P["vcolor"]
    tcol = (T["col0"], T["col1"], T["col2"])
    nt0 = T["n0"]
    hstart, hlist = T["hstart"], T["hlist"]
    ostart, olist = T["ostart"], T["olist"]
    used = ([0] * T["n0"], [0] * T["n1"], [0] * T["n2"])

    val = [-1] * nvars
    pos = [0] * (nsteps + 1)
    end = [0] * (nsteps + 1)
    sols = []
    nodes = 0
    if nsteps == 0:
        return [[]], 0

    def candidate_range(s):
        k = skind[s]
        if k == BR_OBJ:
            return 0, nt0
        if k == BR_C1:
            h = val[sa[s]] * nt0 + val[sb[s]]
            return hstart[h], hstart[h + 1]
        if k == BR_C2:
            c = val[sa[s]]
            return ostart[c], ostart[c + 1]
        return 0, 1

    depth = 0
    pos[0], end[0] = candidate_range(0)
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
            x = _lookup(fk[f], val[f1[f]], val[f2[f]] if f2[f] >= 0 else -1, T)
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
            r = _lookup(fk[f], val[f1[f]], val[f2[f]] if f2[f] >= 0 else -1, T)
            if r != val[fo[f]]:
                ok = False
                break
        if not ok:
            val[v] = -1
            continue
        if injective:
            used[lev][x] = 1
        if s + 1 == nsteps:
            sols.append(list(val))
            if injective:
                used[lev][x] = 0
            val[v] = -1
            if limit > 0 and len(sols) >= limit:
                return sols, nodes
            continue
        depth = s + 1
        pos[depth], end[depth] = candidate_range(depth)
    return sols, nodes
