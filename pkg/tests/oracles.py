"""Independent brute-force counts used as test oracles.

Nothing here imports the package's search or enumeration code.
"""

import itertools
from math import comb


def monotone(m, n):
    """Monotone maps [m] -> [n] as tuples."""
    return [v for v in itertools.product(range(n + 1), repeat=m + 1)
            if all(a <= b for a, b in zip(v, v[1:]))]


def theta2_hom_count(k, ns, l, ms):
    """|Theta_2([k](ns), [l](ms))|: an outer monotone map and, for each
    phi(i-1) < j <= phi(i), a monotone map [n_i] -> [m_j]."""
    total = 0
    for phi in monotone(k, l):
        prod = 1
        for i in range(1, k + 1):
            for j in range(phi[i - 1] + 1, phi[i] + 1):
                prod *= comb(ns[i - 1] + ms[j - 1] + 1, ns[i - 1] + 1)
        total += prod
    return total


def lattice_paths(k, m):
    return ["".join(p) for p in set(itertools.permutations("H" * k + "V" * m))]


def brute_shuffle_covers(k, m):
    """Covers of MaxCh: swap one adjacent HV into VH."""
    out = set()
    for p in lattice_paths(k, m):
        for i in range(len(p) - 1):
            if p[i:i + 2] == "HV":
                out.add((p, p[:i] + "VH" + p[i + 2:]))
    return out


def poset_le(rel_pairs, elements):
    le = set(rel_pairs) | {(x, x) for x in elements}
    return lambda a, b: (a, b) in le


def galois_count(pa, pb):
    """Pairs (l, r) of monotone maps with l(x) <= y iff x <= r(y), brute force.
    Posets are given as (elements, le)."""
    (ea, lea), (eb, leb) = pa, pb

    def maps(src, lsrc, tgt, ltgt):
        out = []
        for v in itertools.product(tgt, repeat=len(src)):
            f = dict(zip(src, v))
            if all(ltgt(f[x], f[y]) for x in src for y in src if lsrc(x, y)):
                out.append(f)
        return out

    n = 0
    for l in maps(ea, lea, eb, leb):
        for r in maps(eb, leb, ea, lea):
            if all(leb(l[x], y) == lea(x, r[y]) for x in ea for y in eb):
                n += 1
    return n
