"""Finite posets, lattice paths and the shuffle posets MaxCh([k] x [m]).

Shuffle orientation: a path is a string over ``H`` (step in the first
coordinate) and ``V`` (step in the second).  The elementary covering move
replaces an adjacent ``VH`` by ``HV`` going *down*, so ``H*k V*m`` is the
least element and ``V*m H*k`` the greatest.  Flip ``SHUFFLE_H_FIRST_IS_LEAST``
to get the dual convention everywhere.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Optional

import numpy as np

SHUFFLE_H_FIRST_IS_LEAST = True


class PosetError(ValueError):
    pass


class FinPoset:
    """A finite poset on an explicit list of element ids.

    ``leq`` may be given as any iterable of pairs; it is closed under nothing,
    so it must already be reflexive, antisymmetric and transitive.
    """

    __slots__ = ("elements", "_index", "_leq")

    def __init__(self, elements: Iterable[Hashable], leq: Iterable[tuple], check: bool = True):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise PosetError("duplicate element ids")
        self._leq = frozenset((a, b) for a, b in leq)
        if check:
            self._validate()

    def _validate(self):
        els = self.elements
        for a, b in self._leq:
            if a not in self._index or b not in self._index:
                raise PosetError(f"relation mentions unknown element {(a, b)!r}")
        for a in els:
            if (a, a) not in self._leq:
                raise PosetError(f"not reflexive at {a!r}")
        up = {a: {b for b in els if (a, b) in self._leq} for a in els}
        for a in els:
            for b in up[a]:
                if a != b and a in up[b]:
                    raise PosetError(f"not antisymmetric: {a!r}, {b!r}")
                if not up[b] <= up[a]:
                    raise PosetError(f"not transitive through {b!r}")

    @classmethod
    def from_covers(cls, elements, covers) -> "FinPoset":
        """Reflexive-transitive closure of a cover (or any generating) relation."""
        elements = tuple(elements)
        succ = {e: set() for e in elements}
        for a, b in covers:
            succ[a].add(b)
        leq = set()
        for a in elements:
            seen = {a}
            stack = [a]
            while stack:
                x = stack.pop()
                for y in succ[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            leq.update((a, b) for b in seen)
        return cls(elements, leq)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]

    def le(self, a, b) -> bool:
        return (a, b) in self._leq

    def pairs(self):
        """All pairs a <= b, in canonical (element-order) order."""
        return [(a, b) for a in self.elements for b in self.elements if (a, b) in self._leq]

    def strict_pairs(self):
        return [(a, b) for a, b in self.pairs() if a != b]

    def covers(self):
        out = []
        for a, b in self.strict_pairs():
            if not any(self.le(a, c) and self.le(c, b) for c in self.elements if c != a and c != b):
                out.append((a, b))
        return out

    def minimal(self):
        return [a for a in self.elements if not any(self.le(b, a) and b != a for b in self.elements)]

    def maximal(self):
        return [a for a in self.elements if not any(self.le(a, b) and b != a for b in self.elements)]

    def least(self):
        m = self.minimal()
        return m[0] if len(m) == 1 and all(self.le(m[0], b) for b in self.elements) else None

    def greatest(self):
        m = self.maximal()
        return m[0] if len(m) == 1 and all(self.le(b, m[0]) for b in self.elements) else None

    def opposite(self) -> "FinPoset":
        return FinPoset(self.elements, ((b, a) for a, b in self._leq), check=False)

    def __eq__(self, other):
        return (isinstance(other, FinPoset) and self.elements == other.elements
                and self._leq == other._leq)

    def __hash__(self):
        return hash((self.elements, self._leq))

    def __repr__(self):
        return f"FinPoset({len(self.elements)} elements, {len(self._leq)} relations)"

    def to_json(self) -> dict:
        return {"elements": [_jsonable(e) for e in self.elements],
                "leq": [[_jsonable(a), _jsonable(b)] for a, b in self.pairs()]}

    @classmethod
    def from_json(cls, data) -> "FinPoset":
        if isinstance(data, str):
            data = json.loads(data)
        return cls([_hashable(e) for e in data["elements"]],
                   [(_hashable(a), _hashable(b)) for a, b in data["leq"]])


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def _hashable(x):
    if isinstance(x, list):
        return tuple(_hashable(y) for y in x)
    return x


def ordinal_poset(n: int) -> FinPoset:
    """[n] = {0 < 1 < ... < n}."""
    if n < 0:
        raise PosetError("ordinal [n] needs n >= 0")
    return interval_poset(0, n)


def interval_poset(i: int, j: int) -> FinPoset:
    """[i, j] = {i < ... < j}; empty when i > j."""
    els = list(range(i, j + 1))
    return FinPoset(els, ((a, b) for a in els for b in els if a <= b), check=False)


def product(p: FinPoset, q: FinPoset) -> FinPoset:
    els = [(a, b) for a in p.elements for b in q.elements]
    leq = [((a, b), (c, d)) for a, c in p.pairs() for b, d in q.pairs()]
    return FinPoset(els, leq, check=False)


def antichain(n: int) -> FinPoset:
    return FinPoset(range(n), ((a, a) for a in range(n)), check=False)


# -- lattice paths ----------------------------------------------------------

def shuffles(k: int, m: int) -> list[str]:
    """All step strings with k H's and m V's, lexicographically (H < V)."""
    out = []
    for pos in itertools.combinations(range(k + m), k):
        s = ["V"] * (k + m)
        for p in pos:
            s[p] = "H"
        out.append("".join(s))
    return sorted(out)


def _down_moves(path: str):
    """Paths one elementary move below ``path``."""
    hi, lo = ("VH", "HV") if SHUFFLE_H_FIRST_IS_LEAST else ("HV", "VH")
    for i in range(len(path) - 1):
        if path[i:i + 2] == hi:
            yield path[:i] + lo + path[i + 2:]


def max_chain_poset(k: int, m: int) -> FinPoset:
    """MaxCh([k] x [m]): lattice paths (0,0) -> (k,m) ordered by shuffle moves.

    Moves generate the prefix dominance order: p <= q iff every prefix of p has
    at most as many V steps as the same prefix of q (reversed for the dual
    convention).
    """
    if k < 0 or m < 0:
        raise PosetError("grid dimensions must be nonnegative")
    els = shuffles(k, m)
    step = "V" if SHUFFLE_H_FIRST_IS_LEAST else "H"
    pref = np.cumsum(np.array([[c == step for c in p] for p in els], dtype=np.int8)
                     .reshape(len(els), k + m), axis=1)
    le = np.all(pref[:, None, :] <= pref[None, :, :], axis=2)
    a, b = np.nonzero(le)
    return FinPoset(els, ((els[i], els[j]) for i, j in zip(a.tolist(), b.tolist())), check=False)


def shuffle_covers(k: int, m: int) -> list[tuple]:
    """Cover relations of MaxCh(k, m): single elementary moves, in element order."""
    els = shuffles(k, m)
    idx = {p: i for i, p in enumerate(els)}
    out = [(lower, p) for p in els for lower in _down_moves(p)]
    return sorted(out, key=lambda c: (idx[c[0]], idx[c[1]]))


def column_tuple(path: str, start_col: int = 0) -> tuple:
    """Second-coordinate value at which each H-step of ``path`` is taken."""
    col = start_col
    out = []
    for s in path:
        if s == "H":
            out.append(col)
        else:
            col += 1
    return tuple(out)


@dataclass(frozen=True)
class LatticePath:
    """A monotone lattice path starting at ``start`` in the grid Z x Z."""

    steps: str
    start: tuple = (0, 0)

    def __post_init__(self):
        if set(self.steps) - {"H", "V"}:
            raise PosetError(f"bad path {self.steps!r}")

    @property
    def k(self) -> int:
        return self.steps.count("H")

    @property
    def m(self) -> int:
        return self.steps.count("V")

    @property
    def end(self) -> tuple:
        return (self.start[0] + self.k, self.start[1] + self.m)

    def points(self):
        i, j = self.start
        pts = [(i, j)]
        for s in self.steps:
            if s == "H":
                i += 1
            else:
                j += 1
            pts.append((i, j))
        return pts

    def __str__(self):
        return self.steps


def concat_paths(p: LatticePath, q: LatticePath) -> LatticePath:
    if p.end != q.start:
        raise PosetError(f"cannot concatenate: {p.end} != {q.start}")
    return LatticePath(p.steps + q.steps, p.start)


# -- isomorphism -------------------------------------------------------------

def poset_iso(p: FinPoset, q: FinPoset) -> Optional[dict]:
    """An order isomorphism p -> q as a dict, or None.  Deterministic."""
    if len(p) != len(q):
        return None
    if len(p.pairs()) != len(q.pairs()):
        return None

    def profile(P, x):
        return (sum(P.le(y, x) for y in P), sum(P.le(x, y) for y in P))

    pp = {x: profile(p, x) for x in p}
    qp = {y: profile(q, y) for y in q}
    if sorted(pp.values()) != sorted(qp.values()):
        return None
    order = list(p.elements)
    assign: dict = {}
    used = set()

    def rec(i):
        if i == len(order):
            return True
        x = order[i]
        for y in q.elements:
            if y in used or qp[y] != pp[x]:
                continue
            if all(p.le(x, z) == q.le(y, assign[z]) and p.le(z, x) == q.le(assign[z], y)
                   for z in order[:i]):
                assign[x] = y
                used.add(y)
                if rec(i + 1):
                    return True
                del assign[x]
                used.discard(y)
        return False

    return dict(assign) if rec(0) else None


def all_posets(n: int) -> list[FinPoset]:
    """All posets on {0..n-1} up to isomorphism, in a fixed order."""
    els = list(range(n))
    pairs = [(a, b) for a in els for b in els if a < b]
    found: list[FinPoset] = []
    # orient each unordered pair: absent, a<b, or b<a
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        rel = {(a, a) for a in els}
        for (a, b), c in zip(pairs, choice):
            if c == 1:
                rel.add((a, b))
            elif c == 2:
                rel.add((b, a))
        if not _transitive(rel, els):
            continue
        cand = FinPoset(els, rel, check=False)
        if not any(poset_iso(cand, f) is not None for f in found):
            found.append(cand)
    return found


def _transitive(rel, els):
    return all((a, c) in rel for a, b in rel for c in els if (b, c) in rel)
