"""The category Theta_2: objects [k](n1,...,nk), morphisms (phi, psi_ij).

A morphism ``I = [k](n) -> J = [l](m)`` is a monotone ``phi: [k] -> [l]``
together with monotone ``psi_ij: [n_i] -> [m_j]`` for every pair with
``phi(i-1) < j <= phi(i)``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterator

__all__ = [
    "Theta2Obj", "DeltaMor", "Theta2Mor", "Theta2Error", "parse_obj", "compose", "identity",
    "classify", "factorize_inert_active", "tau", "tau_mor", "two_op_obj", "one_op_obj",
    "objects_up_to", "morphisms", "delta_maps", "C0", "C1", "C2",
]


class Theta2Error(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Theta2Obj:
    k: int
    ns: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "ns", tuple(int(n) for n in self.ns))
        if self.k < 0 or len(self.ns) != self.k or any(n < 0 for n in self.ns):
            raise Theta2Error(f"bad Theta_2 object [{self.k}]{self.ns}")

    def __str__(self):
        return f"[{self.k}](" + ",".join(map(str, self.ns)) + ")"

    def to_json(self):
        return str(self)


_OBJ_RE = re.compile(r"^\[(\d+)\]\(((?:\d+(?:,\d+)*)?)\)$")


def parse_obj(text: str) -> Theta2Obj:
    """Parse ``[k](n1,...,nk)``; whitespace is ignored.  ``[k]`` alone means all zeros."""
    s = re.sub(r"\s+", "", text)
    m = _OBJ_RE.match(s)
    if not m:
        m2 = re.match(r"^\[(\d+)\]$", s)
        if m2:
            k = int(m2.group(1))
            return Theta2Obj(k, (0,) * k)
        raise Theta2Error(f"cannot parse Theta_2 object {text!r}")
    k = int(m.group(1))
    ns = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    if len(ns) != k:
        raise Theta2Error(f"{text!r}: expected {k} entries, got {len(ns)}")
    return Theta2Obj(k, ns)


C0 = Theta2Obj(0, ())
C1 = Theta2Obj(1, (0,))
C2 = Theta2Obj(1, (1,))


@dataclass(frozen=True, order=True)
class DeltaMor:
    source: int
    target: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        v = self.values
        if len(v) != self.source + 1:
            raise Theta2Error(f"map [{self.source}]->[{self.target}] needs {self.source + 1} values")
        if any(not 0 <= x <= self.target for x in v) or any(a > b for a, b in zip(v, v[1:])):
            raise Theta2Error(f"not a monotone map into [{self.target}]: {v}")

    def __call__(self, a):
        return self.values[a]

    def then(self, other: "DeltaMor") -> "DeltaMor":
        if self.target != other.source:
            raise Theta2Error("cannot compose Delta maps")
        return DeltaMor(self.source, other.target, tuple(other.values[x] for x in self.values))

    def is_inert(self) -> bool:
        v = self.values
        return all(v[i] == v[0] + i for i in range(len(v)))

    def is_active(self) -> bool:
        return self.values[0] == 0 and self.values[-1] == self.target

    @staticmethod
    def identity(n: int) -> "DeltaMor":
        return DeltaMor(n, n, tuple(range(n + 1)))


def delta_maps(m: int, n: int) -> list[DeltaMor]:
    """All monotone maps [m] -> [n] in lexicographic order."""
    return [DeltaMor(m, n, v)
            for v in itertools.combinations_with_replacement(range(n + 1), m + 1)]


def _pairs(phi: DeltaMor):
    """Index pairs (i, j) with phi(i-1) < j <= phi(i)."""
    return [(i, j) for i in range(1, phi.source + 1)
            for j in range(phi(i - 1) + 1, phi(i) + 1)]


@dataclass(frozen=True)
class Theta2Mor:
    source: Theta2Obj
    target: Theta2Obj
    phi: DeltaMor
    psis: tuple = field(default=())   # sorted ((i, j), DeltaMor) pairs

    def __post_init__(self):
        psis = self.psis
        if isinstance(psis, dict):
            psis = psis.items()
        psis = tuple(sorted(((tuple(ij), p) for ij, p in psis), key=lambda t: t[0]))
        object.__setattr__(self, "psis", psis)
        S, T, phi = self.source, self.target, self.phi
        if phi.source != S.k or phi.target != T.k:
            raise Theta2Error("outer map has the wrong shape")
        want = _pairs(phi)
        if [ij for ij, _ in psis] != want:
            raise Theta2Error(f"psi index set {[ij for ij, _ in psis]} != {want}")
        for (i, j), p in psis:
            if p.source != S.ns[i - 1] or p.target != T.ns[j - 1]:
                raise Theta2Error(f"psi_{i},{j} has the wrong shape")

    def psi(self, i, j) -> DeltaMor:
        for ij, p in self.psis:
            if ij == (i, j):
                return p
        raise KeyError((i, j))

    @property
    def psi_dict(self) -> dict:
        return dict(self.psis)

    def column_of(self, t: int) -> int:
        """The unique i with phi(i-1) < t <= phi(i)."""
        for i in range(1, self.source.k + 1):
            if self.phi(i - 1) < t <= self.phi(i):
                return i
        raise KeyError(t)

    def is_identity(self) -> bool:
        return (self.source == self.target and self.phi == DeltaMor.identity(self.source.k)
                and all(p == DeltaMor.identity(p.source) for _, p in self.psis))

    def to_json(self) -> dict:
        return {"source": str(self.source), "target": str(self.target),
                "phi": list(self.phi.values),
                "psis": {f"{i},{j}": list(p.values) for (i, j), p in self.psis}}

    @classmethod
    def from_json(cls, data) -> "Theta2Mor":
        if isinstance(data, str):
            data = json.loads(data)
        S, T = parse_obj(data["source"]), parse_obj(data["target"])
        phi = DeltaMor(S.k, T.k, data["phi"])
        psis = {}
        for key, vals in data["psis"].items():
            i, j = (int(x) for x in key.split(","))
            psis[(i, j)] = DeltaMor(S.ns[i - 1], T.ns[j - 1], vals)
        return cls(S, T, phi, psis)

    def __str__(self):
        ps = ", ".join(f"{i}{j}:{list(p.values)}" for (i, j), p in self.psis)
        return f"{self.source} -> {self.target} phi={list(self.phi.values)} psi={{{ps}}}"


def hom_plan(f: Theta2Mor, i: int, j: int) -> tuple:
    """For the hom (i, j): pairs (position r-i-1 in the source tuple, psi_{r t} values),
    one per target column t in (phi(i), phi(j)]."""
    pd = f.psi_dict
    return tuple((f.column_of(t) - i - 1, pd[(f.column_of(t), t)].values)
                 for t in range(f.phi(i) + 1, f.phi(j) + 1))


def plan_lookup(f: Theta2Mor):
    """Memoized ``(i, j) -> hom_plan(f, i, j)``."""
    memo: dict = {}

    def get(i, j):
        p = memo.get((i, j))
        if p is None:
            p = memo[(i, j)] = hom_plan(f, i, j)
        return p

    return get


def identity(I: Theta2Obj) -> Theta2Mor:
    return Theta2Mor(I, I, DeltaMor.identity(I.k),
                     {(i, i): DeltaMor.identity(I.ns[i - 1]) for i in range(1, I.k + 1)})


def compose(g: Theta2Mor, f: Theta2Mor) -> Theta2Mor:
    """g . f"""
    if f.target != g.source:
        raise Theta2Error(f"cannot compose: {f.target} != {g.source}")
    phi = f.phi.then(g.phi)
    pf, pg = f.psi_dict, g.psi_dict
    psis = {}
    for i, t in _pairs(phi):
        j = g.column_of(t)
        psis[(i, t)] = pf[(i, j)].then(pg[(j, t)])
    return Theta2Mor(f.source, g.target, phi, psis)


def classify(f: Theta2Mor) -> dict:
    inert = f.phi.is_inert() and all(p.is_inert() for _, p in f.psis)
    active = f.phi.is_active() and all(p.is_active() for _, p in f.psis)
    return {"inert": inert, "active": active}


def factorize_inert_active(f: Theta2Mor) -> tuple[Theta2Mor, Theta2Mor]:
    """Return (active, inert) with f = inert . active."""
    phi, S = f.phi, f.source
    base = phi(0)
    length = phi(S.k) - base
    pd = f.psi_dict
    mids = []
    owner = []
    for t in range(1, length + 1):
        j = base + t
        i = f.column_of(j)
        p = pd[(i, j)]
        mids.append(p(p.source) - p(0))
        owner.append((i, j))
    M = Theta2Obj(length, tuple(mids))
    a_phi = DeltaMor(S.k, length, tuple(phi(i) - base for i in range(S.k + 1)))
    a_psis = {}
    for t, (i, j) in enumerate(owner, start=1):
        p = pd[(i, j)]
        a_psis[(i, t)] = DeltaMor(p.source, M.ns[t - 1], tuple(x - p(0) for x in p.values))
    active = Theta2Mor(S, M, a_phi, a_psis)
    e_phi = DeltaMor(length, f.target.k, tuple(base + t for t in range(length + 1)))
    e_psis = {}
    for t, (i, j) in enumerate(owner, start=1):
        p = pd[(i, j)]
        e_psis[(t, j)] = DeltaMor(M.ns[t - 1], p.target, tuple(range(p(0), p(p.source) + 1)))
    inert = Theta2Mor(M, f.target, e_phi, e_psis)
    return active, inert


def tau(k: int, n: int) -> Theta2Obj:
    return Theta2Obj(k, (n,) * k)


def tau_mor(alpha: DeltaMor, beta: DeltaMor) -> Theta2Mor:
    S = tau(alpha.source, beta.source)
    T = tau(alpha.target, beta.target)
    return Theta2Mor(S, T, alpha, {ij: beta for ij in _pairs(alpha)})


def two_op_obj(I: Theta2Obj) -> tuple[Theta2Obj, tuple]:
    """The object together with the order reversal of each inner ordinal, as value tuples.

    The reversals are not maps of Delta, so they are plain tuples here."""
    return I, tuple(tuple(range(n, -1, -1)) for n in I.ns)


def one_op_obj(I: Theta2Obj) -> Theta2Obj:
    return Theta2Obj(I.k, tuple(reversed(I.ns)))


def objects_up_to(kmax: int, nmax: int) -> list[Theta2Obj]:
    out = []
    for k in range(kmax + 1):
        for ns in itertools.product(range(nmax + 1), repeat=k):
            out.append(Theta2Obj(k, ns))
    return out


def morphisms(S: Theta2Obj, T: Theta2Obj) -> Iterator[Theta2Mor]:
    """All morphisms S -> T in a fixed order."""
    for phi in delta_maps(S.k, T.k):
        pairs = _pairs(phi)
        choices = [delta_maps(S.ns[i - 1], T.ns[j - 1]) for i, j in pairs]
        for combo in itertools.product(*choices):
            yield Theta2Mor(S, T, phi, dict(zip(pairs, combo)))
