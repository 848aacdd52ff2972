"""Time the 2-functor search on both backends and check they agree.

    python benchmarks/bench_search.py [--repeat N]
"""

import argparse
import time

import numpy as np

from gray2.gray import gray_colax
from gray2.mates import pos_twocat
from gray2.phi import phi_obj
from gray2.poset import ordinal_poset
from gray2.search import available_backends, search
from gray2.theta2 import parse_obj
from gray2.twocat import cotensor, realize


def cases():
    C2 = parse_obj("[1](1)")
    I = parse_obj("[2](1,1)")
    pos = pos_twocat([ordinal_poset(n) for n in range(2)])
    return [
        ("Phi([2](1,1),1) -> [2](1,1)", phi_obj(I, 1), realize(I)),
        ("C2 (x) C2 -> Pos([0]..[1])", gray_colax(C2, C2), pos),
        ("C2 (x) C1 -> C2^[1]", gray_colax(C2, parse_obj("[1](0)")), cotensor(realize(C2), 1)),
        ("[2](1,1) -> [2](1,1) (x) C1", realize(I), gray_colax(I, parse_obj("[1](0)"))),
    ]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':34} {'maps':>7} " + " ".join(f"{b:>10}" for b in backends) + "  speedup")
    for name, X, Y in cases():
        times, rows = {}, {}
        for b in backends:
            times[b], rows[b] = best_of(lambda: search(X, Y, backend=b), args.repeat)
        ref = rows[backends[-1]]
        assert all(np.array_equal(r, ref) for r in rows.values()), f"backends disagree on {name}"
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{name:34} {len(ref):7d} " + " ".join(f"{times[b]:9.4f}s" for b in backends)
              + f"  {speed:6.1f}x")


if __name__ == "__main__":
    main()
