"""``gray2`` command line: build, dump and verify.

Exit codes: 0 everything passed, 1 some check failed, 2 bad input or bound
exceeded, 3 a search ran out of budget.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .poset import PosetError, max_chain_poset, shuffle_covers
from .search import BudgetExceeded, default_budget
from .theta2 import Theta2Error, parse_obj

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BOUND = 6
CONFIG_KEYS = ("bound", "budget", "probes", "corrupt", "format")


class UsageError(ValueError):
    pass


@dataclass
class RunReport:
    command: list
    checks: list = field(default_factory=list)      # suites.Check
    cardinalities: dict = field(default_factory=dict)
    seconds: Optional[float] = None
    status: Optional[str] = None                     # overrides the pass/fail status
    error: Optional[str] = None

    @property
    def ok(self):
        return self.status is None and all(c.ok for c in self.checks)

    def state(self):
        return self.status or ("pass" if self.ok else "fail")

    def exit_code(self):
        return {"pass": EXIT_OK, "fail": EXIT_FAIL, "budget-exceeded": EXIT_BUDGET}.get(
            self.state(), EXIT_USAGE)

    def to_json(self):
        d = {"command": self.command, "status": self.state(),
             "checks": [c.to_json() for c in self.checks],
             "cardinalities": self.cardinalities}
        if self.error:
            d["error"] = self.error
        if self.seconds is not None:
            d["seconds"] = round(self.seconds, 3)
        return d

    def to_text(self):
        out = ["$ gray2 " + " ".join(self.command)]
        for c in self.checks:
            out += c.lines()
        for k, v in self.cardinalities.items():
            out.append(f"{k}: {v}")
        if self.error:
            out.append(f"error: {self.error}")
        tail = f"{self.state().upper()}: {sum(c.ok for c in self.checks)}/{len(self.checks)} checks"
        if self.seconds is not None:
            tail += f" in {self.seconds:.2f}s"
        out.append(tail)
        return "\n".join(out)


# -- configuration --------------------------------------------------------------

def read_config(path: str) -> dict:
    """key = value lines; ``#`` comments; an optional ``[gray2]`` header."""
    with open(path) as fh:
        text = fh.read()
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    if not text.lstrip().startswith("["):
        text = "[gray2]\n" + text
    cp.read_string(text)
    sect = cp["gray2"] if cp.has_section("gray2") else cp[cp.sections()[0]]
    unknown = set(sect) - set(CONFIG_KEYS)
    if unknown:
        raise UsageError(f"unknown config keys: {sorted(unknown)}")
    return {k: v.strip().strip('"') for k, v in sect.items()}


def resolve(args) -> argparse.Namespace:
    """Flags override the config file; GRAY2_BUDGET is the budget fallback."""
    for key in CONFIG_KEYS + ("config", "no_timing"):
        if not hasattr(args, key):
            setattr(args, key, None)
    conf = read_config(args.config) if args.config else {}
    for key in CONFIG_KEYS:
        if getattr(args, key) is None and key in conf:
            setattr(args, key, conf[key])
    args.format = args.format or "text"
    if args.format not in ("json", "dot", "text"):
        raise UsageError(f"unknown format {args.format!r}")
    args.bound = int(args.bound) if args.bound is not None else DEFAULT_BOUND
    args.budget = int(float(args.budget)) if args.budget is not None else default_budget()
    if args.corrupt in ("", "none"):
        args.corrupt = None
    if args.corrupt not in (None, "collapse", "localize"):
        raise UsageError(f"unknown corruption mode {args.corrupt!r}")
    if isinstance(args.probes, str):
        args.probes = [p.strip() for p in args.probes.split(";") if p.strip()]
    return args


def theta(text: str, bound: int):
    try:
        I = parse_obj(text)
    except Theta2Error as e:
        raise UsageError(str(e)) from None
    if max((I.k,) + I.ns) > bound:
        raise UsageError(f"{I} exceeds the bound {bound}")
    return I


def bounded(n: int, bound: int, what: str) -> int:
    if n < 0:
        raise UsageError(f"{what} must be nonnegative")
    if n > bound:
        raise UsageError(f"{what}={n} exceeds the bound {bound}")
    return n


# -- output ---------------------------------------------------------------------

def emit(args, payload: dict, dot: str, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=1))
    elif args.format == "dot":
        print(dot)
    else:
        print(text)


def _summary(X):
    return {"objects": len(X.objects), "1-cells": len(X.flat().cells1),
            "2-cells": len(X.flat().cells2)}


def dump_twocat(args, X, name):
    emit(args, {"name": name, "summary": _summary(X), "twocat": X.to_json()},
         X.to_dot(name), name + "\n" + X.to_text())
    return EXIT_OK


# -- commands -------------------------------------------------------------------

def cmd_shuffles(args):
    k, m = bounded(args.k, args.bound, "k"), bounded(args.m, args.bound, "m")
    P = max_chain_poset(k, m)
    covers = shuffle_covers(k, m)
    lines = [f'digraph "MaxCh({k},{m})" {{']
    lines += [f"  {json.dumps(x)};" for x in P.elements]
    lines += [f"  {json.dumps(a)} -> {json.dumps(b)};" for a, b in covers]
    lines.append("}")
    text = [f"MaxCh({k},{m}): {len(P.elements)} shuffles, {len(covers)} covers"]
    text += [f"  {a or '.'} < {b or '.'}" for a, b in covers]
    if not covers:
        text += [f"  {x or '.'}" for x in P.elements]
    emit(args, {"k": k, "m": m, "nodes": list(P.elements), "edges": [list(e) for e in covers]},
         "\n".join(lines), "\n".join(text))
    return EXIT_OK


def cmd_gray(args):
    from .gray import gray_colax, gray_lax
    I, J = theta(args.I, args.bound), theta(args.J, args.bound)
    X = (gray_lax if args.lax else gray_colax)(I, J)
    return dump_twocat(args, X, f"{I} (x){'lax' if args.lax else 'colax'} {J}")


def cmd_phi(args):
    from .phi import phi_obj
    I = theta(args.I, args.bound)
    m = bounded(args.M, args.bound, "m")
    return dump_twocat(args, phi_obj(I, m), f"Phi({I},[{m}])")


def cmd_cotensor(args):
    from .twocat import cotensor, realize
    I = theta(args.I, args.bound)
    n = bounded(args.N, args.bound, "n")
    return dump_twocat(args, cotensor(realize(I), n), f"{I}^[{n}]")


def cmd_nu(args):
    from .phi import nu
    I = theta(args.I, args.bound)
    m = bounded(args.M, args.bound, "m")
    F = nu(I, m)
    js = F.to_json()
    dot = [f'digraph "nu({I},[{m}])" {{']
    dot += [f"  {json.dumps(str(s))} -> {json.dumps(str(t))};" for s, t in js["cells1"]]
    dot.append("}")
    text = [f"nu: {I} (x)colax [{m}] -> Phi({I},[{m}]), a strict 2-functor"]
    text += [f"  {s} |-> {t}" for s, t in js["cells1"]]
    emit(args, {"name": f"nu({I},[{m}])", "source": _summary(F.source),
                "target": _summary(F.target), "functor": js}, "\n".join(dot), "\n".join(text))
    return EXIT_OK


def cmd_localize(args):
    from .fincat import fincat_iso, product_cat
    from .gray import gray_colax
    from .twocat import localize_2morphisms, realize
    I, J = theta(args.I, args.bound), theta(args.J, args.bound)
    L = localize_2morphisms(gray_colax(I, J))
    prod = product_cat(localize_2morphisms(realize(I)), localize_2morphisms(realize(J)))
    iso = fincat_iso(L, prod) is not None
    dot = [f'digraph "L({I} (x) {J})" {{']
    dot += [f"  {json.dumps(str(L.src[f]))} -> {json.dumps(str(L.tgt[f]))};"
            for f in L.non_identity_morphisms()]
    dot.append("}")
    text = (f"localization of {I} (x)colax {J}: {len(L.objects)} objects, "
            f"{len(L.morphisms)} morphisms; isomorphic to the product: {iso}")
    emit(args, {"name": f"L({I} (x) {J})", "category": L.to_json(), "iso_to_product": iso},
         "\n".join(dot), text)
    return EXIT_OK if iso else EXIT_FAIL


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _twocat_from(data):
    from .twocat import TwoCat
    return TwoCat.from_json(data.get("twocat", data))


def cmd_mates_find(args):
    from .mates import find_adjunctions
    X = _twocat_from(_load(args.file))
    adjs = find_adjunctions(X)
    text = [f"{len(adjs)} adjunctions"]
    text += [f"  {a.l} -| {a.r}  ({a.A} <-> {a.B}), unit {a.unit}, counit {a.counit}"
             for a in adjs]
    dot = ["digraph adjunctions {"]
    dot += [f"  {json.dumps(str(a.A))} -> {json.dumps(str(a.B))} [label={json.dumps(str(a.l))}];"
            for a in adjs]
    dot.append("}")
    emit(args, {"count": len(adjs), "adjunctions": [a.to_json() for a in adjs]},
         "\n".join(dot), "\n".join(text))
    return EXIT_OK


def cmd_mates_mate(args):
    from .mates import AdjunctionData, MateError, Square2, mate
    data = _load(args.file)
    X = _twocat_from(data["ambient"])
    try:
        top = AdjunctionData.from_json(X, data["top_adj"])
        bottom = AdjunctionData.from_json(X, data["bottom_adj"])
        sq = Square2.from_json(X, data["square"])
        out = mate(sq, top, bottom)
        back = mate(out, top, bottom)
    except MateError as e:
        raise UsageError(str(e)) from None
    involution = back.key() == sq.key()
    js = out.to_json()
    text = "\n".join([f"mate ({out.direction}):"] + [f"  {k}: {v}" for k, v in js.items()]
                     + [f"  mate of mate equals the input: {involution}"])
    dot = (f'digraph mate {{ "{js["x0"]}" -> "{js["x1"]}"; "{js["y0"]}" -> "{js["y1"]}"; '
           f'"{js["x0"]}" -> "{js["y0"]}"; "{js["x1"]}" -> "{js["y1"]}"; }}')
    emit(args, {"mate": js, "involution": involution}, dot, text)
    return EXIT_OK if involution else EXIT_FAIL


def cmd_verify(args):
    from .probe import default_probes, select_probes
    from .suites import SuiteConfig, run_suite
    report = RunReport(command=args.argv)
    t0 = time.perf_counter()
    try:
        probes = select_probes(default_probes(), args.probes)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    cfg = SuiteConfig(probes, budget=args.budget, corrupt=args.corrupt)
    try:
        for name, (checks, secs) in run_suite(args.suite, cfg).items():
            report.checks += checks
            report.cardinalities[f"{name}.checks"] = len(checks)
            if not args.no_timing:
                report.cardinalities[f"{name}.seconds"] = round(secs, 3)
    except BudgetExceeded as e:
        report.status = "budget-exceeded"
        report.error = f"{e} (explored {e.nodes} nodes)"
    report.cardinalities["probes"] = len(probes)
    if not args.no_timing:
        report.seconds = time.perf_counter() - t0
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True, indent=1))
    else:
        print(report.to_text())
    return report.exit_code()


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS so that a flag given before the subcommand is not reset after it
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "dot", "text"))
    common.add_argument("--bound", type=int,
                        help=f"largest k, n_i or m accepted (default {DEFAULT_BOUND})")
    common.add_argument("--budget", type=int,
                        help="search node budget (falls back to GRAY2_BUDGET)")
    common.add_argument("--probes",
                        help="';'-separated probe names from the default family")
    common.add_argument("--corrupt", nargs="?", const="collapse",
                        help="run the negative control: collapse (default) or localize")
    common.add_argument("--config", help="key = value file")
    common.add_argument("--no-timing", action="store_true",
                        help="omit wall times so reports are byte-stable")

    p = argparse.ArgumentParser(prog="gray2", parents=[common],
                                description="Finite strict 2-categories, Gray tensor products "
                                            "and mates.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("shuffles", parents=[common], help="the poset of (k,m)-shuffles")
    s.add_argument("k", type=int)
    s.add_argument("m", type=int)
    s.set_defaults(func=cmd_shuffles)

    s = sub.add_parser("gray", parents=[common], help="Gray tensor product of two cells")
    s.add_argument("I")
    s.add_argument("J")
    s.add_argument("--lax", action="store_true")
    s.set_defaults(func=cmd_gray)

    s = sub.add_parser("phi", parents=[common], help="Phi(I, [m])")
    s.add_argument("I")
    s.add_argument("M", type=int)
    s.set_defaults(func=cmd_phi)

    s = sub.add_parser("nu", parents=[common], help="the comparison I (x) [m] -> Phi(I, [m])")
    s.add_argument("I")
    s.add_argument("M", type=int)
    s.set_defaults(func=cmd_nu)

    s = sub.add_parser("cotensor", parents=[common], help="realize(I)^[n]")
    s.add_argument("I")
    s.add_argument("N", type=int)
    s.set_defaults(func=cmd_cotensor)

    s = sub.add_parser("localize", parents=[common],
                       help="invert the 2-cells of I (x) J and compare with the product")
    s.add_argument("I")
    s.add_argument("J")
    s.set_defaults(func=cmd_localize)

    s = sub.add_parser("mates", parents=[common], help="adjunctions and mates in a 2-category")
    msub = s.add_subparsers(dest="mates_cmd", required=True)
    f = msub.add_parser("find", parents=[common], help="all adjunctions in a 2-category file")
    f.add_argument("file")
    f.set_defaults(func=cmd_mates_find)
    f = msub.add_parser("mate", parents=[common],
                        help="mate of a square (JSON with ambient, square, top_adj, bottom_adj)")
    f.add_argument("file")
    f.set_defaults(func=cmd_mates_mate)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=("segal", "graytenscolim", "phieq", "odot", "mates", "all"))
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = argv
    try:
        resolve(args)
        return args.func(args)
    except UsageError as e:
        print(f"gray2: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PosetError, Theta2Error, OSError, json.JSONDecodeError, KeyError) as e:
        print(f"gray2: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"gray2: budget exceeded: {e} (explored {e.nodes} nodes)", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
