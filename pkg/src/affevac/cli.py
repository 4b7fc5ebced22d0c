"""Command-line front end: ``affevac <verb> ...``.

Exit codes: 0 success, 1 verification failure or route disagreement,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .core import ParseError, Tabloid, format_tableau, parse_partition, parse_tableau, partitions
from .rigged import InvalidConfiguration, cc, enumerate_rigged, phi, theta
from .rmatrix import affine_evacuation, affine_evacuation_via_rsk, evacuation_variant
from .tableau import enumerate_domino_tableaux, tabloid_rsk
from .verify import (
    DEFAULT_NMAX,
    HARD_CEILING,
    SUITES,
    fixed_point_report,
    reports_from_csv,
    reports_to_csv,
    reports_to_json,
    reports_to_plain,
    run_suite,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_nmax() -> int:
    raw = os.environ.get("AFFEVAC_NMAX")
    if raw is None:
        return DEFAULT_NMAX
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"AFFEVAC_NMAX must be an integer, got {raw!r}") from None


def _bound(args) -> int:
    n_max = args.n_max if args.n_max is not None else _default_nmax()
    if n_max < 1:
        raise UsageError("--n-max must be positive")
    if n_max > HARD_CEILING and not args.unsafe:
        raise UsageError(f"--n-max {n_max} exceeds the ceiling {HARD_CEILING}; pass --unsafe to override")
    return n_max


def _emit(args, plain: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.format == "csv" and isinstance(data, list) and data and isinstance(data[0], dict):
        keys = list(data[0])
        print(",".join(keys))
        for row in data:
            print(",".join(str(row[k]) for k in keys))
    else:
        print(plain)


# --- verbs ---------------------------------------------------------------------

def cmd_evac(args) -> int:
    T = Tabloid.parse(args.tabloid, args.modulus)
    if T.n > _bound(args):
        raise UsageError(f"n = {T.n} exceeds --n-max {_bound(args)}")
    steps = []
    if args.variant is not None:
        results = {"variant": evacuation_variant(T, args.variant)}
    else:
        results = {}
        if args.route in ("rmatrix", "both"):
            tracer = (lambda i, rows: steps.append((i, rows))) if args.trace else None
            results["rmatrix"] = affine_evacuation(T, trace=tracer)
        if args.route in ("rsk", "both"):
            results["rsk"] = affine_evacuation_via_rsk(T)
    agree = len(set(results.values())) == 1
    lines = []
    for i, rows in steps:
        label = "flip" if i == 0 else f"R_{i}"
        lines.append(f"  {label:<5} " + "|".join(" ".join(map(str, r)) for r in rows))
    if agree:
        lines.append(str(next(iter(results.values()))))
    else:
        lines.append("routes disagree:")
        lines += [f"  {k}: {v}" for k, v in results.items()]
    data = {
        "input": str(T),
        "n": T.n,
        "results": {k: str(v) for k, v in results.items()},
        "agree": agree,
    }
    if args.trace:
        data["trace"] = [{"step": "flip" if i == 0 else i, "rows": [list(r) for r in rows]} for i, rows in steps]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if agree else EXIT_FAIL


def _table_reports(args, shapes, variants):
    cached = {}
    if args.cache and Path(args.cache).exists():
        for r in reports_from_csv(Path(args.cache).read_text()):
            cached[r.shape] = r
    out = []
    for lam in shapes:
        r = cached.get(lam)
        if r is None or any(c not in r.variant_counts for c in variants):
            r = fixed_point_report(lam, variants)
            cached[lam] = r
        out.append(r)
    if args.cache:
        allr = sorted(cached.values(), key=lambda r: (r.n, tuple(-x for x in r.shape)))
        Path(args.cache).write_text(reports_to_csv(allr))
    return out


def cmd_table(args) -> int:
    bound = _bound(args)
    target = args.target.strip()
    if "," in target or args.shape:
        shapes = [parse_partition(target)]
        n = sum(shapes[0])
    else:
        try:
            n = int(target)
        except ValueError:
            raise ParseError(f"expected n or a shape, got {target!r}", 0) from None
        shapes = list(partitions(n))
    if n > bound:
        raise UsageError(f"n = {n} exceeds --n-max {bound}")
    variants = tuple(args.variant or ())
    reports = _table_reports(args, shapes, variants)
    if args.format == "json":
        print(reports_to_json(reports))
    elif args.format == "csv":
        print(reports_to_csv(reports), end="")
    else:
        print(reports_to_plain(reports))
    return EXIT_OK if all(r.status == "ok" for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    bound = _bound(args)
    results = run_suite(args.suite, bound, args.seed)
    data = [
        {"suite": r.name, "checks": r.checks, "failures": len(r.failures),
         "gating": r.gating, "ok": r.ok}
        for r in results
    ]
    _emit(args, "\n".join(r.summary() for r in results), data)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_rsk(args) -> int:
    T = Tabloid.parse(args.tabloid, args.modulus)
    P, Q = tabloid_rsk(T)
    _emit(args, f"P: {format_tableau(P)}\nQ: {format_tableau(Q)}",
          {"input": str(T), "P": [list(r) for r in P], "Q": [list(r) for r in Q]})
    return EXIT_OK


def cmd_rigged(args) -> int:
    if args.tableau is not None:
        T = parse_tableau(args.tableau)
        rc = phi(T)
        if args.theta:
            rc = theta(rc)
        configs = [rc]
    else:
        if not (args.shape and args.content):
            raise UsageError("give a tableau, or both --shape and --content")
        lam, mu = parse_partition(args.shape), parse_partition(args.content)
        if sum(lam) > _bound(args):
            raise UsageError(f"n = {sum(lam)} exceeds --n-max {_bound(args)}")
        configs = enumerate_rigged(lam, mu)
    blocks = [f"{rc}\ncc = {cc(rc)}" for rc in configs]
    data = [dict(rc.to_dict(), cc=cc(rc)) for rc in configs]
    _emit(args, "\n\n".join(blocks), data if len(data) != 1 else data[0])
    return EXIT_OK


def cmd_dominoes(args) -> int:
    lam = parse_partition(args.shape)
    if sum(lam) > _bound(args):
        raise UsageError(f"n = {sum(lam)} exceeds --n-max {_bound(args)}")
    tabs = enumerate_domino_tableaux(lam)
    lines = [f"{len(tabs)} domino tableaux of shape {','.join(map(str, lam))}"]
    if args.list:
        for D in tabs:
            cells = "  ".join(f"{k}:{a}{b}" for k, (a, b) in enumerate(D.dominoes, start=1))
            lines.append(("mono:(0, 0)  " if D.monomino else "") + cells)
    data = {
        "shape": list(lam),
        "count": len(tabs),
    }
    if args.list:
        data["tableaux"] = [[[list(a), list(b)] for a, b in D.dominoes] for D in tabs]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--n-max", type=int, default=None,
                        help=f"enumeration bound (default $AFFEVAC_NMAX or {DEFAULT_NMAX})")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--unsafe", action="store_true", help=f"allow --n-max above {HARD_CEILING}")

    p = argparse.ArgumentParser(prog="affevac", description="Affine evacuation on tabloids.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("evac", parents=[common], help="evacuate a tabloid such as '2 3 5 7|1 4|6'")
    e.add_argument("tabloid")
    e.add_argument("--route", choices=("rmatrix", "rsk", "both"), default="rmatrix")
    e.add_argument("--trace", action="store_true", help="print each R-matrix step")
    e.add_argument("--modulus", type=int, default=None, help="n, if not the number of entries")
    e.add_argument("--variant", type=int, default=None, metavar="C",
                   help="use the variant evacuation with shift C")
    e.set_defaults(func=cmd_evac)

    t = sub.add_parser("table", parents=[common], help="fixed-point table for all shapes of n, or one shape")
    t.add_argument("target", help="n, or a shape such as 4,2")
    t.add_argument("--shape", action="store_true", help="treat a single number as a one-row shape")
    t.add_argument("--variant", type=int, action="append", metavar="C",
                   help="also count fixed points of the variant with shift C (repeatable)")
    t.add_argument("--cache", default=None, help="CSV file to read and update")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("rsk", parents=[common], help="RSK pair (P, Q) of a tabloid")
    r.add_argument("tabloid")
    r.add_argument("--modulus", type=int, default=None)
    r.set_defaults(func=cmd_rsk)

    g = sub.add_parser("rigged", parents=[common], help="rigged configuration of a tableau like '1 1 2/2 3'")
    g.add_argument("tableau", nargs="?")
    g.add_argument("--theta", action="store_true", help="apply the corigging involution")
    g.add_argument("--shape", default=None)
    g.add_argument("--content", default=None)
    g.set_defaults(func=cmd_rigged)

    d = sub.add_parser("dominoes", parents=[common], help="domino tableaux of a shape")
    d.add_argument("shape")
    d.add_argument("--list", action="store_true")
    d.set_defaults(func=cmd_dominoes)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"affevac: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, InvalidConfiguration, ValueError) as exc:
        print(f"affevac: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
