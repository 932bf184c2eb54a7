"""Command-line interface: ``qrdesigns <command> ...``.

Exit codes: 0 success/pass, 1 assertion mismatch, 2 usage error, 3 size guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from importlib.metadata import PackageNotFoundError, version

from . import parallel
from .design import assmus_mattson_max_t, design_report
from .field import FieldError
from .group import admissible_symmetry_group
from .harmonic import harmonic_report, render_enumerator
from .jacobi import classes_to_json, jacobi_distinct
from .qrcode import CodeError, GuardError, LinearCode, extended_qr_code
from .reproduce import TARGETS, run_target
from .scan import scan

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:  # pragma: no cover
        return "0+unknown"


def load_code(path: str) -> LinearCode:
    with open(path) as fh:
        code = LinearCode.loads(fh.read())
    code.name = os.path.basename(path)
    return code


def cmd_build(args):
    code = extended_qr_code(args.q, args.p)
    payload = code.dumps()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
        print(f"wrote [{code.n},{code.k}] code over GF({code.q}) to {args.out}")
    else:
        print(payload)
    return EXIT_OK, code, {"q": args.q, "p": args.p}


def cmd_wdist(args):
    code = load_code(args.file)
    wd = code.weight_distribution
    if args.json:
        print(json.dumps({"n": code.n, "k": code.k, "weight_distribution": {str(w): c for w, c in wd.items()}}))
    else:
        print(f"[{code.n},{code.k}] over GF({code.q}), {sum(wd.values())} codewords")
        for w, c in wd.items():
            print(f"{w:4d} {c:10d}")
    return EXIT_OK, code, {}


def cmd_jacobi(args):
    code = load_code(args.file)
    group = admissible_symmetry_group(code) if args.orbits else None
    classes = jacobi_distinct(code, args.t, group)
    if args.json:
        print(classes_to_json(classes))
    else:
        print(f"{len(classes)} distinct Jacobi polynomials over {sum(len(c.subsets) for c in classes)} subsets of size {args.t}")
        for i, c in enumerate(classes, 1):
            print(f"({i}) {len(c.subsets)} subsets, e.g. {list(c.subsets[0])}")
            print("    " + c.polynomial.render())
    return EXIT_OK, code, {"t": args.t, "mode": "orbits" if args.orbits else "all"}


def cmd_harmonic(args):
    code = load_code(args.file)
    G = admissible_symmetry_group(code)
    rep = harmonic_report(code, G, args.k)
    if args.json:
        print(json.dumps(rep, indent=1))
    else:
        print(f"degree {args.k} invariant harmonic space under {G.name}: dimension {len(rep['basis'])}")
        for b, e in zip(rep["basis"], rep["enumerators"]):
            coeffs = {x["weight"]: x["numerator"] if x["denominator"] == 1 else f"{x['numerator']}/{x['denominator']}" for x in e}
            print(f"  orbit values {b['orbit_values']}")
            print(f"    w_C,f = {render_enumerator(code.n, coeffs)}")
    return EXIT_OK, code, {"k": args.k}


def cmd_design(args):
    code = load_code(args.file)
    mode = "distinct" if args.distinct else "multiset"
    rep = design_report(code, tmax=args.t, modes=(mode,), with_am=False)
    if args.json:
        print(rep.dumps())
    else:
        print(f"{mode} blocks, t = {args.t}")
        for sh in rep.shells:
            v = sh.modes[mode].get(args.t)
            if v is None:
                continue
            status = f"lambda={v.lam}" if v.is_design else f"not a design, counts {v.lambda_range[0]}..{v.lambda_range[1]}"
            flag = " (complete)" if sh.complete[mode] else ""
            print(f"  l={sh.weight:3d} b={v.b:7d} {status}{flag}")
    return EXIT_OK, code, {"t": args.t, "mode": mode}


def cmd_am(args):
    code = load_code(args.file)
    am = assmus_mattson_max_t(code)
    print(json.dumps({"max_t": am.max_t, "d": am.d, "d_dual": am.d_dual, "weights": am.weights,
                      "dual_weights": am.dual_weights, "trace": am.trace}, indent=1))
    return EXIT_OK, code, {}


def cmd_report(args):
    code = load_code(args.file)
    print(design_report(code, tmax=args.tmax).dumps())
    return EXIT_OK, code, {"tmax": args.tmax}


def cmd_reproduce(args):
    names = list(TARGETS) if args.target == "all" else [args.target]
    ok = True
    for name in names:
        checks = run_target(name)
        passed = all(c.ok for c in checks)
        ok &= passed
        print(f"== {name}: {'PASS' if passed else 'FAIL'}")
        for c in checks:
            print("  " + c.line())
    return (EXIT_OK if ok else EXIT_MISMATCH), None, {"target": args.target}


def cmd_scan(args):
    qs = [int(x) for x in args.q.split(",")]

    def show(row):
        if args.json:
            return
        flags = [m for m in row.delta_s if row.exceeds(m)]
        print(f"q={row.q} p={row.p} [{row.n},{row.k}] delta/s {row.delta_s} am_t={row.am_max_t}"
              + (f"  s > delta in {flags}: shells {[row.exceptional[m] for m in flags]}" if flags else ""), flush=True)

    rows = scan(qs, args.max_len, progress=show)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows], indent=1))
    return EXIT_OK, None, {"q": qs, "max_len": args.max_len}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qrdesigns", description="Designs in extended quadratic residue codes.")
    ap.add_argument("--threads", type=int, default=None, help="worker threads (default: QRD_THREADS or all cores)")
    ap.add_argument("--manifest", help="write a run manifest JSON here")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct an extended QR code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("wdist", help="weight distribution")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wdist)

    p = sub.add_parser("jacobi", help="distinct Jacobi polynomials")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="enumerate every subset (default)")
    g.add_argument("--orbits", action="store_true", help="enumerate orbit representatives only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("harmonic", help="invariant harmonic basis and enumerators")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("design", help="direct design verification at one t")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--distinct", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("am", help="Assmus-Mattson trace")
    p.add_argument("file")
    p.set_defaults(func=cmd_am)

    p = sub.add_parser("report", help="full design report with delta/s")
    p.add_argument("file")
    p.add_argument("--tmax", type=int, default=4)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("reproduce", help="recompute a published claim")
    p.add_argument("--target", required=True, choices=list(TARGETS) + ["all"])
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("scan", help="sweep all valid (q, p) up to a length")
    p.add_argument("--q", default="3,4", help="comma-separated field orders")
    p.add_argument("--max-len", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    threads = args.threads or parallel.default_threads()
    parallel.set_threads(threads)
    start = time.perf_counter()
    try:
        status, code, params = args.func(args)
    except (CodeError, FieldError, ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as e:
        print(f"resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    if args.manifest:
        manifest = {
            "command": args.command,
            "parameters": params,
            "code": None if code is None else {
                "q": code.q, "n": code.n, "k": code.k, "weight_distribution_digest": code.fingerprint,
            },
            "tool_version": _version(),
            "wall_clock_seconds": round(time.perf_counter() - start, 3),
            "threads": threads,
        }
        with open(args.manifest, "w") as fh:
            json.dump(manifest, fh, indent=1)
    return status


if __name__ == "__main__":
    sys.exit(main())
