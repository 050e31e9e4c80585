"""Command-line entry point.

Exit status: 0 on success, 1 when a verified statement fails, 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, analysis
from .codes import (
    ClassicalCode,
    CssCode,
    classical_distance,
    classical_soundness_exact,
    classical_soundness_sampled,
    css_distances,
    quantum_soundness_interval,
)
from .config import set_cap
from .errors import QltcError
from .io import CodeBundle, alist_write, bundle_load, bundle_save

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_PARAM_FLAGS = ("h", "h1", "h2", "q", "hx", "ell", "variant", "n")


class _Usage(Exception):
    pass


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--h", help="classical code name (rep3, hamming7, random:n=8:seed=1, ...)")
    p.add_argument("--h1", help="first factor of a classical check product")
    p.add_argument("--h2", help="second factor of a classical check product")
    p.add_argument("--q", help="quantum code name (dup:rep3, gauge:rep3, css:ones4, nested:n=8:seed=0)")
    p.add_argument("--hx", help="classical code standardized as the X side")
    p.add_argument("--ell", type=int, help="repetition length (>= 2)")
    p.add_argument("--variant", choices=["star", "line"], help="repetition variant")
    p.add_argument("--n", type=int, help="block length for random nested codes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qltclab", description="Build and verify quantum LTC constructions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--seed", type=int, default=0, help="seed for random corpus members (default 0)")
    parser.add_argument("--cap", type=int, help="enumeration cap (default: QLTC_CAP or 2^24)")
    parser.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and save it as a bundle")
    p.add_argument("family", choices=analysis.FAMILIES)
    _add_params(p)
    p.add_argument("--out", required=True, help="bundle path")

    p = sub.add_parser("analyze", help="measure parameters of a saved bundle")
    p.add_argument("bundle")
    p.add_argument("--distance", action="store_true", help="compute d_x and d_z")
    p.add_argument("--soundness", choices=["exact", "sampled"], help="soundness oracle")
    p.add_argument("--trials", type=int, default=1000, help="samples for --soundness sampled")
    p.add_argument("--locality", action="store_true", help="row/column weight profile")

    p = sub.add_parser("verify", help="check statements against exhaustive oracles")
    p.add_argument("statement", help="statement id or 'all'")
    p.add_argument("--corpus", default="standard", choices=["standard"])
    _add_params(p)
    p.add_argument("--json", action="store_true", help="one JSON report per line")

    p = sub.add_parser("sweep", help="tabulate a construction over a parameter grid")
    p.add_argument("family", choices=analysis.FAMILIES)
    p.add_argument("--grid", required=True, help="e.g. 'h=rep3,rep5;ell=2,3,4;variant=star'")
    p.add_argument("--csv", required=True, help="output path, or - for stdout")

    p = sub.add_parser("export", help="write bundle matrices as alist files")
    p.add_argument("bundle")
    p.add_argument("--format", choices=["alist"], default="alist")
    p.add_argument("--matrix", help="export only this matrix")
    p.add_argument("--out-dir", help="target directory (default: next to the bundle); - for stdout")
    return parser


def _params(args) -> dict:
    return {k: getattr(args, k) for k in _PARAM_FLAGS if getattr(args, k, None) is not None}


def _check_ell(params: dict) -> None:
    if "ell" in params and params["ell"] < 2:
        raise _Usage("--ell must be >= 2")


def _cmd_construct(args, out) -> int:
    params = _params(args)
    _check_ell(params)
    if args.family == "nested":
        params.setdefault("seed", args.seed)
    try:
        code = analysis.build_code(args.family, params)
    except KeyError as exc:
        raise _Usage(f"family {args.family!r} needs --{exc.args[0]}") from None
    meta = {
        "construction": args.family,
        "params": ";".join(f"{k}={v}" for k, v in params.items()),
        "seed": str(args.seed),
        "version": __version__,
    }
    bundle_save(CodeBundle(meta, {"h_x": code.h_x, "h_z": code.h_z}), args.out)
    print(json.dumps({"out": str(args.out), "N": code.n, "k": code.k, "m_x": code.m_x, "m_z": code.m_z}), file=out)
    return EXIT_OK


def _cmd_analyze(args, out) -> int:
    b = bundle_load(args.bundle)
    if "h_x" in b.matrices:
        code = CssCode(b.matrices["h_x"], b.matrices["h_z"])
        result = {"N": code.n, "k": code.k, "m_x": code.m_x, "m_z": code.m_z}
        if args.distance:
            result["d_x"], result["d_z"] = css_distances(code, args.cap)
        if args.soundness == "exact":
            iv = quantum_soundness_interval(code, args.cap)
            result["soundness"] = {"lower": iv.lower, "upper": iv.upper, "method": iv.method.value}
        elif args.soundness == "sampled":
            sides = {}
            for side, c in (("x", code.x_code), ("z", code.z_code)):
                iv = classical_soundness_sampled(c, args.trials, args.seed, args.cap)
                sides[side] = {"lower": iv.lower, "upper": iv.upper, "method": iv.method.value}
            result["soundness"] = sides
        mats = {"h_x": code.h_x, "h_z": code.h_z}
    else:
        (name, h), = b.matrices.items()
        c = ClassicalCode(h)
        result = {"n": c.n, "k": c.k, "m": c.m}
        if args.distance:
            result["d"] = classical_distance(c, args.cap)
        if args.soundness == "exact":
            iv = classical_soundness_exact(c, args.cap)
        elif args.soundness == "sampled":
            iv = classical_soundness_sampled(c, args.trials, args.seed, args.cap)
        if args.soundness:
            result["soundness"] = {"lower": iv.lower, "upper": iv.upper, "method": iv.method.value}
        mats = {name: h}
    if args.locality:
        result["locality"] = {k: analysis.locality_profile(m).to_dict() for k, m in mats.items()}
    print(json.dumps(analysis.render(result)), file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.statement == "all":
        reports = analysis.verify_all(seed=args.seed, threads=args.threads)
    else:
        if args.statement not in analysis.STATEMENTS:
            raise _Usage(f"unknown statement {args.statement!r}; choose from {', '.join(analysis.STATEMENTS)} or all")
        params = _params(args)
        _check_ell(params)
        if args.statement == "Lemma5-rate" and "n" in params:
            params["seeds"] = tuple(range(args.seed, args.seed + 100))
        if params:
            try:
                reports = [analysis.verify(args.statement, **params)]
            except TypeError as exc:
                raise _Usage(f"bad parameters for {args.statement}: {exc}") from None
        else:
            reports = analysis.verify_all([args.statement], seed=args.seed, threads=args.threads)
    for r in reports:
        if args.json:
            print(json.dumps(r.to_dict()), file=out)
        else:
            d = r.to_dict()
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{status} {r.statement} [{r.instance}] predicted={json.dumps(d['predicted'])} "
                f"measured={json.dumps(d['measured'])} ({d['method']})",
                file=out,
            )
    return EXIT_OK if all(r.passed is not False for r in reports) else EXIT_FAIL


def _cmd_sweep(args, out) -> int:
    grid = analysis.parse_grid(args.grid)
    if "ell" in grid and any(int(v) < 2 for v in grid["ell"]):
        raise _Usage("ell values must be >= 2")
    if args.csv == "-":
        analysis.sweep(args.family, grid, out, threads=args.threads, cap=args.cap)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            analysis.sweep(args.family, grid, fh, threads=args.threads, cap=args.cap)
    return EXIT_OK


def _cmd_export(args, out) -> int:
    b = bundle_load(args.bundle)
    names = [args.matrix] if args.matrix else list(b.matrices)
    missing = [n for n in names if n not in b.matrices]
    if missing:
        raise _Usage(f"bundle has no matrix {missing[0]!r}")
    if args.out_dir == "-":
        if len(names) != 1:
            raise _Usage("--out-dir - needs --matrix")
        alist_write(b.matrices[names[0]], out)
        return EXIT_OK
    target = Path(args.out_dir) if args.out_dir else Path(args.bundle).resolve().parent
    target.mkdir(parents=True, exist_ok=True)
    stem = Path(args.bundle).stem
    for name in names:
        path = target / f"{stem}.{name}.alist"
        with open(path, "w", encoding="utf-8") as fh:
            alist_write(b.matrices[name], fh)
        print(path, file=out)
    return EXIT_OK


_COMMANDS = {
    "construct": _cmd_construct,
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "export": _cmd_export,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.threads < 1:
        parser.print_usage(sys.stderr)
        print("qltclab: error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.cap is not None:
        set_cap(args.cap)
    try:
        return _COMMANDS[args.command](args, out)
    except (_Usage, QltcError, OSError) as exc:
        parser.print_usage(sys.stderr)
        print(f"qltclab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.cap is not None:
            set_cap(None)


if __name__ == "__main__":
    sys.exit(main())
