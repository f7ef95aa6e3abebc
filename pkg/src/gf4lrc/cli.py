"""Command-line interface: construct, analyze, bounds, repair, reproduce.

Exit codes: 0 success, 1 reproduction mismatch, 2 usage or parameter error,
3 enumeration budget exhausted (partial results are still emitted).
Output is deterministic JSON (sorted keys, no timestamps unless
--timestamps is given).
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import bounds, families, reproduce
from .code import DEFAULT_ENUM_BUDGET, LinearCode
from .concat import (
    DEFAULT_SUBSET_BUDGET,
    BinaryLrc,
    certify_distance,
    concatenate,
    group_subspaces,
    locality_check,
)
from .errors import BudgetExceeded, Gf4LrcError
from .gf4 import symbol_to_value
from .projective import CapSet, bundled_cap_pg3_17
from .repair import PerSymbolErasures, RandomErasures, simulate


def _emit(args, obj) -> None:
    if getattr(args, "timestamps", False):
        obj = dict(obj)
        obj["generated_at"] = datetime.now(timezone.utc).isoformat()
    print(json.dumps(obj, sort_keys=True, indent=2))


def _parse_poly(text: str) -> list[int]:
    return [symbol_to_value(tok, 4) for tok in text.split()]


def _load_input(path: str):
    """A BinaryLrc for .json inputs, else a LinearCode from matrix text."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return BinaryLrc.from_json(json.loads(text))
    return families.ingest(path)


def _build_outer(args) -> LinearCode:
    family = args.family
    if family == "mds":
        _require(args, "n1", "k1")
        return families.mds_rs(args.n1, args.k1)
    if family == "hamming4":
        _require(args, "t")
        return families.hamming4(args.t)
    if family == "hexacode":
        return families.hexacode()
    if family == "macdonald":
        _require(args, "m", "u")
        return families.macdonald(args.m, args.u, 1 if args.t is None else args.t)
    if family == "solomon_stiffler":
        _require(args, "t", "dims")
        dims = [int(x) for x in args.dims.split(",") if x]
        return families.solomon_stiffler(args.t, dims)
    if family == "cap":
        cap = (
            CapSet.from_text(Path(args.cap_file).read_text())
            if args.cap_file
            else bundled_cap_pg3_17()
        )
        return families.cap_code(cap)
    if family == "cyclic4":
        _require(args, "n", "poly")
        return families.cyclic4(args.n, _parse_poly(args.poly))
    if family == "ingest":
        _require(args, "file")
        return families.ingest(args.file)
    raise Gf4LrcError(f"unknown family {family!r}")


def _require(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise Gf4LrcError(f"family {args.family!r} requires {flags}")


def _cmd_construct(args) -> int:
    outer = _build_outer(args)
    try:
        d1 = outer.min_distance(budget=args.max_enum).d
    except BudgetExceeded:
        d1 = None
    summary = {
        "family": args.family,
        "outer": {"n": outer.n, "k": outer.k, "d": d1, "q": 4},
    }
    extras = {"kind": "generator", "n": outer.n, "k": outer.k}
    if d1 is not None:
        extras["d"] = d1
    code_text = outer.generator.to_text(extras)
    lrc_json = None
    if args.concat:
        lrc = concatenate(outer)
        if lrc.d is None:
            lrc.d = certify_distance(lrc, subset_budget=args.max_subsets).d
        summary["lrc"] = {"n": lrc.n, "k": lrc.k, "d": lrc.d, "r": 2}
        lrc_json = lrc.to_json()
    if args.output:
        base = Path(args.output)
        base.parent.mkdir(parents=True, exist_ok=True)
        code_path = base.with_suffix(".code")
        code_path.write_text(code_text)
        summary["code_file"] = str(code_path)
        if lrc_json is not None:
            lrc_path = base.with_suffix(".lrc.json")
            lrc_path.write_text(json.dumps(lrc_json, sort_keys=True, indent=2) + "\n")
            summary["lrc_file"] = str(lrc_path)
    else:
        summary["code_text"] = code_text
        if lrc_json is not None:
            summary["lrc"] = lrc_json
    _emit(args, summary)
    return 0


def _cmd_analyze(args) -> int:
    loaded = _load_input(args.path)
    is_lrc = isinstance(loaded, BinaryLrc)
    code = loaded.code if is_lrc else loaded
    report: dict = {"n": code.n, "k": code.k, "q": code.q, "is_lrc": is_lrc}
    exit_code = 0
    run_all = not (args.distance or args.weights or args.locality or args.bounds)
    d = loaded.d if is_lrc else None

    if args.distance or run_all or args.bounds:
        try:
            if is_lrc:
                cert = certify_distance(loaded, subset_budget=args.max_subsets)
            else:
                cert = code.min_distance(budget=args.max_enum)
            d = cert.d
            report["distance"] = {
                "d": cert.d,
                "method": cert.method,
                "witness": list(cert.witness),
            }
        except BudgetExceeded as exc:
            report["distance"] = {
                "error": str(exc),
                "bracket": [exc.lower, exc.upper],
            }
            exit_code = 3
    if args.weights or run_all:
        try:
            report["weights"] = code.weight_distribution(budget=args.max_enum).to_json()
        except BudgetExceeded as exc:
            report["weights"] = {"error": str(exc)}
            exit_code = 3
    if args.locality or run_all:
        r = 2 if is_lrc else (args.r or 2)
        try:
            coverage = locality_check(loaded, r, budget=args.max_enum)
            report["locality"] = {
                "r": r,
                "ok": coverage.ok,
                "uncovered": coverage.uncovered(),
                "covering": [list(c) if c else None for c in coverage.covering],
            }
            if is_lrc:
                report["groups"] = [list(g) for g in loaded.groups]
                report["group_subspace_dims"] = [
                    len(b) for b in group_subspaces(loaded)
                ]
        except BudgetExceeded as exc:
            report["locality"] = {"error": str(exc)}
            exit_code = 3
    bounds_applicable = code.q == 2 and (is_lrc or args.r is not None)
    if args.bounds or (run_all and bounds_applicable):
        r = 2 if is_lrc else args.r
        if r is None:
            raise Gf4LrcError("--bounds on a plain code needs --r")
        if code.q != 2:
            raise Gf4LrcError("bounds apply to binary codes only")
        if d is None:
            report["bounds"] = {"error": "distance unavailable within budget"}
            exit_code = max(exit_code, 3)
        else:
            kopt = bounds.kopt_from_table(args.kopt_table) if args.kopt_table else None
            report["bounds"] = bounds.classify(code.n, code.k, d, r, kopt).to_json()
    _emit(args, report)
    return exit_code


def _cmd_bounds(args) -> int:
    kopt = bounds.kopt_from_table(args.kopt_table) if args.kopt_table else None
    report = bounds.classify(args.n, args.k, args.d, args.r, kopt)
    _emit(args, report.to_json())
    return 0


def _cmd_repair(args) -> int:
    loaded = _load_input(args.path)
    if not isinstance(loaded, BinaryLrc):
        raise Gf4LrcError("repair needs an LRC JSON file (construct --concat)")
    if (args.random_t is None) == (args.prob is None):
        raise Gf4LrcError("choose exactly one of --random-t / --prob")
    model = (
        RandomErasures(args.random_t)
        if args.random_t is not None
        else PerSymbolErasures(args.prob)
    )
    report = simulate(loaded, args.trials, model, seed=args.seed)
    _emit(args, report.to_json())
    return 0


def _cmd_reproduce(args) -> int:
    try:
        items = reproduce.run(args.ids or None, heavy=args.heavy)
    except KeyError as exc:
        raise Gf4LrcError(str(exc)) from exc
    if args.json:
        _emit(args, {"items": [it.to_json() for it in items]})
    else:
        width = max(len(it.id) for it in items)
        for it in items:
            line = f"{it.id.ljust(width)}  {it.status}"
            if it.status == reproduce.MISMATCH:
                diffs = [
                    key
                    for key in it.expected
                    if it.expected[key] != it.computed.get(key)
                ]
                line += "  differs: " + ", ".join(diffs)
            print(line)
    return 1 if any(it.status == reproduce.MISMATCH for it in items) else 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_BUDGET,
                        help="codeword enumeration budget")
    parser.add_argument("--max-subsets", type=int, default=DEFAULT_SUBSET_BUDGET,
                        help="repair-group subset budget")
    parser.add_argument("--timestamps", action="store_true",
                        help="include a generation timestamp in JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf4lrc",
        description="Binary locality-2 LRCs from GF(4) outer codes: "
        "construction, analysis, bounds, repair simulation, reproduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an outer code (and optionally its LRC)")
    p.add_argument("family", choices=[
        "mds", "hamming4", "hexacode", "macdonald", "solomon_stiffler",
        "cap", "cyclic4", "ingest"])
    p.add_argument("--n1", type=int, help="outer length (mds)")
    p.add_argument("--k1", type=int, help="outer dimension (mds)")
    p.add_argument("--t", type=int, help="hamming4/macdonald/solomon_stiffler parameter")
    p.add_argument("--m", type=int, help="macdonald dimension")
    p.add_argument("--u", type=int, help="macdonald deleted-subspace dimension")
    p.add_argument("--dims", help="comma-separated deleted subspace dims")
    p.add_argument("--n", type=int, help="cyclic code length")
    p.add_argument("--poly", help="generator polynomial, ascending coefficients, e.g. '1 0 W 1 1 w 0 1'")
    p.add_argument("--cap-file", help="cap file (default: bundled 17-cap)")
    p.add_argument("--file", help="matrix file for ingest")
    p.add_argument("--concat", action="store_true", help="also emit the concatenated LRC")
    p.add_argument("--output", help="base path for .code / .lrc.json files")
    _add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("analyze", help="analyze a code or LRC file")
    p.add_argument("path")
    p.add_argument("--distance", action="store_true")
    p.add_argument("--weights", action="store_true")
    p.add_argument("--locality", action="store_true")
    p.add_argument("--bounds", action="store_true")
    p.add_argument("--r", type=int, help="locality for bounds on plain codes")
    p.add_argument("--kopt-table", help="dimension-oracle override table (n d kmax lines)")
    _add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("bounds", help="evaluate every bound at (n, k, d, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--kopt-table")
    _add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("repair", help="run the erasure-repair simulator on an LRC")
    p.add_argument("path")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--random-t", type=int, help="erase exactly t symbols per trial")
    p.add_argument("--prob", type=float, help="per-symbol erasure probability")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=_cmd_repair)

    p = sub.add_parser("reproduce", help="recompute the published tables and examples")
    p.add_argument("ids", nargs="*", help="item ids or prefixes (default: all)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--heavy", action="store_true",
                   help="include the 2^26-codeword weight enumeration")
    _add_common(p)
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (Gf4LrcError, FileNotFoundError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
