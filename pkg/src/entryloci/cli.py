"""Command line surface: catalog listing, Groebner bases, entry-locus reports,
secant profiles, decompositions, Segre counts and the verification suite.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 budget
exhausted.  Reports are deterministic for a fixed configuration once timing
fields are stripped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import build_catalog_variety, catalog_keys, catalog_metadata
from .entry_locus import classify_entry_locus
from .geometry import random_point
from .kernel.errors import BudgetExceededError, KernelError, ParseError
from .kernel.groebner import Budget
from .kernel.ideals import groebner_basis
from .kernel.orders import order_from_name
from .kernel.rng import seeded_rng
from .rank_secant import secant_dims, two_decompositions
from .segre import pair_segre_test, segre_count_elliptic_quartic
from .suite import RunConfig, resolve_field, run_suite
from .varfile import read_variety_file

USAGE_ERROR = 2
CHECK_FAILED = 1
BUDGET_EXHAUSTED = 3


def _load_variety(target: str, seed: int, field, budget):
    if os.path.exists(target) or target.endswith(".var") or "/" in target:
        return read_variety_file(target)
    return build_catalog_variety(target, seed, field, budget)


def _emit(data, out_path):
    text = json.dumps(data, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def _add_common(parser):
    parser.add_argument("--seed", type=int, default=1, help="master seed")
    parser.add_argument("--field", default="fp:auto", help="Q, fp:<p>, or fp:auto")
    parser.add_argument("--max-pairs", type=int, default=200_000, help="Groebner S-pair budget")
    parser.add_argument("--time-limit", type=float, default=None,
                       help="wall-clock seconds per Groebner run")
    parser.add_argument("--out", default=None, help="write the JSON report here as well")


def build_parser():
    ap = argparse.ArgumentParser(prog="el", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list catalog varieties")

    gb = sub.add_parser("gb", help="reduced Groebner basis of a variety file's ideal")
    gb.add_argument("--input", required=True, help="variety file")
    gb.add_argument("--order", default="grevlex", help="grevlex | lex | block:k")
    gb.add_argument("--max-pairs", type=int, default=200_000)
    gb.add_argument("--out", default=None)

    el = sub.add_parser("entry-locus", help="classify the entry locus of a variety")
    el.add_argument("--variety", required=True, help="catalog key or variety file")
    _add_common(el)

    sd = sub.add_parser("secant-dims", help="secant dimension profile")
    sd.add_argument("--variety", required=True)
    sd.add_argument("--max-s", type=int, default=2)
    _add_common(sd)

    dc = sub.add_parser("decomp", help="length-2 decompositions of a seeded general point")
    dc.add_argument("--variety", required=True)
    _add_common(dc)

    sg = sub.add_parser("segre", help="quadric-cone count for a quartic curve in P^3")
    sg.add_argument("--curve", required=True)
    _add_common(sg)

    ps = sub.add_parser("pair-segre", help="shared-projection test for two curves")
    ps.add_argument("--y", required=True)
    ps.add_argument("--t", required=True)
    _add_common(ps)

    vf = sub.add_parser("verify", help="run the verification suite")
    vf.add_argument("--suite", choices=("core", "stretch"), default="core")
    vf.add_argument("--workers", type=int, default=1)
    vf.add_argument("--stretch-max-pairs", type=int, default=2_000_000)
    _add_common(vf)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _dispatch(args)
    except BudgetExceededError as err:
        print(f"budget exhausted: {err}", file=sys.stderr)
        return BUDGET_EXHAUSTED
    except (ParseError, FileNotFoundError, KeyError) as err:
        print(f"usage error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except KernelError as err:
        print(f"computation failed: {err}", file=sys.stderr)
        return CHECK_FAILED


def _dispatch(args) -> int:
    if args.command == "catalog":
        rows = []
        for key in catalog_keys():
            meta = catalog_metadata(key)
            rows.append({"key": key, **meta})
        _emit(rows, None)
        return 0

    if args.command == "gb":
        var = read_variety_file(args.input)
        order = order_from_name(args.order)
        budget = Budget(max_pairs=args.max_pairs)
        gb = groebner_basis(var.ideal, order, budget)
        data = {
            "order": args.order,
            "basis": [g.to_string() for g in gb.basis],
            "field": var.field.describe(),
        }
        _emit(data, args.out)
        return 0

    field = resolve_field(args.field, args.seed)
    budget = Budget(max_pairs=args.max_pairs, max_seconds=getattr(args, 'time_limit', None))

    if args.command == "entry-locus":
        var = _load_variety(args.variety, args.seed, field, budget)
        rep = classify_entry_locus(var, args.seed, budget)
        _emit(rep.as_dict(), args.out)
        return 0

    if args.command == "secant-dims":
        var = _load_variety(args.variety, args.seed, field, budget)
        prof = secant_dims(var, args.max_s, seed=args.seed, budget=budget)
        data = {"variety": args.variety, "field": field.describe(), **prof.as_dict()}
        _emit(data, args.out)
        return 0

    if args.command == "decomp":
        var = _load_variety(args.variety, args.seed, field, budget)
        rng = seeded_rng(("cli-decomp", args.seed))
        q = random_point(field, rng, var.ambient + 1, off_coordinate_hyperplanes=True)
        ds = two_decompositions(var, q, seed=args.seed, budget=budget)
        data = {
            "variety": args.variety,
            "field": field.describe(),
            "q": [str(c) for c in q.coords],
            **ds.as_dict(),
        }
        _emit(data, args.out)
        return 0

    if args.command == "segre":
        var = _load_variety(args.curve, args.seed, field, budget)
        count, vertices = segre_count_elliptic_quartic(var, args.seed, budget)
        data = {
            "curve": args.curve,
            "field": field.describe(),
            "count": count,
            "vertices": None
            if vertices is None
            else [[str(c) for c in v.coords] for v in vertices],
        }
        _emit(data, args.out)
        return 0

    if args.command == "pair-segre":
        y = _load_variety(args.y, args.seed, field, budget)
        t = _load_variety(args.t, args.seed, field, budget)
        rng = seeded_rng(("cli-pair", args.seed))
        o = random_point(field, rng, y.ambient + 1)
        verdict = pair_segre_test(y, t, o, args.seed, budget)
        _emit(
            {
                "y": args.y,
                "t": args.t,
                "o": [str(c) for c in o.coords],
                "verdict": verdict,
                "field": field.describe(),
            },
            args.out,
        )
        return 0

    if args.command == "verify":
        cfg = RunConfig(
            field_desc=args.field,
            seed=args.seed,
            max_pairs=args.max_pairs,
            max_seconds=getattr(args, 'time_limit', None),
            stretch_max_pairs=args.stretch_max_pairs,
            suite=args.suite,
            workers=args.workers,
            out=args.out,
        )
        report = run_suite(cfg)
        text = report.to_json()
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        print(text)
        summary = report.summary
        for cid, status in sorted(summary["checks"].items()):
            print(f"{cid}: {status}", file=sys.stderr)
        if summary["failed"]:
            return BUDGET_EXHAUSTED if summary.get("budget_exceeded") else CHECK_FAILED
        return 0

    return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
