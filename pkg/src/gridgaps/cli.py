"""Command-line front end.

Subcommands: census, gaps, verify, gen, constants.  Exit codes follow
the CI contract: 0 on success, 1 when a verified claim fails, 2 on
operational problems (unreadable or malformed input, bad usage).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .backend import BACKEND
from .cellmodel import Cell, cell_from, cofaces_of, const_i_from_j, const_i_to_j, faces_of
from .curves import GenerationError, generate_curve, validate_curve
from .gaps import gap_report
from .objects import DigitalObject, census
from .verify import INFO, run_identity_suite
from .voxelfile import VoxelFileError, read_voxel_file, write_voxel_file, write_voxels

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_OPERATIONAL = 2


def _load(args: argparse.Namespace) -> DigitalObject:
    obj = read_voxel_file(args.path, args.n, strict=args.strict)
    if obj.duplicates_dropped:
        print(
            f"warning: dropped {obj.duplicates_dropped} duplicate voxel(s)",
            file=sys.stderr,
        )
    return obj


def cmd_census(args: argparse.Namespace) -> int:
    obj = _load(args)
    cen = census(obj)
    n = obj.ambient_n
    if args.format == "json":
        rows = []
        for i in range(n + 1):
            rows.append(
                {
                    "i": i,
                    "total": cen.count(i),
                    "free": cen.free_count(i) if i < n else None,
                    "nonfree": cen.nonfree_count(i) if i < n else None,
                }
            )
        print(json.dumps({"n": n, "voxels": len(obj), "census": rows}, indent=2))
    else:
        print(f"n={n} voxels={len(obj)}")
        for i in range(n):
            print(f"i={i}: {cen.count(i)} {cen.free_count(i)} {cen.nonfree_count(i)}")
        print(f"i={n}: {cen.count(n)}")
    return EXIT_OK


def _hub_json(e: Cell) -> dict:
    return {"doubled": list(e.coords), "display": str(e)}


def cmd_gaps(args: argparse.Namespace) -> int:
    obj = _load(args)
    report = gap_report(obj)
    n = obj.ambient_n
    if args.format == "json":
        payload = {
            "n": n,
            "voxels": len(obj),
            "gaps": [
                {"i": i, "count": report.gap_count(i), "hubs": [_hub_json(e) for e in report.hubs[i]]}
                for i in range(n - 1)
            ],
            "g1_formula": report.g1_formula,
            "g1_agrees": report.g1_agrees,
            "g0_formula": report.g0_formula,
            "g0_agrees": report.g0_agrees,
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"n={n} voxels={len(obj)}")
    for i in range(n - 1):
        print(f"g{i}={report.gap_count(i)}")
        for e in report.hubs[i]:
            doubled = "(" + ",".join(str(c) for c in e.coords) + ")"
            print(f"  hub={e} doubled={doubled}")
    if n == 3:
        for name, formula, agrees in (
            ("g1", report.g1_formula, report.g1_agrees),
            ("g0", report.g0_formula, report.g0_agrees),
        ):
            flag = "agree" if agrees else "DISAGREE"
            note = "" if name == "g1" else " (formula assumes a 0-curve)"
            print(f"{name} formula={formula} {flag}{note}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    obj = _load(args)
    table = run_identity_suite(obj)
    check = validate_curve(obj, args.k) if len(obj) else None
    if args.format == "json":
        payload = {
            "passed": table.passed,
            "curve": None
            if check is None
            else {
                "is_valid": check.is_valid,
                "violations": [
                    {"voxel": list(v.voxel), "reason": v.reason} for v in check.violations
                ],
                "extremes": [list(v) for v in check.extremes],
                "components": check.component_count,
            },
            "rows": [
                {
                    "claim": r.claim_id,
                    "description": r.description,
                    "expected": r.expected,
                    "observed": r.observed,
                    "status": r.status,
                }
                for r in table.rows
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        if check is not None and not check.is_valid:
            reasons = sorted({v.reason for v in check.violations})
            print(f"note: not a digital {args.k}-curve ({', '.join(reasons)})")
        for r in table.rows:
            print(
                f"{r.status.upper():4} {r.claim_id:34} expected={r.expected}"
                f" observed={r.observed}"
            )
        n_info = sum(1 for r in table.rows if r.status == INFO)
        print(
            f"{len(table.rows)} checks, {len(table.failures)} failed"
            + (f", {n_info} informational" if n_info else "")
        )
    return EXIT_OK if table.passed else EXIT_CLAIM_FAILED


def cmd_gen(args: argparse.Namespace) -> int:
    obj = generate_curve(args.length, args.seed, args.k)
    if args.out:
        write_voxel_file(obj, args.out)
        print(f"wrote {len(obj)} voxels to {args.out}")
    else:
        write_voxels(obj, sys.stdout)
    return EXIT_OK


def cmd_constants(args: argparse.Namespace) -> int:
    n = args.n
    if not 2 <= n <= 5:
        raise ValueError(f"ambient dimension must be in [2, 5], got {n}")
    rows = []
    ok = True
    for j in range(1, n + 1):
        for i in range(j):
            # canonical cells of each dimension at the origin
            j_cell = cell_from((0,) * n, (0,) * j + (1,) * (n - j))
            i_cell = cell_from((0,) * n, (0,) * i + (1,) * (n - i))
            to_closed = const_i_to_j(i, j)
            to_enum = len(faces_of(j_cell, i))
            from_closed = const_i_from_j(i, j, n)
            from_enum = len(cofaces_of(i_cell, j))
            agree = to_closed == to_enum and from_closed == from_enum
            ok = ok and agree
            rows.append((i, j, to_closed, to_enum, from_closed, from_enum, agree))
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "i": i,
                        "j": j,
                        "to_closed": tc,
                        "to_enumerated": te,
                        "from_closed": fc,
                        "from_enumerated": fe,
                        "agree": agree,
                    }
                    for i, j, tc, te, fc, fe, agree in rows
                ],
                indent=2,
            )
        )
    else:
        print(f"n={n}  (closed-form | enumerated)")
        for i, j, tc, te, fc, fe, agree in rows:
            flag = "agree" if agree else "DISAGREE"
            print(f"i={i} j={j}: to {tc} | {te}   from {fc} | {fe}   {flag}")
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridgaps",
        description="Cell censuses, gap detection, and counting identities "
        "for digital objects in the grid cell model.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", help="voxel file (text or .json)")
        p.add_argument("--n", type=int, default=3, help="ambient dimension (default 3)")
        p.add_argument("--strict", action="store_true", help="reject duplicate voxels")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("census", help="per-dimension cell counts with free/non-free split")
    add_input_flags(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("gaps", help="hub inventories and closed-form gap counts")
    add_input_flags(p)
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("verify", help="run the identity suite; exit 1 on any failing row")
    add_input_flags(p)
    p.add_argument("--k", type=int, default=0, help="curve adjacency index (default 0)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random digital 0-curve")
    p.add_argument("--length", type=int, required=True, help="number of voxels (>= 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=0, help="adjacency index (only 0 supported)")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("constants", help="closed-form vs enumerated incidence constants")
    p.add_argument("--n", type=int, default=3, help="ambient dimension, 2..5")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, VoxelFileError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OPERATIONAL


if __name__ == "__main__":
    sys.exit(main())
