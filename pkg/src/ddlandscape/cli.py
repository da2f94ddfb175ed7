"""Command-line front end.

A short human-readable summary goes to stdout.  Machine-readable output
(CSV, JSON, SVG) is written only to the file named by ``--output``.

Exit codes: 0 success, 1 an asserted expectation or oracle cross-check
failed, 2 usage or domain error, 3 oracle refused (size above the cap).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from ddlandscape.arrangement import brute_force, default_oracle_cap, random_costs
from ddlandscape.bounds import CSV_HEADER, FAMILIES, bounds_table, minimization_contrast, oracle_mismatches
from ddlandscape.convexity import ALL_PROPERTIES, FAILS, HOLDS, NOT_APPLICABLE, audit
from ddlandscape.cost import parse_cost
from ddlandscape.errors import DomainError, HoleError, OracleCapError, UnsupportedFamilyError
from ddlandscape.landscape import AXES, planar_effective_star, quasistar_grid, star_landscape
from ddlandscape.trees import FAMILY_BUILDERS, FreeTree, classify, hubiness, make_family

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- serialisation helpers ----------------------------------------------------


def _num(v):
    """Render a number for CSV/JSON without float noise for exact values."""
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def _json_default(o):
    if isinstance(o, (Fraction, np.integer, np.floating)):
        return _num(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialise {type(o).__name__}")


def _dump_json(obj) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n").encode("utf-8")


def _dump_csv(header, rows) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header is not None:
        w.writerow(header)
    for r in rows:
        w.writerow(["" if v is None else _num(v) for v in r])
    return buf.getvalue().encode("utf-8")


def _write(args, payload: bytes):
    if args.output:
        Path(args.output).write_bytes(payload)
        print(f"wrote {args.output}")


# -- tree / cost resolution -----------------------------------------------------


def _tree(args) -> FreeTree:
    if args.edges:
        text = Path(args.edges).read_text()
        return FreeTree.from_edge_list(text, args.n)
    if not args.family or args.n is None:
        raise UsageError("give --family and --n, or --edges FILE")
    return make_family(args.family, args.n)


def _cost(args, n=None):
    return parse_cost(args.cost, None if n is None else max(n - 1, 1))


def _parse_expect(items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--expect wants PROP=VERDICT, got {item!r}")
        k, v = item.split("=", 1)
        if k not in ALL_PROPERTIES:
            raise UsageError(f"unknown property {k!r}")
        if v not in (HOLDS, FAILS, NOT_APPLICABLE):
            raise UsageError(f"verdict must be holds, fails or not-applicable, got {v!r}")
        out[k] = v
    return out


# -- commands -------------------------------------------------------------------


def cmd_landscape(args) -> int:
    if args.family not in ("star", "quasistar") or args.n is None:
        raise UsageError("landscape needs --family star|quasistar and --n")
    g = _cost(args, args.n)
    if args.family == "star":
        land = star_landscape(args.n, g)
        print(f"star n={args.n} g={g.spec}: min {_num(land.min_value)} at l in {sorted(land.optimal_positions)}, "
              f"max {_num(max(land.values))}")
        if args.format == "csv":
            payload = _dump_csv(["l", "value"], [(l, v) for l, v in enumerate(land.values, 1)])
        elif args.format == "json":
            payload = _dump_json({"n": land.n, "cost": g.spec, "values": [_num(v) for v in land.values],
                                  "optimal_positions": sorted(land.optimal_positions)})
        else:
            from ddlandscape.plotting import star_svg

            payload = star_svg(land)
        _write(args, payload)
        return EXIT_OK

    grid = quasistar_grid(args.n, g, args.planar)
    tag = " planar" if args.planar else ""
    print(f"quasistar{tag} n={args.n} g={g.spec}: {len(grid)} cells, min {_num(grid.min_value)}, "
          f"max {_num(grid.max_value)}")
    if args.slice_axis is not None:
        if args.slice_value is None:
            raise UsageError("--slice-axis needs --slice-value")
        mat = grid.slice(args.slice_axis, args.slice_value)
        rows_ax, cols_ax = grid.slice_axes(args.slice_axis)
        print(f"slice {args.slice_axis}={args.slice_value}: rows {rows_ax}, columns {cols_ax}, "
              f"{int(mat.count())} filled")
        if args.format == "csv":
            header = [f"{rows_ax}\\{cols_ax}"] + list(range(1, args.n + 1))
            rows = [[i + 1] + [None if m else v for v, m in zip(mat.data[i], np.ma.getmaskarray(mat)[i])]
                    for i in range(args.n)]
            payload = _dump_csv(header, rows)
        elif args.format == "json":
            payload = _dump_json({"n": args.n, "cost": g.spec, "planar": args.planar, "axis": args.slice_axis,
                                  "value": args.slice_value, "rows": rows_ax, "columns": cols_ax,
                                  "matrix": [[None if m else _num(v) for v, m in zip(r, mr)]
                                             for r, mr in zip(mat.data, np.ma.getmaskarray(mat))]})
        else:
            from ddlandscape.plotting import heatmap_svg

            payload = heatmap_svg(grid, args.slice_axis, [args.slice_value])
        _write(args, payload)
        return EXIT_OK
    if args.format == "csv":
        payload = _dump_csv(["l", "p", "q", "value"], grid.csv_rows())
    elif args.format == "json":
        payload = _dump_json({"n": args.n, "cost": g.spec, "planar": args.planar,
                              "min": _num(grid.min_value), "max": _num(grid.max_value),
                              "cells": [[l, p, q, _num(v)] for l, p, q, v in grid.csv_rows()]})
    else:
        from ddlandscape.plotting import heatmap_svg

        payload = heatmap_svg(grid, "q")
    _write(args, payload)
    return EXIT_OK


def cmd_audit(args) -> int:
    expected = _parse_expect(args.expect)
    if args.family not in ("star", "quasistar") or args.n is None:
        raise UsageError("audit needs --family star|quasistar and --n")
    g = _cost(args, args.n)
    if args.family == "star":
        target, label = star_landscape(args.n, g).to_grid_function(), f"star n={args.n} g={g.spec}"
    elif args.reduced:
        target = planar_effective_star(args.n, g).to_grid_function()
        label = f"planar quasistar n={args.n} g={g.spec} (reduced to hub position)"
    else:
        target = quasistar_grid(args.n, g, args.planar).to_grid_function()
        label = f"quasistar{' planar' if args.planar else ''} n={args.n} g={g.spec}"
    props = args.properties.split(",") if args.properties else None
    report = audit(target, props, label=label, stop_at_first=args.fast)
    print(report.summary())
    if args.format not in ("json", None):
        raise UsageError("audit writes json only")
    _write(args, _dump_json({"label": label, "cost": g.spec, "entries": report.to_json()}))
    bad = report.mismatches(expected)
    for name in bad:
        got = report.entries[name].verdict if name in report.entries else "missing"
        print(f"expectation failed: {name} expected {expected[name]}, got {got}")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_bounds(args) -> int:
    if args.n_min is None or args.n_max is None:
        raise UsageError("bounds needs --n-min and --n-max")
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    families = args.families.split(",") if args.families else list(FAMILIES)
    for f in families:
        if f not in FAMILIES:
            raise UsageError(f"unknown family {f!r}; choose from {','.join(FAMILIES)}")
    cap = args.oracle_cap if args.oracle_cap is not None else default_oracle_cap()
    rows = bounds_table(range(args.n_min, args.n_max + 1), families, oracle_cap=cap, use_oracle=args.verify_oracle)
    for r in rows:
        print(f"n={r.n:<3} {r.family:<16} d_min={_num(r.d_min)} d_max={_num(r.d_max)} "
              f"d_random={_num(r.d_random)} [{r.source}]")
    for fam, info in minimization_contrast(rows).items():
        print(f"{fam}: d_min exponent {info['exponent']:.2f} ({info['growth']}), "
              f"d_min/d_random at largest n = {float(info['min_over_random']):.3f}")
    if args.format == "csv":
        payload = _dump_csv(CSV_HEADER, [r.csv_row() for r in rows])
    elif args.format == "json":
        payload = _dump_json([r.to_json() for r in rows])
    else:
        from ddlandscape.plotting import bounds_svg

        payload = bounds_svg(rows)
    _write(args, payload)
    if args.verify_oracle:
        bad = oracle_mismatches(rows)
        for n, fam, which, table, oracle in bad:
            print(f"oracle mismatch: n={n} {fam} {which} table={table} oracle={oracle}")
        skipped = sum(1 for r in rows if r.oracle_min is None)
        print(f"oracle cross-check: {len(rows) - skipped} rows checked, {skipped} above cap {cap}, "
              f"{len(bad)} mismatches")
        return EXIT_MISMATCH if bad else EXIT_OK
    return EXIT_OK


def cmd_oracle(args) -> int:
    t = _tree(args)
    g = _cost(args, t.n)
    cap = args.oracle_cap if args.oracle_cap is not None else default_oracle_cap()
    res = brute_force(t, g, planar_only=args.planar, cap=cap)
    print(f"n={t.n} g={g.spec}{' planar' if args.planar else ''}: min {_num(res.min_value)} "
          f"({len(res.argmin)} arrangements), max {_num(res.max_value)} ({len(res.argmax)}), "
          f"{res.count_enumerated} enumerated, mean {_num(res.mean_value)}")
    out = res.to_json()
    out["mean"] = _num(res.mean_value)
    if args.samples:
        costs = random_costs(t, g, args.samples, args.seed)
        est = float(np.mean(np.asarray(costs, dtype=float)))
        print(f"random sample mean ({args.samples} draws, seed {args.seed}): {est:.6f}")
        out["sample_mean"] = est
        out["seed"] = args.seed
        out["samples"] = args.samples
    _write(args, _dump_json(out))
    return EXIT_OK


def cmd_hubiness(args) -> int:
    t = _tree(args)
    fam = classify(t)
    h = hubiness(t)
    print(f"n={t.n} <k^2>={_num(h)} tags={','.join(sorted(fam.tags))} hub={fam.hub}")
    out = t.to_json()
    out["hubiness"] = _num(h)
    out["hub"] = fam.hub
    _write(args, _dump_json(out))
    return EXIT_OK


COMMANDS = {
    "landscape": cmd_landscape,
    "audit": cmd_audit,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "hubiness": cmd_hubiness,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ddlandscape", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("csv", "json", "svg"), default_fmt="json"):
        sp.add_argument("--family", choices=sorted(FAMILY_BUILDERS))
        sp.add_argument("--n", type=int)
        sp.add_argument("--edges", help="edge-list file, one 'u v' pair per line")
        sp.add_argument("--cost", default="identity", help="identity | power:E | exp:B | table:v1,v2,...")
        sp.add_argument("--format", choices=fmt, default=default_fmt)
        sp.add_argument("--output", "-o")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--oracle-cap", type=int)
        sp.add_argument("--planar", action="store_true")

    sp = sub.add_parser("landscape", help="star sequence or quasistar grid / slice")
    common(sp, default_fmt="csv")
    sp.add_argument("--slice-axis", choices=AXES)
    sp.add_argument("--slice-value", type=int)

    sp = sub.add_parser("audit", help="convexity ladder report")
    common(sp, fmt=("json",))
    sp.add_argument("--properties", help="comma-separated subset, default all")
    sp.add_argument("--expect", action="append", metavar="PROP=VERDICT")
    sp.add_argument("--reduced", action="store_true", help="with --planar: audit the one-variable reduced landscape")
    sp.add_argument("--fast", action="store_true", help="stop the discrete-convexity scan at the first failing block")

    sp = sub.add_parser("bounds", help="bounds table and figure data")
    common(sp, default_fmt="csv")
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--families", help=f"comma-separated, default {','.join(FAMILIES)}")
    sp.add_argument("--verify-oracle", action="store_true")

    sp = sub.add_parser("oracle", help="exhaustive minimum / maximum")
    common(sp, fmt=("json",))
    sp.add_argument("--samples", type=int, default=0, help="also report a seeded random-arrangement mean")

    sp = sub.add_parser("hubiness", help="mean squared degree and family tags")
    common(sp, fmt=("json",))
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except OracleCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, DomainError, HoleError, UnsupportedFamilyError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
