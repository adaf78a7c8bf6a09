"""Command-line driver: single computations, prime sweeps, slope-map data.

Subcommands: ``hj``, ``dedekind``, ``girstmair``, ``partition``, ``resolve``,
``invariants``, ``sweep``.  Sweeps are driven by a flat key-value JSON config
(unknown keys are errors) and emit CSV or JSON rows; identical configs
produce byte-identical output.  Exit codes: 0 all cells succeeded, 2 partial
failures, 1 config errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from sympy import primerange

from . import __version__
from .asympt import Partition, find_asymptotic_partition, girstmair_set
from .dedekind import dedekind_fast, dedekind_sum
from .errors import ConfigError, Exhausted, IncompatiblePartition, RootcoverError
from .hj import hj_expand
from .invariants import invariant_report, report_to_json_dict
from .logchern import base_pair_from_json, make_preset
from .toric import (
    LocalConeSpec,
    cyclic_resolution,
    local_intersection_table,
    max_slope,
    resolution_to_json,
    select_v,
)

_CSV_VALUE_COLUMNS = (
    "chi",
    "K3",
    "euler",
    "slope1",
    "slope2",
    "log_slope1",
    "log_slope2",
    "chi_err_bound",
)
_CSV_COLUMNS = ("n", "d", "r", "nu", "status") + _CSV_VALUE_COLUMNS + tuple(
    c + "_rat" for c in _CSV_VALUE_COLUMNS
)

_CONFIG_KEYS = {
    "preset": str,
    "d": int,
    "r": int,
    "pair_json": str,
    "n_min": int,
    "n_max": int,
    "partition": str,
    "seed": int,
    "trials": int,
    "strategy": str,
    "format": str,
    "output": str,
    "digits": int,
    "workers": int,
}

_CONFIG_DEFAULTS = {
    "partition": "asymptotic",
    "seed": 0,
    "trials": 10000,
    "strategy": "minimal",
    "format": "csv",
    "output": "-",
    "digits": 6,
}


def _fmt_rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _fmt_dec(x: Fraction, digits: int) -> str:
    try:
        return f"{float(x):.{digits}f}"
    except OverflowError:
        return _fmt_rat(x)


def _parse_nu(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse multiplicities {text!r}") from None


def _load_config(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config must be a flat JSON object")
    cfg = dict(_CONFIG_DEFAULTS)
    for key, value in raw.items():
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"unknown config key {key!r}")
        if not isinstance(value, _CONFIG_KEYS[key]) or isinstance(value, bool):
            raise ConfigError(f"config key {key!r} must be {_CONFIG_KEYS[key].__name__}")
        cfg[key] = value
    if "pair_json" in cfg:
        if "preset" in cfg or "d" in cfg or "r" in cfg:
            raise ConfigError("give either pair_json or a preset, not both")
    elif "preset" not in cfg:
        raise ConfigError("config needs a preset or pair_json")
    for key in ("n_min", "n_max"):
        if key not in cfg:
            raise ConfigError(f"config needs {key}")
    if cfg["n_min"] > cfg["n_max"]:
        raise ConfigError("n_min must not exceed n_max")
    if cfg["format"] not in ("csv", "json"):
        raise ConfigError(f"unknown format {cfg['format']!r}")
    if cfg["strategy"] not in ("minimal", "balanced"):
        raise ConfigError(f"unknown strategy {cfg['strategy']!r}")
    return cfg


def _build_pair(cfg: dict):
    if "pair_json" in cfg:
        with open(cfg["pair_json"], encoding="utf-8") as fh:
            return base_pair_from_json(fh.read()), 0
    preset = cfg["preset"]
    if preset == "planes_p3":
        if "r" not in cfg:
            raise ConfigError("planes_p3 needs r")
        return make_preset("planes_p3", cfg["r"]), 1
    if preset == "hypersurface_p4":
        if "d" not in cfg or "r" not in cfg:
            raise ConfigError("hypersurface_p4 needs d and r")
        return make_preset("hypersurface_p4", (cfg["d"], cfg["r"])), cfg["d"]
    raise ConfigError(f"unknown preset {preset!r}")


def _sweep_cell(args):
    """One (n, pair) cell; never raises, reports failures in the status field."""
    pair, d, n, cfg = args
    row = {"n": n, "d": d, "r": pair.r, "nu": "", "status": "ok"}
    try:
        if cfg["partition"] == "asymptotic":
            part = find_asymptotic_partition(n, pair.r, cfg["seed"], cfg["trials"])
        else:
            part = Partition(n, _parse_nu(cfg["partition"]))
        row["nu"] = "+".join(str(v) for v in part.nu)
        report = invariant_report(pair, part, cfg["strategy"])
    except Exhausted:
        row["status"] = "exhausted"
        return row
    except IncompatiblePartition:
        row["status"] = "incompatible"
        return row
    except RootcoverError as exc:
        row["status"] = f"error:{type(exc).__name__}"
        return row
    values = {
        "chi": report.chi.chi,
        "K3": report.k3,
        "euler": report.euler,
        "slope1": report.slopes[0] if report.slopes else None,
        "slope2": report.slopes[1] if report.slopes else None,
        "log_slope1": report.log_slopes[0] if report.log_slopes else None,
        "log_slope2": report.log_slopes[1] if report.log_slopes else None,
        "chi_err_bound": report.chi_error_bound,
    }
    row["values"] = values
    row["report"] = report_to_json_dict(report)
    return row


def run_sweep(cfg: dict) -> tuple[str, int]:
    """Execute a sweep; returns (rendered output, exit code)."""
    pair, d = _build_pair(cfg)
    primes = list(primerange(cfg["n_min"], cfg["n_max"] + 1))
    cells = [(pair, d, n, cfg) for n in primes]
    workers = cfg.get("workers") or int(os.environ.get("ROOTCOVER_WORKERS", "1"))
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_cell, cells))
    else:
        rows = [_sweep_cell(cell) for cell in cells]
    rows.sort(key=lambda row: row["n"])
    failures = sum(row["status"] != "ok" for row in rows)

    if cfg["format"] == "json":
        out_rows = []
        for row in rows:
            doc = {"n": row["n"], "d": row["d"], "r": row["r"], "status": row["status"]}
            if row["status"] == "ok":
                doc["report"] = row["report"]
            out_rows.append(doc)
        text = json.dumps(
            {"schema": "rootcover-report/1", "rows": out_rows}, indent=2
        ) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        digits = cfg["digits"]
        for row in rows:
            record = [row["n"], row["d"], row["r"], row["nu"], row["status"]]
            values = row.get("values", {})
            decs, rats = [], []
            for col in _CSV_VALUE_COLUMNS:
                val = values.get(col)
                decs.append("" if val is None else _fmt_dec(val, digits))
                rats.append("" if val is None else _fmt_rat(val))
            writer.writerow(record + decs + rats)
        text = buf.getvalue()
    return text, (2 if failures else 0)


def _cmd_hj(args) -> int:
    e = hj_expand(args.n, args.q)
    print(f"{e.n}/{e.q} = {list(e.ks)}")
    print(f"s = {e.s}, q' = {e.q_inv}, excess = {e.excess}")
    print(f"m_seq = {list(e.m_seq)}")
    print(f"n_seq = {list(e.n_seq)}")
    return 0


def _cmd_dedekind(args) -> int:
    value = dedekind_fast(args.a, args.b, args.n)
    print(f"d({args.a},{args.b},{args.n}) = {_fmt_rat(value)}")
    if args.check:
        naive = dedekind_sum([args.a, args.b], args.n)
        print(f"naive = {_fmt_rat(naive)} ({'agrees' if naive == value else 'MISMATCH'})")
    return 0


def _cmd_girstmair(args) -> int:
    on = girstmair_set(args.n)
    print(f"|O_{args.n}| = {len(on.members)}, complement = {on.complement_size}")
    return 0


def _cmd_partition(args) -> int:
    part = find_asymptotic_partition(args.n, args.r, args.seed, args.trials)
    print("nu =", "+".join(str(v) for v in part.nu))
    for j in range(part.r):
        print(" ".join(
            "." if j == k else str(part.q_matrix[j][k]) for k in range(part.r)
        ))
    return 0


def _cmd_resolve(args) -> int:
    spec = LocalConeSpec(args.n, args.p, args.q)
    v = select_v(spec, args.strategy)
    res = cyclic_resolution(spec, v)
    doc = {
        "schema": "rootcover-resolve/1",
        "strategy": args.strategy,
        "max_slope": _fmt_rat(max_slope(v)),
        "resolution": json.loads(resolution_to_json(res)),
    }
    if args.table:
        tab = local_intersection_table(res)
        doc["intersections"] = {
            "F3": _fmt_rat(tab.f3),
            "KF2": _fmt_rat(tab.kf2),
            "K2F": _fmt_rat(tab.k2f),
            "K_Cl": {str(l): _fmt_rat(x) for l, x in sorted(tab.k_cl.items())},
            "K_Cjk": {
                f"{jk[0]}{jk[1]},{a}": _fmt_rat(x)
                for (jk, a), x in sorted(tab.k_cjk.items())
            },
        }
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_invariants(args) -> int:
    if args.pair_json:
        with open(args.pair_json, encoding="utf-8") as fh:
            pair = base_pair_from_json(fh.read())
    elif args.preset == "planes_p3":
        pair = make_preset("planes_p3", args.params[0])
    elif args.preset == "hypersurface_p4":
        pair = make_preset("hypersurface_p4", tuple(args.params))
    else:
        raise ConfigError("need --preset or --pair-json")
    part = Partition(args.n, _parse_nu(args.nu))
    report = invariant_report(pair, part, args.strategy)
    print(json.dumps(report_to_json_dict(report), indent=2))
    return 0


def _cmd_sweep(args) -> int:
    cfg = _load_config(args.config)
    if args.digits is not None:
        cfg["digits"] = args.digits
    if args.workers is not None:
        cfg["workers"] = args.workers
    text, code = run_sweep(cfg)
    if cfg["output"] == "-":
        sys.stdout.write(text)
    else:
        with open(cfg["output"], "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootcover",
        description="Exact invariants of cyclic resolutions of n-th root covers",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hj", help="Hirzebruch-Jung expansion of n/q")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=_cmd_hj)

    p = sub.add_parser("dedekind", help="Dedekind sum d(a,b,n)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--check", action="store_true", help="compare with the O(n) sum")
    p.set_defaults(func=_cmd_dedekind)

    p = sub.add_parser("girstmair", help="size of the Girstmair set O_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_girstmair)

    p = sub.add_parser("partition", help="find an asymptotic partition")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10000)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("resolve", help="cyclic resolution of a triple-point cone")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--strategy", choices=("minimal", "balanced"), default="minimal")
    p.add_argument("--table", action="store_true", help="include the intersection table")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("invariants", help="full invariant report of one cell")
    p.add_argument("--preset", choices=("planes_p3", "hypersurface_p4"))
    p.add_argument(
        "--params",
        type=lambda s: [int(t) for t in s.split(",")],
        default=[3],
        help="r for planes_p3, d,r for hypersurface_p4",
    )
    p.add_argument("--pair-json", help="path to a base-pair JSON file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu", required=True, help="comma-separated multiplicities")
    p.add_argument("--strategy", choices=("minimal", "balanced"), default="minimal")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("sweep", help="prime sweep from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--digits", type=int, help="decimal places for CSV floats")
    p.add_argument(
        "--workers", type=int,
        help="worker pool size (default: ROOTCOVER_WORKERS or 1)",
    )
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except RootcoverError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
