"""Command-line front end.

Subcommands::

    latticesync spectrum --family cycle --dims 8 --r 2
    latticesync sync     --family torus2d --dims 4,4 --r 1
    latticesync verify   --family cycle --dims 3..32 --r 1..3
    latticesync sweep    configs/fig4_cycle_connectivity_vs_overhead.cfg

Exit codes: 0 success, 1 a closed-form spectrum disagrees with the
eigensolver, 2 bad arguments or config.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from pathlib import Path

from latticesync.errors import LatticeSyncError, MixedParity
from latticesync.oracle import MAX_ORACLE_ORDER, verify_closed_form
from latticesync.spectra import full_spectrum
from latticesync.sweep import format_float, parse_config, parse_int_range, render, run_sweep
from latticesync.sync import DEFAULT_AUDIT_TOL, sync_exact, verify_theorems
from latticesync.topology import Family, GraphSpec, validate_spec

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _grid(args) -> list[GraphSpec]:
    """Every spec in the Cartesian product of the --dims and --r ranges."""
    try:
        per_dim = [parse_int_range(part) for part in args.dims.split(",")]
        rs = parse_int_range(args.r)
    except LatticeSyncError as exc:
        raise UsageError(str(exc)) from None
    family = Family(args.family)
    return [
        GraphSpec(family, dims, r)
        for dims in itertools.product(*per_dim)
        for r in rs
    ]


def _single(args) -> GraphSpec:
    specs = _grid(args)
    if len(specs) != 1:
        raise UsageError("expected a single graph; ranges are only accepted by 'verify'")
    return validate_spec(specs[0])


def _fmt_index(idx) -> str:
    return "(" + ",".join(str(int(j)) for j in idx) + ")"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_spectrum(args) -> int:
    spectrum = full_spectrum(_single(args))
    if args.format == "json":
        payload = {
            "graph": str(spectrum.spec),
            "N": len(spectrum),
            "entries": [{"index": list(idx), "value": float(format_float(v))} for idx, v in spectrum.entries],
            "sorted": [float(format_float(v)) for v in spectrum.sorted_values],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = [f"# {spectrum.spec}  N={len(spectrum)}", "index,value"]
    lines += [f"{_fmt_index(idx)},{format_float(v)}" for idx, v in spectrum.entries]
    lines += ["# sorted", "rank,index,value"]
    for rank, (idx, v) in enumerate(zip(spectrum.sorted_indices, spectrum.sorted_values)):
        lines.append(f"{rank},{_fmt_index(idx)},{format_float(v)}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_sync(args) -> int:
    report = sync_exact(_single(args))
    fields = {
        "graph": str(report.spec),
        "N": report.spec.num_nodes,
        "lambda_conn": report.lambda_conn,
        "lambda_max": report.lambda_max,
        "ratio_exact": report.ratio_exact,
        "ratio_paper": report.ratio_paper,
        "paper_case": report.paper_case.value,
        "deviation": report.deviation,
        "argmin_index": list(report.argmin_index),
        "argmax_index": list(report.argmax_index),
        "flagged": report.deviation is not None and report.deviation > args.tol,
    }
    if args.format == "json":
        for key in ("lambda_conn", "lambda_max", "ratio_exact", "ratio_paper", "deviation"):
            if fields[key] is not None:
                fields[key] = float(format_float(fields[key]))
        _emit(json.dumps(fields, indent=2) + "\n", args.output)
        return EXIT_OK
    lines = []
    for key, value in fields.items():
        if isinstance(value, float):
            value = format_float(value)
        elif isinstance(value, list):
            value = _fmt_index(value)
        elif value is None:
            value = "-"
        lines.append(f"{key:<13}{value}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    specs, skipped = [], 0
    for spec in _grid(args):
        try:
            specs.append(validate_spec(spec))
        except LatticeSyncError:
            skipped += 1
    if not specs:
        raise UsageError("no valid graph in the requested ranges")
    too_large = [s for s in specs if s.num_nodes > MAX_ORACLE_ORDER]
    if too_large:
        raise UsageError(f"{too_large[0]} has more than {MAX_ORACLE_ORDER} nodes")

    failures = mismatches = 0
    worst = 0.0
    out = []
    for spec in specs:
        dev = verify_closed_form(spec)
        worst = max(worst, dev)
        ok = dev <= args.tol
        failures += not ok
        line = f"{spec}  N={spec.num_nodes}  spectrum_dev={dev:.3e} {'PASS' if ok else 'FAIL'}"
        try:
            rec = verify_theorems(spec, tol=args.tol)
        except MixedParity:
            line += "  ratio: mixed parity, no closed form"
        else:
            mismatches += not rec.exact_match
            line += (
                f"  {rec.paper_case.value}: exact={format_float(rec.ratio_exact)}"
                f" closed_form={format_float(rec.ratio_paper)}"
                f" literal={format_float(rec.ratio_paper_literal)}"
                f" dev={rec.deviation:.3e} {'match' if rec.exact_match else 'MISMATCH'}"
                f" argmax claimed={_fmt_index(rec.claimed_argmax_index)}"
                f" exact={_fmt_index(rec.exact_argmax_index)}"
            )
        out.append(line)
    out.append(
        f"summary: {len(specs)} graphs checked, {skipped} invalid combinations skipped, "
        f"spectrum failures={failures}, max spectrum deviation={worst:.3e}, "
        f"synchronizability closed-form mismatches={mismatches}"
    )
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def cmd_sweep(args) -> int:
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read config: {exc}") from None
    config = parse_config(text)
    fmt = args.format or config.output_format
    rows = run_sweep(config)
    _emit(render(rows, fmt), args.output or config.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticesync",
        description="Laplacian spectra and synchronizability of r-nearest-neighbor cycles and tori.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p, dims_help):
        p.add_argument("--family", required=True, choices=[f.value for f in Family])
        p.add_argument("--dims", required=True, help=dims_help)
        p.add_argument("--r", required=True, help="neighbors per side")
        p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("spectrum", help="closed-form Laplacian spectrum of one graph")
    graph_args(p, "comma-separated sizes, e.g. 8 or 4,6")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sync", help="connectivity and synchronizability of one graph")
    graph_args(p, "comma-separated sizes, e.g. 8 or 4,6")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--tol", type=float, default=DEFAULT_AUDIT_TOL)
    p.set_defaults(func=cmd_sync)

    p = sub.add_parser("verify", help="check closed forms against the eigensolver over a grid")
    graph_args(p, "per-dimension sizes or ranges, e.g. 3..32 or 4..10,4..10")
    p.add_argument("--tol", type=float, default=DEFAULT_AUDIT_TOL)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run a parameter sweep from a config file")
    p.add_argument("config")
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LatticeSyncError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
