"""Command-line front end.

Exit status: 0 on success, 1 when a verification scan finds disagreements,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .errors import SkewSchurError
from .interval_classify import (
    classify_mf,
    detect_bad_config,
    match_full_interval_config,
    product_full_interval,
    ribbon_full_support,
)
from .lr_engine import interval_report, schur_expansion
from .partition_core import format_partition, parse_partition
from .skew_shapes import basic_form, format_shape, parse_ribbon, parse_shape
from .verify_harness import (
    cross_validate_main,
    cross_validate_mf,
    cross_validate_product_mf,
    cross_validate_ribbon,
)

SCHEMA = 1


def _fmt(p: Sequence[int]) -> str:
    return format_partition(p)


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def _expand(args: argparse.Namespace) -> int:
    shape = parse_shape(args.shape)
    expansion = schur_expansion(shape)
    pieces = []
    for nu, coeff in expansion.sorted_terms():
        pieces.append(f"s{_fmt(nu)}" if coeff == 1 else f"{coeff} s{_fmt(nu)}")
    text = f"s{format_shape(shape)} = " + (" + ".join(pieces) if pieces else "0")
    payload = {
        "command": "expand",
        "shape": format_shape(shape),
        "terms": [{"partition": _fmt(nu), "coefficient": c} for nu, c in expansion.sorted_terms()],
    }
    _emit(args, payload, text)
    return 0


def _interval_payload(command: str, shape_text: str) -> tuple[dict[str, Any], Any]:
    shape = parse_shape(shape_text)
    report = interval_report(shape)
    payload = {
        "command": command,
        "shape": format_shape(shape),
        "w": _fmt(report.w),
        "n": _fmt(report.n),
        "interval": [_fmt(p) for p in report.interval],
        "support": [_fmt(p) for p in report.interval if p not in report.missing],
        "missing": [_fmt(p) for p in report.missing],
    }
    return payload, report


def _support(args: argparse.Namespace) -> int:
    payload, report = _interval_payload("support", args.shape)
    lines = [f"support of {payload['shape']}:"]
    lines += [f"  {p}" for p in payload["support"]]
    lines.append("missing from the interval: " + (", ".join(payload["missing"]) or "none"))
    _emit(args, payload, "\n".join(lines))
    return 0


def _interval(args: argparse.Namespace) -> int:
    payload, report = _interval_payload("interval", args.shape)
    lines = [f"interval [{payload['w']}, {payload['n']}] of {payload['shape']} ({len(report.interval)} partitions):"]
    missing = set(report.missing)
    for p in report.interval:
        lines.append(f"  {'*' if p in missing else ' '} {_fmt(p)}")
    if missing:
        lines.append("  (* = not in the support)")
    _emit(args, payload, "\n".join(lines))
    return 0


def _classify(args: argparse.Namespace) -> int:
    shape = basic_form(parse_shape(args.shape))
    mf = classify_mf(shape)
    match = match_full_interval_config(shape)
    witness = detect_bad_config(shape)
    config = None
    if match.matched:
        config = {
            "name": match.config,
            "symmetry": match.symmetry,
            "blocks": list(match.stripped_blocks),
            "params": match.params,
        }
    payload = {
        "command": "classify",
        "shape": format_shape(shape),
        "mf_cases": sorted(mf.cases),
        "config": config,
        "witness": None if witness is None else {"xi": _fmt(witness.xi), "reason": witness.reason},
    }
    lines = [
        f"shape:    {format_shape(shape)}",
        "mf cases: " + (", ".join(sorted(mf.cases)) or "none (some coefficient exceeds 1)"),
    ]
    if match.matched:
        params = ", ".join(f"{k}={v}" for k, v in match.params.items())
        depth, width = match.stripped_blocks
        lines.append(
            f"config:   {match.config} via {match.symmetry}"
            + (f" ({params})" if params else "")
            + (f", blocks depth={depth} width={width}" if depth or width else "")
        )
    else:
        lines.append("config:   None")
    if witness is not None:
        lines.append(f"witness:  xi={_fmt(witness.xi)} not in support ({witness.reason})")
    _emit(args, payload, "\n".join(lines))
    return 0


def _ribbon(args: argparse.Namespace) -> int:
    comp = parse_ribbon(args.composition)
    verdict = ribbon_full_support(comp)
    payload: dict[str, Any] = {"command": "ribbon", "ribbon": list(comp.cols), "full": verdict.full, "witness": None}
    text = f"ribbon {tuple(comp.cols)}: " + ("full interval" if verdict.full else "not full")
    if verdict.witness is not None:
        wit = verdict.witness
        payload["witness"] = {
            "S": sorted(wit.subset_s),
            "B": sorted(wit.subset_b),
            "k": wit.k,
            "xi": _fmt(wit.xi),
        }
        text += f"\n  S={sorted(wit.subset_s)} B={sorted(wit.subset_b)} k={wit.k} xi={_fmt(wit.xi)}"
    _emit(args, payload, text)
    return 0


def _product(args: argparse.Namespace) -> int:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    verdict = product_full_interval(mu, nu)
    payload = {
        "command": "product",
        "mu": _fmt(mu),
        "nu": _fmt(nu),
        "case": verdict.case,
        "full": verdict.full,
        "mf": verdict.mf,
    }
    text = (
        f"s{_fmt(mu)} s{_fmt(nu)}: "
        + (f"case {verdict.case}, full interval" if verdict.full else "not full")
        + (", multiplicity-free" if verdict.mf else ", not multiplicity-free")
    )
    _emit(args, payload, text)
    return 0


def _verify(args: argparse.Namespace) -> int:
    scans = ["main", "mf", "product-mf", "ribbon"] if args.scan == "all" else [args.scan]
    reports = []
    for name in scans:
        if name == "main":
            reports.append(cross_validate_main(args.max_size, args.max_rows, args.max_cols, jobs=args.jobs))
        elif name == "mf":
            reports.append(cross_validate_mf(args.max_size, args.max_rows, args.max_cols, jobs=args.jobs))
        elif name == "product-mf":
            reports.append(cross_validate_product_mf(args.max_factor, jobs=args.jobs))
        else:
            reports.append(cross_validate_ribbon(args.max_columns, args.max_length, jobs=args.jobs))
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": "verify", "reports": [r.to_json() for r in reports]}, sort_keys=True))
    else:
        print("\n\n".join(r.to_table() for r in reports))
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewschur", description="Skew Schur expansions and Schur intervals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("expand", _expand, "print the Schur expansion of a skew shape"),
        ("support", _support, "print the support and the missing partitions"),
        ("interval", _interval, "print the Schur interval, marking partitions outside the support"),
        ("classify", _classify, "multiplicity-free cases, full-interval configuration and a witness"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument("shape", help="e.g. [4,4,3]/[2], [3,2] or ribbon:(3,2,5)")
        cmd.set_defaults(func=func)

    cmd = sub.add_parser("ribbon", parents=[common], help="full-support criterion for a column ribbon")
    cmd.add_argument("composition", help="column lengths right to left, e.g. (6,2,2,2,2,7,6)")
    cmd.set_defaults(func=_ribbon)

    cmd = sub.add_parser("product", parents=[common], help="full-interval case of a product of two Schur functions")
    cmd.add_argument("mu")
    cmd.add_argument("nu")
    cmd.set_defaults(func=_product)

    cmd = sub.add_parser("verify", parents=[common], help="cross-validate classifiers against brute force")
    cmd.add_argument("--scan", choices=("main", "mf", "product-mf", "ribbon", "all"), default="main")
    cmd.add_argument("--max-size", type=int, default=9)
    cmd.add_argument("--max-rows", type=int, default=7)
    cmd.add_argument("--max-cols", type=int, default=7)
    cmd.add_argument("--max-factor", type=int, default=6, help="largest factor size for product-mf")
    cmd.add_argument("--max-columns", type=int, default=6, help="most columns for the ribbon scan")
    cmd.add_argument("--max-length", type=int, default=5, help="longest column for the ribbon scan")
    cmd.add_argument("--jobs", type=int, default=1)
    cmd.set_defaults(func=_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and min(args.max_size, args.max_rows, args.max_cols, args.jobs) < 1:
        parser.error("bounds and --jobs must be at least 1")
    try:
        return args.func(args)
    except SkewSchurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
