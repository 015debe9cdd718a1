"""Command-line entry point.

Exit codes: 0 success / verified, 1 verified-false, 2 usage error,
3 construction failure, 4 budget refusal.  Every randomized subcommand
requires an explicit --seed so reruns are byte-identical; each construct
run writes a manifest side file recording the full parameter map.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time

from . import __version__
from .bounds import bound_reports, closing_chain_check
from .constructions import (
    ConstructionError,
    blowup,
    construction_parameters,
    lll_certificate_for,
    lll_condition,
    moser_tardos_color,
    recursive_system,
    trivial_prefix_system,
)
from .hypergraph import (
    BudgetExceededError,
    UniformHypergraph,
    is_turan_system,
    sample_verify,
)
from .solver import ValueCache, solve_with_cache

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3
EXIT_BUDGET = 4


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_manifest(subcommand: str, args: argparse.Namespace, out: str | None) -> None:
    if out is None:
        return
    params = {
        k: v for k, v in sorted(vars(args).items()) if k not in {"func", "out"}
    }
    with open(out, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    manifest = {
        "subcommand": subcommand,
        "parameters": params,
        "seed": getattr(args, "seed", None),
        "tool_version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "outputs": {out: digest},
    }
    with open(out + ".manifest.json", "w") as fh:
        fh.write(_dump(manifest))


def _load_system(path: str) -> UniformHypergraph:
    with open(path) as fh:
        return UniformHypergraph.from_json(fh.read())


# --- construct ---


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        if args.kind == "prefix":
            system = trivial_prefix_system(args.n, args.s, args.r)
        elif args.kind == "coloring":
            if args.seed is None:
                print("coloring requires --seed", file=sys.stderr)
                return EXIT_USAGE
            outcome = moser_tardos_color(
                args.n, args.s, args.r, args.ell, args.seed, args.max_rounds
            )
            if not outcome.success:
                print(
                    f"resampling cap reached; last violated s-set {outcome.failed_s_set}",
                    file=sys.stderr,
                )
                return EXIT_CONSTRUCTION
            system = outcome.least_class
        elif args.kind == "blowup":
            A = _load_system(args.input)
            system, _report = blowup(A, args.m)
        elif args.kind == "recursive":
            if args.seed is None:
                print("recursive requires --seed", file=sys.stderr)
                return EXIT_USAGE
            system, _sample = recursive_system(
                args.n, args.r, args.big_r, args.k, args.c, args.seed
            )
        else:  # pragma: no cover - argparse restricts choices
            return EXIT_USAGE
    except BudgetExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except ConstructionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CONSTRUCTION
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    _write_output(_dump(system.to_json_dict()), args.out)
    _write_manifest("construct", args, args.out)
    return EXIT_OK


# --- verify ---


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        H = _load_system(args.input)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"cannot parse {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.mode == "exhaustive":
            report = is_turan_system(H, args.s, budget=args.budget)
        else:
            if args.seed is None:
                print("sample mode requires --seed", file=sys.stderr)
                return EXIT_USAGE
            report = sample_verify(H, args.s, args.trials, args.seed)
    except BudgetExceededError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(_dump(report.to_json_dict()))
    return EXIT_OK if report.is_turan else EXIT_FALSE


# --- solve ---


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        result = solve_with_cache(args.n, args.s, args.r, cache=ValueCache())
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(_dump(result.to_json_dict()))
    return EXIT_OK if result.proven_optimal else EXIT_BUDGET


# --- bounds ---

_CSV_COLUMNS = ["r", "R", "bound_name", "kind", "value", "assumptions"]


def _bounds_rows(r: int, R: int, eps1: float) -> list[dict]:
    return [
        {
            "r": r,
            "R": R,
            "bound_name": rep.name,
            "kind": rep.kind,
            "value": rep.value,
            "assumptions": "; ".join(rep.assumptions),
        }
        for rep in bound_reports(r, R, eps1)
    ]


def _emit_rows(rows: list[dict], fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(_dump({"rows": rows}))
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())


def cmd_bounds(args: argparse.Namespace) -> int:
    try:
        rows = _bounds_rows(args.r, args.big_r, args.eps1)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    _emit_rows(rows, args.format)
    return EXIT_OK


# --- certify-lll ---


def cmd_certify_lll(args: argparse.Namespace) -> int:
    try:
        if args.n is not None and args.ell is not None:
            cert = lll_condition(args.n, args.r + args.big_r, args.r, args.ell)
            chain = None
        else:
            params = construction_parameters(args.r, args.big_r)
            if params.degenerate:
                print(f"degenerate parameters: {params.degenerate_reason}", file=sys.stderr)
                return EXIT_CONSTRUCTION
            cert = lll_certificate_for(params)
            chain = closing_chain_check(args.r, args.big_r)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    payload = {"certificate": cert.to_json_dict()}
    if chain is not None:
        payload["chain_check"] = chain.to_json_dict()
    sys.stdout.write(_dump(payload))
    return EXIT_OK if cert.condition_holds else EXIT_FALSE


# --- table ---


def _parse_grid(spec: str) -> tuple[list[int], list[int]]:
    """Grid spec "r=4,5,6;R=1,2" -> (r values, R values)."""
    values: dict[str, list[int]] = {}
    for part in spec.split(";"):
        name, _, items = part.partition("=")
        name = name.strip()
        if name not in {"r", "R"} or not items:
            raise ValueError(f"bad grid component {part!r}; expected r=... or R=...")
        values[name] = [int(tok) for tok in items.split(",")]
    if "r" not in values or "R" not in values:
        raise ValueError("grid must define both r and R, e.g. 'r=4,5,6;R=1,2'")
    return values["r"], values["R"]


def cmd_table(args: argparse.Namespace) -> int:
    try:
        r_values, R_values = _parse_grid(args.grid)
        rows = []
        for r in r_values:
            for R in R_values:
                rows.extend(_bounds_rows(r, R, args.eps1))
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    _emit_rows(rows, args.format)
    return EXIT_OK


# --- parser ---


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="turan", description="Turán system construction and bound toolkit"
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a system and write canonical JSON")
    p.add_argument("kind", choices=["prefix", "coloring", "blowup", "recursive"])
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--big-r", type=int, dest="big_r", help="the gap R = s - r")
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=float)
    p.add_argument("--m", type=int, help="blowup multiplicity")
    p.add_argument("--ell", type=int, help="number of colours")
    p.add_argument("--input", help="input system for blowup")
    p.add_argument("--seed", type=int)
    p.add_argument("--max-rounds", type=int, default=20_000)
    p.add_argument("--out", help="output path (stdout if omitted)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check the Turán property of a system file")
    p.add_argument("--input", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, default=10**9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact T(n,s,r) by branch and bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="all mu-scale bounds at one (r, R)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--big-r", type=int, dest="big_r", required=True)
    p.add_argument("--eps1", type=float, default=0.05)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify-lll", help="local-lemma certificate at (r, R)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--big-r", type=int, dest="big_r", required=True)
    p.add_argument("--n", type=int, help="override N instead of the schedule value")
    p.add_argument("--ell", type=int, help="override ell")
    p.set_defaults(func=cmd_certify_lll)

    p = sub.add_parser("table", help="bound table over a grid of (r, R) cells")
    p.add_argument("--grid", required=True, help="e.g. 'r=100,1000;R=3,10'")
    p.add_argument("--eps1", type=float, default=0.05)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
