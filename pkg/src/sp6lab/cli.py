"""Command-line front end.

Every subcommand prints a report with keys command / inputs / results / mode,
either as JSON (--json) or as an aligned tab-delimited table of the same data.
Exit status: 0 on success, 2 on usage errors, 1 on computation errors (with a
JSON error object on stdout).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Sequence

import jsonschema

from . import bmquad, lfunc, packets, uchar, wedge
from .gaussrat import GaussRat

EXACT_PAIRS = [(p, 6 - p) for p in range(6, -1, -1)]


class UsageError(Exception):
    pass


# --- argument helpers ----------------------------------------------------------------

def _weight(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three integers a,b,c, got {text!r}")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three integers a,b,c, got {text!r}")
    return parts  # type: ignore[return-value]


def _load_json(path: str) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _num(x) -> Any:
    """JSON-friendly form of an exact or float value."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GaussRat):
        return str(x.re) if x.is_rational else x.to_json()
    if isinstance(x, complex):
        return [x.real, x.imag]
    return x


# --- result schemas --------------------------------------------------------------

_FRAC = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_EXACT = {"anyOf": [_FRAC, {"type": "object", "required": ["re", "im"]}]}
_WEIGHT = {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}
_CPLX = {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}
_TABLE = {"type": "array", "items": {"type": "object", "required": ["hw", "mult"],
                                     "properties": {"hw": _WEIGHT, "mult": {"type": "integer"}}}}

SCHEMAS: dict[str, dict] = {
    "packets": {"type": "array", "minItems": 8, "maxItems": 8, "items": {
        "type": "object", "required": ["index", "hc_param", "min_ktype", "hodge"],
        "properties": {"hc_param": _WEIGHT, "min_ktype": _WEIGHT}}},
    "ktypes": {"type": "array", "items": {
        "type": "object", "required": ["p", "q", "table", "total_dimension", "expected_dimension"],
        "properties": {"table": _TABLE}}},
    "hwv-check": {"type": "array", "items": {
        "type": "object", "required": ["target", "annihilated", "weight_space_dimension", "vector"],
        "properties": {"target": _WEIGHT}}},
    "projector": {"type": "object", "required": ["target", "alpha", "step1", "step2"],
                  "properties": {"alpha": _EXACT, "step1": _EXACT, "step2": _EXACT}},
    "lfactor": {"type": "object", "required": ["s", "partial_l", "primes"],
                "properties": {"partial_l": _CPLX}},
    "gamma": {"type": "object", "required": ["at", "pole_order", "factors"],
              "properties": {"pole_order": {"type": "integer", "minimum": 0}}},
    "bm-verify": {"type": "object", "required": ["levels", "decay", "convention", "passed"]},
}


# --- subcommands --------------------------------------------------------------------

def cmd_packets(args) -> tuple[dict, Any, str]:
    lam = args.lam
    return {"lambda": list(lam)}, [d.to_json() for d in packets.packet(lam)], "exact"


def cmd_ktypes(args) -> tuple[dict, Any, str]:
    if (args.p is None) != (args.q is None):
        raise UsageError("give both --p and --q, or neither for all seven lines")
    pairs = [(args.p, args.q)] if args.p is not None else EXACT_PAIRS
    lines = []
    for p, q in pairs:
        if not (0 <= p <= 6 and 0 <= q <= 6):
            raise UsageError("p and q must lie in 0..6")
        table = uchar.decompose(uchar.wedge_tensor_char(p, q))
        lines.append({
            "p": p, "q": q,
            "table": table.to_json(),
            "total_dimension": table.total_dimension(),
            "expected_dimension": uchar.expected_dimension(p, q),
        })
    return {"p": args.p, "q": args.q}, lines, "exact"


def cmd_hwv_check(args) -> tuple[dict, Any, str]:
    targets = [args.target] if args.target else sorted(wedge.HIGHEST_WEIGHT_VECTORS, reverse=True)
    out = []
    for t in targets:
        if t not in wedge.HIGHEST_WEIGHT_VECTORS:
            raise UsageError(f"target must be one of {sorted(wedge.HIGHEST_WEIGHT_VECTORS)}")
        v = wedge.HIGHEST_WEIGHT_VECTORS[t]()
        out.append({
            "target": list(t),
            "vector": v.to_json(),
            "annihilated": wedge.raising_annihilates(v),
            "weight_space_dimension": wedge.weight_space_dimension(3, 3, t),
        })
    return {"target": list(args.target) if args.target else None}, out, "exact"


def cmd_projector(args) -> tuple[dict, Any, str]:
    return {"target": list(args.target)}, wedge.projection_data(args.target).to_json(), "exact"


def _satake_list(obj) -> list[lfunc.SatakeData]:
    items = obj if isinstance(obj, list) else [obj]
    data = [lfunc.SatakeData.from_json(o) for o in items]
    primes = [d.prime for d in data]
    if len(set(primes)) != len(primes):
        raise ValueError("each prime may appear only once")
    return sorted(data, key=lambda d: d.prime)


def cmd_lfactor(args) -> tuple[dict, Any, str]:
    data = _satake_list(_load_json(args.satake))
    used = [d for d in data if d.prime <= args.cutoff]
    primes = []
    for d in used:
        primes.append({
            "prime": d.prime,
            "denominator": [_num(c) for c in lfunc.spin_factor(d)],
            "value": _num(lfunc.local_factor_value(d, args.s)),
        })
    res: dict[str, Any] = {
        "s": args.s,
        "primes": primes,
        "partial_l": _num(lfunc.partial_l(used, args.s)),
    }
    if args.expand:
        coeffs = lfunc.dirichlet_coefficients(used, args.expand)
        res["dirichlet"] = {str(n): _num(a) for n, a in coeffs.items()}
        res["dirichlet_sum"] = _num(lfunc.dirichlet_sum(coeffs, args.s))
    inputs = {"satake": args.satake, "s": args.s, "cutoff": args.cutoff, "expand": args.expand}
    return inputs, res, "float"


def cmd_gamma(args) -> tuple[dict, Any, str]:
    h = lfunc.HodgeNumbers.from_json(_load_json(args.hodge))
    factors = lfunc.gamma_factor(h)
    res = {
        "at": args.at,
        "hodge": h.to_json(),
        "factors": [g.to_json() for g in factors],
        "pole_order": lfunc.pole_order(h, args.at),
    }
    return {"hodge": args.hodge, "at": args.at}, res, "exact"


def cmd_bm_verify(args) -> tuple[dict, Any, str]:
    if args.N < 2:
        raise UsageError("--N must be at least 2")
    if args.levels < 1 or args.grid < 1:
        raise UsageError("--levels and --grid must be positive")
    rep = bmquad.verify(N=args.N, grid=args.grid, levels=args.levels, tol=args.tol)
    inputs = {"N": args.N, "grid": args.grid, "levels": args.levels, "tol": args.tol}
    return inputs, rep, "float"


COMMANDS: dict[str, Callable] = {
    "packets": cmd_packets,
    "ktypes": cmd_ktypes,
    "hwv-check": cmd_hwv_check,
    "projector": cmd_projector,
    "lfactor": cmd_lfactor,
    "gamma": cmd_gamma,
    "bm-verify": cmd_bm_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    common.add_argument("--timing", action="store_true",
                        help="include elapsed seconds (output is then not reproducible)")

    ap = argparse.ArgumentParser(prog="sp6lab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("packets", parents=[common], help="discrete-series packet for lambda")
    p.add_argument("--lambda", dest="lam", type=_weight, required=True, metavar="a,b,c")

    p = sub.add_parser("ktypes", parents=[common], help="U(3) decomposition of wedge^p p+ (x) wedge^q p-")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--figure", metavar="PATH", help="write a multiplicity bar chart")

    p = sub.add_parser("hwv-check", parents=[common], help="highest-weight annihilation checks")
    p.add_argument("--target", type=_weight)

    p = sub.add_parser("projector", parents=[common], help="projection constant of X_0")
    p.add_argument("--target", type=_weight, required=True, metavar="a,b,c")

    p = sub.add_parser("lfactor", parents=[common], help="local Spin factors and partial L")
    p.add_argument("--satake", required=True, metavar="FILE")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--cutoff", type=int, default=1000)
    p.add_argument("--expand", type=int, default=0, metavar="BOUND",
                   help="also list Dirichlet coefficients a(n) for n <= BOUND")

    p = sub.add_parser("gamma", parents=[common], help="archimedean Gamma factor and pole order")
    p.add_argument("--hodge", required=True, metavar="FILE")
    p.add_argument("--at", type=int, required=True)

    p = sub.add_parser("bm-verify", parents=[common], help="Bochner-Martinelli quadrature report")
    p.add_argument("--N", type=int, default=6)
    p.add_argument("--grid", type=int, default=16)
    p.add_argument("--levels", type=int, default=3)
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--figure", metavar="PATH", help="write residual and decay plots")
    return ap


# --- rendering --------------------------------------------------------------------

def _flatten(obj: Any, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(obj, dict):
        rows = []
        for k in sorted(obj):
            rows += _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
        return rows
    if isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        rows = []
        for i, x in enumerate(obj):
            rows += _flatten(x, f"{prefix}[{i}]")
        return rows
    return [(prefix, json.dumps(obj, sort_keys=True))]


def render_table(report: dict) -> str:
    rows = _flatten(report)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}\t{v}" for k, v in rows)


def render_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    t0 = time.perf_counter()
    try:
        inputs, results, mode = COMMANDS[args.command](args)
        jsonschema.validate(results, SCHEMAS[args.command])
        report: dict[str, Any] = {
            "command": args.command, "inputs": inputs, "results": results, "mode": mode,
        }
        fig = getattr(args, "figure", None)
        if fig:
            from . import figures

            if args.command == "ktypes":
                report["figure"] = figures.ktype_bars(results, fig)
            else:
                report["figure"] = figures.bm_convergence(results, fig)
        if args.timing:
            report["elapsed"] = round(time.perf_counter() - t0, 6)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, ArithmeticError, KeyError, TypeError, OSError,
            RuntimeError, jsonschema.ValidationError) as exc:
        err: dict[str, Any] = {"type": type(exc).__name__, "message": str(exc).splitlines()[0]}
        diag = getattr(exc, "diagnostics", None)
        if diag:
            err["diagnostics"] = diag
        print(render_json({"command": args.command, "error": err}), file=out)
        return 1
    print(render_json(report) if args.json else render_table(report), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
