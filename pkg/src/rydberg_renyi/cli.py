"""Command-line front end.

Subcommands: ``entropy`` (one value), ``sweep`` (one variable over a
range), ``figures`` (data behind the five published plots), ``verify``
(acceptance checks) and ``constants`` (C, C_B, C_A).

Exit codes: 0 success, 1 failed verification, 2 invalid input,
3 divergent integral or uncertified accuracy.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import acceptance
from .config import ENV_VAR, build_config
from .constants import airy_constant, bessel_constant, cosine_constant
from .entropy import (
    Method,
    OscillatorState,
    disequilibrium,
    entropic_moment,
    renyi_entropy,
    renyi_power,
)
from .errors import DivergenceError, DomainError, RydbergRenyiError, ToleranceError
from .norms import classify, make_spec

__all__ = ["main", "build_parser", "evaluate", "format_number", "parse_range"]

SCHEMA_LINE = "# schema=1"
EXIT_OK, EXIT_VERIFY, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3

_QUANTITIES = {
    "renyi": renyi_entropy,
    "power": renyi_power,
    "wp": entropic_moment,
    "diseq": None,
}


class CliError(Exception):
    """Invalid command-line input (exit code 2)."""


def format_number(x):
    """Fixed 12-significant-digit rendering used in every CSV/JSON value."""
    return format(float(x) + 0.0, ".12g")  # + 0.0 folds -0.0 into 0.0


def parse_range(text, integer=False):
    """``a:b:step`` inclusive of ``b`` (within rounding) into a list."""
    try:
        a, b, step = (float(part) for part in text.split(":"))
    except ValueError:
        raise CliError(f"range must look like a:b:step, got {text!r}") from None
    if not step > 0 or b < a:
        raise CliError(f"range {text!r} needs step > 0 and a <= b")
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    values = [round(a + k * step, 12) for k in range(count)]
    if integer:
        if any(v != int(v) for v in values):
            raise CliError(f"range {text!r} must produce integers")
        values = [int(v) for v in values]
    return values


# --------------------------------------------------------------------------
# evaluation


def evaluate(n, l, dim, p, lam, quantity, method, acc):
    """One record: dict with inputs, derived parameters, value and caveat."""
    if quantity == "diseq":
        p = 2.0
    if p is None:
        raise CliError(f"--p is required for quantity {quantity}")
    if p == 1 and quantity in ("renyi", "power"):
        raise CliError("p = 1 is excluded for Rényi quantities; use --quantity wp")
    try:
        state = OscillatorState(n, l, dim, lam)
        spec = make_spec(n, l, dim, p)
    except DomainError as exc:
        raise CliError(str(exc)) from None
    if quantity == "diseq":
        res = disequilibrium(state, method, acc)
    else:
        res = _QUANTITIES[quantity](state, p, method, acc)
    return {
        "inputs": {"n": n, "l": l, "dim": dim, "p": p, "lambda": lam, "quantity": quantity, "method": res.method.value},
        "derived": {"alpha": spec.alpha, "beta": spec.beta, "branch": classify(spec).branch.value},
        "value": res.value,
        "caveat": res.caveat.value if res.caveat is not None else "none",
    }


def _csv_text(header, rows):
    buf = io.StringIO()
    buf.write(SCHEMA_LINE + "\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(format_number(v) if isinstance(v, float) else str(v) for v in row) + "\n")
    return buf.getvalue()


def _json_record(record):
    out = json.loads(json.dumps(record))
    out["value"] = float(format_number(record["value"]))
    for key in ("alpha", "beta"):
        out["derived"][key] = float(format_number(record["derived"][key]))
    return out


def _emit(text, output):
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommands


def cmd_entropy(args, cfg):
    record = evaluate(args.n, args.l, args.dim, args.p, args.lam, args.quantity, cfg.method, cfg.accuracy)
    if cfg.format == "json":
        text = json.dumps(_json_record(record), sort_keys=True) + "\n"
    else:
        ins, der = record["inputs"], record["derived"]
        header = ["n", "l", "dim", "p", "lambda", "quantity", "method", "alpha", "beta", "branch", "value", "caveat"]
        row = [
            ins["n"], ins["l"], float(ins["dim"]), float(ins["p"]), float(ins["lambda"]), ins["quantity"],
            ins["method"], der["alpha"], der["beta"], der["branch"], float(record["value"]), record["caveat"],
        ]  # fmt: skip
        text = _csv_text(header, [row])
    _emit(text, cfg.output)
    return EXIT_OK


def cmd_sweep(args, cfg):
    integer = args.var in ("n", "l")
    values = parse_range(args.range, integer=integer)
    base = {"n": args.n, "l": args.l, "dim": args.dim, "p": args.p}
    missing = [k for k, v in base.items() if v is None and k != args.var and not (k == "p" and args.quantity == "diseq")]
    if missing:
        raise CliError("sweep needs fixed values for: " + ", ".join("--" + m for m in missing))
    if args.var == "p" and args.quantity == "diseq":
        raise CliError("the disequilibrium has p = 2 fixed; sweep another variable")
    if args.var == "p" and args.quantity in ("renyi", "power") and 1.0 in values:
        values = [v for v in values if v != 1.0]
        print("note: p = 1 skipped, Rényi quantities need p != 1", file=sys.stderr)

    def one(v):
        kw = dict(base, **{args.var: v})
        return evaluate(kw["n"], kw["l"], kw["dim"], kw["p"], args.lam, args.quantity, cfg.method, cfg.accuracy)

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        records = list(pool.map(one, values))  # map keeps input order

    if cfg.format == "json":
        payload = [dict(_json_record(r), var={"name": args.var, "value": v}) for v, r in zip(values, records)]
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        rows = [
            [v if integer else float(v), r["derived"]["alpha"], r["derived"]["beta"], r["derived"]["branch"],
             float(r["value"]), r["caveat"]]
            for v, r in zip(values, records)
        ]  # fmt: skip
        text = _csv_text(["var", "alpha", "beta", "branch", "value", "caveat"], rows)
    _emit(text, cfg.output)
    return EXIT_OK


def _figure_rows(which, method_override, acc):
    """(file stem, header, rows) for one figure."""
    asym = method_override or Method.ASYMPTOTIC
    auto = method_override or Method.AUTO
    if which == 1:
        orders = [round(0.5 + 0.1 * k, 12) for k in range(46) if k != 5]  # 0.5 .. 5.0 without p = 1
        rows = []
        for p in orders:
            vals = [renyi_power(OscillatorState(50, 0, D), p, auto, acc).value for D in (2, 4)]
            rows.append([p, *vals])
        return "figure1", ["p", "power_D2", "power_D4"], rows
    if which in (2, 3):
        D = 2 if which == 2 else 6
        rows = [[n, disequilibrium(OscillatorState(n, 0, D), asym, acc).value] for n in range(10, 101)]
        return f"figure{which}", ["n", "diseq"], rows
    if which == 4:
        rows = [[l, disequilibrium(OscillatorState(50, l, 4), auto, acc).value] for l in range(11)]
        return "figure4", ["l", "diseq"], rows
    rows = [[D, disequilibrium(OscillatorState(50, 0, D), asym, acc).value] for D in range(2, 31)]
    return "figure5", ["dim", "diseq"], rows


def cmd_figures(args, cfg):
    which = [1, 2, 3, 4, 5] if args.which == "all" else [int(args.which)]
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    override = cfg.method if args.method is not None else None
    for w in which:
        stem, header, rows = _figure_rows(w, override, cfg.accuracy)
        path = out / f"{stem}.csv"
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_csv_text(header, [[float(v) if isinstance(v, float) else v for v in r] for r in rows]))
        print(f"wrote {path}")
    return EXIT_OK


def cmd_verify(args, cfg):
    only = set(args.only) if args.only else None
    results = []
    for res in acceptance.run_checks(fast=args.fast, acc=cfg.accuracy, zones=cfg.zones, only=only):
        print(res.line(), flush=True)
        results.append(res)
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return EXIT_OK if passed == len(results) else EXIT_VERIFY


def cmd_constants(args, cfg):
    acc = cfg.accuracy
    a, b, p = args.alpha, args.beta, args.p
    out = {}

    def attempt(name, needs, func):
        absent = [k for k, v in needs.items() if v is None]
        if absent:
            out[name] = {"status": "skipped", "reason": "needs " + ", ".join("--" + k for k in absent)}
            return
        try:
            out[name] = {"status": "ok", "value": func()}
        except ToleranceError:
            raise
        except DomainError as exc:
            out[name] = {"status": "violated", "reason": f"{type(exc).__name__}: {exc}"}

    attempt("C", {"beta": b, "p": p}, lambda: cosine_constant(b, p))
    attempt("C_B", {"alpha": a, "beta": b, "p": p}, lambda: bessel_constant(a, b, p, acc))
    attempt("C_A", {"p": p}, lambda: airy_constant(p, acc))

    if cfg.format == "json":
        for entry in out.values():
            if "value" in entry:
                entry["value"] = float(format_number(entry["value"]))
        text = json.dumps({"inputs": {"alpha": a, "beta": b, "p": p}, "constants": out}, sort_keys=True) + "\n"
    else:
        lines = []
        for name, entry in out.items():
            if entry["status"] == "ok":
                lines.append(f"{name} = {format_number(entry['value'])}")
            else:
                lines.append(f"{name}: {entry['reason']}")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg.output)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def _common(parser):
    g = parser.add_argument_group("run configuration")
    g.add_argument("--method", choices=["exact", "asymptotic", "auto"], help="evaluation method (default auto)")
    g.add_argument("--format", choices=["csv", "json"], help="output format (default csv)")
    g.add_argument("--output", help="write to this file instead of stdout")
    g.add_argument("--abs-tol", type=float, help="absolute tolerance")
    g.add_argument("--rel-tol", type=float, help="relative tolerance")
    g.add_argument("--eps", type=float, help="oscillatory zone ends at (4 - eps) n")
    g.add_argument("--t-max", type=float, help="half width of the Airy zone in t")
    g.add_argument("--theta", type=float, help="growing zone starts at 4n + n^(1/3 + theta)")


def _state_flags(parser, required):
    parser.add_argument("--n", type=int, required=required, help="principal hyperquantum number")
    parser.add_argument("--l", type=int, required=required, help="orbital quantum number")
    parser.add_argument("--dim", type=float, required=required, help="dimension D")
    parser.add_argument("--p", type=float, help="order p")
    parser.add_argument("--lambda", dest="lam", type=float, default=1.0, help="oscillator strength (default 1)")
    parser.add_argument("--quantity", choices=sorted(_QUANTITIES), default="renyi", help="default renyi")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rydberg-renyi",
        description="Rényi entropies and Laguerre L_p-norms of D-dimensional oscillator states.",
        epilog=f"Config file: set {ENV_VAR} to a file of key = value lines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="evaluate one quantity")
    _state_flags(p, required=True)
    _common(p)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("sweep", help="evaluate over a range of one variable")
    p.add_argument("--var", choices=["p", "n", "l", "dim"], required=True)
    p.add_argument("--range", required=True, help="a:b:step, inclusive")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    _state_flags(p, required=False)
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figures", help="write the data behind figures 1-5")
    p.add_argument("--which", choices=["1", "2", "3", "4", "5", "all"], default="all")
    p.add_argument("--out", default=".", help="output directory")
    _common(p)
    p.set_defaults(func=cmd_figures)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--fast", action="store_true", help="skip the n = 500 checks")
    p.add_argument("--only", type=int, nargs="+", metavar="K", help="run only these check numbers")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constants", help="regime constants C, C_B, C_A")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--p", type=float)
    _common(p)
    p.set_defaults(func=cmd_constants)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(
            {
                "method": args.method,
                "format": args.format,
                "output": args.output,
                "abs_tol": args.abs_tol,
                "rel_tol": args.rel_tol,
                "eps": args.eps,
                "t_max": args.t_max,
                "theta": args.theta,
            }
        )
        return args.func(args, cfg)
    except (CliError, DomainError) as exc:
        if isinstance(exc, DivergenceError):
            print(f"DivergenceError: {exc}", file=sys.stderr)
            return EXIT_NUMERIC
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ToleranceError as exc:
        print(f"ToleranceError: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except RydbergRenyiError as exc:  # pragma: no cover - every subclass is handled above
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
