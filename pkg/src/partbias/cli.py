"""Command-line front end with machine-readable JSON/CSV output.

Data goes to stdout; warnings, timings and budget notes go to stderr.
Exit codes: 0 success, 2 validation error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__, asymptote, counter, geometry, progression
from .core import validate_system
from .errors import BudgetError, PartBiasError, ValidationError

CSV_HEADER = ["n", "N", "total", "greater", "less", "equal", "ratio"]


def frac_str(value: Optional[Fraction]) -> Optional[str]:
    """Lossless "p/q" form; None stays None (serialized as null/empty)."""
    if value is None:
        return None
    return f"{value.numerator}/{value.denominator}"


def parse_frac(text: str) -> Fraction:
    num, den = text.split("/")
    return Fraction(int(num), int(den))


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _record(command: str, inputs: dict, results: list[dict]) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "metadata": {"version": __version__},
    }


def _emit(record: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(record, out, indent=2, sort_keys=True)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in record["results"]:
        writer.writerow(["" if row.get(k) is None else row.get(k)
                        for k in CSV_HEADER])


def _count_rows(sys_, n_values: list[int]) -> list[dict]:
    counts = {bc.n: bc for bc in counter.bias_counts_upto(sys_, max(n_values))}
    rows = []
    for n in n_values:
        bc = counts[n]
        rows.append({"n": n, "N": None, "total": bc.total,
                     "greater": bc.greater, "less": bc.less,
                     "equal": bc.equal, "ratio": frac_str(bc.ratio)})
    return rows


def cmd_count(args) -> dict:
    sys_ = validate_system(args.r, args.s, args.i or ())
    if sys_.theorem_gated:
        print(f"warning: gcd(R u S) = {sys_.gcd_all} > 1; "
              "limit formula gated", file=sys.stderr)
    if args.n is not None:
        n_values = [args.n]
    else:
        n_values = list(range(0, args.n_max + 1, args.step))
    inputs = {"r": list(sys_.r), "s": list(sys_.s), "i": list(sys_.i),
              "n_values": n_values}
    return _record("count", inputs, _count_rows(sys_, n_values))


def cmd_asymptote(args) -> dict:
    rep = asymptote.report(args.r, args.s)
    inputs = {"r": sorted(args.r), "s": sorted(args.s)}
    row = {"ratio_limit": frac_str(rep.ratio_limit),
           "lead_total": frac_str(rep.lead_total),
           "lead_greater": frac_str(rep.lead_greater),
           "dimension": rep.dimension}
    return _record("asymptote", inputs, [row])


def cmd_volume(args) -> dict:
    v_ab, v_ba, total = geometry.complement_identity_check(args.a, args.b)
    inputs = {"a": list(args.a), "b": list(args.b)}
    row = {"v_ab": frac_str(v_ab), "v_ba": frac_str(v_ba),
           "simplex_total": frac_str(total)}
    return _record("volume", inputs, [row])


def cmd_progression(args) -> dict:
    spec = progression.ProgressionSpec(args.r, args.s, args.m, args.N)
    if args.mode == "exact":
        value = frac_str(progression.c_limit_exact(spec))
    elif args.mode == "beta":
        if args.s != args.m:
            raise ValidationError("beta mode requires s = m")
        value = frac_str(progression.c_limit_beta(args.r, args.m, args.N))
    elif args.mode == "quadrature":
        value = repr(progression.c_limit_quadrature(spec))
    else:
        if args.s != args.m:
            raise ValidationError("gamma mode requires s = m")
        value = repr(progression.gamma_form(args.r, args.m, args.N))
    inputs = {"r": args.r, "s": args.s, "m": args.m, "N": args.N,
              "mode": args.mode}
    return _record("progression", inputs, [{"mode": args.mode,
                                            "value": value}])


def cmd_conjecture(args) -> dict:
    table = progression.conjecture_table(args.r, args.s, args.m,
                                         args.n_grid, args.N_grid)
    rows = []
    for cell in table.rows:
        bc = cell.count
        rows.append({
            "n": cell.n, "N": cell.n_terms,
            "total": bc.total if bc else None,
            "greater": bc.greater if bc else None,
            "less": bc.less if bc else None,
            "equal": bc.equal if bc else None,
            "ratio": frac_str(cell.ratio)})
    for n_terms in sorted(table.limits):
        rows.append({"n": None, "N": n_terms, "total": None,
                     "greater": None, "less": None, "equal": None,
                     "ratio": frac_str(table.limits[n_terms])})
    report = progression.conjecture_report(table)
    if table.target is not None:
        print(f"target 2^(-r/m) = {table.target!r}; "
              f"limit gaps {report['limit_gaps']}; "
              f"monotone={report['limits_monotone_toward_target']}",
              file=sys.stderr)
    inputs = {"r": args.r, "s": args.s, "m": args.m,
              "n_grid": sorted(set(args.n_grid)),
              "N_grid": sorted(set(args.N_grid))}
    return _record("conjecture", inputs, rows)


def _apply_config(args: argparse.Namespace) -> None:
    """Fill unset options from a flat key=value config file."""
    path = getattr(args, "config", None)
    if not path:
        return
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, raw = line.partition("=")
            key = key.strip().replace("-", "_")
            if getattr(args, key, None) is None:
                if key in ("r", "s", "i", "a", "b", "n_grid", "N_grid") \
                        and args.command in ("count", "asymptote", "volume",
                                             "conjecture"):
                    setattr(args, key, _int_list(raw))
                else:
                    setattr(args, key, int(raw))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partbias",
        description="Exact bias counts, limit formulas and polytope "
                    "volumes for restricted partitions.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact bias counts and ratios")
    p.add_argument("--r", type=_int_list)
    p.add_argument("--s", type=_int_list)
    p.add_argument("--i", type=_int_list, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--config", default=None)

    p = sub.add_parser("asymptote", help="closed-form limit ratio")
    p.add_argument("--r", type=_int_list)
    p.add_argument("--s", type=_int_list)
    p.add_argument("--config", default=None)

    p = sub.add_parser("volume", help="V-form volumes and complement total")
    p.add_argument("--a", type=_int_list)
    p.add_argument("--b", type=_int_list)
    p.add_argument("--config", default=None)

    p = sub.add_parser("progression", help="C_{n,N} limit evaluators")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--mode", choices=["exact", "beta", "quadrature", "gamma"],
                   default="exact")
    p.add_argument("--config", default=None)

    p = sub.add_parser("conjecture", help="double-limit exploration table")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n-grid", type=_int_list)
    p.add_argument("--N-grid", type=_int_list)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--config", default=None)
    return parser


_HANDLERS = {
    "count": cmd_count,
    "asymptote": cmd_asymptote,
    "volume": cmd_volume,
    "progression": cmd_progression,
    "conjecture": cmd_conjecture,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _apply_config(args)
    required = {
        "count": ["r", "s"],
        "asymptote": ["r", "s"],
        "volume": ["a", "b"],
        "progression": ["r", "s", "m", "N"],
        "conjecture": ["r", "s", "m", "n_grid", "N_grid"],
    }
    missing = [name for name in required[args.command]
               if getattr(args, name) is None]
    if missing:
        print(f"ValidationError: missing required option(s): "
              f"{', '.join('--' + m for m in missing)}", file=sys.stderr)
        return 2
    if args.command == "count" and args.n is None and args.n_max is None:
        print("ValidationError: need --n or --n-max", file=sys.stderr)
        return 2
    started = time.perf_counter()
    try:
        record = _HANDLERS[args.command](args)
    except BudgetError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, PartBiasError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    fmt = getattr(args, "format", "json")
    _emit(record, fmt, sys.stdout)
    elapsed = time.perf_counter() - started
    print(f"elapsed {elapsed:.3f}s", file=sys.stderr)
    return 0


def render(record: dict, fmt: str) -> str:
    """Render a record to a string (used by tests for round-trip checks)."""
    buf = io.StringIO()
    _emit(record, fmt, buf)
    return buf.getvalue()


if __name__ == "__main__":
    raise SystemExit(main())
