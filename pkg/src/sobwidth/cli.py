"""Command-line frontend: ``sobwidth <subcommand> ...``.

Tables go to standard output (or ``--out``), diagnostics to standard error.
Exit status: 0 success, 1 usage error, 2 verification failure, 3 resource
guard rejection.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from decimal import Decimal, InvalidOperation

from . import __version__
from .envelopes import piecewise_envelope, strong_equiv_bracket
from .lattice import ResourceGuardError
from .limitspace import _C, limit_shell_index, limit_approx_number
from .oracle import OracleBoxError
from .profile import make_profile, parse_profile
from .spectrum import approx_number
from .tractability import info_complexity, limit_info_complexity, witness_eps, wt_ratio
from .verify import SUITES, run_suite
from .volumetrics import log_scaled_volume, strong_equiv_constant

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_GUARD = 0, 1, 2, 3
DEFAULT_MAX_POINTS = 10**7

if hasattr(sys, "set_int_max_str_digits"):
    # counts such as 3**d are printed in full
    sys.set_int_max_str_digits(0)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


# -- argument helpers --------------------------------------------------------

def _int_token(tok: str) -> int:
    try:
        val = Decimal(tok.strip())
    except InvalidOperation:
        raise UsageError(f"not an integer: {tok!r}") from None
    if val != val.to_integral_value():
        raise UsageError(f"not an integer: {tok!r}")
    return int(val)


def parse_indices(text: str) -> list[int]:
    """``"k"``, ``"a:b"`` or ``"a:b:step"`` (inclusive), or a comma list of these."""
    out: list[int] = []
    for part in text.split(","):
        fields = part.split(":")
        if len(fields) == 1:
            out.append(_int_token(fields[0]))
        elif len(fields) in (2, 3):
            a, b = _int_token(fields[0]), _int_token(fields[1])
            step = _int_token(fields[2]) if len(fields) == 3 else 1
            if step < 1:
                raise UsageError(f"range step must be positive in {part!r}")
            if b < a:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(a, b + 1, step))
        else:
            raise UsageError(f"bad index range {part!r}")
    if any(n < 1 for n in out):
        raise UsageError("indices must be positive")
    return out


def _profile(text: str):
    try:
        return parse_profile(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- output ------------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def render(manifest: dict, columns: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        payload = {
            "manifest": manifest,
            "rows": [{c: _json_value(v) for c, v in zip(columns, r)} for r in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def _manifest(args) -> dict:
    skip = {"command", "format", "out", "func", "seed"}
    params = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    return {
        "command": args.command,
        "parameters": params,
        "seed": getattr(args, "seed", None),
        "tool_version": __version__,
        "output_format": args.format,
    }


# -- subcommands -------------------------------------------------------------

def cmd_spectrum(args):
    prof = _profile(args.R)
    rows = []
    cache = None
    for n in parse_indices(args.n):
        if cache is None or not cache.shell_rank_lo <= n <= cache.shell_rank_hi:
            cache = approx_number(prof, n, cap=args.max_points, max_nodes=args.max_points)
        e = cache
        rows.append([n, e.value, e.shell, e.shell_rank_lo, e.shell_rank_hi, e.exact])
    return ["n", "a_n", "shell", "rank_lo", "rank_hi", "exact"], rows


def cmd_limit_spectrum(args):
    if args.d < 1:
        raise UsageError("--d must be positive")
    rows = []
    for n in parse_indices(args.n):
        m = limit_shell_index(args.d, n)
        if m is None:
            rows.append([n, None, 0.0, 3**args.d, None])
            continue
        prev = _C(args.d, m - 1) if m > 0 else 0
        rows.append([n, m, limit_approx_number(args.d, n), prev, _C(args.d, m)])
    return ["n", "m", "a_n", "C_prev", "C_m"], rows


def cmd_volume(args):
    prof = _profile(args.R)
    exps = prof.exponents if args.exp2R else prof.R
    lv = log_scaled_volume(exps, args.scale)
    if args.log:
        return ["d", "scale", "log_volume"], [[lv.d, args.scale, lv.log_value]]
    try:
        val = lv.value
    except OverflowError:
        val = math.inf
    return ["d", "scale", "log_volume", "volume"], [[lv.d, args.scale, lv.log_value, val]]


def cmd_envelope(args):
    prof = _profile(args.R)
    rows = []
    for n in parse_indices(args.n):
        env = piecewise_envelope(prof, n)
        a = approx_number(prof, n, cap=args.max_points, max_nodes=args.max_points).value
        rows.append([
            n, env.regime.value, env.lower, env.upper, env.upper_tight, env.guaranteed,
            env.comparison, env.alt_comparison, a, a / env.comparison,
        ])
    cols = ["n", "regime", "lower", "upper", "upper_tight", "guaranteed",
            "comparison", "alt_comparison", "a_n", "ratio"]
    return cols, rows


def cmd_sweep(args):
    prof = _profile(args.R)
    if args.decades < 1:
        raise UsageError("--decades must be positive")
    limit = strong_equiv_constant(prof)
    rows = []
    for j in range(1, args.decades + 1):
        n = 10**j
        a = approx_number(prof, n, cap=args.max_points, max_nodes=args.max_points).value
        scaled = math.exp(prof.g * math.log(n)) * a
        lo, hi = strong_equiv_bracket(prof, n)
        rows.append([n, scaled, lo, hi, limit, scaled / limit])
    return ["n", "scaled", "bracket_lo", "bracket_hi", "limit", "ratio"], rows


def _check_eps(eps):
    if not 0.0 < eps <= 1.0:
        raise UsageError("--eps must lie in (0, 1]")


def cmd_complexity(args):
    _check_eps(args.eps)
    if args.limit_space:
        if args.d is None:
            raise UsageError("--limit-space requires --d")
        return ["space", "d", "eps", "n_eps"], [["limit", args.d, args.eps, limit_info_complexity(args.d, args.eps)]]
    if args.R is None:
        raise UsageError("give --R or --limit-space --d")
    prof = _profile(args.R)
    n = info_complexity(prof, args.eps, max_nodes=args.max_points)
    return ["space", "d", "eps", "n_eps"], [["aniso", prof.d, args.eps, n]]


def cmd_tractability(args):
    if args.alpha <= 0 or args.beta <= 0:
        raise UsageError("--alpha and --beta must be positive")
    if args.d_min < 1 or args.d_max < args.d_min or args.d_step < 1:
        raise UsageError("need 1 <= --d-min <= --d-max and --d-step >= 1")
    if not args.limit_space and (args.iso is None or args.eps is None):
        raise UsageError("give --limit-space, or --iso s with --eps for the family R=(s,...,s)")
    rows = []
    for d in range(args.d_min, args.d_max + 1, args.d_step):
        if args.limit_space:
            eps = witness_eps(d) if args.eps is None else args.eps
            n = limit_info_complexity(d, eps)
        else:
            eps = args.eps
            n = info_complexity(make_profile([args.iso] * d), eps, max_nodes=args.max_points)
        # exact integer emitted as a decimal string
        rows.append([d, eps, str(n), wt_ratio(n, eps, d, args.alpha, args.beta)])
    return ["d", "eps", "n_eps", "ratio"], rows


def cmd_verify(args):
    res = run_suite(args.suite, args.seed, args.cases)
    for line in res.failures[:10]:
        print(f"FAIL {line}", file=sys.stderr)
    return ["suite", "seed", "cases", "passed", "failed", "summary"], [
        [res.suite, res.seed, res.cases, res.passed, res.failed, res.summary()]
    ], (EXIT_OK if res.ok else EXIT_VERIFY)


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write the table here instead of stdout")
    common.add_argument(
        "--max-points", type=int, default=DEFAULT_MAX_POINTS,
        help=f"enumeration and walk-node cap (default {DEFAULT_MAX_POINTS})",
    )

    parser = _Parser(prog="sobwidth", description="Approximation numbers of anisotropic Sobolev embeddings.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="a_n with shell and rank range")
    p.add_argument("--R", required=True, help='smoothness, e.g. "1,2" or "1.5^8"')
    p.add_argument("--n", required=True, help="index, a:b, a:b:step or a comma list")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("limit-spectrum", parents=[common], help="a_n of the 3^d-dimensional limit space")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", required=True)
    p.set_defaults(func=cmd_limit_spectrum)

    p = sub.add_parser("volume", parents=[common], help="volume of {x : sum |x_j|^r_j <= t}")
    p.add_argument("--R", required=True, help="exponents r_j (or smoothness with --exp2R)")
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--exp2R", action="store_true", help="use exponents 2R_j")
    p.add_argument("--log", action="store_true", help="emit only the natural log")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("envelope", parents=[common], help="regime, bounds and a_n")
    p.add_argument("--R", required=True)
    p.add_argument("--n", required=True)
    p.set_defaults(func=cmd_envelope)

    p = sub.add_parser("sweep", parents=[common], help="n^g a_n against its limit, n = 10..10^k")
    p.add_argument("--R", required=True)
    p.add_argument("--decades", type=int, default=5)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("complexity", parents=[common], help="information complexity n(eps, d)")
    p.add_argument("--R")
    p.add_argument("--limit-space", action="store_true")
    p.add_argument("--d", type=int)
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("tractability", parents=[common], help="weak-tractability ratios over d")
    p.add_argument("--limit-space", action="store_true")
    p.add_argument("--iso", type=float, help="use the family R=(s,...,s) in each dimension")
    p.add_argument("--eps", type=float, help="fixed eps (default for the limit space: (2+d)^-1/2)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--d-step", type=int, default=1)
    p.set_defaults(func=cmd_tractability)

    p = sub.add_parser("verify", parents=[common], help="seeded cross-validation suites")
    p.add_argument("--suite", choices=tuple(SUITES), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "seed", None) is not None and not 0 <= args.seed < 2**64:
        print("sobwidth: error: --seed must be a 64-bit unsigned integer", file=sys.stderr)
        return EXIT_USAGE
    if args.max_points < 1:
        print("sobwidth: error: --max-points must be positive", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    try:
        result = args.func(args)
        if len(result) == 3:
            columns, rows, status = result
        else:
            columns, rows = result
    except UsageError as exc:
        print(f"sobwidth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceGuardError, OracleBoxError) as exc:
        print(f"sobwidth: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"sobwidth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    text = render(_manifest(args), columns, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
