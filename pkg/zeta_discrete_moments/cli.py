#!/usr/bin/env python
"""Command-line entrypoint: ``zeta-moments <command> ...``.

Results go to stdout, diagnostics to stderr. Exit status is 0 on success, 2 for
bad input data, 3 when a precision target cannot be met and 4 for usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from . import __version__
from .config import Settings, load_settings
from .empirics import (
    DerivativeEvaluator,
    PlotMode,
    checkpoint_heights,
    comparison_series,
    discrete_sum,
    emit_csv,
    emit_svg,
    reflection_discrepancy,
    relative,
)
from .errors import ZetaMomentsError
from .moments import assemble_polynomial, density_polynomial
from .numerics.zeta import DerivativeMethod
from .precision import mp_context
from .series import RealRing
from .stieltjes import compute_table, cross_check, load_bundled
from .zeros import (
    BUNDLED_DIGITS,
    ZeroTable,
    load_bundled_zeros,
    load_zeros,
    refine_table,
    validate_count,
    validate_prefixes,
    write_zeros,
)

logger = logging.getLogger(__name__)

USAGE_EXIT = 4
DEFAULT_COMPARE_ZEROS = 10_000


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 4."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(USAGE_EXIT)


def _add_orders(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mu", type=int, required=True, help="derivative order mu")
    parser.add_argument("--nu", type=int, required=True, help="derivative order nu")


def _add_runtime(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--bits", type=int, help="working precision in bits")
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.add_argument("--cache-dir", type=Path, help="derivative cache directory")
    parser.add_argument(
        "--method",
        choices=[m.value for m in DerivativeMethod],
        default=DerivativeMethod.MPMATH.value,
        help=(
            "derivative evaluator for per-zero values (default: %(default)s, "
            "mpmath's own zeta derivatives; cauchy uses certified contour integrals)"
        ),
    )


def _add_zeros_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--file", type=Path, help="zero table (default: bundled)")
    parser.add_argument(
        "--input-digits",
        type=int,
        default=BUNDLED_DIGITS,
        help="decimal places carried by --file",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="zeta-moments",
        description="Discrete mixed second moments of zeta derivatives over zeros.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress, -vv for debugging output",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    coeffs = commands.add_parser("coeffs", help="print the moment polynomial")
    _add_orders(coeffs)
    form = coeffs.add_mutually_exclusive_group()
    form.add_argument("--symbolic", action="store_true", help="exact form (default)")
    form.add_argument("--numeric", action="store_true", help="decimal coefficients")
    coeffs.add_argument("--bits", type=int, help="precision for --numeric")
    coeffs.add_argument(
        "--density", action="store_true", help="print the integrand P + P' instead"
    )
    coeffs.set_defaults(handler=_run_coeffs)

    gamma = commands.add_parser("gamma", help="print Stieltjes constants")
    gamma.add_argument("--max", type=int, required=True, dest="max_index")
    gamma.add_argument("--bits", type=int, help="precision for computed values")
    gamma.add_argument(
        "--computed", action="store_true", help="compute instead of reading the bundle"
    )
    gamma.add_argument(
        "--verify", action="store_true", help="cross-check the bundle by computation"
    )
    gamma.set_defaults(handler=_run_gamma)

    zeros = commands.add_parser("zeros", help="zero table utilities")
    zeros_commands = zeros.add_subparsers(dest="zeros_command", required=True)
    check = zeros_commands.add_parser("check", help="validate or refine a zero table")
    _add_zeros_source(check)
    check.add_argument("--every", type=int, help="zeros between count checks")
    check.add_argument("--refine", action="store_true", help="Newton-refine ordinates")
    check.add_argument("--digits", type=int, default=30, help="refinement target")
    check.add_argument("--count", type=int, help="only the first N ordinates")
    check.add_argument("--out", type=Path, help="write the (refined) table here")
    check.add_argument("--bits", type=int, help="precision for refinement")
    check.add_argument("--workers", type=int, help="worker processes")
    check.set_defaults(handler=_run_zeros_check)

    total = commands.add_parser("sum", help="evaluate the discrete moment")
    _add_orders(total)
    _add_zeros_source(total)
    extent = total.add_mutually_exclusive_group(required=True)
    extent.add_argument("--count", type=int, help="sum over the first N zeros")
    extent.add_argument("--height", type=str, help="sum over 0 < gamma <= T")
    _add_runtime(total)
    total.add_argument(
        "--no-reflection",
        action="store_true",
        help="evaluate zeta^(nu)(1 - rho) directly and report the discrepancy",
    )
    total.set_defaults(handler=_run_sum)

    compare = commands.add_parser("compare", help="compare sums with the asymptotic")
    _add_orders(compare)
    _add_zeros_source(compare)
    compare.add_argument(
        "--count",
        type=int,
        default=DEFAULT_COMPARE_ZEROS,
        help="last checkpoint follows this zero",
    )
    compare.add_argument(
        "--full", action="store_true", help="use every zero of the table"
    )
    compare.add_argument("--checkpoints-every", type=int)
    compare.add_argument("--out-csv", type=Path, required=True)
    compare.add_argument("--out-svg", type=Path)
    compare.add_argument(
        "--mode",
        choices=[m.value for m in PlotMode],
        default=PlotMode.MINUS_FULL.value,
    )
    _add_runtime(compare)
    compare.set_defaults(handler=_run_compare)
    return parser


def _configure_logging(settings: Settings, verbose: int) -> None:
    level = logging.getLevelName(settings.log_level)
    if verbose == 1:
        level = min(level, logging.INFO)
    elif verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _settings(args: argparse.Namespace) -> Settings:
    return load_settings(
        precision_bits=getattr(args, "bits", None),
        workers=getattr(args, "workers", None),
        cache_dir=getattr(args, "cache_dir", None),
        zeros_file=getattr(args, "file", None),
        checkpoints_every=getattr(args, "checkpoints_every", None)
        or getattr(args, "every", None),
    )


def _zero_table(args: argparse.Namespace, settings: Settings) -> ZeroTable:
    if settings.zeros_file is not None:
        return load_zeros(settings.zeros_file, args.input_digits)
    return load_bundled_zeros()


def _run_coeffs(args: argparse.Namespace, settings: Settings) -> int:
    if args.numeric:
        ring = RealRing(settings.precision_bits)
        poly = assemble_polynomial(args.mu, args.nu, ring)
    else:
        poly = assemble_polynomial(args.mu, args.nu)
    if args.density:
        poly = density_polynomial(poly)
    for line in poly.to_canonical_lines():
        print(line)
    return 0


def _run_gamma(args: argparse.Namespace, settings: Settings) -> int:
    if args.computed:
        table = compute_table(args.max_index, settings.precision_bits)
    else:
        table = load_bundled(args.max_index)
    for n, value in enumerate(table.entries):
        print(f"{n}\t{value}")
    if args.verify:
        report = cross_check(args.max_index, max(settings.precision_bits, 256))
        print(report, file=sys.stderr)
        if not report.passed:
            return 2
    return 0


def _run_zeros_check(args: argparse.Namespace, settings: Settings) -> int:
    table = _zero_table(args, settings)
    if args.count is not None:
        table = table.head(args.count)
    print(f"{len(table)} ordinates, last {table.max_ordinate}")
    if table.max_ordinate is not None:
        print(validate_count(table, table.max_ordinate))
    flagged = [r for r in validate_prefixes(table, settings.checkpoints_every) if r.flagged]
    for report in flagged:
        print(report)
    if args.refine:
        cfg = settings.eval_config()
        table, refinement = refine_table(table, cfg, args.digits, settings.workers)
        print(
            f"refined to {args.digits} digits: max shift {refinement.max_shift:.3e}, "
            f"max |zeta| {refinement.max_residual:.3e}"
        )
    if args.out is not None:
        write_zeros(table, args.out)
    return 2 if flagged else 0


def _evaluator(args: argparse.Namespace, settings: Settings) -> DerivativeEvaluator:
    return DerivativeEvaluator(
        settings.eval_config(),
        method=DerivativeMethod(args.method),
        workers=settings.workers,
        cache_dir=settings.cache_dir,
    )


def _run_sum(args: argparse.Namespace, settings: Settings) -> int:
    table = _zero_table(args, settings)
    if args.count is not None:
        if not 0 < args.count <= len(table):
            raise ValueError(f"--count must lie in 1..{len(table)}")
        height = table[args.count - 1]
    else:
        height = args.height
    cfg = settings.eval_config()
    evaluator = _evaluator(args, settings)
    ctx = cfg.ctx
    value = discrete_sum(
        args.mu,
        args.nu,
        table,
        height,
        cfg,
        reflection=not args.no_reflection,
        evaluator=evaluator,
    )
    print(f"{ctx.nstr(value.real, 30)}\t{ctx.nstr(value.imag, 30)}")
    if args.no_reflection:
        gap = reflection_discrepancy(args.nu, table, height, cfg, evaluator)
        print(f"max reflection discrepancy {ctx.nstr(gap, 5)}", file=sys.stderr)
    return 0


def _run_compare(args: argparse.Namespace, settings: Settings) -> int:
    table = _zero_table(args, settings)
    limit = len(table) - 1 if args.full else args.count
    checkpoints = checkpoint_heights(table, settings.checkpoints_every, limit)
    cfg = settings.eval_config()
    rows = comparison_series(
        args.mu, args.nu, table, checkpoints, cfg, evaluator=_evaluator(args, settings)
    )
    ctx = mp_context(cfg.precision_bits)
    emit_csv(rows, args.out_csv, ctx)
    if args.out_svg is not None and rows:
        title = f"mu={args.mu}, nu={args.nu}"
        emit_svg(rows, args.out_svg, PlotMode(args.mode), title)
    if rows:
        last = rows[-1]
        print(
            f"{last.zero_count} zeros, T={ctx.nstr(last.height, 15)}: "
            f"residual_full/asymptotic "
            f"{relative(last.residual_full, last.full_asymptotic):.3e}, "
            f"residual_leading/asymptotic "
            f"{relative(last.residual_leading, last.full_asymptotic):.3e}"
        )
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = _settings(args)
        _configure_logging(settings, args.verbose)
        return args.handler(args, settings)
    except ZetaMomentsError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
