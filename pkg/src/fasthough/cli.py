"""Command line front end.

    fasthough transform --input img.pgm --strategy tweaked --output out.fht [--count] [--quadrants]
    fasthough pattern --n 4 --t 3 --strategy tweaked
    fasthough analyze complexity|error --n-max 4096 [--fast] --output data.csv
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction

import numpy as np

from . import analysis
from .core import SplitStrategy, fht2d_counted
from .fileio import format_number, read_image, write_grid_csv, write_raster
from .patterns import fht2d_pattern

QUADRANTS = ("hpos", "hneg", "vpos", "vneg")

QUADRANT_HELP = """\
quadrants (--quadrants writes one file per quadrant, suffixed before the extension):
  hpos  the input as is; column t follows slope +t/(w-1)
  hneg  input flipped left-right; column t follows slope -t/(w-1) on the input
  vpos  input transposed; column t follows x = y*t/(h-1)
  vneg  transposed then flipped left-right; column t follows x = -y*t/(h-1)
"""


def quadrant_inputs(img):
    """The four images whose horizontal transforms cover every line direction."""
    img = np.asarray(img)
    return {
        "hpos": img,
        "hneg": img[:, ::-1],
        "vpos": img.T,
        "vneg": img.T[:, ::-1],
    }


def hough_quadrants(img, strategy=SplitStrategy.TWEAKED):
    """Transform all four quadrant inputs; returns ``{name: (J, additions)}``."""
    return {
        name: fht2d_counted(np.ascontiguousarray(a), strategy)
        for name, a in quadrant_inputs(img).items()
    }


def _write_grid(path, grid):
    if path.lower().endswith(".csv"):
        write_grid_csv(path, grid)
    else:
        write_raster(path, grid)


def _suffixed(path, name):
    root, ext = os.path.splitext(path)
    return f"{root}_{name}{ext}"


def cmd_transform(args):
    img = read_image(args.input)
    if args.quadrants:
        results = hough_quadrants(img, args.strategy)
        for name in QUADRANTS:
            _write_grid(_suffixed(args.output, name), results[name][0])
        count = sum(c for _, c in results.values())
    else:
        hough, count = fht2d_counted(img, args.strategy)
        _write_grid(args.output, hough)
    if args.count:
        print(count)
    return 0


def cmd_pattern(args):
    pat = fht2d_pattern(args.n, args.t, args.strategy)
    print(",".join(str(v) for v in pat.values))
    return 0


COMPLEXITY_HEADER = ["n", "f_simple", "f_tweaked", "norm_simple", "norm_tweaked"]
ERROR_HEADER = ["n", "e_simple", "e_tweaked", "bound", "norm_simple", "norm_tweaked"]


def _open_output(path):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def cmd_analyze(args):
    if args.n_max < 1:
        raise _UsageError("--n-max must be at least 1")
    sizes = (
        analysis.fast_mode_sizes(args.n_max) if args.fast else range(1, args.n_max + 1)
    )
    out, close = _open_output(args.output)
    try:
        writer = csv.writer(out, lineterminator="\n")
        if args.kind == "complexity":
            writer.writerow(COMPLEXITY_HEADER)
            for n in sizes:
                r = analysis.complexity_record(n)
                writer.writerow(
                    [r.n, r.f_simple, r.f_tweaked]
                    + [format_number(r.norm_simple), format_number(r.norm_tweaked)]
                )
            return 0

        writer.writerow(ERROR_HEADER)
        hits = total = 0
        for r in analysis.iter_error_series(sizes):
            writer.writerow(
                [r.n]
                + [format_number(v) for v in (r.e_simple, r.e_tweaked, r.bound_t2)]
                + [format_number(r.norm_simple), format_number(r.norm_tweaked)]
            )
            out.flush()
            hits += r.separated
            total += 1
    finally:
        if close:
            out.close()
    frac = Fraction(hits, total)
    scope = "sampled sizes" if args.fast else f"n in [1, {args.n_max}]"
    report = sys.stderr if args.output == "-" else sys.stdout
    print(
        f"separation_fraction {format_number(frac)} ({hits}/{total}, {scope})",
        file=report,
    )
    return 0


class _UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fasthough", description="Fast Hough transform for arbitrary-size images."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    strategies = [s.value for s in SplitStrategy]

    p = sub.add_parser(
        "transform",
        help="transform a PGM (or FHT1) image",
        epilog=QUADRANT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--input", required=True)
    p.add_argument("--strategy", choices=strategies, default="tweaked")
    p.add_argument("--output", required=True, help="*.csv for text, anything else for FHT1")
    p.add_argument("--count", action="store_true", help="print the number of additions")
    p.add_argument("--quadrants", action="store_true", help="write all four quadrants")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("pattern", help="print one generating pattern as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--strategy", choices=strategies, default="tweaked")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("analyze", help="emit complexity or error series as CSV")
    p.add_argument("kind", choices=["complexity", "error"])
    p.add_argument("--n-max", type=int, default=4096)
    p.add_argument(
        "--fast",
        action="store_true",
        help=f"only n <= {analysis.FAST_MODE_LIMIT} plus {list(analysis.FAST_MODE_SENTINELS)}",
    )
    p.add_argument("--output", required=True, help="CSV path, or - for stdout")
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as e:
        parser.error(str(e))
    except (OSError, ValueError, TypeError) as e:
        print(f"fasthough: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
