"""Command-line front end.

Exit codes: 0 success, 2 invalid arguments or malformed input, 3 I/O failure.

Optimiser settings come from an optional ``key = value`` config file
(``--config`` or the ``ISINGRING_CONFIG`` environment variable; ``#`` starts
a comment) and may be overridden by flags. Recognised keys: ``starts``,
``tol``, ``seed``, ``max_evals``, ``workers``.
"""
import argparse
import csv
import io
import os
import sys
from dataclasses import replace

import numpy as np

from .bell import OptimizerConfig
from .errors import IsingRingError
from .model import RingParams
from .svg import render_svg
from .sweeps import QUANTITIES, GridRange, SweepError, SweepSpec, compute_sweep
from .thermal import energy_spectrum

CONFIG_ENV = "ISINGRING_CONFIG"
EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 2, 3

_CONFIG_TYPES = {"starts": int, "tol": float, "seed": int, "max_evals": int, "workers": int}


def parse_config(text):
    """Parse ``key = value`` lines into a dict of typed settings."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SweepError(f"config line {lineno}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_TYPES:
            raise SweepError(f"config line {lineno}: unknown key {key!r}")
        try:
            out[key] = _CONFIG_TYPES[key](value)
        except ValueError:
            raise SweepError(f"config line {lineno}: bad value for {key}") from None
    return out


def load_settings(args):
    """Merge config file and flag overrides into ``(OptimizerConfig, workers)``."""
    path = args.config or os.environ.get(CONFIG_ENV)
    settings = {}
    if path:
        with open(path, encoding="utf-8") as fh:
            settings = parse_config(fh.read())
    for key in _CONFIG_TYPES:
        flag = getattr(args, key, None)
        if flag is not None:
            settings[key] = flag
    workers = settings.pop("workers", 1)
    cfg = replace(OptimizerConfig(), **settings)
    if cfg.starts < 1 or cfg.tol <= 0 or workers < 1:
        raise SweepError("starts and workers must be >= 1 and tol > 0")
    return cfg, workers


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def format_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _write(text, output):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def run_sweep(spec: SweepSpec, cfg=None, workers=1):
    """Compute ``spec`` and write it to ``spec.output``; returns an exit code."""
    header, rows = compute_sweep(spec, cfg, workers)
    text = format_csv(header, rows)
    if spec.format == "svg":
        text = render_svg(text)
    try:
        _write(text, spec.output)
    except OSError as exc:
        print(f"error: cannot write {spec.output}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_sweep(args):
    b_range = GridRange.parse(args.b)
    t_range = GridRange.parse(args.t) if args.t else None
    spec = SweepSpec(args.quantity, args.n, args.j, b_range, t_range, args.output, args.format)
    cfg, workers = load_settings(args)
    return run_sweep(spec, cfg, workers)


def _cmd_render(args):
    try:
        with open(args.csv, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.csv}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    svg = render_svg(text, args.x)
    try:
        _write(svg, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_spectrum(args):
    energies = energy_spectrum(RingParams(args.n, args.j, args.b))
    rows = [(level, float(e)) for level, e in enumerate(energies)]
    try:
        _write(format_csv(["level", "energy"], rows), args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="isingring",
        description="Entanglement and Svetlichny non-locality of transverse-field Ising rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="evaluate a quantity over a B (and T) grid")
    sw.add_argument("--quantity", required=True, choices=QUANTITIES)
    sw.add_argument("--n", type=int, required=True, help="number of spins")
    sw.add_argument("--j", type=float, required=True, help="dimensionless coupling J")
    sw.add_argument("--b", required=True, metavar="START:STOP:STEPS",
                    help="field grid, endpoints inclusive")
    sw.add_argument("--t", metavar="START:STOP:STEPS", help="temperature grid")
    sw.add_argument("--output", "-o", default="-", help="output path (default stdout)")
    sw.add_argument("--format", choices=("csv", "svg"), default="csv")
    sw.add_argument("--config", help=f"config file (default ${CONFIG_ENV})")
    sw.add_argument("--starts", type=int, help="optimizer restarts")
    sw.add_argument("--tol", type=float, help="optimizer value tolerance")
    sw.add_argument("--seed", type=int, help="optimizer seed")
    sw.add_argument("--max-evals", dest="max_evals", type=int,
                    help="function evaluations per local refinement")
    sw.add_argument("--workers", type=int, help="parallel worker processes")
    sw.set_defaults(func=_cmd_sweep)

    rs = sub.add_parser("render-svg", help="plot a sweep CSV as an SVG line chart")
    rs.add_argument("csv")
    rs.add_argument("out")
    rs.add_argument("--x", help="column to use as abscissa (default: first)")
    rs.set_defaults(func=_cmd_render)

    sp = sub.add_parser("spectrum", help="print the full energy spectrum of one ring")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--j", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--output", "-o", default="-")
    sp.set_defaults(func=_cmd_spectrum)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    except IsingRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
