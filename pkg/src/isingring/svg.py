"""Minimal standalone SVG line charts for sweep tables."""
import csv
import io
from collections import OrderedDict
from xml.sax.saxutils import escape

import numpy as np

from .errors import IsingRingError

WIDTH, HEIGHT = 640, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 150, 20, 50
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22")


class MalformedTable(IsingRingError):
    pass


def read_table(text):
    """Parse sweep CSV text into ``(header, float rows)``."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedTable("CSV is empty") from None
    if len(header) < 2 or any(not h.strip() for h in header):
        raise MalformedTable("header must name at least two columns")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise MalformedTable(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        try:
            rows.append([float(v) for v in row])
        except ValueError:
            raise MalformedTable(f"line {lineno}: non-numeric field") from None
    if not rows:
        raise MalformedTable("CSV has no data rows")
    return header, rows


def _series(header, rows, x_col):
    data = np.array(rows)
    xi = header.index(x_col)
    yi = len(header) - 1
    if xi == yi:
        raise MalformedTable("x column must differ from the value column")
    keys = [i for i in range(len(header))
            if i not in (xi, yi) and len(np.unique(data[:, i])) > 1]
    groups = OrderedDict()
    for row in data:
        label = tuple(row[i] for i in keys)
        groups.setdefault(label, []).append((row[xi], row[yi]))
    named = OrderedDict()
    for label, pts in groups.items():
        name = ", ".join(f"{header[i]}={v:g}" for i, v in zip(keys, label))
        named[name] = sorted(pts)
    return header[xi], header[yi], named


def _ticks(lo, hi, count=5):
    return np.linspace(lo, hi, count)


def render_svg(text, x_col=None):
    """Render CSV text as an SVG document string.

    The first column (or ``x_col``) is the abscissa and the last column the
    ordinate; one polyline is drawn per distinct combination of the other
    columns that vary.
    """
    header, rows = read_table(text)
    x_col = x_col or header[0]
    if x_col not in header:
        raise MalformedTable(f"no column named {x_col!r}")
    x_name, y_name, series = _series(header, rows, x_col)

    xs = np.array([p[0] for pts in series.values() for p in pts])
    ys = np.array([p[1] for pts in series.values() for p in pts])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    if x1 == x0:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B
    sx = lambda x: MARGIN_L + (x - x0) / (x1 - x0) * pw
    sy = lambda y: MARGIN_T + (y1 - y) / (y1 - y0) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" '
        'fill="none" stroke="black"/>',
    ]
    for t in _ticks(x0, x1):
        px = sx(t)
        out.append(f'<line x1="{px:.2f}" y1="{MARGIN_T + ph}" x2="{px:.2f}" '
                   f'y2="{MARGIN_T + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{MARGIN_T + ph + 18}" font-size="11" '
                   f'text-anchor="middle">{t:.4g}</text>')
    for t in _ticks(y0, y1):
        py = sy(t)
        out.append(f'<line x1="{MARGIN_L - 5}" y1="{py:.2f}" x2="{MARGIN_L}" '
                   f'y2="{py:.2f}" stroke="black"/>')
        out.append(f'<text x="{MARGIN_L - 8}" y="{py + 4:.2f}" font-size="11" '
                   f'text-anchor="end">{t:.4g}</text>')
    out.append(f'<text x="{MARGIN_L + pw / 2:.2f}" y="{HEIGHT - 10}" font-size="13" '
               f'text-anchor="middle">{escape(x_name)}</text>')
    out.append(f'<text x="16" y="{MARGIN_T + ph / 2:.2f}" font-size="13" '
               f'text-anchor="middle" transform="rotate(-90 16 {MARGIN_T + ph / 2:.2f})">'
               f'{escape(y_name)}</text>')
    for k, (name, pts) in enumerate(series.items()):
        color = COLORS[k % len(COLORS)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" '
                   f'points="{coords}"/>')
        if name:
            ly = MARGIN_T + 14 + 16 * k
            lx = WIDTH - MARGIN_R + 10
            out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 18}" y2="{ly - 4}" '
                       f'stroke="{color}" stroke-width="1.5"/>')
            out.append(f'<text x="{lx + 24}" y="{ly}" font-size="11">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
