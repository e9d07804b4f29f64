"""Small helpers shared by the demo scripts."""
from pathlib import Path

from isingring.svg import render_svg

OUT = Path(__file__).with_name("out")


def _fmt(v):
    return str(int(v)) if float(v).is_integer() and not isinstance(v, float) else repr(float(v))


def save_table(name, header, rows):
    """Write rows as CSV text plus an SVG line plot into demos/out/."""
    OUT.mkdir(exist_ok=True)
    text = ",".join(header) + "\n" + "".join(",".join(_fmt(v) for v in r) + "\n" for r in rows)
    (OUT / f"{name}.csv").write_text(text)
    (OUT / f"{name}.svg").write_text(render_svg(text))
    print(f"wrote {OUT / name}.csv and .svg")
