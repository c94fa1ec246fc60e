"""SVG rendering of rational construction traces.

The drawing follows the usual figure for the point constructions: the frame
line solid, the parallels drawn by the algorithm dashed, the joining lines
as light segments between their defining points, and every named point
labeled.  Output is plain SVG 1.1 with a viewBox fitted to the points; all
coordinates are printed with fixed precision so the same trace always gives
the same bytes.
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .line_arith import ConstructionTrace
from .plane import PlaneLine, PlanePoint

SCALE = 40.0  # pixels per unit
MARGIN = 1.5  # in plane units, around the bounding box of the points
LABELS = {"B1": "B₁", "P1": "P₁"}


class UnsupportedFieldError(ValueError):
    pass


def _xy(p: PlanePoint) -> tuple[float, float]:
    return float(p.x.c[0]), float(p.y.c[0])


def _num(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _clip(line: PlaneLine, box) -> Optional[tuple]:
    """Segment of ``line`` inside the box (Liang-Barsky)."""
    x0, y0 = _xy(line.base)
    dx, dy = float(line.dir.dx.c[0]), float(line.dir.dy.c[0])
    xmin, ymin, xmax, ymax = box
    lo, hi = float("-inf"), float("inf")
    for d, p, a, b in ((dx, x0, xmin, xmax), (dy, y0, ymin, ymax)):
        if d == 0:
            if not a <= p <= b:
                return None
            continue
        t1, t2 = (a - p) / d, (b - p) / d
        lo, hi = max(lo, min(t1, t2)), min(hi, max(t1, t2))
    if lo > hi:
        return None
    return (x0 + lo * dx, y0 + lo * dy), (x0 + hi * dx, y0 + hi * dy)


def render_svg(trace: ConstructionTrace) -> str:
    if trace.field != "rat":
        raise UnsupportedFieldError(f"SVG rendering needs a rational trace, got field {trace.field!r}")
    points = [s for s in trace.steps if s.kind == "point"]
    lines = [s for s in trace.steps if s.kind == "line"]
    xs = [_xy(s.obj)[0] for s in points]
    ys = [_xy(s.obj)[1] for s in points]
    box = (min(xs) - MARGIN, min(ys) - MARGIN, max(xs) + MARGIN, max(ys) + MARGIN)
    width, height = (box[2] - box[0]) * SCALE, (box[3] - box[1]) * SCALE

    def px(x, y):
        # SVG y grows downwards
        return _num((x - box[0]) * SCALE), _num((box[3] - y) * SCALE)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {_num(width)} {_num(height)}" width="{_num(width)}" height="{_num(height)}">',
        f'<title>{"Addition" if trace.op == "add" else "Multiplication"} of points in a line</title>',
        "<style>"
        ".base{stroke:#000;stroke-width:1.5}"
        ".aux{stroke:#1f5fa8;stroke-width:1;stroke-dasharray:6 4}"
        ".segment{stroke:#999;stroke-width:0.75}"
        ".point,.frame{stroke:none}.point{fill:#c0392b}.frame{fill:#000}"
        "text{font-family:sans-serif;font-size:12px}"
        "</style>",
    ]

    env = {s.id: s.obj for s in trace.steps}
    out.append('<g id="lines">')
    for s in lines:
        if s.op == "line_through" and s.id != "l_OI":
            (x1, y1), (x2, y2) = (_xy(env[a]) for a in s.args)
            cls = "segment"
        else:
            seg = _clip(s.obj, box)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = seg
            cls = "base" if s.id == "l_OI" else "aux"
        a, b = px(x1, y1)
        c, d = px(x2, y2)
        out.append(f'<line id="{s.id}" class="{cls}" x1="{a}" y1="{b}" x2="{c}" y2="{d}"/>')
    out.append("</g>")

    # points sharing a position get their labels stacked instead of overprinted
    seen: dict = {}
    out.append('<g id="points">')
    for s in points:
        x, y = _xy(s.obj)
        cx, cy = px(x, y)
        k = seen.get((cx, cy), 0)
        seen[(cx, cy)] = k + 1
        cls = "frame" if s.id in ("O", "I") else "point"
        name = LABELS.get(s.id, s.id)
        out.append(f'<circle id="pt-{s.id}" class="{cls}" cx="{cx}" cy="{cy}" r="3"/>')
        ty = _num(float(cy) - 6 - 14 * k)
        out.append(f'<text class="label" x="{_num(float(cx) + 5)}" y="{ty}">{name}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(trace: ConstructionTrace, path: Union[str, Path]) -> Path:
    """Write the SVG drawing of ``trace`` to ``path``."""
    text = render_svg(trace)
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    return path
