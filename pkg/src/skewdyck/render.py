"""SVG and TikZ emitters for path diagrams.

Both emitters consume realized geometries and lay every diagram of a
document onto a shared grid height, one diagram per word.  In the
default overlay style the L-steps ride forward with the black polyline
and a red copy, nudged by a quarter unit, marks them; in left style the
red segments point backwards for real.  Output is deterministic: no
timestamps, fixed ordering, plain decimal coordinates.
"""

from __future__ import annotations

from fractions import Fraction

from .paths import PathGeometry, SkewWord, Step, enumerate_words, realize

RENDER_MODES = ("plain", "skew")
OVERLAY_SHIFT = Fraction(1, 4)


def _fmt(x) -> str:
    """Plain decimal text for integers and exact quarters."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return str(float(f))


def words_for_mode(t: int, n: int, mode: str) -> list[SkewWord]:
    """The closed words a document shows: all of them, or the L-free ones."""
    if mode not in RENDER_MODES:
        raise ValueError(f"mode must be one of {RENDER_MODES}, got {mode!r}")
    words = enumerate_words(t, n, closed_only=True)
    if mode == "plain":
        words = [w for w in words if Step.L not in w.steps]
    return words


def _grid_box(geos: list[PathGeometry]) -> tuple[int, int, int]:
    """Shared (x_min, x_max, y_max) over a document's geometries."""
    x_min, x_max, y_max = 0, 1, 1
    for geo in geos:
        for x, y in geo.points():
            x_min = min(x_min, x)
            x_max = max(x_max, x)
            y_max = max(y_max, y)
    return x_min, x_max, y_max


def _overlay_segments(geo: PathGeometry):
    """Red quarter-shifted copies for each L segment (overlay style)."""
    for seg, color in zip(geo.segments, geo.colors):
        if color == "red":
            (x0, y0), (x1, y1) = seg
            yield (x0 + OVERLAY_SHIFT, y0), (x1, y1 + OVERLAY_SHIFT)


def render_tikz(
    words: list[SkewWord],
    style: str = "red-overlay",
    mirrored: bool = False,
) -> str:
    """One tikzpicture per word: help-line grid, thick path, red marks."""
    geos = [realize(w, mode=style) for w in words]
    x_min, x_max, y_max = _grid_box(geos)
    blocks = []
    for geo in geos:
        lines = ["\\begin{tikzpicture}[scale=0.2]"]
        indent = "\t"
        if mirrored:
            lines.append("\t\\begin{scope}[xscale=-1,yscale=1]")
            indent = "\t\t"
        lines.append(
            f"{indent}\\draw[help lines] ({x_min},0) grid ({x_max},{y_max});"
        )
        if style == "red-overlay":
            pts = " -- ".join(f"({_fmt(x)},{_fmt(y)})" for x, y in geo.points())
            if len(geo.points()) > 1:
                lines.append(f"{indent}\\draw[thick] {pts};")
            for (sx, sy), (ex, ey) in _overlay_segments(geo):
                lines.append(
                    f"{indent}\\draw[thick,red] ({_fmt(sx)},{_fmt(sy)}) -- ({_fmt(ex)},{_fmt(ey)});"
                )
        else:
            # left style: one draw per color run so the red is the real segment
            for seg, color in zip(geo.segments, geo.colors):
                (x0, y0), (x1, y1) = seg
                pen = "thick,red" if color == "red" else "thick"
                lines.append(
                    f"{indent}\\draw[{pen}] ({_fmt(x0)},{_fmt(y0)}) -- ({_fmt(x1)},{_fmt(y1)});"
                )
        if mirrored:
            lines.append("\t\\end{scope}")
        lines.append("\\end{tikzpicture}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


_SVG_CELL = 20
_SVG_MARGIN = 10
_SVG_GAP = 14
_SVG_PER_ROW = 4


def render_svg(
    words: list[SkewWord],
    style: str = "red-overlay",
    mirrored: bool = False,
) -> str:
    """A single SVG document with one <g class="diagram"> per word."""
    geos = [realize(w, mode=style) for w in words]
    x_min, x_max, y_max = _grid_box(geos)
    cols = x_max - x_min
    rows = y_max
    dia_w = cols * _SVG_CELL
    dia_h = rows * _SVG_CELL
    per_row = min(_SVG_PER_ROW, max(len(geos), 1))
    n_rows = (len(geos) + per_row - 1) // per_row if geos else 0
    doc_w = _SVG_MARGIN * 2 + per_row * dia_w + (per_row - 1) * _SVG_GAP
    doc_h = _SVG_MARGIN * 2 + max(n_rows, 0) * dia_h + max(n_rows - 1, 0) * _SVG_GAP

    def px(x) -> str:
        if mirrored:
            x = x_max - x + 0  # reflect inside the shared box
        else:
            x = x - x_min
        return _fmt(Fraction(x) * _SVG_CELL)

    def py(y) -> str:
        return _fmt(Fraction(y_max - y) * _SVG_CELL)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{doc_w}" height="{doc_h}" '
        f'viewBox="0 0 {doc_w} {doc_h}">'
    ]
    for idx, geo in enumerate(geos):
        r, c = divmod(idx, per_row)
        tx = _SVG_MARGIN + c * (dia_w + _SVG_GAP)
        ty = _SVG_MARGIN + r * (dia_h + _SVG_GAP)
        out.append(f'  <g class="diagram" transform="translate({tx},{ty})">')
        grid = []
        for gx in range(cols + 1):
            grid.append(f"M{gx * _SVG_CELL} 0V{dia_h}")
        for gy in range(rows + 1):
            grid.append(f"M0 {gy * _SVG_CELL}H{dia_w}")
        out.append(
            f'    <path class="grid" d="{" ".join(grid)}" '
            f'stroke="#cccccc" stroke-width="0.5" fill="none"/>'
        )
        if style == "red-overlay":
            if geo.segments:
                pts = " ".join(f"{px(x)},{py(y)}" for x, y in geo.points())
                out.append(
                    f'    <polyline class="path" points="{pts}" '
                    f'stroke="black" stroke-width="2" fill="none"/>'
                )
            for (sx, sy), (ex, ey) in _overlay_segments(geo):
                out.append(
                    f'    <line class="skew" x1="{px(sx)}" y1="{py(sy)}" '
                    f'x2="{px(ex)}" y2="{py(ey)}" stroke="red" stroke-width="2"/>'
                )
        else:
            for seg, color in zip(geo.segments, geo.colors):
                (sx, sy), (ex, ey) = seg
                cls = "skew" if color == "red" else "path"
                out.append(
                    f'    <line class="{cls}" x1="{px(sx)}" y1="{py(sy)}" '
                    f'x2="{px(ex)}" y2="{py(ey)}" stroke="{color}" stroke-width="2"/>'
                )
        out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_document(
    t: int,
    n: int,
    mode: str = "skew",
    style: str = "red-overlay",
    mirrored: bool = False,
    fmt: str = "svg",
) -> str:
    """All closed diagrams of length n in one document."""
    words = words_for_mode(t, n, mode)
    if fmt == "svg":
        return render_svg(words, style=style, mirrored=mirrored)
    if fmt == "tikz":
        return render_tikz(words, style=style, mirrored=mirrored)
    raise ValueError(f"format must be 'svg' or 'tikz', got {fmt!r}")
