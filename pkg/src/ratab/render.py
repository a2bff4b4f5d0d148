"""Text, SVG and TikZ views of tableaux, arc diagrams and Laguerre histories.

Renderers are pure views: output depends only on the object, and all
coordinates are printed with fixed precision so files are byte-stable.
"""

from __future__ import annotations

from typing import Sequence

from .assemblee import Assemblee, SignedPerm, arc_diagram, crossings, to_signed
from .laguerre import DELTA, StarStep, Step, heights
from .shapes import TileKind, format_label
from .tableaux import UP, RAT

__all__ = ["RenderError", "FORMATS", "render", "rat_svg", "rat_tikz", "arcs_svg", "arcs_tikz",
           "path_svg", "path_tikz", "path_ascii"]

FORMATS = ("ascii", "svg", "tikz")


class RenderError(ValueError):
    """Unknown format, or a format that does not apply to the object."""


def _f(x: float) -> str:
    s = f"{x:.1f}"
    return s[:-2] if s.endswith(".0") else s


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _svg(width: float, height: float, comment: str, body: list[str]) -> str:
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(width)}" height="{_f(height)}" '
        f'viewBox="0 0 {_f(width)} {_f(height)}">',
        f"<!-- {comment} -->",
    ]
    return "\n".join(head + body + ["</svg>"]) + "\n"


# ---------------------------------------------------------------- tableaux

UNIT = 40  # pixels per lattice unit
MARGIN = 30
TILE_STYLE = {
    TileKind.SQUARE: 'fill="white" stroke="black"',
    TileKind.TALL: 'fill="#dde8f5" stroke="black"',
    TileKind.SHORT: 'fill="#f5e6cc" stroke="black"',
}
TIKZ_STYLE = {TileKind.SQUARE: "", TileKind.TALL: "fill=blue!10", TileKind.SHORT: "fill=orange!15"}


def _rat_frame(R: RAT):
    D = R.diagram
    pts = list(D.se_border) + list(D.nw_border)
    xmax = max((p[0] for p in pts), default=0)
    ymax = max((p[1] for p in pts), default=0)

    def px(p):  # doubled lattice coordinates -> pixels
        return (MARGIN + p[0] * UNIT / 2, MARGIN + (ymax - p[1]) * UNIT / 2)

    return D, px, MARGIN * 2 + xmax * UNIT / 2, MARGIN * 2 + ymax * UNIT / 2


def _label_spots(R: RAT):
    """(label, midpoint) for every step of the southeast border, in doubled coordinates."""
    se = R.diagram.se_border
    for k, lab in enumerate(R.word.labels):
        a, b = se[k], se[k + 1]
        yield lab, ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)


def rat_svg(R: RAT) -> str:
    D, px, w, h = _rat_frame(R)
    body = []
    for c in D.order:
        t = D.tiles[c]
        pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in map(px, t.corners))
        body.append(f'<polygon class="{t.kind.value}" points="{pts}" {TILE_STYLE[t.kind]}/>')
    amap = R.amap
    for c in D.order:
        if c not in amap:
            continue
        t = D.tiles[c]
        cx = sum(p[0] for p in t.corners) / 4
        cy = sum(p[1] for p in t.corners) / 4
        x, y = px((cx, cy))
        glyph = "&#8593;" if amap[c] == UP else "&#8592;"
        body.append(
            f'<text class="arrow-{amap[c]}" x="{_f(x)}" y="{_f(y + 6)}" text-anchor="middle" '
            f'font-size="18">{glyph}</text>'
        )
    border = " ".join(f"{_f(x)},{_f(y)}" for x, y in map(px, D.se_border))
    body.append(f'<polyline points="{border}" fill="none" stroke="black" stroke-width="2"/>')
    for lab, m in _label_spots(R):
        x, y = px(m)
        body.append(
            f'<text class="label" x="{_f(x + 10)}" y="{_f(y + 12)}" font-size="11">'
            f"{_esc(format_label(lab))}</text>"
        )
    comment = f"shape {R.word.text()}, {len(D.tiles)} tiles, {len(R.arrows)} arrows"
    return _svg(w, h, comment, body)


def rat_tikz(R: RAT) -> str:
    D = R.diagram
    out = [f"% shape {R.word.text()}, {len(D.tiles)} tiles, {len(R.arrows)} arrows",
           "\\begin{tikzpicture}[scale=0.8]"]
    u = lambda p: f"({_f(p[0] / 2)},{_f(p[1] / 2)})"
    for c in D.order:
        t = D.tiles[c]
        style = TIKZ_STYLE[t.kind]
        opt = f"[{style}]" if style else ""
        out.append(f"  \\draw{opt} " + " -- ".join(u(p) for p in t.corners) + " -- cycle;")
    amap = R.amap
    for c in D.order:
        if c in amap:
            t = D.tiles[c]
            cen = (sum(p[0] for p in t.corners) / 4, sum(p[1] for p in t.corners) / 4)
            glyph = "\\uparrow" if amap[c] == UP else "\\leftarrow"
            out.append(f"  \\node at {u(cen)} {{${glyph}$}};")
    out.append("  \\draw[thick] " + " -- ".join(u(p) for p in D.se_border) + ";")
    for lab, m in _label_spots(R):
        out.append(f"  \\node[font=\\tiny] at {u((m[0] + 0.5, m[1] - 0.5))} {{{format_label(lab)}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- arc diagrams

GAP = 40


def _vertices(tau: SignedPerm):
    D = arc_diagram(tau)
    verts = [-j for j in range(D.r, 0, -1)] + list(tau.domain)
    return D, {v: t for t, v in enumerate(verts)}, verts


def _crossing_note(tau: SignedPerm) -> str:
    p = crossings(tau)
    return f"crossings: {p.total} (upper {p.upper}, lower {p.lower})"


def arcs_svg(tau: SignedPerm) -> str:
    D, pos, verts = _vertices(tau)
    half = max(pos[b] - pos[a] for a, b in D.upper + D.lower) if D.upper or D.lower else 0
    base = MARGIN + half * GAP / 2 + 10
    x = lambda v: MARGIN + pos[v] * GAP
    spiral = {arc for pair in D.spiral for arc in pair}
    body = []
    for side, arcs, sweep in (("upper", D.upper, 1), ("lower", D.lower, 0)):
        for a, b in arcs:
            cls = f"{side} spiral" if (a, b) in spiral else side
            dash = ' stroke-dasharray="4 3"' if (a, b) in spiral else ""
            if a == b:
                body.append(
                    f'<circle class="loop" cx="{_f(x(a))}" cy="{_f(base - 8)}" r="8" fill="none" stroke="black"/>'
                )
                continue
            r = (x(b) - x(a)) / 2
            body.append(
                f'<path class="{cls}" d="M {_f(x(a))} {_f(base)} A {_f(r)} {_f(r)} 0 0 {sweep} '
                f'{_f(x(b))} {_f(base)}" fill="none" stroke="black"{dash}/>'
            )
    for v in verts:
        body.append(f'<circle class="vertex" cx="{_f(x(v))}" cy="{_f(base)}" r="3" fill="black"/>')
        body.append(
            f'<text x="{_f(x(v))}" y="{_f(base + 18)}" text-anchor="middle" '
            f'font-size="11">{v}</text>'
        )
    w = MARGIN * 2 + (len(verts) - 1) * GAP
    return _svg(w, 2 * base, f"signed permutation {tau}; {_crossing_note(tau)}", body)


def arcs_tikz(tau: SignedPerm) -> str:
    D, pos, verts = _vertices(tau)
    spiral = {arc for pair in D.spiral for arc in pair}
    out = [f"% signed permutation {tau}; {_crossing_note(tau)}", "\\begin{tikzpicture}"]
    for side, arcs, (s, e) in (("upper", D.upper, (180, 0)), ("lower", D.lower, (180, 360))):
        for a, b in arcs:
            opt = "[dashed]" if (a, b) in spiral else ""
            if a == b:
                out.append(f"  \\draw ({pos[a]},0.25) circle (0.25);")
                continue
            r = (pos[b] - pos[a]) / 2
            out.append(f"  \\draw{opt} ({pos[a]},0) arc[start angle={s}, end angle={e}, radius={_f(r)}];")
    for v in verts:
        out.append(f"  \\fill ({pos[v]},0) circle (0.05) node[below] {{\\tiny ${v}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- paths

STEP_PX = 40


def _annot(s) -> tuple[str, str]:
    """(label text, mark text) for one step."""
    if isinstance(s, Step):
        return str(s.label), ("*" if s.marked else "")
    return ",".join(map(str, s.labels)), s.marks


def _path_points(steps: Sequence):
    hs = heights(steps)
    return hs, [h + DELTA[s.kind] for s, h in zip(steps, hs)]


def path_svg(steps: Sequence) -> str:
    hs, ends = _path_points(steps)
    top = max(hs + [0])
    base = MARGIN + 20 + top * STEP_PX
    px = lambda t, h: (MARGIN + t * STEP_PX, base - h * STEP_PX)
    body = []
    for t, (s, h0, h1) in enumerate(zip(steps, hs, ends)):
        (x0, y0), (x1, y1) = px(t, h0), px(t + 1, h1)
        dash = ' stroke-dasharray="5 4"' if s.kind == "h" else ""
        body.append(
            f'<line class="step-{s.kind}" x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" '
            f'stroke="black" stroke-width="2"{dash}/>'
        )
        lab, mark = _annot(s)
        mx, my = (x0 + x1) / 2, min(y0, y1)
        if lab:
            body.append(f'<text class="label" x="{_f(mx)}" y="{_f(my - 6)}" text-anchor="middle" font-size="11">{lab}</text>')
        if mark:
            body.append(f'<text class="mark" x="{_f(mx)}" y="{_f(max(y0, y1) + 16)}" text-anchor="middle" font-size="11">{mark}</text>')
    w = MARGIN * 2 + len(steps) * STEP_PX
    return _svg(w, base + MARGIN + 20, f"Laguerre history, {len(steps)} steps", body)


def path_tikz(steps: Sequence) -> str:
    hs, ends = _path_points(steps)
    out = [f"% Laguerre history, {len(steps)} steps", "\\begin{tikzpicture}"]
    for t, (s, h0, h1) in enumerate(zip(steps, hs, ends)):
        opt = "[thick,dashed]" if s.kind == "h" else "[thick]"
        out.append(f"  \\draw{opt} ({t},{h0}) -- ({t + 1},{h1});")
        lab, mark = _annot(s)
        mx = _f(t + 0.5)
        if lab:
            out.append(f"  \\node[above,font=\\tiny] at ({mx},{_f(max(h0, h1) - 0.3 * (h0 != h1))}) {{{lab}}};")
        if mark:
            out.append(f"  \\node[below,font=\\tiny] at ({mx},{_f(min(h0, h1))}) {{{mark}}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def path_ascii(steps: Sequence) -> str:
    """Labels on top, the path in the middle, marks underneath; one column per step."""
    hs, _ = _path_points(steps)
    notes = [_annot(s) for s in steps]
    width = max([3] + [len(a) + 1 for a, _ in notes] + [len(b) + 1 for _, b in notes])
    glyph = {"U": "/", "D": "\\", "H": "_", "h": "."}
    bands = [h - 1 if s.kind == "D" else h for s, h in zip(steps, hs)]
    grid = [[" " * width for _ in steps] for _ in range(max(bands, default=0) + 1)]
    for t, (s, band) in enumerate(zip(steps, bands)):
        grid[band][t] = glyph[s.kind].center(width)
    lines = ["".join(a.center(width) for a, _ in notes)]
    lines += ["".join(row) for row in reversed(grid)]
    lines.append("".join(b.center(width) for _, b in notes))
    return "\n".join(x.rstrip() for x in lines) + "\n"


# ---------------------------------------------------------------- dispatch

def render(obj, fmt: str) -> str:
    if fmt not in FORMATS:
        raise RenderError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    if isinstance(obj, Assemblee):
        obj = to_signed(obj)
    if isinstance(obj, RAT):
        table = {"svg": rat_svg, "tikz": rat_tikz}
    elif isinstance(obj, SignedPerm):
        table = {"svg": arcs_svg, "tikz": arcs_tikz}
    elif isinstance(obj, (tuple, list)) and obj and isinstance(obj[0], (Step, StarStep)):
        table = {"svg": path_svg, "tikz": path_tikz, "ascii": path_ascii}
    else:
        raise RenderError(f"cannot render {type(obj).__name__}")
    if fmt not in table:
        raise RenderError(f"format {fmt!r} is only available for Laguerre histories")
    return table[fmt](obj)
