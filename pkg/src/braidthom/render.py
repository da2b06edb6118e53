"""Deterministic SVG pictures of split-braid-merge diagrams.

Layout: strand k sits at column k; the top tree splits downward from its root
to the leaf row, the braid follows with one crossing per row, and the bottom
tree merges back to a root. Under-strands are drawn first and over-strands get
a white halo, which leaves a visible gap at each crossing. Coordinates are
printed with fixed precision, so equal input gives byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import Diagram
from .trees import Tree


@dataclass(frozen=True)
class RenderConfig:
    column: float = 40.0
    level: float = 24.0
    row: float = 36.0
    margin: float = 20.0
    stroke: float = 2.0
    halo: float = 8.0
    color: str = "#1f3b73"


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _height(t: Tree) -> int:
    return 0 if t.is_leaf else 1 + max(_height(t.left), _height(t.right))


def _tree_segments(t: Tree, x0: float, leaf_y: float, sign: int, cfg: RenderConfig):
    """Edges of t with leaves on row ``leaf_y``; sign=-1 grows upward, +1 downward."""
    segs: list[tuple[float, float, float, float]] = []
    leaf = [0]

    def place(s: Tree) -> tuple[float, float]:
        if s.is_leaf:
            leaf[0] += 1
            return x0 + leaf[0] * cfg.column, leaf_y
        lx, ly = place(s.left)
        rx, ry = place(s.right)
        y = leaf_y + sign * _height(s) * cfg.level
        x = (lx + rx) / 2
        segs.append((x, y, lx, ly))
        segs.append((x, y, rx, ry))
        return x, y

    root = place(t)
    return segs, root


def _line(x1, y1, x2, y2, cfg: RenderConfig) -> str:
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{cfg.color}" stroke-width="{_fmt(cfg.stroke)}" stroke-linecap="round"/>'
    )


def _curve(x1, y1, x2, y2, cfg: RenderConfig, halo: bool = False) -> str:
    my = (y1 + y2) / 2
    d = f"M {_fmt(x1)} {_fmt(y1)} C {_fmt(x1)} {_fmt(my)} {_fmt(x2)} {_fmt(my)} {_fmt(x2)} {_fmt(y2)}"
    if halo:
        return f'<path d="{d}" fill="none" stroke="white" stroke-width="{_fmt(cfg.halo)}"/>'
    return f'<path d="{d}" fill="none" stroke="{cfg.color}" stroke-width="{_fmt(cfg.stroke)}"/>'


def render_svg(d: Diagram, cfg: RenderConfig = RenderConfig()) -> str:
    n = d.strands
    top_h = _height(d.top) * cfg.level
    bottom_h = _height(d.bottom) * cfg.level
    rows = max(len(d.braid.letters), 1)
    y_top_root = cfg.margin
    y_top_leaves = y_top_root + top_h
    y_braid_end = y_top_leaves + rows * cfg.row
    y_bottom_root = y_braid_end + bottom_h
    width = (n + 1) * cfg.column
    height = y_bottom_root + cfg.margin

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
    ]
    segs, _ = _tree_segments(d.top, 0.0, y_top_leaves, -1, cfg)
    out += [_line(*s, cfg) for s in segs]

    col = [(k + 1) * cfg.column for k in range(n)]
    y = y_top_leaves
    for a in d.braid.letters:
        i = abs(a)
        y2 = y + cfg.row
        for k in range(n):
            if k + 1 not in (i, i + 1):
                out.append(_line(col[k], y, col[k], y2, cfg))
        left_down = (col[i - 1], y, col[i], y2)  # strand leaving position i
        right_down = (col[i], y, col[i - 1], y2)
        over, under = (left_down, right_down) if a > 0 else (right_down, left_down)
        out.append(_curve(*under, cfg))
        out.append(_curve(*over, cfg, halo=True))
        out.append(_curve(*over, cfg))
        y = y2
    if not d.braid.letters:
        out += [_line(c, y, c, y_braid_end, cfg) for c in col]

    segs, _ = _tree_segments(d.bottom, 0.0, y_braid_end, +1, cfg)
    out += [_line(*s, cfg) for s in segs]
    out.append("</svg>")
    return "\n".join(out) + "\n"
