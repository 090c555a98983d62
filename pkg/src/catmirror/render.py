"""SVG drawings of trees and dissections, DOT for ternary trees and PCDDs.

Vertices sit on a circle, vertex 1 at the bottom and labels increasing
counterclockwise.  Output is byte-stable: coordinates are rounded and
elements are emitted in sorted order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import bijections as bij
from .model import Leaf, NctLabeledTree, Pcdd, QuadDissection, TernaryTree

BLUE = "#1f4fbf"
GREEN = "#2a9d3a"
RED = "#c8262b"
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass(frozen=True)
class SvgOptions:
    size: int = 400
    margin: int = 40
    labels: bool = True
    dot_radius: float = 4.0
    stroke: float = 2.0


def _points(count: int, opt: SvgOptions) -> dict[int, tuple[float, float]]:
    c = opt.size / 2
    rad = c - opt.margin
    pts = {}
    for i in range(1, count + 1):
        theta = -math.pi / 2 + 2 * math.pi * (i - 1) / count
        # screen y grows downward, so flip it to keep counterclockwise order
        pts[i] = (round(c + rad * math.cos(theta), 2), round(c - rad * math.sin(theta), 2))
    return pts


def _line(p, q, cls, color, width) -> str:
    return (f'<line class="{cls}" x1="{p[0]}" y1="{p[1]}" x2="{q[0]}" y2="{q[1]}" '
            f'stroke="{color}" stroke-width="{width}"/>')


def _dots(pts, opt: SvgOptions, only=None) -> list[str]:
    out = []
    c = opt.size / 2
    for i, (x, y) in sorted(pts.items()):
        if only is not None and i not in only:
            continue
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="{opt.dot_radius}" fill="black"/>')
        if opt.labels:
            # push labels slightly outward from the centre
            dx, dy = x - c, y - c
            norm = math.hypot(dx, dy) or 1.0
            lx = round(x + 14 * dx / norm, 2)
            ly = round(y + 14 * dy / norm + 4, 2)
            out.append(f'<text x="{lx}" y="{ly}" font-size="12" text-anchor="middle">{i}</text>')
    return out


def _wrap(body: list[str], opt: SvgOptions) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{opt.size}" height="{opt.size}" '
            f'viewBox="0 0 {opt.size} {opt.size}">')
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _polygon(q: QuadDissection, pts, opt: SvgOptions) -> list[str]:
    size = 2 * q.n
    out = []
    if size >= 2:
        for i in range(1, size + 1):
            j = i % size + 1
            if size == 2 and i == 2:
                break
            out.append(_line(pts[i], pts[j], "polygon", BLUE, opt.stroke))
    for a, b in q.diagonals:
        out.append(_line(pts[a], pts[b], "diagonal", BLUE, opt.stroke))
    return out


def svg_tree(t: NctLabeledTree, opt: SvgOptions = SvgOptions()) -> str:
    pts = _points(t.n, opt)
    body = [_line(pts[a], pts[b], "edge", GREEN, opt.stroke) for a, b in t.edges]
    return _wrap(body + _dots(pts, opt), opt)


def svg_dissection(q: QuadDissection, opt: SvgOptions = SvgOptions()) -> str:
    pts = _points(2 * q.n, opt)
    return _wrap(_polygon(q, pts, opt) + _dots(pts, opt), opt)


def svg_overlay(
    q: QuadDissection,
    odd: NctLabeledTree | None = None,
    even: NctLabeledTree | None = None,
    opt: SvgOptions = SvgOptions(),
) -> str:
    """The dissection in blue with its odd tree (green, on vertices 2i-1) and
    even tree (red, on vertices 2i); both default to those of q."""
    odd = bij.phi(q) if odd is None else odd
    even = bij.even_tree(q) if even is None else even
    if odd.n != q.n or even.n != q.n:
        raise ValueError(f"trees on {odd.n} and {even.n} vertices do not fit a {2 * q.n}-gon")
    pts = _points(2 * q.n, opt)
    body = _polygon(q, pts, opt)
    w = opt.stroke + 1
    body += [_line(pts[2 * a - 1], pts[2 * b - 1], "odd", GREEN, w) for a, b in odd.edges]
    body += [_line(pts[2 * a], pts[2 * b], "even", RED, w) for a, b in even.edges]
    return _wrap(body + _dots(pts, opt), opt)


def render_svg(obj, overlay: bool = False, opt: SvgOptions = SvgOptions()) -> str:
    if isinstance(obj, NctLabeledTree):
        return svg_overlay(bij.phi_inv(obj), opt=opt) if overlay else svg_tree(obj, opt)
    if isinstance(obj, QuadDissection):
        return svg_overlay(obj, opt=opt) if overlay else svg_dissection(obj, opt)
    raise TypeError(f"no SVG drawing for {type(obj).__name__}; use render_dot")


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------


def dot_ternary(T: TernaryTree) -> str:
    lines = ["digraph ternary {", "  node [shape=circle, label=\"\"];"]
    counter = 0
    stack = [(T, None, "")]
    while stack:
        node, parent, tag = stack.pop()
        me = f"n{counter}"
        counter += 1
        shape = "point" if isinstance(node, Leaf) else "circle"
        lines.append(f"  {me} [shape={shape}];")
        if parent is not None:
            lines.append(f'  {parent} -> {me} [label="{tag}"];')
        if not isinstance(node, Leaf):
            # pushed in reverse so left is emitted first
            stack.append((node.right, me, "R"))
            stack.append((node.middle, me, "M"))
            stack.append((node.left, me, "L"))
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_pcdd(p: Pcdd) -> str:
    lines = ["digraph pcdd {", "  node [shape=circle];"]
    if p.is_empty:
        lines.append('  label="empty PCDD";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    chain_of = {}
    for i, c in enumerate(p.chains):
        for u, v in zip(c, c[1:]):
            chain_of[(u, v)] = i
    flag = p.flag_chain
    for v in range(p.m):
        extra = ", style=filled, fillcolor=\"#ffe08a\"" if v == flag[0] else ""
        lines.append(f'  v{v} [label="{v}"{extra}];')
    for u, v in sorted(p.darts):
        i = chain_of[(u, v)]
        attrs = f'color="{PALETTE[i % len(PALETTE)]}", label="c{i}"'
        if i == p.flag:
            attrs += ", penwidth=3"
        lines.append(f"  v{u} -> v{v} [{attrs}];")
    chains = "; ".join(f"c{i}=[{' '.join(map(str, c))}]" for i, c in enumerate(p.chains))
    lines.append(f'  label="chains: {chains}\\nflag: c{p.flag}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_dot(obj) -> str:
    if isinstance(obj, Pcdd):
        return dot_pcdd(obj)
    if isinstance(obj, (Leaf,)) or hasattr(obj, "middle"):
        return dot_ternary(obj)
    raise TypeError(f"no DOT drawing for {type(obj).__name__}; use render_svg")
