"""Write SVG and DOT drawings of the standard worked examples to a folder.

    python3 scripts/render_figures.py --out figures
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from catmirror import DihedralElement, QuadDissection, medial, parse, phi, psi
from catmirror.enumeration import fixed_points
from catmirror.render import SvgOptions, render_dot, svg_dissection, svg_overlay, svg_tree
from catmirror.symmetry import nct_delta, nct_reflect_s, nct_rev, nct_star


@dataclass
class FigureConfig:
    out: str = "figures"
    size: int = 400
    labels: bool = True


def figures(cfg: FigureConfig) -> dict[str, str]:
    opt = SvgOptions(size=cfg.size, labels=cfg.labels)
    q = QuadDissection(5, [(1, 4), (5, 8), (5, 10)])
    t = phi(q)
    big = parse("nct", "nct 8: 1-3,1-4,1-8,2-3,4-6,4-7,5-6")
    files = {
        "tree_reverses_t.svg": svg_tree(big, opt),
        "tree_reverses_s.svg": svg_tree(nct_reflect_s(big), opt),
        "tree_reverses_rev.svg": svg_tree(nct_rev(big), opt),
        "tree_t.svg": svg_tree(t, opt),
        "tree_delta.svg": svg_tree(nct_delta(t), opt),
        "tree_star.svg": svg_tree(nct_star(t), opt),
        "dissection.svg": svg_dissection(q, opt),
        "overlay.svg": svg_overlay(q, opt=opt),
        "ternary.dot": render_dot(psi(q)),
        "medial.dot": render_dot(medial(t)),
    }
    _, wit = fixed_points(DihedralElement.s(10), 5)
    for i, w in enumerate(wit):
        files[f"decagon_s_fixed_{i}.svg"] = svg_dissection(w, opt)
    return files


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=FigureConfig.out)
    ap.add_argument("--size", type=int, default=FigureConfig.size)
    ap.add_argument("--no-labels", dest="labels", action="store_false")
    cfg = FigureConfig(**vars(ap.parse_args()))
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in figures(cfg).items():
        (out / name).write_text(text, encoding="utf-8")
        print(out / name)


if __name__ == "__main__":
    main()
