"""Command-line front end.

Objects travel one per line in the canonical text forms, so commands compose
through pipes:

    catmirror gen nct 4 | catmirror convert phi-inv | catmirror convert phi

Exit codes: 0 success, 1 invalid input, 2 verify found a formula/oracle
mismatch, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from . import bijections as bij
from . import enumeration as enum
from . import generators as gen
from . import symmetry as sym
from .formats import format_obj, from_json, kind_of, parse, to_json
from .model import (
    DihedralElement, NctLabeledTree, Pcdd, QuadDissection, ValidationError, dihedral_apply,
)
from .render import SvgOptions, render_dot, render_svg

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 3

FAMILIES = ("nct", "qd", "ternary", "pcdd", "self-dual")

# map name -> (input kind, function)
MAPS = {
    "phi": ("qd", bij.phi),
    "phi-inv": ("nct", bij.phi_inv),
    "psi": ("qd", bij.psi),
    "psi-inv": ("ternary", bij.psi_inv),
    "sigma": ("nct", bij.sigma),
    "sigma-inv": ("ternary", bij.sigma_inv),
    "medial": ("nct", bij.medial),
    "medial-inv": ("pcdd", bij.medial_inv),
    "tau": ("pcdd", bij.tau),
}

COUNT_STATS = ("nu", "self-dual") + enum.STATS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# input / output
# ---------------------------------------------------------------------------


def _read_objects(args) -> Iterator:
    if args.items:
        lines: Iterable[str] = args.items
    elif getattr(args, "input", None):
        with open(args.input, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("{"):
            obj = from_json(json.loads(line))
            yield parse(kind_of(obj), format_obj(obj))
        else:
            yield parse(None, line)


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(to_json(obj), sort_keys=True) + "\n")
    else:
        out.write(format_obj(obj) + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args, out) -> int:
    fam, size = args.family, args.size
    if size < 0 or (fam in ("nct", "qd") and size < 1):
        raise UsageError(f"size {size} is out of range for {fam}")
    stream = {
        "nct": lambda: gen.gen_ncts(size),
        "qd": lambda: gen.gen_dissections(size),
        "ternary": lambda: gen.gen_ternary(size),
        "pcdd": lambda: gen.gen_pcdds(size),
        "self-dual": lambda: gen.gen_self_dual_ternary(size),
    }[fam]()
    for obj in stream:
        _emit(obj, args.format, out)
    return EXIT_OK


def cmd_convert(args, out) -> int:
    want, fn = MAPS[args.map]
    for obj in _read_objects(args):
        if kind_of(obj) != want:
            raise ValidationError(f"{args.map} expects {want} input, got {kind_of(obj)}")
        _emit(fn(obj), args.format, out)
    return EXIT_OK


def _parse_op(op: str):
    name, _, arg = op.partition(":")
    if name == "rotate":
        try:
            return name, (int(arg),)
        except ValueError:
            raise UsageError("rotate needs an integer, e.g. rotate:2") from None
    if name == "dihedral":
        try:
            k, f = (int(x) for x in arg.split(","))
        except ValueError:
            raise UsageError("dihedral needs k,f, e.g. dihedral:3,1") from None
        if f not in (0, 1):
            raise UsageError("reflection flag f must be 0 or 1")
        return name, (k, f)
    if name not in ("delta", "delta-inv", "star", "barstar", "reflect-s", "rev") or arg:
        raise UsageError(f"unknown operation {op!r}")
    return name, ()


# the same operations on the 2n-gon, as elements delta^k r^f
_QD_ELEMENT = {
    "delta": (1, 0), "delta-inv": (-1, 0), "star": (0, 1),
    "barstar": (2, 1), "reflect-s": (1, 1), "rev": (3, 1),
}


def _act(name: str, extra: tuple, obj):
    kind = kind_of(obj)
    if kind == "nct":
        t: NctLabeledTree = obj
        if name == "dihedral":
            return bij.phi(dihedral_apply(DihedralElement(2 * t.n, *extra), bij.phi_inv(t)))
        return {
            "delta": lambda: sym.nct_delta(t),
            "delta-inv": lambda: sym.nct_delta(t, inverse=True),
            "star": lambda: sym.nct_star(t),
            "barstar": lambda: sym.nct_barstar(t),
            "reflect-s": lambda: sym.nct_reflect_s(t),
            "rev": lambda: sym.nct_rev(t),
            "rotate": lambda: sym.nct_rotate(t, *extra),
        }[name]()
    if kind == "qd":
        q: QuadDissection = obj
        if name == "dihedral":
            k, f = extra
        elif name == "rotate":
            k, f = 2 * extra[0], 0
        else:
            k, f = _QD_ELEMENT[name]
        return dihedral_apply(DihedralElement(2 * q.n, k, f), q)
    if kind == "ternary" and name == "star":
        return sym.ternary_star(obj)
    if kind == "pcdd" and name in ("star", "barstar"):
        p: Pcdd = obj
        return sym.pcdd_star(p) if name == "star" else sym.pcdd_barstar(p)
    raise ValidationError(f"operation {name} does not apply to {kind}")


def cmd_act(args, out) -> int:
    name, extra = _parse_op(args.op)
    for obj in _read_objects(args):
        _emit(_act(name, extra, obj), args.format, out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    stat, n, variant = args.stat, args.n, args.variant
    if n < 1:
        raise UsageError("n must be >= 1")
    if stat == "nu":
        value = gen.nu(n) if variant != "brute" else sum(1 for _ in gen.gen_ncts(n))
        out.write(f"{value}\n")
        return EXIT_OK
    if stat == "self-dual":
        if variant == "printed":
            out.write(enum.show(enum.s_printed(n)) + "\n")
        elif variant == "aligned":
            out.write(f"{enum.s_aligned(n)}\n")
        else:
            out.write(f"{enum.count_self_dual(n)}\n")
        return EXIT_OK
    if variant == "brute":
        out.write(f"{enum.oracle(stat, n)}\n")
    else:
        v = "as_printed" if variant == "printed" else "oracle_aligned"
        out.write(enum.show(enum.closed_form(stat, n, v)) + "\n")
    return EXIT_OK


def cmd_fixed(args, out) -> int:
    if args.n < 1 or args.f not in (0, 1):
        raise UsageError("need n >= 1 and f in {0, 1}")
    g = DihedralElement(2 * args.n, args.k, args.f)
    count, wit = enum.fixed_points(g, args.n)
    out.write(f"{count}\n")
    if args.witnesses:
        for q in wit:
            _emit(q, args.format, out)
    return EXIT_OK


def cmd_orbits(args, out) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    res = enum.burnside_orbits(enum.GroupSpec(args.group, args.n), transversal=args.transversal)
    out.write(f"{res.count}\n")
    for q in res.transversal:
        _emit(q, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max < 2:
        raise UsageError("--max must be >= 2")
    report = enum.verify_report(args.max)
    out.write(enum.report_json(report) if args.json else report.to_text())
    if report.formula_mismatch or not report.structural_ok:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_render(args, out) -> int:
    objs = list(_read_objects(args))
    if len(objs) != 1:
        raise ValidationError(f"render takes exactly one object, got {len(objs)}")
    obj = objs[0]
    kind = kind_of(obj)
    fmt = args.format or ("svg" if kind in ("nct", "qd") else "dot")
    if fmt == "svg":
        if kind not in ("nct", "qd"):
            raise ValidationError(f"SVG drawing needs a tree or dissection, got {kind}")
        text = render_svg(obj, overlay=args.overlay, opt=SvgOptions(size=args.size))
    else:
        if kind not in ("ternary", "pcdd"):
            raise ValidationError(f"DOT output needs a ternary tree or PCDD, got {kind}")
        text = render_dot(obj)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _inputs(p: argparse.ArgumentParser) -> None:
    p.add_argument("items", nargs="*", help="objects as canonical text (default: read stdin)")
    p.add_argument("--input", "-i", help="read objects from this file")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="catmirror", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="cmd", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("gen", help="stream every object of a family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("size", type=int, help="n for nct/qd; internal vertices m for ternary, self-dual, pcdd")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("convert", help="apply a bijection to each input object")
    p.add_argument("map", choices=sorted(MAPS))
    _inputs(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("act", help="apply a symmetry operation to each input object")
    p.add_argument("op", help="delta, delta-inv, star, barstar, reflect-s, rev, rotate:<j>, dihedral:<k>,<f>")
    _inputs(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_act)

    p = sub.add_parser("count", help="exact counts and closed forms")
    p.add_argument("stat", choices=COUNT_STATS)
    p.add_argument("n", type=int)
    p.add_argument("--variant", choices=("printed", "aligned", "brute"), default="aligned")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("fixed", help="dissections fixed by delta^k r^f")
    p.add_argument("k", type=int)
    p.add_argument("f", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--witnesses", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_fixed)

    p = sub.add_parser("orbits", help="orbit count by Burnside, checked explicitly")
    p.add_argument("group", choices=enum.GROUPS)
    p.add_argument("n", type=int)
    p.add_argument("--transversal", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("verify", help="compare closed forms with brute force and run identity suites")
    p.add_argument("--max", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="SVG for trees and dissections, DOT for ternary trees and PCDDs")
    _inputs(p)
    p.add_argument("--overlay", action="store_true", help="dissection with its odd and even trees")
    p.add_argument("--format", choices=("svg", "dot"))
    p.add_argument("--size", type=int, default=400)
    p.add_argument("--out", "-o")
    p.set_defaults(fn=cmd_render)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args, out)
    except UsageError as e:
        print(f"catmirror: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError) as e:
        print(f"catmirror: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
