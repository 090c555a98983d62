"""One-line canonical text and JSON forms for every family.

    nct 5: 1-2,1-3,3-4,3-5
    qd 5: 1-4,5-8,5-10
    ((* (* * (* * *)) *) * *)
    pcdd 2: darts=1>0 chains=[0];[1 0];[1] flag=0
"""

from __future__ import annotations

import re

from .model import (
    EMPTY_PCDD, LEAF, Leaf, NctLabeledTree, Node, Pcdd, QuadDissection,
    ValidationError, validate,
)

KINDS = ("nct", "qd", "ternary", "pcdd")


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


def kind_of(obj) -> str:
    if isinstance(obj, NctLabeledTree):
        return "nct"
    if isinstance(obj, QuadDissection):
        return "qd"
    if isinstance(obj, (Leaf, Node)):
        return "ternary"
    if isinstance(obj, Pcdd):
        return "pcdd"
    raise TypeError(f"no canonical form for {type(obj).__name__}")


def _ternary_text(t) -> str:
    parts = []
    stack = [t]
    while stack:
        x = stack.pop()
        if isinstance(x, str):
            parts.append(x)
        elif isinstance(x, Leaf):
            parts.append("*")
        else:
            stack.extend([")", x.right, " ", x.middle, " ", x.left, "("])
    return "".join(parts)


def format_obj(obj) -> str:
    kind = kind_of(obj)
    if kind == "nct":
        body = ",".join(f"{a}-{b}" for a, b in obj.edges)
        return f"nct {obj.n}: {body}" if body else f"nct {obj.n}:"
    if kind == "qd":
        body = ",".join(f"{a}-{b}" for a, b in obj.diagonals)
        return f"qd {obj.n}: {body}" if body else f"qd {obj.n}:"
    if kind == "ternary":
        return _ternary_text(obj)
    if obj.is_empty:
        return "pcdd 0:"
    darts = ",".join(f"{u}>{v}" for u, v in sorted(obj.darts))
    chains = ";".join("[" + " ".join(map(str, c)) + "]" for c in obj.chains)
    return f"pcdd {obj.m}: darts={darts} chains={chains} flag={obj.flag}"


_HEAD = re.compile(r"\s*(nct|qd|pcdd)\s+(\d+)\s*:\s*")
_PAIR = re.compile(r"\s*(\d+)\s*-\s*(\d+)\s*")


def _parse_pairs(text: str, start: int) -> list[tuple[int, int]]:
    rest = text[start:]
    if not rest.strip():
        return []
    out = []
    pos = start
    for chunk in rest.split(","):
        m = _PAIR.fullmatch(chunk)
        if not m:
            raise ParseError("expected i-j", pos, chunk.strip())
        out.append((int(m.group(1)), int(m.group(2))))
        pos += len(chunk) + 1
    return out


def _parse_ternary(text: str):
    pos = 0

    def skip():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def tree():
        nonlocal pos
        skip()
        if pos >= len(text):
            raise ParseError("unexpected end of input", pos)
        ch = text[pos]
        if ch == "*":
            pos += 1
            return LEAF
        if ch != "(":
            raise ParseError(f"unexpected {ch!r}", pos)
        pos += 1
        kids = [tree(), tree(), tree()]
        skip()
        if pos >= len(text) or text[pos] != ")":
            raise ParseError("expected ')'", pos)
        pos += 1
        return Node(*kids)

    t = tree()
    skip()
    if pos != len(text):
        raise ParseError("trailing input", pos, text[pos:])
    return t


_PCDD_BODY = re.compile(
    r"darts=(?P<darts>[^ ]*)\s+chains=(?P<chains>.*?)\s+flag=(?P<flag>\d+)\s*$"
)


def _parse_pcdd(m: int, text: str, start: int) -> Pcdd:
    body = text[start:]
    if m == 0:
        if body.strip():
            raise ParseError("the empty PCDD has no body", start)
        return EMPTY_PCDD
    mm = _PCDD_BODY.match(body)
    if not mm:
        raise ParseError("expected darts=... chains=... flag=...", start)
    darts = []
    if mm.group("darts"):
        for d in mm.group("darts").split(","):
            u, _, v = d.partition(">")
            if not (u.strip().isdigit() and v.strip().isdigit()):
                raise ParseError("bad dart", start + mm.start("darts"), d)
            darts.append((int(u), int(v)))
    chains = []
    for c in mm.group("chains").split(";"):
        c = c.strip()
        if not (c.startswith("[") and c.endswith("]")):
            raise ParseError("bad chain", start + mm.start("chains"), c)
        try:
            chains.append(tuple(int(x) for x in c[1:-1].split()))
        except ValueError:
            raise ParseError("bad chain vertex", start + mm.start("chains"), c) from None
    flag = int(mm.group("flag"))
    if not 0 <= flag < len(chains):
        raise ParseError("flag index out of range", start + mm.start("flag"))
    return Pcdd.build(m, darts, chains, chains[flag])


def parse(kind: str | None, text: str, check: bool = True):
    """Parse one line; ``kind`` None means detect it from the text."""
    text = text.strip()
    if kind is None:
        kind = "ternary" if text[:1] in ("(", "*") else text.split(" ", 1)[0]
    if kind == "ternary":
        obj = _parse_ternary(text)
    else:
        m = _HEAD.match(text)
        if not m or m.group(1) != kind:
            raise ParseError(f"expected '{kind} <n>:' header", 0, text[:20])
        size = int(m.group(2))
        if kind == "nct":
            obj = NctLabeledTree(size, _parse_pairs(text, m.end()))
        elif kind == "qd":
            obj = QuadDissection(size, _parse_pairs(text, m.end()))
        elif kind == "pcdd":
            obj = _parse_pcdd(size, text, m.end())
        else:
            raise ParseError(f"unknown kind {kind!r}", 0)
    if check:
        report = validate(obj)
        if not report.ok:
            raise ValidationError("; ".join(report.violations))
    return obj


def to_json(obj) -> dict:
    kind = kind_of(obj)
    if kind == "nct":
        return {"kind": "nct", "n": obj.n, "edges": [list(e) for e in obj.edges]}
    if kind == "qd":
        return {"kind": "qd", "n": obj.n, "diagonals": [list(e) for e in obj.diagonals]}
    if kind == "ternary":
        return {"kind": "ternary", "internal": obj.internal, "sexpr": format_obj(obj)}
    return {
        "kind": "pcdd", "m": obj.m,
        "darts": [list(d) for d in sorted(obj.darts)],
        "chains": [list(c) for c in obj.chains],
        "flag": obj.flag,
    }


def from_json(d: dict):
    kind = d["kind"]
    if kind == "nct":
        return NctLabeledTree(d["n"], [tuple(e) for e in d["edges"]])
    if kind == "qd":
        return QuadDissection(d["n"], [tuple(e) for e in d["diagonals"]])
    if kind == "ternary":
        return _parse_ternary(d["sexpr"])
    if kind == "pcdd":
        if d["m"] == 0:
            return EMPTY_PCDD
        chains = [tuple(c) for c in d["chains"]]
        return Pcdd.build(d["m"], [tuple(x) for x in d["darts"]], chains, chains[d["flag"]])
    raise ValueError(f"unknown kind {kind!r}")
