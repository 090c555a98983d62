"""Value types for the four families and the dihedral group acting on polygons.

Labels run counterclockwise with vertex 1 at the bottom of the circle.  All
types are immutable and compare structurally on their normalized fields, so
they can be hashed, put in sets and shipped between worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union


class ValidationError(ValueError):
    """An object violates one of its structural invariants."""


class NotQuadrangularError(ValidationError):
    """Cell extraction produced a cell without exactly four corners."""


def _norm_pairs(pairs: Iterable[Iterable[int]]) -> tuple[tuple[int, int], ...]:
    out = set()
    for p in pairs:
        a, b = p
        a, b = int(a), int(b)
        out.add((a, b) if a < b else (b, a))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Non-crossing trees and dissections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NctLabeledTree:
    """A tree on the vertices 1..n of a convex n-gon, edges drawn as chords."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", _norm_pairs(self.edges))

    @classmethod
    def single(cls) -> "NctLabeledTree":
        return cls(1, ())

    def neighbors(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def relabel(self, f) -> "NctLabeledTree":
        return NctLabeledTree(self.n, [(f(a), f(b)) for a, b in self.edges])


@dataclass(frozen=True)
class QuadDissection:
    """Dissection of the 2n-gon (vertices 1..2n) into quadrilaterals."""

    n: int
    diagonals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "diagonals", _norm_pairs(self.diagonals))

    @property
    def two_n(self) -> int:
        return 2 * self.n


# ---------------------------------------------------------------------------
# Ternary trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    internal: int = field(default=0, init=False, repr=False, compare=False)

    def __repr__(self):
        return "LEAF"


LEAF = Leaf()


@dataclass(frozen=True)
class Node:
    left: "TernaryTree"
    middle: "TernaryTree"
    right: "TernaryTree"
    internal: int = field(init=False, repr=False, compare=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "internal",
            1 + self.left.internal + self.middle.internal + self.right.internal,
        )
        object.__setattr__(self, "_hash", hash((self.left, self.middle, self.right)))

    def __hash__(self):
        return self._hash


TernaryTree = Union[Leaf, Node]


def leaf_count(t: TernaryTree) -> int:
    return 2 * t.internal + 1


# ---------------------------------------------------------------------------
# Flagged perfectly chain-decomposed binary ditrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pcdd:
    """Binary ditree on vertices 0..m-1 with a perfect chain decomposition.

    ``chains`` is kept sorted so equality is structural; ``flag`` indexes the
    first occurrence of the flag chain.  The empty PCDD has m == 0 and a single
    empty chain; the point PCDD has two copies of the trivial chain (0,).
    """

    m: int
    darts: frozenset
    chains: tuple[tuple[int, ...], ...]
    flag: int

    @classmethod
    def build(cls, m, darts, chains, flag_chain) -> "Pcdd":
        chains = tuple(sorted(tuple(c) for c in chains))
        return cls(m, frozenset(darts), chains, chains.index(tuple(flag_chain)))

    @property
    def flag_chain(self) -> tuple[int, ...]:
        return self.chains[self.flag]

    @property
    def is_empty(self) -> bool:
        return self.m == 0

    def alpha(self) -> int:
        return self.flag_chain[0]

    def omega(self) -> int:
        return self.flag_chain[-1]


EMPTY_PCDD = Pcdd(0, frozenset(), ((),), 0)
POINT_PCDD = Pcdd(1, frozenset(), ((0,), (0,)), 0)


# ---------------------------------------------------------------------------
# Dihedral group D_{2n} acting on the labels of a 2n-gon
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DihedralElement:
    """The element delta**k r**f of the symmetry group of a ``two_n``-gon.

    delta acts on labels as v -> v-1 and r as v -> 3-v (mod two_n), so the
    element maps v to (3-v if f else v) - k.
    """

    two_n: int
    k: int = 0
    f: int = 0

    def __post_init__(self):
        if self.two_n < 1:
            raise ValueError("two_n must be positive")
        if self.f not in (0, 1):
            raise ValueError("reflection flag must be 0 or 1")
        object.__setattr__(self, "k", self.k % self.two_n)

    @classmethod
    def identity(cls, two_n) -> "DihedralElement":
        return cls(two_n, 0, 0)

    @classmethod
    def delta(cls, two_n) -> "DihedralElement":
        return cls(two_n, 1, 0)

    @classmethod
    def r(cls, two_n) -> "DihedralElement":
        return cls(two_n, 0, 1)

    @classmethod
    def s(cls, two_n) -> "DihedralElement":
        return cls(two_n, 1, 1)

    def __call__(self, v: int) -> int:
        if self.f:
            v = 3 - v
        return (v - self.k - 1) % self.two_n + 1

    def is_reflection(self) -> bool:
        return self.f == 1


def dihedral_compose(g: DihedralElement, h: DihedralElement) -> DihedralElement:
    """Return g*h, i.e. the element acting as v -> g(h(v))."""
    if g.two_n != h.two_n:
        raise ValueError(f"group size mismatch: {g.two_n} != {h.two_n}")
    sign = -1 if g.f else 1
    return DihedralElement(g.two_n, g.k + sign * h.k, g.f ^ h.f)


def dihedral_inverse(g: DihedralElement) -> DihedralElement:
    if g.f:
        return g
    return DihedralElement(g.two_n, -g.k, 0)


def dihedral_apply(g: DihedralElement, q: QuadDissection) -> QuadDissection:
    if g.two_n != 2 * q.n:
        raise ValueError(f"element of D_{g.two_n} cannot act on a {2 * q.n}-gon")
    return QuadDissection(q.n, [(g(a), g(b)) for a, b in q.diagonals])


# ---------------------------------------------------------------------------
# Geometry on a labeled cycle
# ---------------------------------------------------------------------------


def chords_cross(a: int, b: int, c: int, d: int, cycle_len: int) -> bool:
    """True iff chord {c,d} has exactly one endpoint strictly inside arc a..b."""
    for v in (a, b, c, d):
        if not 1 <= v <= cycle_len:
            raise ValueError(f"label {v} outside 1..{cycle_len}")
    if {a, b} & {c, d}:
        raise ValueError("chords share an endpoint")
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < d < hi)


def _is_polygon_edge(a: int, b: int, size: int) -> bool:
    return (b - a) % size in (1, size - 1)


def cells(q: QuadDissection) -> list[tuple[int, int, int, int]]:
    """Cells of q, each listed counterclockwise from its smallest corner.

    Splits the polygon along one diagonal at a time; a diagonal that lands in
    neither half crosses the splitting one.
    """
    if q.n <= 1:
        if q.diagonals:
            raise ValidationError("a bigon has no diagonals")
        return []
    size = 2 * q.n
    for a, b in q.diagonals:
        if not (1 <= a <= size and 1 <= b <= size) or a == b:
            raise ValidationError(f"diagonal {a}-{b} is not a chord of the {size}-gon")
        if _is_polygon_edge(a, b, size):
            raise ValidationError(f"{a}-{b} is a polygon edge, not a diagonal")

    out = []
    stack = [(list(range(1, size + 1)), list(q.diagonals))]
    while stack:
        verts, diags = stack.pop()
        if not diags:
            if len(verts) != 4:
                raise NotQuadrangularError(f"cell {tuple(verts)} has {len(verts)} corners")
            i = verts.index(min(verts))
            out.append(tuple(verts[i:] + verts[:i]))
            continue
        (a, b), rest = diags[0], diags[1:]
        ia, ib = verts.index(a), verts.index(b)
        if ia > ib:
            ia, ib = ib, ia
        part1 = verts[ia:ib + 1]
        part2 = verts[ib:] + verts[:ia + 1]
        s1, s2 = set(part1), set(part2)
        d1, d2 = [], []
        for c, d in rest:
            if c in s1 and d in s1:
                d1.append((c, d))
            elif c in s2 and d in s2:
                d2.append((c, d))
            else:
                raise ValidationError(f"diagonals {a}-{b} and {c}-{d} cross")
        stack.append((part1, d1))
        stack.append((part2, d2))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# Validation reports
# ---------------------------------------------------------------------------


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def raise_if_invalid(self, what="object"):
        if self.violations:
            raise ValidationError(f"invalid {what}: " + "; ".join(self.violations))


def _components(vertices, pairs) -> int:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(parent)
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            count -= 1
    return count


def _validate_nct(t: NctLabeledTree) -> list[str]:
    bad = []
    if t.n < 1:
        return ["vertex count must be at least 1"]
    for a, b in t.edges:
        if not (1 <= a < b <= t.n):
            bad.append(f"edge {a}-{b} out of range 1..{t.n}")
    if bad:
        return bad
    if len(t.edges) != t.n - 1:
        bad.append(f"expected {t.n - 1} edges, found {len(t.edges)}")
    crossing = [
        (e, f) for i, e in enumerate(t.edges) for f in t.edges[i + 1:]
        if not set(e) & set(f) and chords_cross(*e, *f, t.n)
    ]
    if crossing:
        (a, b), (c, d) = crossing[0]
        bad.append(f"crossing edges {a}-{b} and {c}-{d}")
    if _components(range(1, t.n + 1), t.edges) != 1:
        bad.append("edge set is disconnected")
    return bad


def _validate_dissection(q: QuadDissection) -> list[str]:
    if q.n < 1:
        return ["n must be at least 1"]
    bad = []
    size = 2 * q.n
    expected = max(q.n - 2, 0)
    if len(q.diagonals) != expected:
        bad.append(f"expected {expected} diagonals, found {len(q.diagonals)}")
    for a, b in q.diagonals:
        if not (1 <= a <= size and 1 <= b <= size):
            bad.append(f"diagonal {a}-{b} out of range 1..{size}")
        elif _is_polygon_edge(a, b, size):
            bad.append(f"{a}-{b} is a polygon edge")
        elif (a - b) % 2 == 0:
            bad.append(f"diagonal {a}-{b} joins vertices of the same parity")
    if bad:
        return bad
    for i, e in enumerate(q.diagonals):
        for f in q.diagonals[i + 1:]:
            if not set(e) & set(f) and chords_cross(*e, *f, size):
                bad.append(f"crossing diagonals {e[0]}-{e[1]} and {f[0]}-{f[1]}")
    if not bad:
        try:
            cs = cells(q)
        except ValidationError as exc:
            bad.append(str(exc))
        else:
            if len(cs) != max(q.n - 1, 0):
                bad.append(f"expected {q.n - 1} cells, found {len(cs)}")
    return bad


def _validate_ternary(t) -> list[str]:
    if isinstance(t, Leaf):
        return []
    if not isinstance(t, Node):
        return [f"not a ternary tree: {t!r}"]
    bad = []
    for child in (t.left, t.middle, t.right):
        bad.extend(_validate_ternary(child))
    return bad


def _validate_pcdd(p: Pcdd) -> list[str]:
    bad = []
    if p.m == 0:
        if p.darts or p.chains != ((),) or p.flag != 0:
            bad.append("m = 0 is only allowed for the empty PCDD")
        return bad
    if not 0 <= p.flag < len(p.chains):
        bad.append("flag does not index a chain")
    verts = range(p.m)
    for u, v in p.darts:
        if not (0 <= u < p.m and 0 <= v < p.m) or u == v:
            bad.append(f"dart {u}>{v} out of range")
    if bad:
        return bad
    if len(p.darts) != p.m - 1 or _components(verts, p.darts) != 1:
        bad.append("underlying graph is not a tree")
    indeg = [0] * p.m
    outdeg = [0] * p.m
    for u, v in p.darts:
        outdeg[u] += 1
        indeg[v] += 1
    if any(d > 2 for d in indeg) or any(d > 2 for d in outdeg):
        bad.append("a vertex has in- or out-degree above 2")
    used: dict[tuple[int, int], int] = {}
    occurrences = [0] * p.m
    for c in p.chains:
        if not c:
            bad.append("empty chain in a non-empty PCDD")
            continue
        for v in c:
            if not 0 <= v < p.m:
                bad.append(f"chain vertex {v} out of range")
                return bad
            occurrences[v] += 1
        for u, v in zip(c, c[1:]):
            if (u, v) not in p.darts:
                bad.append(f"chain {c} uses missing dart {u}>{v}")
            used[(u, v)] = used.get((u, v), 0) + 1
    if any(used.get(d, 0) != 1 for d in p.darts):
        bad.append("not every dart lies on exactly one chain")
    if any(k != 2 for k in occurrences):
        bad.append("not every vertex lies on exactly two chains")
    return bad


def validate(obj) -> ValidationReport:
    """Check every invariant of ``obj`` and list the ones that fail."""
    if isinstance(obj, NctLabeledTree):
        return ValidationReport(_validate_nct(obj))
    if isinstance(obj, QuadDissection):
        return ValidationReport(_validate_dissection(obj))
    if isinstance(obj, (Leaf, Node)):
        return ValidationReport(_validate_ternary(obj))
    if isinstance(obj, Pcdd):
        return ValidationReport(_validate_pcdd(obj))
    if isinstance(obj, DihedralElement):
        return ValidationReport([] if 0 <= obj.k < obj.two_n else ["k not reduced"])
    return ValidationReport([f"unsupported object {type(obj).__name__}"])
