"""Bijections between dissections, non-crossing trees, ternary trees and PCDDs.

    phi     : QuadDissection(n)  -> NctLabeledTree(n)     odd diagonals of cells
    psi     : QuadDissection(n)  -> TernaryTree(n-1)      planar dual rooted at edge 1-2
    sigma   : NctLabeledTree(n)  -> TernaryTree(n-1)      fusion recursion on trees
    medial  : NctLabeledTree(n)  -> Pcdd(n-1)             stars of vertices become chains
    tau     : Pcdd(m)            -> TernaryTree(m)        fusion recursion on PCDDs

and the self-dual encoding ``beta_encode`` / ``beta_decode``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import symmetry as sym
from .model import (
    EMPTY_PCDD, LEAF, Leaf, NctLabeledTree, Node, Pcdd, QuadDissection,
    TernaryTree, ValidationError, cells,
)

# ---------------------------------------------------------------------------
# phi and its inverses
# ---------------------------------------------------------------------------


def phi(q: QuadDissection) -> NctLabeledTree:
    if q.n == 1:
        cells(q)
        return NctLabeledTree.single()
    edges = []
    for cell in cells(q):
        a, b = (v for v in cell if v % 2 == 1)
        edges.append(((a + 1) // 2, (b + 1) // 2))
    return NctLabeledTree(q.n, edges)


def even_tree(q: QuadDissection) -> NctLabeledTree:
    """Tree of the even diagonals of the cells, relabeled 2i -> i."""
    if q.n == 1:
        return NctLabeledTree.single()
    edges = []
    for cell in cells(q):
        a, b = (v for v in cell if v % 2 == 0)
        edges.append((a // 2, b // 2))
    return NctLabeledTree(q.n, edges)


def phi_inv(t: NctLabeledTree) -> QuadDissection:
    return psi_inv(sigma(t))


def _free_step(t: NctLabeledTree, x: int, y: int) -> int:
    # Region bordering the chord x-y on the side of the counterclockwise arc
    # x..y touches the boundary in exactly one unit step u, u+1 of that arc.
    n = t.n
    length = (y - x) % n
    covered = [False] * length
    for a, b in t.edges:
        pa, pb = (a - x) % n, (b - x) % n
        if pa > length or pb > length or {pa, pb} == {0, length}:
            continue
        lo, hi = min(pa, pb), max(pa, pb)
        for i in range(lo, hi):
            covered[i] = True
    free = [i for i, c in enumerate(covered) if not c]
    if len(free) != 1:
        raise ValidationError("not a non-crossing tree")
    return (x + free[0] - 1) % n + 1


def phi_inv_superposition(t: NctLabeledTree) -> QuadDissection:
    """Inverse of phi built geometrically, independent of sigma and psi.

    The tree sits on the odd vertices; each chord 2a-1, 2b-1 becomes the odd
    diagonal of a cell whose even corners are the even vertices lying in the
    two regions of the disk that the chord separates.
    """
    n = t.n
    if n <= 2:
        return QuadDissection(n, ())
    size = 2 * n
    diags = set()
    for a, b in t.edges:
        u1 = _free_step(t, a, b)
        u2 = _free_step(t, b, a)
        corners = (2 * a - 1, 2 * u1, 2 * b - 1, 2 * u2)
        for i in range(4):
            c, d = corners[i], corners[(i + 1) % 4]
            if (c - d) % size not in (1, size - 1):
                diags.add((min(c, d), max(c, d)))
    return QuadDissection(n, diags)


# ---------------------------------------------------------------------------
# psi
# ---------------------------------------------------------------------------


def psi(q: QuadDissection) -> TernaryTree:
    """Dual ternary tree of q, rooted at the cell containing polygon edge 1-2.

    Leaving a cell through its parent side, the next three sides in
    counterclockwise order give the right, middle and left child.
    """
    if q.n <= 1:
        cells(q)
        return LEAF
    size = 2 * q.n
    cs = cells(q)
    owner: dict[frozenset, list[int]] = {}
    for idx, c in enumerate(cs):
        for i in range(4):
            owner.setdefault(frozenset((c[i], c[(i + 1) % 4])), []).append(idx)

    def build(idx: int, parent_side: frozenset) -> TernaryTree:
        c = cs[idx]
        sides = [frozenset((c[i], c[(i + 1) % 4])) for i in range(4)]
        i = sides.index(parent_side)
        kids = []
        for j in (1, 2, 3):
            side = sides[(i + j) % 4]
            a, b = sorted(side)
            if (b - a) % size in (1, size - 1):
                kids.append(LEAF)
            else:
                other = [k for k in owner[side] if k != idx][0]
                kids.append(build(other, side))
        right, middle, left = kids
        return Node(left, middle, right)

    root_side = frozenset((1, 2))
    return build(owner[root_side][0], root_side)


def psi_inv(T: TernaryTree) -> QuadDissection:
    """Place polygon edges 2-3, 3-4, ..., 2n-1 on the leaves in
    (right, middle, left) preorder; each internal node spans an arc a..b and
    its chord a-b is a diagonal unless the node is the root."""
    n = T.internal + 1
    if n == 1:
        return QuadDissection(1, ())
    size = 2 * n
    diags = []
    pos = 2

    def walk(node, is_root=False):
        nonlocal pos
        if isinstance(node, Leaf):
            pos += 1
            return
        a = pos
        walk(node.right)
        walk(node.middle)
        walk(node.left)
        if not is_root:
            diags.append((a, (pos - 1) % size + 1))

    walk(T, is_root=True)
    return QuadDissection(n, diags)


# ---------------------------------------------------------------------------
# Fusion of non-crossing trees and sigma
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NctTriple:
    left: NctLabeledTree
    middle: NctLabeledTree
    right: NctLabeledTree


def unfuse_nct(t: NctLabeledTree) -> NctTriple:
    """Cut t at the edge 1-k to its smallest neighbour k.

    With m the largest vertex reachable from k, each part is relabeled
    counterclockwise starting at the vertex where it was attached: the right
    part reads k, 2, ..., k-1, the middle part k, ..., m and the left part
    1, m+1, ..., n.
    """
    if t.n < 2:
        raise ValueError("cannot unfuse the single-vertex tree")
    adj = t.neighbors()
    k = min(adj[1])
    seen = {k}
    stack = [k]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w != 1 and w not in seen:
                seen.add(w)
                stack.append(w)
    m = max(seen)
    right, middle, left = [], [], []
    for a, b in t.edges:
        if a == 1 and b == k:
            continue
        if b < k:
            right.append((a, b))
        elif a == k and b == k:
            continue
        elif b <= k:
            # edge a-k with 2 <= a < k
            right.append((1, a))
        elif a >= k and b <= m:
            middle.append((a - k + 1, b - k + 1))
        else:
            left.append((1 if a == 1 else a - m + 1, b - m + 1))
    return NctTriple(
        NctLabeledTree(t.n - m + 1, left),
        NctLabeledTree(m - k + 1, middle),
        NctLabeledTree(k - 1, right),
    )


def _fuse_maps(a: int, b: int, c: int):
    k = c + 1
    m = b + c
    left = lambda v: 1 if v == 1 else v + m - 1  # noqa: E731
    middle = lambda v: v + k - 1  # noqa: E731
    right = lambda v: k if v == 1 else v  # noqa: E731
    return k, left, middle, right


def fuse_nct(triple: NctTriple) -> NctLabeledTree:
    L, M, R = triple.left, triple.middle, triple.right
    n = L.n + M.n + R.n - 1
    k, fl, fm, fr = _fuse_maps(L.n, M.n, R.n)
    edges = [(1, k)]
    edges += [(fl(a), fl(b)) for a, b in L.edges]
    edges += [(fm(a), fm(b)) for a, b in M.edges]
    edges += [(fr(a), fr(b)) for a, b in R.edges]
    return NctLabeledTree(n, edges)


@lru_cache(maxsize=32768)
def sigma(t: NctLabeledTree) -> TernaryTree:
    """Ternary tree of t by the fusion recursion.

    The middle part borders the root cell along a side whose counterclockwise
    start is an even polygon vertex, so its subtree is read off the even
    diagonals: it enters as delta^-1 of the middle part.  delta^-1 only ever
    runs on strictly smaller trees, so the recursion terminates.
    """
    if t.n == 1:
        return LEAF
    parts = unfuse_nct(t)
    mid = sym.nct_delta(parts.middle, inverse=True)
    return Node(sigma(parts.left), sigma(mid), sigma(parts.right))


def sigma_inv(T: TernaryTree) -> NctLabeledTree:
    if isinstance(T, Leaf):
        return NctLabeledTree.single()
    # delta(sigma_inv(B)) is the even tree of psi_inv(B)
    mid = even_tree(psi_inv(T.middle))
    return fuse_nct(NctTriple(sigma_inv(T.left), mid, sigma_inv(T.right)))


# ---------------------------------------------------------------------------
# Medial ditree
# ---------------------------------------------------------------------------


def medial(t: NctLabeledTree) -> Pcdd:
    """Vertices are the edges of t in sorted order; each tree vertex v
    contributes the chain of its incident edges in counterclockwise order
    starting after v, i.e. by (w - v) mod n over neighbours w."""
    if t.n == 1:
        return EMPTY_PCDD
    index = {e: i for i, e in enumerate(t.edges)}
    adj = t.neighbors()
    darts = set()
    chains = []
    for v in range(1, t.n + 1):
        ws = sorted(adj[v], key=lambda w: (w - v) % t.n)
        chain = [index[(min(v, w), max(v, w))] for w in ws]
        darts.update(zip(chain, chain[1:]))
        chains.append(chain)
    return Pcdd.build(len(t.edges), darts, chains, chains[0])


def _split_pcdd(p: Pcdd):
    """Decompose a non-empty PCDD around v0 = alpha(flag).

    Returns v0 and, for left, middle and right, a pair (part, back) where the
    part is a PCDD on compact labels and ``back[i]`` is the vertex of p that
    label i came from.
    """
    if p.is_empty:
        raise ValueError("the empty PCDD has no fusion decomposition")
    flag = p.flag_chain
    v0 = flag[0]
    others = list(p.chains)
    others.pop(p.flag)
    through = next(i for i, c in enumerate(others) if v0 in c)
    other = others.pop(through)
    pos = other.index(v0)
    f_l, f_m, f_r = flag[1:], other[:pos], other[pos + 1:]

    adj: dict[int, list[int]] = {v: [] for v in range(p.m)}
    for u, v in p.darts:
        adj[u].append(v)
        adj[v].append(u)

    def component(start):
        if start is None:
            return set()
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y != v0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    parts = []
    for which, f in enumerate((f_l, f_m, f_r)):
        anchor = None
        if f:
            # the middle part hangs below v0, attached at the end of its flag
            anchor = f[-1] if which == 1 else f[0]
        comp = component(anchor)
        if not comp:
            parts.append((EMPTY_PCDD, []))
            continue
        back = sorted(comp)
        fwd = {v: i for i, v in enumerate(back)}
        darts = [(fwd[u], fwd[v]) for u, v in p.darts if u in comp and v in comp]
        chains = [[fwd[v] for v in c] for c in others if c and c[0] in comp]
        fc = [fwd[v] for v in f]
        chains.append(fc)
        parts.append((Pcdd.build(len(back), darts, chains, fc), back))
    return v0, parts


def fuse_pcdd(l: Pcdd, m: Pcdd, r: Pcdd) -> Pcdd:
    """The fusion of three PCDDs around a new vertex, in canonical labels."""
    offsets = (0, l.m, l.m + m.m)
    v0 = l.m + m.m + r.m
    darts = set()
    chains = []
    flags = []
    for p, off in zip((l, m, r), offsets):
        darts.update((u + off, v + off) for u, v in p.darts)
        for i, c in enumerate(p.chains):
            if i != p.flag:
                chains.append([v + off for v in c])
        flags.append([v + off for v in p.flag_chain])
    f_l, f_m, f_r = flags
    if f_l:
        darts.add((v0, f_l[0]))
    if f_r:
        darts.add((v0, f_r[0]))
    if f_m:
        darts.add((f_m[-1], v0))
    chains.append(f_m + [v0] + f_r)
    flag = [v0] + f_l
    chains.append(flag)
    return canonical_pcdd(Pcdd.build(v0 + 1, darts, chains, flag))


def unfuse_pcdd(p: Pcdd) -> tuple[Pcdd, Pcdd, Pcdd]:
    _, parts = _split_pcdd(p)
    return tuple(canonical_pcdd(part) for part, _ in parts)


def _medial_inv(p: Pcdd):
    """Reconstruct the tree, and which tree edge each PCDD vertex came from."""
    if p.is_empty:
        return NctLabeledTree.single(), {}
    v0, parts = _split_pcdd(p)
    (pl, bl), (pm, bm), (pr, br) = parts
    TL, el = _medial_inv(pl)
    TM, em = _medial_inv(pm)
    TR, er = _medial_inv(pr)
    k, fl, fm, fr = _fuse_maps(TL.n, TM.n, TR.n)
    t = fuse_nct(NctTriple(TL, TM, TR))

    def lift(f, e):
        a, b = f(e[0]), f(e[1])
        return (a, b) if a < b else (b, a)

    edge_of = {v0: (1, k)}
    for i, e in el.items():
        edge_of[bl[i]] = lift(fl, e)
    for i, e in em.items():
        edge_of[bm[i]] = lift(fm, e)
    for i, e in er.items():
        edge_of[br[i]] = lift(fr, e)
    return t, edge_of


def medial_inv(p: Pcdd) -> NctLabeledTree:
    t, edge_of = _medial_inv(p)
    if sorted(edge_of.values()) != list(t.edges):
        raise ValidationError("PCDD is not the medial ditree of a non-crossing tree")
    return t


@lru_cache(maxsize=65536)
def canonical_pcdd(p: Pcdd) -> Pcdd:
    """Relabel p so vertex i is the i-th edge (sorted) of its medial tree."""
    if p.is_empty:
        return EMPTY_PCDD
    t, edge_of = _medial_inv(p)
    rank = {e: i for i, e in enumerate(t.edges)}
    f = {v: rank[e] for v, e in edge_of.items()}
    return Pcdd.build(
        p.m,
        [(f[u], f[v]) for u, v in p.darts],
        [[f[v] for v in c] for c in p.chains],
        [f[v] for v in p.flag_chain],
    )


# ---------------------------------------------------------------------------
# tau
# ---------------------------------------------------------------------------


def tau(p: Pcdd) -> TernaryTree:
    if p.is_empty:
        return LEAF
    l, m, r = unfuse_pcdd(p)
    return Node(tau(l), tau(sym.pcdd_bar(m)), tau(r))


# ---------------------------------------------------------------------------
# beta: self-dual ternary trees
# ---------------------------------------------------------------------------


def beta_encode(T: TernaryTree):
    """Encode a self-dual tree with m internal vertices.

    Writing T = (t0, t1, t0*), even m gives the tree (t0, u, v) where (u, v)
    encodes t1; odd m gives the pair (t0, beta(t1)).
    """
    if sym.ternary_star(T) != T:
        raise ValueError("tree is not self-dual")
    return _beta(T)


def _beta(T):
    if isinstance(T, Leaf):
        return LEAF
    t0, t1 = T.left, T.middle
    inner = _beta(t1)
    if T.internal % 2 == 0:
        u, v = inner
        return Node(t0, u, v)
    return (t0, inner)


def beta_decode(code, m: int) -> TernaryTree:
    """Inverse of beta_encode for a self-dual tree with m internal vertices."""
    if m == 0:
        if not isinstance(code, Leaf):
            raise ValueError("m = 0 encodes only the leaf")
        return LEAF
    if m % 2 == 0:
        if not isinstance(code, Node) or code.internal != m // 2:
            raise ValueError(f"expected a ternary tree with {m // 2} internal vertices")
        t0, inner = code.left, (code.middle, code.right)
    else:
        t0, inner = code
        if t0.internal + inner.internal != (m - 1) // 2:
            raise ValueError(f"pair must total {(m - 1) // 2} internal vertices")
    t1 = beta_decode(inner, m - 1 - 2 * t0.internal)
    return Node(t0, t1, sym.ternary_star(t0))
