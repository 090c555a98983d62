"""Exhaustive generation of every family at a given size, and the count nu."""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator

from . import bijections as bij
from .model import LEAF, NctLabeledTree, Node, Pcdd, QuadDissection, TernaryTree
from .symmetry import ternary_star


def nu(n: int) -> int:
    """Generalized Catalan number C(3(n-1), n-1) / (2n - 1), exactly."""
    if n < 1:
        raise ValueError("nu(n) needs n >= 1")
    q, rem = divmod(comb(3 * (n - 1), n - 1), 2 * n - 1)
    assert rem == 0
    return q


def gen_ncts(n: int) -> Iterator[NctLabeledTree]:
    """Stream every non-crossing tree on n vertices in sorted edge-list order.

    Vertices are visited in increasing order and each picks its set of larger
    neighbours.  Candidate sets are tried in the order that makes the full
    sorted edge lists come out lexicographically: [3, 5] before [3] before [4].
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        yield NctLabeledTree.single()
        return

    comp = list(range(n + 1))  # component id per vertex, vertices 1..n
    # bound[x]: x may only be joined to vertices <= bound[x] (no crossings)
    bound = [n] * (n + 2)
    edges: list[tuple[int, int]] = []

    def choices(x: int, lo: int, hi: int, used: frozenset):
        # ascending subsets of lo..hi, each extension tried before stopping
        for y in range(lo, hi + 1):
            if comp[y] in used:
                continue
            yield from ((y,) + rest for rest in choices(x, y + 1, hi, used | {comp[y]}))
        yield ()

    def rec(x: int):
        if x == n:
            if len(edges) == n - 1:
                yield NctLabeledTree(n, edges)
            return
        for ys in choices(x, x + 1, bound[x], frozenset((comp[x],))):
            saved_comp = comp[:]
            saved_bound = bound[:]
            cx = comp[x]
            for y in ys:
                cy = comp[y]
                for v in range(1, n + 1):
                    if comp[v] == cy:
                        comp[v] = cx
                edges.append((x, y))
                for z in range(x + 1, y):
                    if bound[z] > y:
                        bound[z] = y
            # a component with no vertex beyond x can never be joined again
            alive = {comp[v] for v in range(x + 1, n + 1)}
            if all(comp[v] in alive for v in range(1, x + 1)):
                yield from rec(x + 1)
            del edges[len(edges) - len(ys):]
            comp[:] = saved_comp
            bound[:] = saved_bound

    yield from rec(1)


@lru_cache(maxsize=None)
def ncts_by_fusion(n: int) -> tuple[NctLabeledTree, ...]:
    """All trees on n vertices assembled from triples with fuse_nct."""
    if n == 1:
        return (NctLabeledTree.single(),)
    out = []
    for a in range(1, n + 1):
        for b in range(1, n + 2 - a):
            c = n + 1 - a - b
            if c < 1:
                continue
            for L in ncts_by_fusion(a):
                for M in ncts_by_fusion(b):
                    for R in ncts_by_fusion(c):
                        out.append(bij.fuse_nct(bij.NctTriple(L, M, R)))
    return tuple(sorted(out, key=lambda t: t.edges))


def gen_dissections(n: int) -> Iterator[QuadDissection]:
    for t in gen_ncts(n):
        yield bij.phi_inv(t)


@lru_cache(maxsize=None)
def _ternary(m: int) -> tuple[TernaryTree, ...]:
    if m == 0:
        return (LEAF,)
    out = []
    for a in range(m):
        for b in range(m - a):
            c = m - 1 - a - b
            for L in _ternary(a):
                for M in _ternary(b):
                    for R in _ternary(c):
                        out.append(Node(L, M, R))
    return tuple(out)


def gen_ternary(m: int) -> list[TernaryTree]:
    """Ternary trees with m internal vertices, sorted by S-expression."""
    if m < 0:
        raise ValueError("m must be >= 0")
    from .formats import format_obj
    return sorted(_ternary(m), key=format_obj)


def gen_pcdds(m: int) -> Iterator[Pcdd]:
    if m < 0:
        raise ValueError("m must be >= 0")
    for t in gen_ncts(m + 1):
        yield bij.medial(t)


@lru_cache(maxsize=None)
def _self_dual(m: int) -> tuple[TernaryTree, ...]:
    if m == 0:
        return (LEAF,)
    out = []
    for a in range((m - 1) // 2 + 1):
        b = m - 1 - 2 * a
        for t0 in _ternary(a):
            mirror = ternary_star(t0)
            for t1 in _self_dual(b):
                out.append(Node(t0, t1, mirror))
    return tuple(out)


def gen_self_dual_ternary(m: int) -> list[TernaryTree]:
    """Self-dual ternary trees, built as (t0, t1, t0*) with t1 self-dual."""
    if m < 0:
        raise ValueError("m must be >= 0")
    from .formats import format_obj
    return sorted(_self_dual(m), key=format_obj)
