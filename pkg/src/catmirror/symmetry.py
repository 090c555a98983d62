"""Duality and dihedral operators on trees, ternary trees and PCDDs."""

from __future__ import annotations

from . import bijections as bij
from .model import (
    DihedralElement, Leaf, NctLabeledTree, Node, Pcdd, QuadDissection,
    TernaryTree, dihedral_apply,
)

# ---------------------------------------------------------------------------
# Non-crossing trees
# ---------------------------------------------------------------------------


def _mod1(v: int, n: int) -> int:
    return (v - 1) % n + 1


def nct_reflect_s(t: NctLabeledTree) -> NctLabeledTree:
    """Reflection across the diameter through vertex 1: i -> n + 2 - i."""
    n = t.n
    return t.relabel(lambda i: _mod1(n + 2 - i, n))


def nct_rotate(t: NctLabeledTree, j: int) -> NctLabeledTree:
    n = t.n
    return t.relabel(lambda i: _mod1(i - j, n))


def nct_rev(t: NctLabeledTree) -> NctLabeledTree:
    n = t.n
    return t.relabel(lambda i: n + 1 - i)


def nct_delta(t: NctLabeledTree, inverse: bool = False) -> NctLabeledTree:
    """delta(t) is the tree of even diagonals of the dissection phi^-1(t).

    Even vertex 2i is read as tree vertex i, or i+1 for the inverse.
    """
    tree = bij.even_tree(bij.phi_inv(t))
    if inverse:
        return nct_rotate(tree, -1)
    return tree


def nct_delta_by_rotation(t: NctLabeledTree, inverse: bool = False) -> NctLabeledTree:
    """delta conjugated through phi: rotate the dissection by one step."""
    g = DihedralElement(2 * t.n, -1 if inverse else 1, 0)
    return bij.phi(dihedral_apply(g, bij.phi_inv(t)))


def nct_star(t: NctLabeledTree) -> NctLabeledTree:
    return nct_reflect_s(nct_delta(t))


def nct_barstar(t: NctLabeledTree) -> NctLabeledTree:
    return nct_reflect_s(nct_delta(t, inverse=True))


# ---------------------------------------------------------------------------
# Ternary trees
# ---------------------------------------------------------------------------


def ternary_star(T: TernaryTree) -> TernaryTree:
    if isinstance(T, Leaf):
        return T
    return Node(ternary_star(T.right), ternary_star(T.middle), ternary_star(T.left))


# ---------------------------------------------------------------------------
# PCDDs
# ---------------------------------------------------------------------------


def _pairings(p: Pcdd):
    """For each vertex, its two (predecessor, successor) slots along chains.

    None marks a chain starting or ending there.  The slot list of a vertex
    has the flag's occurrence of its first vertex first.
    """
    slots: dict[int, list] = {v: [] for v in range(p.m)}
    order = [p.flag] + [i for i in range(len(p.chains)) if i != p.flag]
    for i in order:
        c = p.chains[i]
        for j, v in enumerate(c):
            pred = c[j - 1] if j > 0 else None
            succ = c[j + 1] if j + 1 < len(c) else None
            slots[v].append((pred, succ))
    return slots


def _chains_from_pairings(slots) -> list[list[int]]:
    # every chain is recovered from its start slot (pred None)
    by_pred = {}
    for v, pairs in slots.items():
        for pred, succ in pairs:
            if pred is not None:
                by_pred[(pred, v)] = succ
    chains = []
    for v, pairs in slots.items():
        for pred, succ in pairs:
            if pred is not None:
                continue
            chain = [v]
            cur, nxt = v, succ
            while nxt is not None:
                chain.append(nxt)
                cur, nxt = nxt, by_pred[(cur, nxt)]
            chains.append(chain)
    return chains


def _switch(slots):
    """Make the opposite incoming/outgoing choice at every vertex."""
    out = {}
    for v, ((p1, s1), (p2, s2)) in slots.items():
        out[v] = [(p1, s2), (p2, s1)]
    return out


def pcdd_star(p: Pcdd) -> Pcdd:
    """Mind-body dual: switch the chain pairing at every internal vertex.

    The new flag starts where the old one did, leaving along the outgoing
    slot the old flag did not use.
    """
    if p.m <= 1:
        return p
    return bij.canonical_pcdd(_star_raw(p))


def _reverse_pcdd(p: Pcdd) -> Pcdd:
    return Pcdd.build(
        p.m, [(v, u) for u, v in p.darts],
        [c[::-1] for c in p.chains], p.flag_chain[::-1],
    )


def pcdd_barstar(p: Pcdd) -> Pcdd:
    """The other duality: the chain switch of ``pcdd_star`` with its flag rule
    read at the end of the flag (omega, incoming darts) instead of the start."""
    if p.m <= 1:
        return p
    # reversing every dart swaps starts with ends, so the rule at omega is
    # the rule at alpha of the reversed PCDD
    return bij.canonical_pcdd(_reverse_pcdd(_star_raw(_reverse_pcdd(p))))


def _star_raw(p: Pcdd) -> Pcdd:
    slots = _pairings(p)
    a = p.alpha()
    (_, _), (_, other_succ) = slots[a]
    chains = _chains_from_pairings(_switch(slots))
    flag = next(c for c in chains if c[0] == a and (c[1] if len(c) > 1 else None) == other_succ)
    return Pcdd.build(p.m, p.darts, chains, flag)


def pcdd_bar(p: Pcdd) -> Pcdd:
    """The twist applied to the middle part in ``tau``: M(delta^-1(t)) for
    p = M(t), computed intrinsically as the dart reversal of the barstar."""
    if p.m <= 1:
        return p
    return bij.canonical_pcdd(_reverse_pcdd(pcdd_barstar(p)))


def pcdd_bar_by_medial(p: Pcdd) -> Pcdd:
    if p.m <= 1:
        return p
    return bij.medial(nct_delta(bij.medial_inv(p), inverse=True))


# ---------------------------------------------------------------------------
# Dissections
# ---------------------------------------------------------------------------


def dissection_r(q: QuadDissection) -> QuadDissection:
    return dihedral_apply(DihedralElement.r(2 * q.n), q)


def dissection_delta(q: QuadDissection) -> QuadDissection:
    return dihedral_apply(DihedralElement.delta(2 * q.n), q)
