import itertools

import pytest

from catmirror import (
    LEAF, NctLabeledTree, Node, QuadDissection, format_obj, fuse_nct, gen_dissections,
    gen_ncts, gen_pcdds, gen_self_dual_ternary, gen_ternary, medial, nu, parse, validate,
)
from catmirror.bijections import NctTriple
from catmirror.generators import ncts_by_fusion
from catmirror.model import POINT_PCDD, chords_cross
from catmirror.symmetry import ternary_star

NU = [1, 1, 3, 12, 55, 273, 1428, 7752, 43263, 246675]


def test_nu_values():
    assert [nu(n) for n in range(1, 11)] == NU
    with pytest.raises(ValueError):
        nu(0)


def test_nu_is_exact_for_large_n():
    from math import comb
    n = 60
    assert nu(n) * (2 * n - 1) == comb(3 * (n - 1), n - 1)


@pytest.mark.parametrize("n", range(2, 13))
def test_nu_fusion_recursion(n):
    total = sum(
        nu(a) * nu(b) * nu(n + 1 - a - b)
        for a in range(1, n + 1) for b in range(1, n + 1 - a)
    )
    assert total == nu(n)


def _spanning_oracle(n):
    # every non-crossing spanning tree, by filtering all (n-1)-subsets of chords
    chords = list(itertools.combinations(range(1, n + 1), 2))
    out = []
    for es in itertools.combinations(chords, n - 1):
        t = NctLabeledTree(n, es)
        if validate(t).ok:
            out.append(t)
    return sorted(out, key=lambda t: t.edges)


def test_gen_ncts_small():
    assert list(gen_ncts(1)) == [NctLabeledTree.single()]
    assert list(gen_ncts(2)) == [NctLabeledTree(2, [(1, 2)])]
    assert [format_obj(t) for t in gen_ncts(3)] == [
        "nct 3: 1-2,1-3", "nct 3: 1-2,2-3", "nct 3: 1-3,2-3",
    ]


@pytest.mark.parametrize("n", range(1, 7))
def test_gen_ncts_matches_brute_filter(n):
    assert list(gen_ncts(n)) == _spanning_oracle(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_gen_ncts_matches_fusion_generation(n):
    trees = list(gen_ncts(n))
    assert len(trees) == nu(n)
    assert trees == list(ncts_by_fusion(n))
    assert trees == sorted(trees, key=lambda t: t.edges)
    assert all(validate(t).ok for t in trees)


def test_gen_ncts_is_lazy():
    it = gen_ncts(12)
    first = next(it)
    assert first.edges[0] == (1, 2)


def test_gen_dissections_small():
    assert list(gen_dissections(2)) == [QuadDissection(2, [])]
    assert set(gen_dissections(3)) == {
        QuadDissection(3, [(1, 4)]), QuadDissection(3, [(2, 5)]), QuadDissection(3, [(3, 6)]),
    }
    assert QuadDissection(5, [(1, 4), (5, 8), (5, 10)]) in set(gen_dissections(5))


def _dissection_oracle(n):
    size = 2 * n
    chords = [(a, b) for a in range(1, size + 1) for b in range(a + 2, size + 1)
              if (b - a) % 2 == 1 and not (a == 1 and b == size)]
    out = set()
    for ds in itertools.combinations(chords, max(n - 2, 0)):
        if any(not set(e) & set(f) and chords_cross(*e, *f, size)
               for e, f in itertools.combinations(ds, 2)):
            continue
        out.add(QuadDissection(n, ds))
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_gen_dissections_matches_brute(n):
    qs = list(gen_dissections(n))
    assert len(qs) == len(set(qs)) == nu(n)
    assert set(qs) == _dissection_oracle(n)
    assert all(validate(q).ok for q in qs)


def test_gen_ternary_small():
    assert gen_ternary(0) == [LEAF]
    three = gen_ternary(2)
    assert len(three) == 3
    assert {format_obj(t) for t in three} == {"((* * *) * *)", "(* (* * *) *)", "(* * (* * *))"}


@pytest.mark.parametrize("m", range(0, 8))
def test_gen_ternary_and_pcdds_counts(m):
    ts = gen_ternary(m)
    ps = list(gen_pcdds(m))
    assert len(ts) == len(set(ts)) == nu(m + 1)
    assert len(ps) == len(set(ps)) == nu(m + 1)
    assert all(t.internal == m for t in ts)
    assert all(validate(p).ok for p in ps)


def test_gen_pcdds_one_is_point():
    assert list(gen_pcdds(1)) == [POINT_PCDD]


@pytest.mark.parametrize("m", range(0, 10))
def test_self_dual_generation_matches_filter(m):
    structural = gen_self_dual_ternary(m)
    filtered = [t for t in gen_ternary(m) if ternary_star(t) == t] if m <= 7 else None
    assert len(structural) == len(set(structural))
    assert all(ternary_star(t) == t for t in structural)
    if filtered is not None:
        assert sorted(map(format_obj, structural)) == sorted(map(format_obj, filtered))


def test_self_dual_examples():
    assert gen_self_dual_ternary(0) == [LEAF]
    assert gen_self_dual_ternary(2) == [Node(LEAF, Node(LEAF, LEAF, LEAF), LEAF)]
    assert len(gen_self_dual_ternary(5)) == 7


def test_generation_is_deterministic():
    a = [format_obj(q) for q in gen_dissections(5)]
    b = [format_obj(q) for q in gen_dissections(5)]
    assert a == b
    assert [parse("qd", s) for s in a] == list(gen_dissections(5))


def test_fuse_sizes_reconstruct():
    t = fuse_nct(NctTriple(NctLabeledTree(2, [(1, 2)]), NctLabeledTree(3, [(1, 2), (2, 3)]),
                           NctLabeledTree.single()))
    assert t.n == 2 + 3 + 1 - 1
    assert validate(t).ok
    assert medial(t).m == t.n - 1
