"""Randomized checks on trees larger than the exhaustive ranges."""

from hypothesis import given, settings
from hypothesis import strategies as st

from catmirror import (
    DihedralElement, dihedral_apply, dihedral_compose, dihedral_inverse, format_obj, fuse_pcdd, medial, medial_inv, parse, phi,
    phi_inv, phi_inv_superposition, psi, psi_inv, sigma, sigma_inv, tau, unfuse_pcdd,
    validate,
)
from catmirror.symmetry import (
    nct_barstar, nct_delta, nct_reflect_s, nct_rotate, nct_star, pcdd_barstar, pcdd_star,
    ternary_star,
)
from conftest import nc_trees, ternary_trees

SETTINGS = settings(max_examples=150, deadline=None)


@SETTINGS
@given(ternary_trees())
def test_ternary_round_trips(T):
    t = sigma_inv(T)
    assert validate(t).ok
    assert t.n == T.internal + 1
    assert sigma(t) == T
    q = psi_inv(T)
    assert validate(q).ok
    assert psi(q) == T
    assert ternary_star(ternary_star(T)) == T


@SETTINGS
@given(nc_trees())
def test_tree_round_trips(t):
    q = phi_inv(t)
    assert phi(q) == t
    assert q == phi_inv_superposition(t)
    p = medial(t)
    assert validate(p).ok
    assert medial_inv(p) == t
    assert tau(p) == sigma(t)
    assert parse(None, format_obj(t)) == t
    assert parse(None, format_obj(p)) == p


@SETTINGS
@given(nc_trees())
def test_dualities(t):
    st_ = nct_star(t)
    assert nct_star(st_) == t
    assert st_ == nct_reflect_s(nct_delta(t))
    assert nct_barstar(t) == nct_reflect_s(nct_delta(t, inverse=True))
    assert sigma(st_) == ternary_star(sigma(t))
    assert medial(st_) == pcdd_star(medial(t))
    assert medial(nct_barstar(t)) == pcdd_barstar(medial(t))
    assert phi(dihedral_apply(DihedralElement.r(2 * t.n), phi_inv(t))) == st_


@SETTINGS
@given(nc_trees(), st.integers(min_value=-20, max_value=20))
def test_rotation_is_delta_squared(t, j):
    assert nct_rotate(t, j) == nct_rotate(nct_rotate(t, j), t.n)
    if j >= 0:
        u = t
        for _ in range(j):
            u = nct_delta(nct_delta(u))
        assert u == nct_rotate(t, j)


@SETTINGS
@given(nc_trees(8), nc_trees(8), nc_trees(8))
def test_pcdd_fusion(a, b, c):
    pa, pb, pc = medial(a), medial(b), medial(c)
    fused = fuse_pcdd(pa, pb, pc)
    assert validate(fused).ok
    assert unfuse_pcdd(fused) == (pa, pb, pc)
    assert pcdd_star(fused) == fuse_pcdd(pcdd_star(pc), pcdd_barstar(pb), pcdd_star(pa))


@SETTINGS
@given(nc_trees(), st.integers(min_value=0, max_value=39), st.integers(0, 1))
def test_dihedral_action_is_a_group_action(t, k, f):
    q = phi_inv(t)
    g = DihedralElement(2 * t.n, k, f)
    h = DihedralElement(2 * t.n, 1, 1)
    assert dihedral_apply(dihedral_compose(g, h), q) == dihedral_apply(g, dihedral_apply(h, q))
    assert dihedral_apply(dihedral_inverse(g), dihedral_apply(g, q)) == q
    assert validate(dihedral_apply(g, q)).ok
