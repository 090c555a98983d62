"""Non-crossing trees, quadrangular dissections, ternary trees and PCDDs:
the bijections between them, their dualities, and dihedral orbit counts."""

from .bijections import (
    NctTriple, beta_decode, beta_encode, even_tree, fuse_nct, fuse_pcdd, medial, medial_inv, phi,
    phi_inv, phi_inv_superposition, psi, psi_inv, sigma, sigma_inv, tau, unfuse_nct,
    unfuse_pcdd,
)
from .formats import ParseError, format_obj, from_json, parse, to_json
from .generators import (
    gen_dissections, gen_ncts, gen_pcdds, gen_self_dual_ternary, gen_ternary, nu,
)
from .model import (
    EMPTY_PCDD, LEAF, POINT_PCDD, DihedralElement, Leaf, NctLabeledTree, Node,
    NotQuadrangularError, Pcdd, QuadDissection, ValidationError, cells, chords_cross,
    dihedral_apply, dihedral_compose, dihedral_inverse, validate,
)

__all__ = [
    "DihedralElement", "EMPTY_PCDD", "LEAF", "Leaf", "NctLabeledTree", "NctTriple", "Node",
    "NotQuadrangularError", "POINT_PCDD", "ParseError", "Pcdd", "QuadDissection",
    "ValidationError", "beta_decode", "beta_encode", "cells", "chords_cross",
    "dihedral_apply", "dihedral_compose", "dihedral_inverse", "even_tree", "format_obj", "from_json",
    "fuse_nct", "fuse_pcdd", "gen_dissections", "gen_ncts", "gen_pcdds",
    "gen_self_dual_ternary", "gen_ternary", "medial", "medial_inv", "nu", "parse", "phi",
    "phi_inv", "phi_inv_superposition", "psi", "psi_inv", "sigma", "sigma_inv", "tau",
    "to_json", "unfuse_nct", "unfuse_pcdd", "validate",
]
