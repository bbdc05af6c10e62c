"""Exact mould calculus over finite abelian groups."""
from .exceptions import (ArityError, DepthLimitExceeded, GroupMismatch, MouldError, NotDivisible,
                         NotLie, NotSolvable, SideMismatch, TooLarge)
from .groups import Group, GroupElement, parse_group
from .algebra import SparsePoly
from .moulds import Check, Mould, mantar, mu, neg, push, pus, swap, teru
from .flexions import ari, arit, flex, preari
from .lie import NCPoly, is_lie, lie_basis
from .kv import krv_basis, lkrv_basis, ma
from .spaces import SpaceSpec, space_basis, space_dimension
from .dihedral import DihedralCollection, dihedral_space_basis, double_shuffle_basis
from .estimators import DihedralSpace, SymmetrySpace
from .verify import verify_suite

__all__ = [
    "ArityError", "DepthLimitExceeded", "GroupMismatch", "MouldError", "NotDivisible", "NotLie",
    "NotSolvable", "SideMismatch", "TooLarge", "Group", "GroupElement", "parse_group", "SparsePoly",
    "Check", "Mould", "mantar", "mu", "neg", "push", "pus", "swap", "teru", "ari", "arit", "flex",
    "preari", "NCPoly", "is_lie", "lie_basis", "krv_basis", "lkrv_basis", "ma", "SpaceSpec",
    "space_basis", "space_dimension", "DihedralCollection", "dihedral_space_basis",
    "double_shuffle_basis", "DihedralSpace", "SymmetrySpace", "verify_suite",
]

__version__ = "0.1.0"
