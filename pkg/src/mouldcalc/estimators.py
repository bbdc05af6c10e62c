"""scikit-learn style wrappers around the space solvers.

``fit`` computes the canonical basis of one graded piece, ``transform``
returns exact coordinates of moulds (or dihedral collections) in that
basis, and ``predict`` reports membership.  Samples are the algebraic
objects themselves, not numeric feature rows, so ``X`` is any iterable of
them.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .dihedral import DihedralCollection, dihedral_space_basis, double_shuffle_basis
from .exceptions import GroupMismatch
from .groups import Group, parse_group
from .moulds import Mould, swap
from .spaces import SpaceSpec, ambient_slots, monomials, space_basis

__all__ = ["SymmetrySpace", "DihedralSpace", "check_mould", "check_moulds", "check_collections"]


def check_mould(M, group: Group = None, side: str = None) -> Mould:
    """Validate one mould, converting its side with swap when asked to."""
    if not isinstance(M, Mould):
        raise TypeError(f"expected a Mould, got {type(M).__name__}")
    if group is not None and M.group != group:
        raise GroupMismatch(f"mould over {M.group}, expected {group}")
    if side is not None and M.side != side:
        M = swap(M)
    return M


def check_moulds(X, group: Group = None, side: str = None) -> list:
    if isinstance(X, Mould):
        X = [X]
    out = [check_mould(M, group, side) for M in X]
    if not out:
        raise ValueError("need at least one mould")
    return out


def check_collections(X, group: Group = None, weight=None, depth=None) -> list:
    if isinstance(X, DihedralCollection):
        X = [X]
    out = []
    for Z in X:
        if not isinstance(Z, DihedralCollection):
            raise TypeError(f"expected a DihedralCollection, got {type(Z).__name__}")
        if group is not None and Z.group != group:
            raise GroupMismatch(f"collection over {Z.group}, expected {group}")
        if (weight, depth) != (None, None) and (Z.weight, Z.depth) != (weight, depth):
            raise ValueError(f"collection has (w, m) = ({Z.weight}, {Z.depth}), expected ({weight}, {depth})")
        out.append(Z)
    if not out:
        raise ValueError("need at least one collection")
    return out


def _pivots(vectors):
    return [next(j for j, c in enumerate(v) if c) for v in vectors]


def _coordinates(vec, basis_vectors, pivots):
    coeffs = [vec[p] for p in pivots]
    recon = [Fraction(0)] * len(vec)
    for c, b in zip(coeffs, basis_vectors):
        if c:
            for j, bj in enumerate(b):
                if bj:
                    recon[j] += c * bj
    return coeffs, recon == list(vec)


class _SpaceEstimator(TransformerMixin, BaseEstimator):

    def _vectors(self, X):
        raise NotImplementedError

    def transform(self, X):
        """Coordinates in ``basis_`` (object array of Fractions).

        Raises ValueError for samples outside the space.
        """
        check_is_fitted(self, "basis_")
        rows = []
        for i, v in enumerate(self._vectors(X)):
            coeffs, ok = _coordinates(v, self.basis_vectors_, self.pivots_)
            if not ok:
                raise ValueError(f"sample {i} does not lie in the space")
            rows.append(coeffs)
        return np.array(rows, dtype=object).reshape(len(rows), self.dimension_)

    def predict(self, X):
        """Boolean membership for each sample."""
        check_is_fitted(self, "basis_")
        return np.array([_coordinates(v, self.basis_vectors_, self.pivots_)[1]
                         for v in self._vectors(X)], dtype=bool)

    def score(self, X, y=None):
        """Fraction of samples that lie in the space."""
        return float(np.mean(self.predict(X)))


class SymmetrySpace(_SpaceEstimator):
    """One (weight, depth) slot of a named mould space.

    Parameters
    ----------
    space : str
        A name from :data:`mouldcalc.spaces.SPACE_KINDS` or a ``+``-joined
        intersection.
    group : str or Group
    weight, depth : int
    side : {"u", "v"}
        Presentation used for the ambient coordinates.
    ns : tuple of int, optional
        N values for the distribution relation.
    """

    def __init__(self, space="ALAL", group="trivial", weight=3, depth=1, side="u", ns=None):
        self.space = space
        self.group = group
        self.weight = weight
        self.depth = depth
        self.side = side
        self.ns = ns

    def _spec(self):
        return SpaceSpec(self.space, parse_group(self.group), int(self.weight), int(self.depth),
                         tuple(self.ns) if self.ns is not None else None, self.side)

    def fit(self, X=None, y=None):
        spec = self._spec()
        self.spec_ = spec
        self.slots_ = ambient_slots(spec)
        self.basis_ = space_basis(spec)
        self.basis_vectors_ = [self._vector(M) for M in self.basis_]
        self.pivots_ = _pivots(self.basis_vectors_)
        self.dimension_ = len(self.basis_)
        self.ambient_dimension_ = len(self.slots_)
        return self

    def _vector(self, M):
        out = []
        for m, sigma, e in self.slots_:
            p = M.component(m).get(sigma)
            out.append(p.coefficient(e) if p is not None else Fraction(0))
        return out

    def _vectors(self, X):
        # A trailing flag marks samples with terms outside the ambient slots.
        slots = set(self.slots_)
        out = []
        for M in check_moulds(X, self.spec_.group, self.spec_.side):
            outside = any((m, s, e) not in slots for m, b in M.components.items()
                          for s, p in b.items() for e in p.terms)
            out.append(self._vector(M) + [Fraction(int(outside))])
        return out

    def _coords(self, v):
        return _coordinates(v[:-1], self.basis_vectors_, self.pivots_)

    def transform(self, X):
        check_is_fitted(self, "basis_")
        rows = []
        for i, v in enumerate(self._vectors(X)):
            coeffs, ok = self._coords(v)
            if not ok or v[-1]:
                raise ValueError(f"sample {i} does not lie in the space")
            rows.append(coeffs)
        return np.array(rows, dtype=object).reshape(len(rows), self.dimension_)

    def predict(self, X):
        check_is_fitted(self, "basis_")
        return np.array([self._coords(v)[1] and not v[-1] for v in self._vectors(X)], dtype=bool)

    def inverse_transform(self, C):
        """Moulds from coordinate rows."""
        check_is_fitted(self, "basis_")
        out = []
        for row in np.asarray(C, dtype=object).reshape(-1, self.dimension_):
            M = Mould.zero(self.spec_.group, self.spec_.side)
            for c, b in zip(row, self.basis_):
                if c:
                    M = M + b.scale(Fraction(c))
            out.append(M)
        return out


class DihedralSpace(_SpaceEstimator):
    """The (w, m) piece of the dihedral space of a group.

    Parameters
    ----------
    group : str or Group
    weight, depth : int
    with_distribution : bool
        Add the distribution relations.
    double_shuffle_only : bool
        Use only the harmonic and shuffle relations.
    """

    def __init__(self, group="trivial", weight=3, depth=2, with_distribution=False,
                 double_shuffle_only=False):
        self.group = group
        self.weight = weight
        self.depth = depth
        self.with_distribution = with_distribution
        self.double_shuffle_only = double_shuffle_only

    def fit(self, X=None, y=None):
        G = parse_group(self.group)
        w, m = int(self.weight), int(self.depth)
        self.group_ = G
        if self.double_shuffle_only:
            self.basis_ = double_shuffle_basis(w, m, G)
        else:
            self.basis_ = dihedral_space_basis(w, m, G, bool(self.with_distribution))
        monos = monomials(m, w - m) if w >= m else []
        self.slots_ = [(g, e) for g in itertools.product(range(G.order), repeat=m) for e in monos]
        self.basis_vectors_ = [self._vector(Z) for Z in self.basis_]
        self.pivots_ = _pivots(self.basis_vectors_)
        self.dimension_ = len(self.basis_)
        self.ambient_dimension_ = len(self.slots_)
        return self

    def _vector(self, Z):
        return [Z.entry(g).coefficient(e) for g, e in self.slots_]

    def _vectors(self, X):
        out = []
        for Z in check_collections(X, self.group_, int(self.weight), int(self.depth)):
            if not Z.is_homogeneous():
                raise ValueError("collection is not homogeneous of degree w - m")
            out.append(self._vector(Z))
        return out
