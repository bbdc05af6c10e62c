import random
from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from mouldcalc.dihedral import DihedralCollection, from_mould
from mouldcalc.estimators import DihedralSpace, SymmetrySpace, check_moulds
from mouldcalc.exceptions import GroupMismatch
from mouldcalc.generators import random_bialternal, random_mould
from mouldcalc.groups import parse_group
from mouldcalc.moulds import Mould, swap

from conftest import poly

C2 = parse_group("c2")


@pytest.fixture(scope="module")
def alal():
    return SymmetrySpace("ALAL", "c3", 5, 2).fit()


def test_fit_attributes(alal):
    assert alal.dimension_ == 3 == len(alal.basis_)
    assert alal.ambient_dimension_ == 36


def test_transform_round_trip(alal):
    rng = random.Random(0)
    M = random_bialternal(rng, parse_group("c3"), slots=((5, 2),))
    C = alal.transform([M])
    assert C.shape == (1, 3)
    assert alal.inverse_transform(C) == [M]
    assert alal.predict([M]).tolist() == [True]


def test_basis_coordinates_are_unit_vectors(alal):
    C = alal.transform(alal.basis_)
    assert (C == np.eye(3, dtype=object)).all()


def test_outside_samples(alal):
    G = parse_group("c3")
    bad = Mould(G, "u", {2: {(0, 0): poly(2, {(3, 0): 1})}})
    other_slot = Mould(G, "u", {1: {(1,): poly(1, {(4,): 1})}})
    assert alal.predict([bad, other_slot]).tolist() == [False, False]
    assert alal.score([bad, alal.basis_[0]]) == 0.5
    with pytest.raises(ValueError):
        alal.transform([bad])


def test_v_side_samples_are_swapped(alal):
    assert alal.predict([swap(alal.basis_[1])]).tolist() == [True]


def test_params_and_clone():
    est = SymmetrySpace("AL", "c2", 4, 2, side="v")
    assert est.get_params()["space"] == "AL"
    c = clone(est)
    assert c.get_params() == est.get_params()
    c.set_params(weight=5)
    assert c.fit().dimension_ > 0
    with pytest.raises(NotFittedError):
        est.transform([Mould.zero(C2, "v")])


def test_validation():
    est = SymmetrySpace("AL", "c2", 4, 2).fit()
    with pytest.raises(GroupMismatch):
        est.predict([Mould.zero(parse_group("c3"))])
    with pytest.raises(TypeError):
        check_moulds([1])
    with pytest.raises(ValueError):
        check_moulds([])


def test_dihedral_space():
    est = DihedralSpace("c2", 4, 2).fit()
    assert est.dimension_ == 1
    rng = random.Random(1)
    Z = from_mould(random_bialternal(rng, C2, slots=((4, 2),)), 4, 2)
    assert est.predict([Z, DihedralCollection(C2, 4, 2, {(0, 1): poly(2, {(2, 0): 1})})]).tolist() == [True, False]
    C = est.transform([Z])
    assert C[0, 0] == Fraction(C[0, 0])
    with pytest.raises(ValueError):
        est.predict([DihedralCollection(C2, 5, 2)])
    with pytest.raises(TypeError):
        est.predict([random_mould(rng, C2)])


def test_dihedral_space_options():
    assert DihedralSpace("c2", 3, 1).fit().dimension_ == 2
    assert DihedralSpace("c2", 3, 1, with_distribution=True).fit().dimension_ == 1
    assert DihedralSpace("trivial", 8, 2, double_shuffle_only=True).fit().dimension_ == 1
