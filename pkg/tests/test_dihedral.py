import itertools
import random

import pytest

from mouldcalc.algebra import SparsePoly
from mouldcalc.dihedral import (DihedralCollection, check_dihedral, check_distribution,
                                check_harmonic, check_shuffle, dihedral_space_basis,
                                distribution_ns, double_shuffle_basis, from_Z, from_mould, to_mould,
                                to_tilde, to_Z)
from mouldcalc.generators import random_bialternal
from mouldcalc.groups import parse_group
from mouldcalc.moulds import swap
from mouldcalc.spaces import SpaceSpec, space_dimension
from mouldcalc.symmetries import is_bialternal, is_pus_neutral, is_push_invariant

from conftest import poly, u1

T = parse_group("trivial")
C2 = parse_group("c2")
C3 = parse_group("c3")


def unit(i, m):
    return tuple(int(j == i) for j in range(m))


def random_collection(rng, G, w, m):
    from mouldcalc.spaces import monomials
    data = {}
    for g in itertools.product(range(G.order), repeat=m):
        if rng.random() < 0.6:
            data[g] = SparsePoly(m, {e: rng.randint(-3, 3) for e in monomials(m, w - m)})
    return DihedralCollection(G, w, m, data)


class TestRepresentation:
    def test_translation_invariance(self):
        rng = random.Random(1)
        Z = random_collection(rng, C3, 5, 2)
        # shifting every T_i by the same form leaves the value unchanged
        forms = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
        shifted = [(1, 0, 1), (0, 1, 1), (0, 0, 2)]
        for k in [(1, 2, 0), (2, 2, 2), (0, 1, 2)]:
            assert Z.value(k, forms, 3) == Z.value(k, shifted, 3)

    def test_depth_one_tilde(self):
        Z = DihedralCollection(C3, 3, 1, {(1,): u1(0, 0, 1), (2,): u1(0, 0, 5)})
        tilde = to_tilde(Z)
        for g1, g2 in itertools.product(range(3), repeat=2):
            want = Z.entry((C3.div(g2, g1),))
            assert tilde.get((g1, g2), SparsePoly.zero(1)) == want

    def test_Z_round_trip(self):
        rng = random.Random(2)
        for G, w, m in ((T, 4, 2), (C2, 5, 3), (C3, 4, 2)):
            Z = random_collection(rng, G, w, m)
            assert from_Z(G, w, m, to_Z(Z)) == Z

    def test_mould_round_trip(self):
        rng = random.Random(3)
        Z = random_collection(rng, C3, 5, 3)
        assert from_mould(to_mould(Z), 5, 3) == Z
        assert to_mould(DihedralCollection(C2, 4, 2)).is_zero()

    def test_swap_formula(self):
        rng = random.Random(4)
        for G, w, m in ((C3, 4, 2), (C2, 5, 3)):
            Z = random_collection(rng, G, w, m)
            S = swap(to_mould(Z))
            for g in itertools.product(range(G.order), repeat=m):
                ks = tuple(G.inv(x) for x in reversed(g)) + (G.prod(g),)
                forms = [unit(i, m) for i in reversed(range(m))] + [(0,) * m]
                assert S.component(m).get(g, SparsePoly.zero(m)) == Z.value(ks, forms, m)


class TestDoubleShuffle:
    def test_harmonic_instance(self):
        # Zu(g1, g2, g3 | t1 : t2 : t3) + Zu(g2, g1, g3 | t2 : t1 : t3) = 0
        for Z in double_shuffle_basis(4, 2, C2) + double_shuffle_basis(8, 2, T):
            G = Z.group
            forms = [unit(0, 3), unit(1, 3), unit(2, 3)]
            swapped = [unit(1, 3), unit(0, 3), unit(2, 3)]
            for g1, g2 in itertools.product(range(G.order), repeat=2):
                g3 = G.inv(G.mul(g1, g2))
                assert not (Z.value((g1, g2, g3), forms, 3) + Z.value((g2, g1, g3), swapped, 3))

    def test_zero_passes(self):
        Z = DihedralCollection(C2, 4, 2)
        assert check_harmonic(Z) and check_shuffle(Z) and check_dihedral(Z)
        assert check_distribution(Z)

    def test_bialternal_moulds_give_solutions(self):
        rng = random.Random(5)
        for G in (C2, C3):
            M = random_bialternal(rng, G, slots=((4, 2),))
            Z = from_mould(M, 4, 2)
            assert check_harmonic(Z) and check_shuffle(Z)

    def test_non_symmetric_collection_fails(self):
        Z = DihedralCollection(C2, 3, 2, {(0, 1): poly(2, {(1, 0): 1})})
        chk = check_dihedral(Z)
        assert not chk
        assert set(chk.witness) == {"relation", "depth", "g", "residual"}
        assert not check_harmonic(Z)

    @pytest.mark.parametrize("G,w,m", [(T, 8, 2), (T, 10, 2), (C2, 4, 2), (C2, 6, 2), (C2, 5, 3),
                                       (C3, 3, 2), (C3, 5, 2), (C3, 4, 3)])
    def test_solutions_are_dihedral_and_bialternal(self, G, w, m):
        basis = double_shuffle_basis(w, m, G)
        assert basis
        for Z in basis:
            assert check_dihedral(Z)
            assert is_bialternal(to_mould(Z))
        assert len(basis) == space_dimension(SpaceSpec("ALAL", G, w, m))

    @pytest.mark.parametrize("w", range(2, 9))
    def test_trivial_dimensions_match_alal(self, w):
        assert len(double_shuffle_basis(w, 2, T)) == space_dimension(SpaceSpec("ALAL", T, w, 2))

    def test_depth_one_and_empty_slots(self):
        assert len(dihedral_space_basis(2, 1, T)) == 0
        assert len(dihedral_space_basis(3, 1, T)) == 1
        assert dihedral_space_basis(2, 3, C2) == []

    def test_embedding_of_depth_two_and_up(self):
        for G, w, m in ((C2, 4, 2), (C2, 5, 3), (C3, 5, 2)):
            for Z in dihedral_space_basis(w, m, G):
                M = to_mould(Z)
                assert is_push_invariant(M) and is_pus_neutral(swap(M))


class TestDistribution:
    def test_trivial_group_has_only_plus_minus_one(self):
        assert distribution_ns(T) == [1, -1]
        assert distribution_ns(C2) == [1, 2, -1, -2]

    def test_slack_at_depth_one(self):
        Z = DihedralCollection(C2, 1, 1, {(1,): SparsePoly.constant(1, 5)})
        chk = check_distribution(Z, 2)
        assert chk
        assert chk.witness == {"slack": {"2": "-5"}}

    def test_additional_constraint(self):
        Z = DihedralCollection(C2, 1, 1, {(0,): SparsePoly.constant(1, 1),
                                          (1,): SparsePoly.constant(1, -2)})
        assert not check_distribution(Z)

    def test_distribution_cuts_down_depth_one(self):
        assert len(dihedral_space_basis(3, 1, C2)) == 2
        assert len(dihedral_space_basis(3, 1, C2, with_distribution=True)) == 1
        for Z in dihedral_space_basis(3, 1, C2, with_distribution=True):
            assert check_distribution(Z)
