import random

import pytest
from hypothesis import given, strategies as st

from mouldcalc.exceptions import NotLie
from mouldcalc.flexions import ari
from mouldcalc.generators import random_lie
from mouldcalc.groups import parse_group
from mouldcalc.kv import (TangentialDerivation, i_N_word, is_KV1, is_KV1_reformulated, is_KV1_sec,
                          is_KV2, is_LKV1, is_LKV2, krv_basis, krv_member, leading_sign_f,
                          lkrv_basis, lkrv_member, lkrvd_member, m_N_word, ma, mt_bracket,
                          tder_apply, tder_bracket, vimo)
from mouldcalc.lie import NCPoly, lie_basis, lie_bracket, substitute_z, tilde
from mouldcalc.moulds import Mould, i_N, m_N, swap
from mouldcalc.spaces import SpaceSpec, space_dimension
from mouldcalc.symmetries import (is_alternal, is_pus_neutral, is_push_invariant,
                                  satisfies_distribution, satisfies_senary)

from conftest import small_groups, u1

T = parse_group("trivial")
C2 = parse_group("c2")
x, y = NCPoly.x(T), NCPoly.y(T, 0)


class TestMa:
    def test_single_letter(self):
        assert ma(y) == Mould(T, "u", {1: {(0,): 1}})

    def test_bracket_with_x(self):
        assert ma(lie_bracket(x, y)) == Mould(T, "u", {1: {(0,): u1(0, -1)}})

    def test_indices_are_inverted(self):
        G = parse_group("c3")
        assert set(ma(NCPoly.y(G, 1)).component(1)) == {(2,)}

    @given(small_groups, st.integers(1, 5), st.integers(0, 10 ** 6))
    def test_vimo_translation_invariance(self, G, w, seed):
        from mouldcalc.algebra import substitute_linear
        h = random_lie(random.Random(seed), G, w)
        for r in range(1, w + 1):
            for sigma, p in vimo(h, r).items():
                # (z0, ..., zr) -> (0, z1 - z0, ..., zr - z0)
                shifted = [tuple(0 for _ in range(r + 1))]
                shifted += [tuple(-1 if j == 0 else int(j == i) for j in range(r + 1))
                            for i in range(1, r + 1)]
                assert substitute_linear(p, shifted, r + 1) == p


class TestMtBracket:
    def test_antisymmetry(self):
        f = lie_bracket(x, y)
        assert not mt_bracket(f, f)

    def test_derivation_on_x(self):
        D = TangentialDerivation(T, {}, y)
        assert tder_apply(D, x) == lie_bracket(x, y)

    def test_requires_lie(self):
        with pytest.raises(NotLie):
            mt_bracket(x * y, y)

    @given(small_groups, st.integers(1, 3), st.integers(1, 3), st.integers(0, 10 ** 6))
    def test_ma_turns_mt_into_ari(self, G, w1, w2, seed):
        rng = random.Random(seed)
        f1, f2 = random_lie(rng, G, w1), random_lie(rng, G, w2)
        assert ma(mt_bracket(f1, f2)) == ari(ma(f1), ma(f2))

    def test_tder_bracket_is_commutator(self):
        G = C2
        rng = random.Random(4)
        D1 = TangentialDerivation(G, {0: random_lie(rng, G, 2)}, random_lie(rng, G, 1))
        D2 = TangentialDerivation(G, {1: random_lie(rng, G, 1)}, random_lie(rng, G, 2))
        h = random_lie(rng, G, 3)
        lhs = tder_apply(tder_bracket(D1, D2), h)
        rhs = tder_apply(D1, tder_apply(D2, h)) - tder_apply(D2, tder_apply(D1, h))
        assert lhs == rhs


class TestKV:
    def test_bracket_fails_kv1(self):
        F = lie_bracket(x, y)
        assert not is_KV1(F)
        assert not is_KV1_sec(F) and not is_KV1_reformulated(F)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            is_KV1(NCPoly.zero(T))

    def test_non_lie_rejected(self):
        with pytest.raises(NotLie):
            is_KV2(x * y + y * y)

    @pytest.mark.parametrize("group,w", [("trivial", 3), ("trivial", 5), ("c2", 3), ("c2", 4),
                                         ("c3", 3), ("c3", 4)])
    def test_krv_dimension_matches_mould_side(self, group, w):
        G = parse_group(group)
        basis = krv_basis(G, w)
        assert len(basis) == space_dimension(SpaceSpec("SENA_PUSNU+AL", G, w, 1))
        for F in basis:
            assert krv_member(F)
            M = ma(tilde(substitute_z(F)))
            assert satisfies_senary(M) and is_pus_neutral(swap(M)) and is_alternal(M)

    def test_first_nonzero_weights(self):
        assert [len(krv_basis(C2, w)) for w in (2, 3, 4)] == [0, 0, 1]
        assert [len(krv_basis(parse_group("c3"), w)) for w in (2, 3, 4)] == [0, 1, 2]

    def test_kv_routes_agree_on_basis(self):
        for G in (T, C2):
            for w in (2, 3, 4):
                for F in lie_basis(G, w):
                    assert bool(is_KV1_sec(F)) == bool(is_KV1_reformulated(F))


class TestLKRV:
    @pytest.mark.parametrize("w", range(1, 8))
    def test_depth_one_is_zero(self, w):
        assert lkrv_basis(T, w, 1) == []
        assert lkrv_basis(C2, w, 1) == []

    def test_zero_depth_part_is_member(self):
        F = lie_bracket(x, lie_bracket(x, y))
        assert lkrv_member(F, 2)
        assert is_LKV2(F, 2)

    def test_leading_parts_of_krv_are_lkrv(self):
        for G, w in ((C2, 4), (C2, 5), (parse_group("c3"), 3), (parse_group("c3"), 4)):
            basis = krv_basis(G, w)
            assert basis
            for F in basis:
                d = F.min_depth()
                assert lkrv_member(F, d)

    @pytest.mark.parametrize("w,d", [(3, 2), (4, 2), (5, 2), (5, 3), (6, 3)])
    def test_bigraded_reformulation(self, w, d):
        for F in lie_basis(T, w, d) + lkrv_basis(T, w, d):
            M = ma(tilde(leading_sign_f(F, d)))
            assert bool(is_LKV1(F, d)) == bool(is_push_invariant(M))
            assert bool(is_LKV2(F, d)) == bool(is_pus_neutral(swap(M)))
        assert len(lkrv_basis(T, w, d)) == space_dimension(SpaceSpec("PUSH_PUSNU+AL", T, w, d))

    def test_lkrvd_trivial_equals_lkrv(self):
        for F in lie_basis(T, 5, 2):
            assert lkrvd_member(F, 2) == lkrv_member(F, 2)
        assert lkrvd_member(NCPoly.zero(C2), 2)

    def test_lkrvd_members_give_distribution_moulds(self):
        G = parse_group("c2")
        found = 0
        for w, d in ((3, 2), (4, 2), (4, 3)):
            for F in lkrv_basis(G, w, d):
                if lkrvd_member(F, d):
                    found += 1
                    assert satisfies_distribution(ma(tilde(leading_sign_f(F, d))))
        assert found > 0


@given(st.sampled_from(["c2", "c4", "c2x2"]).map(parse_group), st.integers(1, 4), st.integers(0, 10 ** 6))
def test_word_distribution_maps_match_mould_maps(G, w, seed):
    h = random_lie(random.Random(seed), G, w)
    for N in G.divisors_of_order():
        assert ma(i_N_word(h, N)) == i_N(ma(h), N)
        assert ma(m_N_word(h, N)) == m_N(ma(h), N)
