import itertools

from hypothesis import given, strategies as st

from mouldcalc.algebra import substitute_linear
from mouldcalc.flexion_laws import check_laws, check_shuffle_coproduct
from mouldcalc.flexions import Word, ari, arit, flex, preari
from mouldcalc.groups import parse_group
from mouldcalc.moulds import Mould

from conftest import moulds, poly, polys, u1

T = parse_group("trivial")
A = Mould(T, "u", {1: {(0,): u1(0, 1)}})
B = Mould(T, "u", {1: {(0,): u1(0, 0, 1)}})


def word(side, *letters, group=None):
    return Word(group or parse_group("c3"), side, letters)


class TestFlexionExamples:
    def test_upper_right(self):
        b = word("u", ((1, 0, 0), 2))
        a = word("u", ((0, 1, 0), 1), ((0, 0, 1), 2))
        assert flex("ur", b, a) == word("u", ((1, 1, 0), 1), ((0, 0, 1), 2))

    def test_lower_left(self):
        a = word("u", ((1, 0), 2))
        b = word("u", ((0, 1), 1))
        assert flex("ll", a, b) == word("u", ((1, 0), 1))

    def test_v_side(self):
        b = word("v", ((1, 0), 1))
        a = word("v", ((0, 1), 1))
        assert flex("ur", b, a) == word("v", ((0, 1), 2))
        a = word("v", ((1, 0), 2))
        b = word("v", ((0, 1), 1))
        assert flex("ll", a, b) == word("v", ((1, -1), 2))

    def test_empty_conventions(self):
        G = parse_group("c3")
        empty = Word(G, "u", ())
        g = word("u", ((1, 0), 1), ((0, 1), 2))
        for kind in ("ur", "lr"):
            assert flex(kind, empty, g) == g
            assert flex(kind, g, empty) == empty
        for kind in ("ul", "ll"):
            assert flex(kind, g, empty) == g
            assert flex(kind, empty, g) == empty


class TestBracket:
    def test_arit_vanishes_in_depth_one(self):
        assert arit(B, A).component(1) == {}

    def test_arit_depth_two(self):
        expected = poly(2, {(3, 0): 1, (2, 1): 1, (1, 2): -1, (0, 3): -1})
        assert arit(B, A).entry((0, 0)) == expected

    def test_ari_only_product_survives(self):
        C = ari(A, B)
        assert C.depths() == [2]
        assert C.entry((0, 0)) == poly(2, {(1, 2): 1, (2, 1): -1})

    def test_preari(self):
        # (u1 + u2)(u1^2 - u2^2) + u1 u2^2
        assert preari(A, B).entry((0, 0)) == poly(2, {(3, 0): 1, (2, 1): 1, (0, 3): -1})

    def test_zero_arguments(self):
        Z = Mould.zero(T)
        assert ari(A, Z).is_zero()
        assert preari(A, Z).is_zero()
        assert ari(A, A).is_zero()


@given(st.data())
def test_depth_two_closed_form(data):
    G = parse_group(data.draw(st.sampled_from(["c2", "c3", "c4"])))
    Ad = {s: data.draw(polys(1)) for s in range(G.order)}
    Bd = {s: data.draw(polys(1)) for s in range(G.order)}
    Am = Mould(G, "u", {1: {(s,): p for s, p in Ad.items()}})
    Bm = Mould(G, "u", {1: {(s,): p for s, p in Bd.items()}})
    got = arit(Bm, Am)
    for s1, s2 in itertools.product(range(G.order), repeat=2):
        want = (substitute_linear(Ad[s2], [(1, 1)], 2) * substitute_linear(Bd[G.div(s1, s2)], [(1, 0)], 2)
                - substitute_linear(Ad[s1], [(1, 1)], 2) * substitute_linear(Bd[G.div(s2, s1)], [(0, 1)], 2))
        assert got.entry((s1, s2)) == want


@given(moulds(max_depth=2), st.data())
def test_ari_antisymmetric_and_preari_splits_it(M, data):
    N = data.draw(moulds(M.group, M.side, 2))
    assert (ari(M, N) + ari(N, M)).is_zero()
    assert preari(M, N) - preari(N, M) == ari(M, N)


def test_flexion_laws_short_words():
    for side in "uv":
        count, failures = check_laws(parse_group("c2"), side, 2)
        assert count > 1000
        assert failures == []


def test_composition_laws_need_nonempty_middle_word():
    # with b empty the laws would equate a word with an empty one
    G = parse_group("c2")
    a = word("u", ((1,), 1), group=G)
    empty = Word(G, "u", ())
    c = word("u", ((1,), 0), group=G)
    assert flex("ur", flex("ul", empty, a), c) != flex("ur", a + empty, c)


def test_shuffle_coproduct_small():
    count, failures = check_shuffle_coproduct(max_len=2, r_max=3)
    assert count > 0 and failures == []
