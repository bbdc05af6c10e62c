"""Flexion operators on words and the ari bracket built from them.

A letter pairs an integer linear form in the ambient variables with a group
element index.  On the u-side the form is the "upper" datum that flexions
add into, and the index is twisted by group division; on the v-side the
roles are exchanged.
"""
from __future__ import annotations

import itertools
from typing import NamedTuple

from .algebra import LinearForm, substitute_linear
from .exceptions import GroupMismatch, SideMismatch
from .groups import Group
from .moulds import Mould, _accumulate, _freeze, _guard, lu, mu

__all__ = ["Letter", "Word", "standard_word", "flex_ur", "flex_ul", "flex_lr", "flex_ll",
           "flex_ur_v", "flex_ul_v", "flex_lr_v", "flex_ll_v", "flex", "arit", "ari", "preari",
           "tri_factorizations"]


class Letter(NamedTuple):
    form: tuple
    sigma: int


class Word:
    """A finite sequence of letters over a group, tagged with a side."""

    __slots__ = ("group", "side", "letters")

    def __init__(self, group: Group, side: str, letters=()):
        self.group = group
        self.side = side
        self.letters = tuple(Letter(tuple(f.coefficients if isinstance(f, LinearForm) else f), s)
                             for f, s in letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return (isinstance(other, Word) and self.group == other.group
                and self.side == other.side and self.letters == other.letters)

    def __hash__(self):
        return hash((self.group, self.side, self.letters))

    def __repr__(self):
        return f"Word[{self.side}]({list(self.letters)})"

    def __add__(self, other):
        _same(self, other)
        return Word(self.group, self.side, self.letters + other.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.group, self.side, self.letters[item])
        return self.letters[item]

    @property
    def forms(self):
        return [l.form for l in self.letters]

    @property
    def sigmas(self):
        return tuple(l.sigma for l in self.letters)


def standard_word(group: Group, side: str, sigma) -> Word:
    """The word (x1..xm; s1..sm) with unit forms in m ambient variables."""
    m = len(sigma)
    return Word(group, side, [(LinearForm.unit(i, m), s) for i, s in enumerate(sigma)])


def _same(a: Word, b: Word, side=None):
    if a.side != b.side:
        raise SideMismatch("words from different sides")
    if side is not None and a.side != side:
        raise SideMismatch(f"expected {side}-side words")
    if a.group != b.group:
        raise GroupMismatch("words over different groups")


def _sum_forms(forms):
    return tuple(map(sum, zip(*forms)))


def _addf(f, g):
    return tuple(a + b for a, b in zip(f, g))


def _subf(f, g):
    return tuple(a - b for a, b in zip(f, g))


# Raw flexions on letter tuples.  Naming follows the argument that is
# returned: ur(b, a) and lr(b, a) return a modified by b; ul(a, b) and
# ll(a, b) return a modified by b.

def _ur_u(G, b, a):
    if not b:
        return a
    if not a:
        return ()
    f = _addf(_sum_forms([l.form for l in b]), a[0].form)
    return (Letter(f, a[0].sigma),) + a[1:]


def _ul_u(G, a, b):
    if not b:
        return a
    if not a:
        return ()
    f = _addf(a[-1].form, _sum_forms([l.form for l in b]))
    return a[:-1] + (Letter(f, a[-1].sigma),)


def _lr_u(G, b, a):
    if not b:
        return a
    if not a:
        return ()
    t = G.inv(b[-1].sigma)
    return tuple(Letter(l.form, G.mul(t, l.sigma)) for l in a)


def _ll_u(G, a, b):
    if not b:
        return a
    if not a:
        return ()
    t = G.inv(b[0].sigma)
    return tuple(Letter(l.form, G.mul(l.sigma, t)) for l in a)


def _ur_v(G, b, a):
    if not b:
        return a
    if not a:
        return ()
    s = G.mul(a[0].sigma, G.prod(l.sigma for l in b))
    return (Letter(a[0].form, s),) + a[1:]


def _ul_v(G, a, b):
    if not b:
        return a
    if not a:
        return ()
    s = G.mul(a[-1].sigma, G.prod(l.sigma for l in b))
    return a[:-1] + (Letter(a[-1].form, s),)


def _lr_v(G, b, a):
    if not b:
        return a
    if not a:
        return ()
    f = b[-1].form
    return tuple(Letter(_subf(l.form, f), l.sigma) for l in a)


def _ll_v(G, a, b):
    if not b:
        return a
    if not a:
        return ()
    f = b[0].form
    return tuple(Letter(_subf(l.form, f), l.sigma) for l in a)


_RAW = {
    "u": {"ur": _ur_u, "ul": _ul_u, "lr": _lr_u, "ll": _ll_u},
    "v": {"ur": _ur_v, "ul": _ul_v, "lr": _lr_v, "ll": _ll_v},
}


def flex(kind: str, first: Word, second: Word) -> Word:
    """Apply flexion ``kind`` in {ur, ul, lr, ll} on the words' side.

    ``flex("ur", b, a)`` and ``flex("lr", b, a)`` return ``a`` modified by
    ``b``; ``flex("ul", a, b)`` and ``flex("ll", a, b)`` return ``a``
    modified by ``b``.
    """
    _same(first, second)
    fn = _RAW[first.side][kind]
    return Word(first.group, first.side, fn(first.group, first.letters, second.letters))


def _checked(kind, side):
    def op(first: Word, second: Word) -> Word:
        _same(first, second, side)
        fn = _RAW[side][kind]
        return Word(first.group, side, fn(first.group, first.letters, second.letters))
    op.__name__ = f"flex_{kind}" + ("_v" if side == "v" else "")
    return op


flex_ur = _checked("ur", "u")
flex_ul = _checked("ul", "u")
flex_lr = _checked("lr", "u")
flex_ll = _checked("ll", "u")
flex_ur_v = _checked("ur", "v")
flex_ul_v = _checked("ul", "v")
flex_lr_v = _checked("lr", "v")
flex_ll_v = _checked("ll", "v")


def tri_factorizations(m: int):
    """All (a, b, c) with a + b + c = m, ordered by a then b."""
    for a in range(m + 1):
        for b in range(m - a + 1):
            yield a, b, m - a - b


def arit(B: Mould, A: Mould, truncate=None) -> Mould:
    """The derivation arit(B) applied to A, on the moulds' common side.

    For each depth m and each index tuple, sums A(a ur(b, c)) B(ll(b, c))
    over factorizations a.b.c of the standard word with b, c nonempty, and
    subtracts A(ul(a, b) c) B(lr(a, b)) over factorizations with a, b
    nonempty.
    """
    if A.group != B.group:
        raise GroupMismatch("arit of moulds over different groups")
    if A.side != B.side:
        raise SideMismatch("arit of moulds from different sides")
    G, side = A.group, A.side
    raw_ops = _RAW[side]
    ur, ul, lr, ll = raw_ops["ur"], raw_ops["ul"], raw_ops["lr"], raw_ops["ll"]
    top = A.max_depth + B.max_depth
    _guard(top, truncate)
    limit = top if truncate is None else min(top, truncate)
    Acomp, Bcomp = A.components, B.components
    raw = {}
    cache = {}

    def evaluate(comps, tag, word, m):
        n = len(word)
        block = comps.get(n)
        if not block:
            return None
        sig = tuple(l.sigma for l in word)
        p = block.get(sig)
        if p is None:
            return None
        forms = tuple(l.form for l in word)
        key = (tag, sig, forms)
        hit = cache.get(key)
        if hit is None:
            hit = substitute_linear(p, forms, m)
            cache[key] = hit
        return hit

    for m in range(2, limit + 1):
        splits = [(a, b, c) for a, b, c in tri_factorizations(m) if b >= 1 and (a >= 1 or c >= 1)]
        # keep only splits whose A and B depths are populated
        splits = [(a, b, c) for a, b, c in splits if (a + c) in Acomp and b in Bcomp]
        if not splits:
            continue
        tgt = raw.setdefault(m, {})
        for sigma in itertools.product(range(G.order), repeat=m):
            x = tuple(Letter(tuple(1 if j == i else 0 for j in range(m)), s) for i, s in enumerate(sigma))
            acc = {}
            for a, b, c in splits:
                alpha, beta, gamma = x[:a], x[a:a + b], x[a + b:]
                if c >= 1:
                    pa = evaluate(Acomp, "A", alpha + ur(G, beta, gamma), m)
                    if pa is not None:
                        pb = evaluate(Bcomp, "B", ll(G, beta, gamma), m)
                        if pb is not None:
                            _accumulate(acc, 0, dict((pa * pb).terms), m)
                if a >= 1:
                    pa = evaluate(Acomp, "A", ul(G, alpha, beta) + gamma, m)
                    if pa is not None:
                        pb = evaluate(Bcomp, "B", lr(G, alpha, beta), m)
                        if pb is not None:
                            _accumulate(acc, 0, dict((pa * pb).terms), m, -1)
            if acc.get(0):
                tgt[sigma] = acc[0]
    return Mould._raw(G, side, _freeze(raw))


def ari(A: Mould, B: Mould, truncate=None) -> Mould:
    """ari(A, B) = arit(B)(A) - arit(A)(B) + [A, B]."""
    return arit(B, A, truncate) - arit(A, B, truncate) + lu(A, B, truncate)


def preari(A: Mould, B: Mould, truncate=None) -> Mould:
    """preari(A, B) = arit(B)(A) + A x B."""
    return arit(B, A, truncate) + mu(A, B, truncate)
