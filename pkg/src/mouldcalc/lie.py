"""Noncommutative polynomials in x and y_s (s in Gamma) and free Lie elements.

Letters are small integers: 0 is x and 1 + i is y for the group element of
index i.  A word is a tuple of letters.  Lie elements live inside the
noncommutative algebra; Lie-ness is a predicate.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .algebra import as_rational
from .exceptions import GroupMismatch, NotSolvable
from .groups import Group, GroupElement

__all__ = ["NCPoly", "CyclicNCPoly", "X", "lie_bracket", "is_lie", "anti", "pi_Y", "q_map",
           "trace", "gamma_act", "substitute_z", "tilde", "del_x", "sec", "solve_G",
           "lyndon_words", "lie_basis", "standard_bracketing", "right_factor", "left_factor"]

X = 0


def y(i: int) -> int:
    return 1 + i


class NCPoly:
    """Element of Q<x, y_s> with a fixed group of y-indices."""

    __slots__ = ("group", "terms")

    def __init__(self, group: Group, terms=None):
        self.group = group
        clean = {}
        for w, c in (terms.items() if isinstance(terms, dict) else (terms or ())):
            c = as_rational(c)
            if c:
                w = tuple(w)
                v = clean.get(w, 0) + c
                if v:
                    clean[w] = v
                else:
                    clean.pop(w, None)
        self.terms = clean

    @classmethod
    def _raw(cls, group, terms):
        h = object.__new__(cls)
        h.group = group
        h.terms = terms
        return h

    @classmethod
    def zero(cls, group):
        return cls._raw(group, {})

    @classmethod
    def one(cls, group):
        return cls._raw(group, {(): Fraction(1)})

    @classmethod
    def x(cls, group):
        return cls._raw(group, {(X,): Fraction(1)})

    @classmethod
    def y(cls, group, s):
        if isinstance(s, GroupElement):
            s = s.index
        elif not isinstance(s, int):
            s = group.index_of(s)
        return cls._raw(group, {(y(s),): Fraction(1)})

    @classmethod
    def word(cls, group, letters, c=1):
        return cls._raw(group, {tuple(letters): as_rational(c)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.group == other.group and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.group, frozenset(self.terms.items())))

    def __repr__(self):
        from .parsing import format_ncpoly
        return f"NCPoly({format_ncpoly(self)})"

    def _check(self, other):
        if self.group != other.group:
            raise GroupMismatch("noncommutative polynomials over different groups")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPoly._raw(self.group, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCPoly._raw(self.group, {w: -c for w, c in self.terms.items()})

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return NCPoly.zero(self.group)
        return NCPoly._raw(self.group, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    del out[w]
        return NCPoly._raw(self.group, out)

    def map_words(self, fn) -> "NCPoly":
        """Apply a word -> (word, factor) map linearly; None drops the word."""
        out = {}
        for w, c in self.terms.items():
            r = fn(w)
            if r is None:
                continue
            nw, f = r
            v = out.get(nw, 0) + c * f
            if v:
                out[nw] = v
            else:
                out.pop(nw, None)
        return NCPoly._raw(self.group, out)

    # -- grading ---------------------------------------------------------------
    def weights(self) -> set:
        return {len(w) for w in self.terms}

    def depths(self) -> set:
        return {sum(1 for a in w if a) for w in self.terms}

    def part(self, weight=None, depth=None) -> "NCPoly":
        return NCPoly._raw(self.group, {
            w: c for w, c in self.terms.items()
            if (weight is None or len(w) == weight)
            and (depth is None or sum(1 for a in w if a) == depth)})

    def min_depth(self) -> int:
        return min(self.depths(), default=math.inf)

    def coefficient(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))


class CyclicNCPoly:
    """Linear combination of words up to rotation."""

    __slots__ = ("group", "terms")

    def __init__(self, group, terms):
        self.group = group
        self.terms = {w: c for w, c in terms.items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, CyclicNCPoly) and self.group == other.group
                and self.terms == other.terms)

    def __repr__(self):
        return f"CyclicNCPoly({self.terms})"

    def part(self, depth) -> "CyclicNCPoly":
        return CyclicNCPoly(self.group, {w: c for w, c in self.terms.items()
                                         if sum(1 for a in w if a) == depth})


def lie_bracket(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


def _right_normed(w):
    """Word w -> [[..[w1, w2], w3] .., wn] expanded in the algebra (as dict)."""
    cur = {w[:1]: 1}
    for a in w[1:]:
        nxt = {}
        for u, c in cur.items():
            for nw, s in ((u + (a,), c), ((a,) + u, -c)):
                v = nxt.get(nw, 0) + s
                if v:
                    nxt[nw] = v
                else:
                    nxt.pop(nw, None)
        cur = nxt
    return cur


def dynkin(h: NCPoly) -> NCPoly:
    """The Dynkin map sending a word to its left-normed bracket."""
    out = {}
    for w, c in h.terms.items():
        if not w:
            continue
        for nw, s in _right_normed(w).items():
            v = out.get(nw, 0) + c * s
            if v:
                out[nw] = v
            else:
                out.pop(nw, None)
    return NCPoly._raw(h.group, out)


def is_lie(h: NCPoly) -> bool:
    """Dynkin-Specht-Wever test applied to each weight component."""
    if () in h.terms:
        return False
    d = dynkin(h)
    for w, c in h.terms.items():
        if d.terms.get(w, 0) != len(w) * c:
            return False
    for w in d.terms:
        if w not in h.terms:
            return False
    return True


def anti(h: NCPoly) -> NCPoly:
    return h.map_words(lambda w: (w[::-1], 1))


def pi_Y(h: NCPoly) -> NCPoly:
    """Kill words ending in x; keep the constant term."""
    return h.map_words(lambda w: None if w and w[-1] == X else (w, 1))


def q_map(h: NCPoly) -> NCPoly:
    """Replace successive y-indices s1, s2, ... by s1, s2 s1^-1, s3 s2^-1, ..."""
    G = h.group

    def fn(w):
        out = []
        prev = 0
        for a in w:
            if a == X:
                out.append(a)
            else:
                s = a - 1
                out.append(1 + G.div(s, prev))
                prev = s
        return tuple(out), 1

    return h.map_words(fn)


def _min_rotation(w):
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def trace(h: NCPoly) -> CyclicNCPoly:
    out = {}
    for w, c in h.terms.items():
        r = _min_rotation(w)
        out[r] = out.get(r, 0) + c
    return CyclicNCPoly(h.group, out)


def gamma_act(tau, h: NCPoly) -> NCPoly:
    """tau(x) = x, tau(y_s) = y_(tau s)."""
    G = h.group
    t = tau.index if isinstance(tau, GroupElement) else tau
    return h.map_words(lambda w: (tuple(a if a == X else 1 + G.mul(t, a - 1) for a in w), 1))


def substitute_letters(h: NCPoly, images: dict) -> NCPoly:
    """Algebra endomorphism given images of letters (missing letters are fixed)."""
    G = h.group
    cache = {}

    def img(a):
        if a not in cache:
            cache[a] = images[a] if a in images else NCPoly._raw(G, {(a,): Fraction(1)})
        return cache[a]

    total = NCPoly.zero(G)
    for w, c in h.terms.items():
        acc = NCPoly.one(G)
        for a in w:
            acc = acc * img(a)
            if not acc:
                break
        total = total + acc.scale(c)
    return total


def substitute_z(F: NCPoly) -> NCPoly:
    """x -> z = -x - sum_s y_s, y_s fixed."""
    G = F.group
    z = {(X,): Fraction(-1)}
    for s in range(G.order):
        z[(1 + s,)] = Fraction(-1)
    return substitute_letters(F, {X: NCPoly._raw(G, z)})


def tilde(f: NCPoly) -> NCPoly:
    """y_s -> -y_s."""
    return f.map_words(lambda w: (w, -1 if sum(1 for a in w if a) % 2 else 1))


def del_x(h: NCPoly) -> NCPoly:
    """Derivation with x -> 1 and y_s -> 0."""
    out = {}
    for w, c in h.terms.items():
        for i, a in enumerate(w):
            if a == X:
                nw = w[:i] + w[i + 1:]
                v = out.get(nw, 0) + c
                if v:
                    out[nw] = v
                else:
                    out.pop(nw, None)
    return NCPoly._raw(h.group, out)


def sec(h: NCPoly) -> NCPoly:
    """sum_i (-1)^i / i! del_x^i(h) x^i."""
    G = h.group
    total = NCPoly.zero(G)
    cur = h
    i = 0
    while cur:
        xi = NCPoly._raw(G, {(X,) * i: Fraction(1)})
        total = total + (cur * xi).scale(Fraction((-1) ** i, math.factorial(i)))
        cur = del_x(cur)
        i += 1
    return total


def right_factor(h: NCPoly, letter: int) -> NCPoly:
    """h_a: the coefficient of a on the right in h = sum_a h_a a."""
    return h.map_words(lambda w: (w[:-1], 1) if w and w[-1] == letter else None)


def left_factor(h: NCPoly, letter: int) -> NCPoly:
    """h^a: the coefficient of a on the left in h = sum_a a h^a."""
    return h.map_words(lambda w: (w[1:], 1) if w and w[0] == letter else None)


def solve_G(H: NCPoly) -> NCPoly:
    """Return G with [x, G] = H, or raise :class:`NotSolvable`."""
    G = H.group
    for w in sorted(H.terms):
        if len(w) >= 1 and w[0] != X and w[-1] != X:
            raise NotSolvable("a word starts and ends with a y-letter", witness=w)
    # x P collects the words of H ending in some y.
    P = H.map_words(lambda w: (w[1:], 1) if w and w[-1] != X else None)
    Gsol = sec(P)
    if lie_bracket(NCPoly.x(G), Gsol) != H:
        raise NotSolvable("sec construction does not reproduce H", witness=None)
    return Gsol


# -- free Lie algebra bases ----------------------------------------------------

def lyndon_words(k: int, n: int) -> list:
    """Lyndon words of length n over letters 0..k-1 (Duval's algorithm)."""
    if n == 0:
        return []
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == n:
            out.append(tuple(w))
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def _standard_factor(w):
    """Split a Lyndon word as uv with v its longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        v = w[i:]
        if _is_lyndon(v):
            return w[:i], v
    raise ValueError("not a Lyndon word")


def _is_lyndon(w):
    return all(w < w[i:] + w[:i] for i in range(1, len(w))) and len(w) > 0


def standard_bracketing(group: Group, w) -> NCPoly:
    if len(w) == 1:
        return NCPoly._raw(group, {tuple(w): Fraction(1)})
    u, v = _standard_factor(tuple(w))
    return lie_bracket(standard_bracketing(group, u), standard_bracketing(group, v))


def lie_basis(group: Group, weight: int, depth=None) -> list:
    """Standard-bracketed Lyndon basis of the weight (and depth) piece."""
    k = 1 + group.order
    out = []
    for w in lyndon_words(k, weight):
        if depth is not None and sum(1 for a in w if a) != depth:
            continue
        out.append(standard_bracketing(group, w))
    return out
