"""Seeded random inputs for the identity suites.

Every generator takes a :class:`random.Random` instance so a whole run is
reproducible from one seed.  Symmetric inputs are produced exactly:
alternal moulds as ma of random Lie elements, push-invariant moulds by
averaging over the push orbit, pus-neutral moulds by removing the cyclic
average, and bialternal or distribution-compatible moulds as random
combinations of solver bases.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .algebra import SparsePoly
from .groups import Group
from .lie import NCPoly, lie_basis
from .moulds import Mould
from .spaces import SpaceSpec, monomials, space_basis
from .symmetries import push_average, pusnu_projection

__all__ = ["random_poly", "random_mould", "random_lie", "random_alternal",
           "random_push_invariant", "random_pus_neutral", "random_from_basis",
           "random_bialternal", "random_arid"]

_COEFFS = (-3, -2, -1, 1, 1, 2, 3)


def _coef(rng):
    c = rng.choice(_COEFFS)
    return Fraction(c, rng.choice((1, 1, 1, 2))) if rng.random() < 0.8 else Fraction(c)


def random_poly(rng: random.Random, arity: int, max_degree: int, terms: int = 3) -> SparsePoly:
    out = {}
    for _ in range(terms):
        deg = rng.randint(0, max_degree)
        e = rng.choice(monomials(arity, deg)) if arity else ()
        out[e] = out.get(e, 0) + _coef(rng)
    return SparsePoly(arity, out)


def random_mould(rng: random.Random, group: Group, side: str = "u", max_depth: int = 3,
                 max_degree: int = 3, entries: int = 2) -> Mould:
    """A mould with a few random entries at each depth 1..max_depth."""
    comps = {}
    for m in range(1, max_depth + 1):
        block = {}
        for _ in range(entries):
            sigma = tuple(rng.randrange(group.order) for _ in range(m))
            block[sigma] = random_poly(rng, m, max_degree, terms=2)
        comps[m] = block
    return Mould(group, side, comps)


def random_lie(rng: random.Random, group: Group, weight: int, terms: int = 2) -> NCPoly:
    """Random combination of Lyndon basis elements of one weight (x excluded)."""
    basis = [b for b in lie_basis(group, weight) if b != NCPoly.x(group)]
    h = NCPoly.zero(group)
    for b in rng.sample(basis, min(terms, len(basis))):
        h = h + b.scale(_coef(rng))
    return h


def random_alternal(rng: random.Random, group: Group, max_weight: int = 3) -> Mould:
    from .kv import ma
    M = Mould.zero(group)
    for w in range(1, max_weight + 1):
        M = M + ma(random_lie(rng, group, w))
    return M


def random_push_invariant(rng, group, max_depth=3, max_degree=3) -> Mould:
    return push_average(random_mould(rng, group, "u", max_depth, max_degree))


def random_pus_neutral(rng, group, max_depth=3, max_degree=3) -> Mould:
    return pusnu_projection(random_mould(rng, group, "v", max_depth, max_degree))


def random_from_basis(rng, basis) -> Mould:
    """Random rational combination of some basis elements (None if empty)."""
    if not basis:
        return None
    acc = None
    for b in rng.sample(basis, min(len(basis), 2)):
        t = b.scale(_coef(rng))
        acc = t if acc is None else acc + t
    return acc


def _slot_bases(which, group, slots, **kw):
    return [space_basis(SpaceSpec(which, group, w, d, **kw)) for w, d in slots]


def random_bialternal(rng, group, slots=None, _cache={}) -> Mould:
    """Sum over a few (w, d) slots of random ALAL elements."""
    slots = tuple(slots or ((1, 1), (2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (5, 3)))
    key = ("ALAL", group, slots)
    if key not in _cache:
        _cache[key] = _slot_bases("ALAL", group, slots)
    M = Mould.zero(group)
    for basis in _cache[key]:
        part = random_from_basis(rng, basis)
        if part is not None:
            M = M + part
    return M


def random_arid(rng, group, slots=None, _cache={}) -> Mould:
    """Sum over a few slots of random bialternal distribution-compatible elements."""
    slots = tuple(slots or ((1, 1), (2, 1), (3, 1), (3, 2), (4, 2), (5, 2)))
    key = ("ARID_ALAL", group, slots)
    if key not in _cache:
        _cache[key] = _slot_bases("ARID_ALAL", group, slots)
    M = Mould.zero(group)
    for basis in _cache[key]:
        part = random_from_basis(rng, basis)
        if part is not None:
            M = M + part
    return M


def lie_monomials(group: Group, max_weight: int) -> list:
    """Lyndon basis elements of weights 1..max_weight, x excluded."""
    out = []
    for w in range(1, max_weight + 1):
        out.extend(b for b in lie_basis(group, w) if b != NCPoly.x(group))
    return out


def word_pairs(items, max_weight):
    for a, b in itertools.combinations(items, 2):
        if max(a.weights()) + max(b.weights()) <= max_weight:
            yield a, b
