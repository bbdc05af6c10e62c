"""Membership predicates for mould symmetries.

Every predicate is backed by a *residual* map: a linear function from a
mould to a dictionary of polynomials that vanishes exactly when the
symmetry holds.  The predicates report the first nonzero residual as a
witness; the space solver in :mod:`mouldcalc.spaces` compiles the same
residual maps into linear constraints.

Residual keys have the uniform shape ``(name, depth, extra, sigma)``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import LinearForm, SparsePoly, substitute_linear
from .exceptions import SideMismatch
from .moulds import (Check, Mould, _accumulate, _freeze, i_N, m_N, mantar, pus, push,
                     swap, teru)

__all__ = ["shuffle_permutations", "shuffle_product", "shuffle_coefficient", "alternal_residual", "is_alternal", "is_bialternal",
           "is_push_invariant", "is_pus_neutral", "satisfies_senary", "satisfies_distribution",
           "is_mantar_invariant", "is_neg_invariant", "push_average", "pusnu_projection",
           "residuals", "CONSTRAINTS"]


@lru_cache(maxsize=None)
def shuffle_permutations(p: int, q: int) -> tuple:
    """Shuffles of (0..p-1) with (p..p+q-1), as tuples of positions.

    Each result lists, slot by slot, which original letter sits there.
    """
    m = p + q
    out = []
    for first in itertools.combinations(range(m), p):
        perm = [0] * m
        fs = set(first)
        i, j = 0, p
        for k in range(m):
            if k in fs:
                perm[k] = i
                i += 1
            else:
                perm[k] = j
                j += 1
        out.append(tuple(perm))
    return tuple(out)


def shuffle_product(u, v) -> dict:
    """Shuffle product of two letter sequences as {word: multiplicity}."""
    u, v = tuple(u), tuple(v)
    out = {}
    for perm in shuffle_permutations(len(u), len(v)):
        letters = u + v
        w = tuple(letters[i] for i in perm)
        out[w] = out.get(w, 0) + 1
    return out


def shuffle_coefficient(u, v, w) -> int:
    """Coefficient of the word w in u sha v."""
    return shuffle_product(u, v).get(tuple(w), 0)


@lru_cache(maxsize=None)
def _perm_forms(perm: tuple) -> tuple:
    m = len(perm)
    return tuple(LinearForm.unit(k, m) for k in perm)


def _inverse_perm(perm):
    inv = [0] * len(perm)
    for k, i in enumerate(perm):
        inv[i] = k
    return inv


def alternal_residual(M: Mould, name: str = "al") -> dict:
    """Shuffle sums for every depth m = p + q, p, q >= 1, and index tuple.

    The sum for (p, sigma) is over shuffles w of the letters (u1;s1)..(up;sp)
    with (u(p+1);s(p+1))..(um;sm) of M evaluated on w.  An entry of M at
    index rho contributes to the sum for sigma = rho read through the
    inverse shuffle, so only the support of M is visited.
    """
    raw = {}
    for m, block in M.components.items():
        for p in range(1, m):
            perms = shuffle_permutations(p, m - p)
            for rho, poly in block.items():
                for perm in perms:
                    # slot k holds letter perm[k]: rho[k] = sigma[perm[k]]
                    sigma = [0] * m
                    for k, i in enumerate(perm):
                        sigma[i] = rho[k]
                    q = substitute_linear(poly, _perm_forms(perm), m)
                    _accumulate(raw, (name, m, p, tuple(sigma)), dict(q.terms), m)
    return {k: SparsePoly._raw(k[1], t) for k, t in raw.items() if t}


def _difference(A: Mould, B: Mould, name: str) -> dict:
    out = {}
    D = A - B
    if D.depth0:
        out[(name, 0, 0, ())] = SparsePoly.constant(0, D.depth0)
    for m, block in D.components.items():
        for s, p in block.items():
            out[(name, m, 0, s)] = p
    return out


def _as_dict(M: Mould, name: str) -> dict:
    out = {}
    for m, block in M.components.items():
        for s, p in block.items():
            out[(name, m, 0, s)] = p
    return out


def parity_residual(M: Mould, name: str = "parity") -> dict:
    """Depth-1 condition M(x; s) = M(-x; s^-1)."""
    G = M.group
    out = {}
    block = M.component(1)
    keys = set(block) | {(G.inv(s[0]),) for s in block}
    neg1 = (LinearForm((-1,)),)
    for s in sorted(keys):
        lhs = block.get(s, SparsePoly.zero(1))
        t = (G.inv(s[0]),)
        rhs = substitute_linear(block[t], neg1, 1) if t in block else SparsePoly.zero(1)
        d = lhs - rhs
        if d:
            out[(name, 1, 0, s)] = d
    return out


def push_residual(M: Mould, name: str = "push") -> dict:
    return _difference(push(M), M, name)


def pus_cycle_sum(N: Mould) -> Mould:
    """Sum of all m cyclic pus-shifts of each depth-m component."""
    if N.side != "v":
        raise SideMismatch("pus-neutrality is a v-side condition")
    total = {}
    for m, block in N.components.items():
        part = Mould._raw(N.group, "v", {m: block})
        acc = {}
        cur = part
        for _ in range(m):
            cur = pus(cur)
            for s, p in cur.component(m).items():
                _accumulate(acc, s, dict(p.terms), m)
        total[m] = acc
    return Mould._raw(N.group, "v", _freeze(total))


def pusnu_residual(N: Mould, name: str = "pusnu") -> dict:
    return _as_dict(pus_cycle_sum(N), name)


def senary_residual(M: Mould, name: str = "senary") -> dict:
    lhs = teru(M)
    rhs = push(mantar(teru(mantar(M))))
    return _difference(lhs, rhs, name)


def distribution_residual(M: Mould, N: int, name: str = "dist") -> dict:
    out = {}
    for k, p in _difference(i_N(M, N), m_N(M, N), name).items():
        out[(k[0], k[1], N, k[3])] = p
    return out


def _to_u(M: Mould) -> Mould:
    return M if M.side == "u" else swap(M)


def _to_v(M: Mould) -> Mould:
    return M if M.side == "v" else swap(M)


# Atomic constraints: name -> residual map.  u-side conditions are applied
# to the u-side presentation of the argument, v-side ones to the v-side.
CONSTRAINTS = {
    "al": lambda M: alternal_residual(M, "al"),
    "swap_al": lambda M: alternal_residual(swap(M), "swap_al"),
    "parity": lambda M: parity_residual(_to_u(M)),
    "push": lambda M: push_residual(_to_u(M)),
    "pusnu_swap": lambda M: pusnu_residual(_to_v(M), "pusnu_swap"),
    "senary": lambda M: senary_residual(_to_u(M)),
}


def residuals(M: Mould, constraints) -> dict:
    out = {}
    for c in constraints:
        if isinstance(c, tuple) and c[0] == "dist":
            out.update(distribution_residual(_to_u(M), c[1]))
        else:
            out.update(CONSTRAINTS[c](M))
    return out


def _witness(res: dict, group) -> Check:
    if not res:
        return Check.passed()
    key = min(res, key=lambda k: (k[1], str(k[0]), k[2], k[3]))
    name, m, extra, sigma = key
    w = {"constraint": name, "depth": m,
         "sigma": [list(group.residues[s]) for s in sigma],
         "residual": res[key].to_string()}
    if name in ("al", "swap_al"):
        w["p"] = extra
    if name == "dist":
        w["N"] = extra
    return Check(False, w)


def is_alternal(M: Mould) -> Check:
    """Alternality of M on its own side (all shuffle sums vanish)."""
    return _witness(alternal_residual(M), M.group)


def is_bialternal(M: Mould) -> Check:
    """Alternal, alternal after swap, and the depth-1 parity condition."""
    res = alternal_residual(M, "al")
    res.update(alternal_residual(swap(M), "swap_al"))
    res.update(parity_residual(_to_u(M)))
    return _witness(res, M.group)


def is_push_invariant(M: Mould) -> Check:
    if M.side != "u":
        raise SideMismatch("push-invariance is a u-side condition")
    return _witness(push_residual(M), M.group)


def is_pus_neutral(N: Mould) -> Check:
    return _witness(pusnu_residual(N), N.group)


def satisfies_senary(M: Mould) -> Check:
    if M.side != "u":
        raise SideMismatch("the senary relation is a u-side condition")
    return _witness(senary_residual(M), M.group)


def satisfies_distribution(M: Mould, N=None) -> Check:
    """i_N(M) = m_N(M) for the given N, or for every N dividing |Gamma|."""
    if M.side != "u":
        raise SideMismatch("the distribution relation is a u-side condition")
    ns = M.group.divisors_of_order() if N is None else ([N] if isinstance(N, int) else list(N))
    res = {}
    for n in ns:
        res.update(distribution_residual(M, n))
    return _witness(res, M.group)


def is_mantar_invariant(M: Mould) -> Check:
    return _witness(_difference(mantar(M), M, "mantar"), M.group)


def is_neg_invariant(M: Mould) -> Check:
    from .moulds import neg
    return _witness(_difference(neg(M), M, "neg"), M.group)


def push_average(M: Mould) -> Mould:
    """Average of M over the push orbit (order m+1 on depth m)."""
    if M.side != "u":
        raise SideMismatch("push acts on u-side moulds")
    comps = {}
    for m, block in M.components.items():
        part = Mould._raw(M.group, "u", {m: block})
        acc = part
        cur = part
        for _ in range(m):
            cur = push(cur)
            acc = acc + cur
        comps[m] = acc.scale(Fraction(1, m + 1)).component(m)
    return Mould._raw(M.group, "u", comps, M.depth0)


def pusnu_projection(N: Mould) -> Mould:
    """Remove the cyclic average from each depth-m component of a v-side mould."""
    cyc = pus_cycle_sum(N)
    comps = {}
    for m in N.components:
        comps[m] = (Mould._raw(N.group, "v", {m: N.component(m)})
                    - Mould._raw(N.group, "v", {m: cyc.component(m)}).scale(Fraction(1, m))).component(m)
    return Mould._raw(N.group, "v", comps, N.depth0)
