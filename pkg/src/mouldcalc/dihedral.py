"""Goncharov-style dihedral collections and their relations.

A collection of depth m stores, for each (g1, ..., gm) in Gamma^m, the
translation-invariant polynomial

    Zu(g1, ..., gm, g(m+1) | t1 : ... : t(m+1)),   g(m+1) = (g1 ... gm)^-1,

as a polynomial in the m reduced variables s_i = t_i - t(m+1).  The
``tilde`` view Zt(g1 : ... : g(m+1) | t1, ..., t(m+1)) with t1 + ... +
t(m+1) = 0 and the homogeneous view Z(g1 : ... : g(m+1) | t1 : ... :
t(m+1)) are derived from it.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import Eliminator, LinearForm, SparsePoly, substitute_linear
from .exceptions import GroupMismatch, TooLarge
from .groups import Group
from .moulds import Check, Mould, _accumulate
from .spaces import max_ambient, monomials
from .symmetries import alternal_residual

__all__ = ["DihedralCollection", "to_tilde", "to_Z", "from_Z", "to_mould", "from_mould",
           "check_harmonic", "check_shuffle", "check_distribution", "check_dihedral",
           "dihedral_space_basis", "double_shuffle_basis", "distribution_ns"]


class DihedralCollection:
    """Depth-m, weight-w collection in translation-reduced form."""

    __slots__ = ("group", "weight", "depth", "data")

    def __init__(self, group: Group, weight: int, depth: int, data=None):
        self.group = group
        self.weight = weight
        self.depth = depth
        clean = {}
        for g, p in (data or {}).items():
            g = tuple(g)
            if len(g) != depth or p.arity != depth:
                raise ValueError("collection entries must have length and arity equal to the depth")
            if p:
                clean[g] = p
        self.data = clean

    def __eq__(self, other):
        return (isinstance(other, DihedralCollection) and self.group == other.group
                and self.weight == other.weight and self.depth == other.depth
                and self.data == other.data)

    def __repr__(self):
        body = "; ".join(f"{list(g)}: {p.to_string([f's{i + 1}' for i in range(self.depth)])}"
                         for g, p in sorted(self.data.items()))
        return f"DihedralCollection(w={self.weight}, m={self.depth}, {body or '0'})"

    def __bool__(self):
        return bool(self.data)

    def __add__(self, other):
        if self.group != other.group:
            raise GroupMismatch("collections over different groups")
        out = dict(self.data)
        for g, p in other.data.items():
            out[g] = out[g] + p if g in out else p
        return DihedralCollection(self.group, self.weight, self.depth, out)

    def scale(self, c):
        return DihedralCollection(self.group, self.weight, self.depth,
                                  {g: p.scale(c) for g, p in self.data.items()})

    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous(self.weight - self.depth) for p in self.data.values())

    def entry(self, g) -> SparsePoly:
        return self.data.get(tuple(g), SparsePoly.zero(self.depth))

    def value(self, ks, forms, arity: int) -> SparsePoly:
        """Zu(k1..k(m+1) | T1 : ... : T(m+1)) for integer forms T_i."""
        G = self.group
        m = self.depth
        ks = tuple(ks)
        if len(ks) != m + 1 or G.prod(ks) != 0:
            raise ValueError("indices must have length m+1 and product 1")
        p = self.data.get(ks[:m])
        if p is None:
            return SparsePoly.zero(arity)
        last = tuple(forms[m])
        red = [tuple(a - b for a, b in zip(f, last)) for f in forms[:m]]
        return substitute_linear(p, red, arity)


def _full(G, g):
    return tuple(g) + (G.inv(G.prod(g)),)


def _tilde_indices(G, gs):
    """(g1:...:g(m+1)) -> (g1^-1 g2, ..., gm^-1 g(m+1), g(m+1)^-1 g1)."""
    n = len(gs)
    return tuple(G.div(gs[(i + 1) % n], gs[i]) for i in range(n))


def _partial_sum_forms(m, arity=None):
    """Forms t1 : t1+t2 : ... : t1+..+tm : 0 over t1..tm."""
    arity = m if arity is None else arity
    out = [LinearForm([1] * i + [0] * (arity - i)).coefficients for i in range(1, m + 1)]
    out.append((0,) * arity)
    return out


def to_tilde(Z: DihedralCollection) -> dict:
    """Zt(g1:...:g(m+1) | t1..t(m+1)), Sum t = 0, as polynomials in t1..tm.

    The last variable is eliminated through t(m+1) = -(t1 + ... + tm).
    """
    G, m = Z.group, Z.depth
    forms = _partial_sum_forms(m)
    out = {}
    for gs in itertools.product(range(G.order), repeat=m + 1):
        p = Z.value(_tilde_indices(G, gs), forms, m)
        if p:
            out[gs] = p
    return out


def to_Z(Z: DihedralCollection) -> dict:
    """Z(g1:...:g(m+1) | t1:...:t(m+1)) in reduced variables t_i - t(m+1)."""
    G, m = Z.group, Z.depth
    forms = [LinearForm.unit(i, m).coefficients for i in range(m)] + [(0,) * m]
    out = {}
    for gs in itertools.product(range(G.order), repeat=m + 1):
        p = Z.value(_tilde_indices(G, gs), forms, m)
        if p:
            out[gs] = p
    return out


def from_Z(group: Group, weight: int, depth: int, table: dict) -> DihedralCollection:
    """Inverse of :func:`to_Z` (reads the entries with g(m+1) = 1)."""
    G, m = group, depth
    data = {}
    for gs, p in table.items():
        if gs[-1] != 0:
            continue
        data[_tilde_indices(G, gs)[:m]] = p
    return DihedralCollection(G, weight, m, data)


def to_mould(Z: DihedralCollection) -> Mould:
    """Depth-m u-side mould M(u; g) = Zt(g1 : ... : gm : 1 | u1, ..., u(m+1))."""
    G, m = Z.group, Z.depth
    forms = _partial_sum_forms(m)
    block = {}
    for g in itertools.product(range(G.order), repeat=m):
        p = Z.value(_tilde_indices(G, g + (0,)), forms, m)
        if p:
            block[g] = p
    return Mould._raw(G, "u", {m: block})


def from_mould(M: Mould, weight: int, depth: int) -> DihedralCollection:
    """Inverse of :func:`to_mould` on the depth-m component."""
    G, m = M.group, depth
    # Zu(k | s) = M(s1, s2 - s1, ..., sm - s(m-1); g) with g_m = k_m^-1 and
    # g_i = g_(i+1) k_i^-1.
    forms = [LinearForm.unit(0, m).coefficients] + [
        tuple((1 if j == i else -1 if j == i - 1 else 0) for j in range(m)) for i in range(1, m)]
    data = {}
    block = M.component(m)
    for k in itertools.product(range(G.order), repeat=m):
        g = [0] * m
        g[m - 1] = G.inv(k[m - 1])
        for i in range(m - 2, -1, -1):
            g[i] = G.div(g[i + 1], k[i])
        p = block.get(tuple(g))
        if p is not None:
            data[k] = substitute_linear(p, forms, m)
    return DihedralCollection(G, weight, m, data)


def _as_mould(Z: DihedralCollection) -> Mould:
    """Zu read as a mould in the reduced variables (used for harmonic sums)."""
    return Mould._raw(Z.group, "u", {Z.depth: dict(Z.data)})


def _harmonic_residual(Z):
    return {("harmonic",) + k[1:]: p for k, p in alternal_residual(_as_mould(Z), "harmonic").items()}


def _shuffle_residual(Z):
    """Shuffle sums of Zt over every (g1..g(m+1)), all letters moving together."""
    from .symmetries import shuffle_permutations
    G, m = Z.group, Z.depth
    raw = {}
    for p in range(1, m):
        perms = shuffle_permutations(p, m - p)
        # Zt only sees ratios, so g(m+1) = 1 loses nothing.
        for g in itertools.product(range(G.order), repeat=m):
            gs = g + (0,)
            acc = {}
            for perm in perms:
                g2 = tuple(gs[i] for i in perm) + (gs[m],)
                # Zt(g_perm : g(m+1) | t_perm, t(m+1)) with partial sums of the
                # permuted t's.
                forms = []
                run = [0] * m
                for i in perm:
                    run[i] += 1
                    forms.append(tuple(run))
                forms.append((0,) * m)
                q = Z.value(_tilde_indices(G, g2), forms, m)
                _accumulate(acc, 0, dict(q.terms), m)
            if acc.get(0):
                raw[("shuffle", m, p, g)] = SparsePoly._raw(m, acc[0])
    return raw


def _cyclic_residual(Z):
    G, m = Z.group, Z.depth
    out = {}
    units = [LinearForm.unit(i, m + 1).coefficients for i in range(m + 1)]
    for g in itertools.product(range(G.order), repeat=m):
        ks = _full(G, g)
        lhs = Z.value(ks, units, m + 1)
        rot = ks[1:] + ks[:1]
        rhs = Z.value(rot, units[1:] + units[:1], m + 1)
        d = lhs - rhs
        if d:
            out[("cyclic", m, 0, g)] = d
    return out


def _inversion_residual(Z):
    G, m = Z.group, Z.depth
    out = {}
    units = [LinearForm.unit(i, m + 1).coefficients for i in range(m + 1)]
    negs = [tuple(-a for a in u) for u in units]
    for g in itertools.product(range(G.order), repeat=m):
        ks = _full(G, g)
        d = Z.value(ks, units, m + 1) - Z.value(tuple(G.inv(k) for k in ks), negs, m + 1)
        if d:
            out[("inversion", m, 0, g)] = d
    return out


def _reflection_residual(Z):
    G, m = Z.group, Z.depth
    out = {}
    units = [LinearForm.unit(i, m + 1).coefficients for i in range(m + 1)]
    negs = [tuple(-a for a in u) for u in units]
    sign = -1 if (m + 1) % 2 else 1
    for g in itertools.product(range(G.order), repeat=m):
        ks = _full(G, g)
        rk = tuple(G.inv(k) for k in ks[:m][::-1]) + (G.inv(ks[m]),)
        rf = negs[:m][::-1] + [negs[m]]
        d = Z.value(ks, units, m + 1) - Z.value(rk, rf, m + 1).scale(sign)
        if d:
            out[("reflection", m, 0, g)] = d
    return out


def distribution_ns(group: Group) -> list:
    """All N with |N| dividing the group order, positive first."""
    pos = group.divisors_of_order()
    return pos + [-n for n in pos]


def _roots(G, g, N):
    if N > 0:
        return G.roots(g, N)
    return [G.inv(h) for h in G.roots(g, -N)]


def _distribution_residual(Z, N, slack=None):
    """Zu(k | s) - sum over k'^N = k of Zu(k' | N s), for k in (Gamma^N)^m.

    At m = 1 and k = e a constant difference is absorbed by a slack
    variable; its value is written into ``slack`` when given.
    """
    G, m = Z.group, Z.depth
    allowed = G.power_set(abs(N))
    out = {}
    for k in itertools.product(allowed, repeat=m):
        lhs = Z.entry(k)
        acc = {}
        for kp in itertools.product(*(_roots(G, ki, N) for ki in k)):
            p = Z.data.get(kp)
            if p is not None:
                _accumulate(acc, 0, {e: c * Fraction(N) ** sum(e) for e, c in p.terms.items()}, m)
        d = lhs - SparsePoly._raw(m, acc.get(0, {}))
        if m == 1 and k == (0,):
            const = d.coefficient((0,))
            if const:
                if slack is not None:
                    slack[N] = const
                d = d - SparsePoly.constant(1, const)
        if d:
            out[("dist", m, N, k)] = d
    return out


def _additional_residual(Z):
    """Z(e:e|0:0) = 0, i.e. the constant term of Zu(e, e | .) at depth 1."""
    if Z.depth != 1:
        return {}
    c = Z.entry((0,)).coefficient((0,))
    return {("additional", 1, 0, (0,)): SparsePoly.constant(1, c)} if c else {}


def _witness(res, G):
    if not res:
        return Check.passed()
    key = min(res, key=lambda k: (str(k[0]), k[2], k[3]))
    return Check(False, {"relation": key[0], "depth": key[1],
                         "g": [list(G.residues[x]) for x in key[3]],
                         "residual": res[key].to_string([f"t{i + 1}" for i in range(res[key].arity)])})


def check_harmonic(Z: DihedralCollection) -> Check:
    return _witness(_harmonic_residual(Z), Z.group)


def check_shuffle(Z: DihedralCollection) -> Check:
    return _witness(_shuffle_residual(Z), Z.group)


def check_distribution(Z: DihedralCollection, N=None) -> Check:
    """Distribution relations (all admissible N by default) and Z(e:e|0:0) = 0.

    On success the witness records any slack constant used at depth 1.
    """
    ns = distribution_ns(Z.group) if N is None else ([N] if isinstance(N, int) else list(N))
    res = {}
    slack = {}
    for n in ns:
        res.update(_distribution_residual(Z, n, slack))
    res.update(_additional_residual(Z))
    chk = _witness(res, Z.group)
    if chk and slack:
        return Check(True, {"slack": {str(n): str(v) for n, v in slack.items()}})
    return chk


def check_dihedral(Z: DihedralCollection) -> Check:
    res = {}
    res.update(_cyclic_residual(Z))
    res.update(_inversion_residual(Z))
    res.update(_reflection_residual(Z))
    return _witness(res, Z.group)


_RELATIONS = {
    "harmonic": _harmonic_residual,
    "shuffle": _shuffle_residual,
    "cyclic": _cyclic_residual,
    "additional": _additional_residual,
}


def _basis(weight, depth, group, relations, ns=()):
    G = group
    if weight < depth or depth < 1:
        return []
    monos = monomials(depth, weight - depth)
    slots = [(g, e) for g in itertools.product(range(G.order), repeat=depth) for e in monos]
    if len(slots) > max_ambient():
        raise TooLarge(f"ambient dimension {len(slots)} exceeds the guard {max_ambient()}")
    rows = {}
    for j, (g, e) in enumerate(slots):
        Z = DihedralCollection(G, weight, depth, {g: SparsePoly.monomial(e)})
        res = {}
        for r in relations:
            res.update(_RELATIONS[r](Z))
        for n in ns:
            res.update(_distribution_residual(Z, n))
        for key, p in res.items():
            for ex, c in p.terms.items():
                rows.setdefault(key + (ex,), {})[j] = c
    elim = Eliminator(len(slots))
    for r in rows.values():
        if elim.full():
            break
        elim.add_row(r)
    out = []
    for vec in elim.kernel():
        data = {}
        for (g, e), c in zip(slots, vec):
            if c:
                data.setdefault(g, {})[e] = c
        out.append(DihedralCollection(G, weight, depth,
                                      {g: SparsePoly._raw(depth, t) for g, t in data.items()}))
    return out


def double_shuffle_basis(weight: int, depth: int, group: Group) -> list:
    """Collections satisfying the harmonic and shuffle relations only."""
    return _basis(weight, depth, group, ("harmonic", "shuffle"))


def dihedral_space_basis(weight: int, depth: int, group: Group, with_distribution=False) -> list:
    """Basis of the double-shuffle space with cyclic symmetry and Z(e:e|0:0) = 0.

    With ``with_distribution`` the distribution relations for every N with
    |N| dividing the group order are added.
    """
    ns = distribution_ns(group) if with_distribution else ()
    return _basis(weight, depth, group, ("harmonic", "shuffle", "cyclic", "additional"), ns)
