"""Polynomial-valued moulds over a finite abelian group and their operators.

A mould stores, for each depth m >= 1, a sparse map from m-tuples of group
element indices to polynomials in m variables, plus a scalar depth-0 part.
Moulds carry a side tag: ``"u"`` for the variable-on-top presentation used
by ari_u, push and teru, and ``"v"`` for the swapped presentation used by
ari_v and pus.  The u-side variables are written u1, u2, ... (the same
objects are sometimes called x1, x2, ...).
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LinearForm, SparsePoly, as_rational, exact_divide, substitute_linear
from .exceptions import DepthLimitExceeded, GroupMismatch, SideMismatch
from .groups import Group, GroupElement

__all__ = ["Mould", "Check", "mu", "lu", "swap", "push", "neg", "mantar", "teru",
           "pus", "i_N", "m_N", "get_max_depth", "set_max_depth"]

_MAX_DEPTH = int(os.environ.get("MOULD_MAX_DEPTH", 12))


def get_max_depth() -> int:
    return _MAX_DEPTH


def set_max_depth(depth: int) -> None:
    """Change the depth guard used by operators that grow depth."""
    global _MAX_DEPTH
    _MAX_DEPTH = int(depth)


def _guard(depth, truncate):
    if truncate is None and depth > _MAX_DEPTH:
        raise DepthLimitExceeded(
            f"result would reach depth {depth} > guard {_MAX_DEPTH}; pass truncate= or raise the guard")


@dataclass
class Check:
    """Outcome of a predicate: truthy on success, with a witness on failure."""

    ok: bool
    witness: dict = field(default=None)

    def __bool__(self):
        return self.ok

    @classmethod
    def passed(cls):
        return cls(True, None)


def _to_index(group: Group, s) -> int:
    if isinstance(s, GroupElement):
        if s.group != group:
            raise GroupMismatch("group element from another group")
        return s.index
    if isinstance(s, int):
        if len(group.moduli) <= 1:
            return s % max(group.order, 1)
        return s
    return group.index_of(s)


class Mould:
    """A polynomial-valued mould.

    Parameters
    ----------
    group : Group
    side : {"u", "v"}
    components : dict, optional
        ``{depth: {sigma: SparsePoly}}`` where ``sigma`` is a tuple of group
        element indices (or residue vectors, or :class:`GroupElement`).
    depth0 : rational, optional
        The scalar component at depth 0.
    """

    __slots__ = ("group", "side", "depth0", "components")

    def __init__(self, group: Group, side: str = "u", components=None, depth0=0):
        if side not in ("u", "v"):
            raise ValueError("side must be 'u' or 'v'")
        self.group = group
        self.side = side
        self.depth0 = as_rational(depth0)
        comps = {}
        for m, entries in (components or {}).items():
            m = int(m)
            if m < 1:
                raise ValueError("components start at depth 1; use depth0 for depth 0")
            block = {}
            for sigma, poly in entries.items():
                sigma = tuple(_to_index(group, s) for s in sigma)
                if len(sigma) != m:
                    raise ValueError(f"index tuple {sigma} does not have length {m}")
                if not isinstance(poly, SparsePoly):
                    poly = SparsePoly.constant(m, poly)
                if poly.arity != m:
                    raise ValueError(f"polynomial at depth {m} has arity {poly.arity}")
                if poly:
                    block[sigma] = block[sigma] + poly if sigma in block else poly
                    if not block[sigma]:
                        del block[sigma]
            if block:
                comps[m] = block
        self.components = comps

    @classmethod
    def _raw(cls, group, side, components, depth0=Fraction(0)):
        M = object.__new__(cls)
        M.group = group
        M.side = side
        M.depth0 = depth0
        M.components = {m: b for m, b in components.items() if b}
        return M

    @classmethod
    def zero(cls, group: Group, side: str = "u") -> "Mould":
        return cls._raw(group, side, {})

    # -- inspection ------------------------------------------------------------
    @property
    def max_depth(self) -> int:
        return max(self.components, default=0)

    def depths(self) -> list:
        return sorted(self.components)

    def component(self, m: int) -> dict:
        return self.components.get(m, {})

    def entry(self, sigma) -> SparsePoly:
        sigma = tuple(_to_index(self.group, s) for s in sigma)
        return self.components.get(len(sigma), {}).get(sigma, SparsePoly.zero(len(sigma)))

    def __getitem__(self, sigma):
        return self.entry(sigma)

    def is_zero(self) -> bool:
        return not self.components and not self.depth0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Mould):
            return NotImplemented
        return (self.group == other.group and self.side == other.side
                and self.depth0 == other.depth0 and self.components == other.components)

    def __repr__(self):
        parts = []
        if self.depth0:
            parts.append(f"0: {self.depth0}")
        for m in self.depths():
            for s, p in sorted(self.components[m].items()):
                parts.append(f"{m}{list(s)}: {p.to_string()}")
        body = "; ".join(parts) if parts else "0"
        return f"Mould[{self.side}, {self.group}]({body})"

    def weights(self) -> set:
        """Set of weights (depth + degree) of the monomials present."""
        out = set()
        for m, block in self.components.items():
            for p in block.values():
                out.update(m + sum(e) for e in p.terms)
        if self.depth0:
            out.add(0)
        return out

    def homogeneous_part(self, weight: int) -> "Mould":
        comps = {}
        for m, block in self.components.items():
            nb = {}
            for s, p in block.items():
                t = {e: c for e, c in p.terms.items() if m + sum(e) == weight}
                if t:
                    nb[s] = SparsePoly._raw(m, t)
            comps[m] = nb
        return Mould._raw(self.group, self.side, comps, self.depth0 if weight == 0 else Fraction(0))

    def truncate(self, depth: int) -> "Mould":
        """Drop all components deeper than ``depth``."""
        return Mould._raw(self.group, self.side,
                          {m: b for m, b in self.components.items() if m <= depth}, self.depth0)

    def depth_part(self, depth: int) -> "Mould":
        return Mould._raw(self.group, self.side,
                          {depth: self.components.get(depth, {})} if depth else {},
                          self.depth0 if depth == 0 else Fraction(0))

    def filtration_degree(self) -> int:
        """Smallest depth with a nonzero component (infinity for zero)."""
        if self.depth0:
            return 0
        return min(self.components, default=float("inf"))

    # -- linear structure ------------------------------------------------------
    def _compatible(self, other):
        if self.group != other.group:
            raise GroupMismatch(f"{self.group!r} vs {other.group!r}")
        if self.side != other.side:
            raise SideMismatch(f"{self.side}-side vs {other.side}-side")

    def __add__(self, other):
        self._compatible(other)
        return _combine(self, other, 1)

    def __sub__(self, other):
        self._compatible(other)
        return _combine(self, other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "Mould":
        c = as_rational(c)
        if not c:
            return Mould.zero(self.group, self.side)
        return Mould._raw(self.group, self.side,
                          {m: {s: p.scale(c) for s, p in b.items()} for m, b in self.components.items()},
                          self.depth0 * c)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def map_entries(self, fn) -> "Mould":
        return Mould._raw(self.group, self.side,
                          {m: {s: fn(m, s, p) for s, p in b.items()} for m, b in self.components.items()},
                          self.depth0)


def _combine(A: Mould, B: Mould, sign: int) -> Mould:
    comps = {m: dict(b) for m, b in A.components.items()}
    for m, block in B.components.items():
        target = comps.setdefault(m, {})
        for s, p in block.items():
            if s in target:
                q = target[s] + p if sign > 0 else target[s] - p
                if q:
                    target[s] = q
                else:
                    del target[s]
            else:
                target[s] = p if sign > 0 else -p
    d0 = A.depth0 + B.depth0 if sign > 0 else A.depth0 - B.depth0
    return Mould._raw(A.group, A.side, comps, d0)


def _tensor(p: SparsePoly, q: SparsePoly) -> dict:
    """Product of p(x1..xi) and q(x_{i+1}..x_m) as a raw term dict."""
    out = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            out[e1 + e2] = c1 * c2
    return out


def _accumulate(block: dict, sigma, terms: dict, arity: int, sign=1):
    if not terms:
        return
    cur = block.get(sigma)
    if cur is None:
        block[sigma] = terms if sign > 0 else {e: -c for e, c in terms.items()}
        return
    for e, c in terms.items():
        v = cur.get(e, 0) + (c if sign > 0 else -c)
        if v:
            cur[e] = v
        else:
            cur.pop(e, None)


def _freeze(raw: dict) -> dict:
    comps = {}
    for m, block in raw.items():
        b = {s: SparsePoly._raw(m, t) for s, t in block.items() if t}
        if b:
            comps[m] = b
    return comps


def mu(A: Mould, B: Mould, truncate=None) -> Mould:
    """Concatenation product A x B."""
    A._compatible(B)
    top = A.max_depth + B.max_depth
    _guard(top, truncate)
    limit = top if truncate is None else min(top, truncate)
    raw = {}
    # depth-0 factors
    if A.depth0:
        for m, block in B.components.items():
            if m <= limit:
                tgt = raw.setdefault(m, {})
                for s, p in block.items():
                    _accumulate(tgt, s, {e: A.depth0 * c for e, c in p.terms.items()}, m)
    if B.depth0:
        for m, block in A.components.items():
            if m <= limit:
                tgt = raw.setdefault(m, {})
                for s, p in block.items():
                    _accumulate(tgt, s, {e: B.depth0 * c for e, c in p.terms.items()}, m)
    for i, ba in A.components.items():
        for j, bb in B.components.items():
            m = i + j
            if m > limit:
                continue
            tgt = raw.setdefault(m, {})
            for s, p in ba.items():
                for t, q in bb.items():
                    _accumulate(tgt, s + t, _tensor(p, q), m)
    return Mould._raw(A.group, A.side, _freeze(raw), A.depth0 * B.depth0)


def lu(A: Mould, B: Mould, truncate=None) -> Mould:
    """Commutator A x B - B x A."""
    return mu(A, B, truncate) - mu(B, A, truncate)


def _reindex(M: Mould, side: str, index_map, forms_for_depth, sign_for_depth=None) -> Mould:
    """Generic relabelling: result entry at index_map(m, rho) is M_rho(forms)."""
    comps = {}
    for m, block in M.components.items():
        forms = forms_for_depth(m)
        sgn = sign_for_depth(m) if sign_for_depth else 1
        out = {}
        for rho, p in block.items():
            q = substitute_linear(p, forms, m)
            if sgn != 1:
                q = q.scale(sgn)
            out[index_map(m, rho)] = q
        comps[m] = out
    return Mould._raw(M.group, side, comps, M.depth0)


def _units(m):
    return [LinearForm.unit(i, m) for i in range(m)]


def _require_side(M: Mould, side: str, op: str):
    if M.side != side:
        raise SideMismatch(f"{op} needs a {side}-side mould, got {M.side}-side")


def swap(M: Mould) -> Mould:
    """Exchange the u-side and v-side presentations.

    From the u-side, the depth-m entry at (s1..sm; v1..vm) is M evaluated at
    variables (vm, v(m-1)-vm, ..., v1-v2) and indices (s1...sm, s1...s(m-1),
    ..., s1).  From the v-side the inverse substitution is used, so swap is
    an involution.
    """
    G = M.group
    if M.side == "u":
        def index_map(m, rho):
            # rho = (t1..tm, t1..t(m-1), ..., t1); recover t.
            t = [rho[m - 1]]
            for k in range(2, m + 1):
                t.append(G.div(rho[m - k], rho[m - k + 1]))
            return tuple(t)

        def forms(m):
            out = [LinearForm.unit(m - 1, m)]
            for i in range(2, m + 1):
                out.append(LinearForm.unit(m - i, m) - LinearForm.unit(m - i + 1, m))
            return out

        return _reindex(M, "v", index_map, forms)

    def index_map_v(m, rho):
        # rho_k = t_(m+1-k) t_(m+2-k)^-1, rho_1 = t_m; so t_j = rho_(m+1-j) ... rho_1.
        t = [0] * m
        acc = 0
        for k in range(m):
            acc = G.mul(acc, rho[k])
            t[m - 1 - k] = acc
        return tuple(t)

    def forms_v(m):
        # v_k = u_1 + ... + u_(m+1-k)
        return [LinearForm([1] * (m + 1 - k) + [0] * (k - 1)) for k in range(1, m + 1)]

    return _reindex(M, "u", index_map_v, forms_v)


def push(M: Mould) -> Mould:
    _require_side(M, "u", "push")
    G = M.group

    def index_map(m, rho):
        sm = G.inv(rho[0])
        return tuple(G.mul(rho[i + 1], sm) for i in range(m - 1)) + (sm,)

    def forms(m):
        return [LinearForm([-1] * m)] + [LinearForm.unit(k, m) for k in range(m - 1)]

    return _reindex(M, "u", index_map, forms)


def neg(M: Mould) -> Mould:
    """Negate all variables and invert all indices (either side)."""
    G = M.group
    return _reindex(M, M.side, lambda m, rho: tuple(G.inv(r) for r in rho),
                    lambda m: [-LinearForm.unit(i, m) for i in range(m)])


def mantar(M: Mould) -> Mould:
    """Signed reversal (-1)^(m-1) M(reversed letters) (either side)."""
    return _reindex(M, M.side, lambda m, rho: rho[::-1],
                    lambda m: [LinearForm.unit(m - 1 - i, m) for i in range(m)],
                    lambda m: -1 if m % 2 == 0 else 1)


def pus(N: Mould) -> Mould:
    """Cyclic shift of v-side letters, last column moved to the front."""
    _require_side(N, "v", "pus")

    def index_map(m, rho):
        return rho[1:] + rho[:1]

    def forms(m):
        return [LinearForm.unit(m - 1, m)] + [LinearForm.unit(k, m) for k in range(m - 1)]

    return _reindex(N, "v", index_map, forms)


def teru(M: Mould) -> Mould:
    _require_side(M, "u", "teru")
    _guard(M.max_depth + 1, None)
    G = M.group
    raw = {m: {s: dict(p.terms) for s, p in b.items()} for m, b in M.components.items()}
    for k, block in M.components.items():
        m = k + 1
        merged = [LinearForm.unit(i, m) for i in range(k - 1)]
        merged.append(LinearForm.unit(k - 1, m) + LinearForm.unit(k, m))
        last = LinearForm.unit(k, m)
        tgt = raw.setdefault(m, {})
        for rho, p in block.items():
            diff = substitute_linear(p, merged, m) - p.embed(0, m)
            corr = exact_divide(diff, last)
            if not corr:
                continue
            for g in range(G.order):
                _accumulate(tgt, rho + (g,), dict(corr.terms), m)
    return Mould._raw(G, "u", _freeze(raw), M.depth0)


def i_N(M: Mould, N: int) -> Mould:
    """Restriction to index tuples drawn from the power subgroup Gamma^N.

    The result is returned over the same group, supported on Gamma^N-tuples.
    """
    _require_side(M, "u", "i_N")
    allowed = set(M.group.power_set(N))
    comps = {m: {s: p for s, p in b.items() if all(x in allowed for x in s)}
             for m, b in M.components.items()}
    return Mould._raw(M.group, M.side, comps, M.depth0)


def m_N(M: Mould, N: int) -> Mould:
    """Root-summed scaling: sum over t with t_i^N = s_i of M(N u; t)."""
    _require_side(M, "u", "m_N")
    G = M.group
    raw = {}
    for m, block in M.components.items():
        tgt = raw.setdefault(m, {})
        for t, p in block.items():
            s = tuple(G.power(x, N) for x in t)
            scaled = {e: c * (N ** sum(e)) for e, c in p.terms.items()}
            _accumulate(tgt, s, scaled, m)
    return Mould._raw(G, M.side, _freeze(raw), M.depth0)


def all_index_tuples(group: Group, m: int):
    return itertools.product(range(group.order), repeat=m)
