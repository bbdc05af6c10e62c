"""Kashiwara-Vergne conditions, the ma/vimo maps and tangential derivations."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LinearForm, SparsePoly
from .exceptions import NotLie, NotSolvable
from .groups import Group
from .lie import (X, NCPoly, anti, gamma_act, is_lie, lie_bracket, pi_Y, q_map,
                  right_factor, solve_G, substitute_z, tilde, trace)
from .moulds import Check, Mould, _accumulate, _freeze

__all__ = ["vimo", "ma", "kv1_H", "is_KV1", "is_KV1_sec", "is_KV1_reformulated", "is_KV2",
           "krv_member", "is_LKV1", "is_LKV2", "lkrv_member", "lkrvd_member", "leading_sign_f",
           "TangentialDerivation", "tder_apply", "tder_bracket", "mt_bracket", "i_N_word",
           "m_N_word", "krv_basis", "lkrv_basis"]


def _split_word(w):
    """x^e0 y_s1 x^e1 ... y_sr x^er -> ((s1..sr), (e0..er))."""
    sig, exps = [], [0]
    for a in w:
        if a == X:
            exps[-1] += 1
        else:
            sig.append(a - 1)
            exps.append(0)
    return tuple(sig), tuple(exps)


def vimo(h: NCPoly, r: int) -> dict:
    """Depth-r vimo polynomials in z0..zr, keyed by index tuple.

    The word x^e0 y_s1 ... y_sr x^er contributes its coefficient times
    z0^e0 ... zr^er at the index tuple (s1^-1, ..., sr^-1).
    """
    G = h.group
    raw = {}
    for w, c in h.terms.items():
        sig, exps = _split_word(w)
        if len(sig) != r:
            continue
        key = tuple(G.inv(s) for s in sig)
        blk = raw.setdefault(key, {})
        v = blk.get(exps, 0) + c
        if v:
            blk[exps] = v
        else:
            blk.pop(exps, None)
    return {k: SparsePoly._raw(r + 1, t) for k, t in raw.items() if t}


def ma(h: NCPoly) -> Mould:
    """The u-side mould ma_h(u; s) = vimo_h(0, u1, u1 + u2, ...; s)."""
    G = h.group
    raw = {}
    depth0 = Fraction(0)
    for w, c in h.terms.items():
        sig, exps = _split_word(w)
        if exps[0]:
            continue
        r = len(sig)
        if r == 0:
            depth0 += c
            continue
        # z_i = u1 + ... + ui for i >= 1
        terms = {(0,) * r: c}
        for i, e in enumerate(exps[1:], start=1):
            if e:
                form = LinearForm([1] * i + [0] * (r - i))
                terms = _times_power(terms, form.coefficients, e)
        key = tuple(G.inv(s) for s in sig)
        _accumulate(raw.setdefault(r, {}), key, terms, r)
    return Mould._raw(G, "u", _freeze(raw), depth0)


_POW_CACHE = {}


def _times_power(terms, form, e):
    key = (form, e)
    pw = _POW_CACHE.get(key)
    if pw is None:
        p = SparsePoly._raw(len(form), {tuple(1 if j == i else 0 for j in range(len(form))): Fraction(a)
                                        for i, a in enumerate(form) if a})
        pw = (p ** e).terms
        _POW_CACHE[key] = pw
    out = {}
    for e1, c1 in terms.items():
        for e2, c2 in pw.items():
            ne = tuple(a + b for a, b in zip(e1, e2))
            v = out.get(ne, 0) + c1 * c2
            if v:
                out[ne] = v
            else:
                out.pop(ne, None)
    return out


def _homogeneous_weight(F: NCPoly) -> int:
    ws = F.weights()
    if len(ws) != 1:
        raise ValueError("expected a nonzero weight-homogeneous element")
    return ws.pop()


def kv1_H(F: NCPoly) -> NCPoly:
    """H = sum_t [y_t, t(F)]."""
    G = F.group
    H = NCPoly.zero(G)
    for t in range(G.order):
        H = H + lie_bracket(NCPoly.y(G, t), gamma_act(t, F))
    return H


def is_KV1_sec(F: NCPoly) -> Check:
    """KV1 by constructing G with [x, G] = -H through the sec operator."""
    try:
        Gsol = solve_G(-kv1_H(F))
    except NotSolvable as exc:
        return Check(False, {"route": "sec", "word": _word_json(F.group, exc.witness)})
    if not is_lie(Gsol):
        return Check(False, {"route": "sec", "reason": "G is not a Lie element"})
    return Check(True, {"G": Gsol})


def is_KV1_reformulated(F: NCPoly) -> Check:
    """KV1 as {f~_(y_g) + f~_x} = (-1)^(w-1) g . anti{f~_(y_g^-1) + f~_x} for all g."""
    G = F.group
    w = _homogeneous_weight(F)
    ft = tilde(substitute_z(F))
    fx = right_factor(ft, X)
    sign = -1 if (w - 1) % 2 else 1
    for g in range(G.order):
        lhs = right_factor(ft, 1 + g) + fx
        rhs = gamma_act(g, anti(right_factor(ft, 1 + G.inv(g)) + fx)).scale(sign)
        if lhs != rhs:
            return Check(False, {"route": "reformulated", "gamma": list(G.residues[g])})
    return Check.passed()


def is_KV1(F: NCPoly) -> Check:
    """KV1, computed by both routes; raises if they disagree."""
    _precondition(F)
    a = is_KV1_sec(F)
    b = is_KV1_reformulated(F)
    if bool(a) != bool(b):
        raise AssertionError(f"KV1 routes disagree on {F!r}")
    return a if not a else Check.passed()


def is_KV2(F: NCPoly) -> Check:
    """tr(q(pi_Y(F(z; y)))) = 0."""
    _precondition(F)
    t = trace(q_map(pi_Y(substitute_z(F))))
    if t:
        w = min(t.terms)
        return Check(False, {"word": _word_json(F.group, w), "coefficient": str(t.terms[w])})
    return Check.passed()


def krv_member(F: NCPoly) -> bool:
    return bool(is_KV1(F)) and bool(is_KV2(F))


def _precondition(F: NCPoly):
    if not F:
        raise ValueError("F must be nonzero")
    w = _homogeneous_weight(F)
    if w <= 1:
        raise ValueError("F must have weight > 1")
    if not is_lie(F):
        raise NotLie("F must be a Lie element")


def _word_json(G: Group, w):
    if w is None:
        return None
    return ["x" if a == X else list(G.residues[a - 1]) for a in w]


def is_LKV1(F: NCPoly, d: int) -> Check:
    """The depth-(d+1) part of sum_t [y_t, t(F)] has no word y...y."""
    H = kv1_H(F.part(depth=d)).part(depth=d + 1)
    for w in sorted(H.terms):
        if w[0] != X and w[-1] != X:
            return Check(False, {"word": _word_json(F.group, w)})
    return Check.passed()


def is_LKV2(F: NCPoly, d: int) -> Check:
    """The depth-d part of tr(q(pi_Y(F))) vanishes."""
    t = trace(q_map(pi_Y(F.part(depth=d)))).part(d)
    if t:
        w = min(t.terms)
        return Check(False, {"word": _word_json(F.group, w)})
    return Check.passed()


def lkrv_member(F: NCPoly, d: int) -> bool:
    Fd = F.part(depth=d)
    if not Fd:
        return True
    return bool(is_LKV1(F, d)) and bool(is_LKV2(F, d))


def leading_sign_f(F: NCPoly, d: int) -> NCPoly:
    """The element (-1)^(w-d) F_d whose tilde is sent to moulds."""
    Fd = F.part(depth=d)
    if not Fd:
        return Fd
    w = _homogeneous_weight(Fd)
    return Fd.scale(-1 if (w - d) % 2 else 1)


def i_N_word(h: NCPoly, N: int) -> NCPoly:
    allowed = set(h.group.power_set(N))
    return h.map_words(lambda w: None if any(a != X and (a - 1) not in allowed for a in w) else (w, 1))


def m_N_word(h: NCPoly, N: int) -> NCPoly:
    G = h.group
    return h.map_words(lambda w: (tuple(a if a == X else 1 + G.power(a - 1, N) for a in w),
                                  N ** sum(1 for a in w if a == X)))


def lkrvd_member(F: NCPoly, d: int, ns=None) -> bool:
    """lkrv membership plus i_N(F_d) = m_N(F_d) for each N."""
    if not lkrv_member(F, d):
        return False
    Fd = F.part(depth=d)
    ns = F.group.divisors_of_order() if ns is None else ns
    return all(i_N_word(Fd, n) == m_N_word(Fd, n) for n in ns)


@dataclass
class TangentialDerivation:
    """x -> [x, G], y_s -> [y_s, F_s]."""

    group: Group
    f_parts: dict = field(default_factory=dict)
    g_part: NCPoly = None

    def __post_init__(self):
        if self.g_part is None:
            self.g_part = NCPoly.zero(self.group)
        self.f_parts = {s: self.f_parts.get(s, NCPoly.zero(self.group)) for s in range(self.group.order)}

    def validate(self):
        for p in list(self.f_parts.values()) + [self.g_part]:
            if p and not is_lie(p):
                raise NotLie("tangential derivation parts must be Lie elements")
        return self

    def images(self) -> dict:
        G = self.group
        out = {X: lie_bracket(NCPoly.x(G), self.g_part)}
        for s, f in self.f_parts.items():
            out[1 + s] = lie_bracket(NCPoly.y(G, s), f)
        return out

    def __eq__(self, other):
        return (isinstance(other, TangentialDerivation) and self.group == other.group
                and self.f_parts == other.f_parts and self.g_part == other.g_part)


def tder_apply(D: TangentialDerivation, h: NCPoly) -> NCPoly:
    """Extend D from generators to h as a derivation."""
    G = h.group
    imgs = D.images()
    out = NCPoly.zero(G)
    for w, c in h.terms.items():
        for i, a in enumerate(w):
            img = imgs[a]
            if not img:
                continue
            left = NCPoly._raw(G, {w[:i]: Fraction(1)})
            right = NCPoly._raw(G, {w[i + 1:]: Fraction(1)})
            out = out + (left * img * right).scale(c)
    return out


def tder_bracket(D1: TangentialDerivation, D2: TangentialDerivation) -> TangentialDerivation:
    """Commutator of derivations, with parts D1(P2) - D2(P1) + [P1, P2]."""
    G = D1.group
    f = {s: tder_apply(D1, D2.f_parts[s]) - tder_apply(D2, D1.f_parts[s])
         + lie_bracket(D1.f_parts[s], D2.f_parts[s]) for s in range(G.order)}
    g = tder_apply(D1, D2.g_part) - tder_apply(D2, D1.g_part) + lie_bracket(D1.g_part, D2.g_part)
    return TangentialDerivation(G, f, g)


def _orbit_derivation(f: NCPoly) -> TangentialDerivation:
    G = f.group
    return TangentialDerivation(G, {s: gamma_act(s, f) for s in range(G.order)})


def mt_bracket(f1: NCPoly, f2: NCPoly) -> NCPoly:
    """{f1, f2} = D_(s(f1))(f2) - D_(s(f2))(f1) + [f1, f2]."""
    for f in (f1, f2):
        if f and not is_lie(f):
            raise NotLie("mt bracket needs Lie elements")
    return (tder_apply(_orbit_derivation(f1), f2) - tder_apply(_orbit_derivation(f2), f1)
            + lie_bracket(f1, f2))


# -- word-side solvers -----------------------------------------------------------

def _solve_on_basis(basis, conditions):
    """Kernel of the linear map sending a Lie basis coordinate vector to the
    concatenated outputs of ``conditions`` (each returns a word -> coeff dict)."""
    from .algebra import Eliminator
    rows = {}
    for j, b in enumerate(basis):
        for ci, cond in enumerate(conditions):
            for w, c in cond(b).items():
                rows.setdefault((ci, w), {})[j] = c
    elim = Eliminator(len(basis))
    for r in rows.values():
        if elim.full():
            break
        elim.add_row(r)
    out = []
    for vec in elim.kernel():
        acc = NCPoly.zero(basis[0].group)
        for c, b in zip(vec, basis):
            if c:
                acc = acc + b.scale(c)
        out.append(acc)
    return out


def _kv1_linear(F):
    H = kv1_H(F)
    return {w: c for w, c in H.terms.items() if w[0] != X and w[-1] != X}


def _kv2_linear(F):
    return trace(q_map(pi_Y(substitute_z(F)))).terms


def krv_basis(group, weight: int) -> list:
    """Basis of the weight-w piece of krv on the word side (w > 1)."""
    from .lie import lie_basis
    basis = lie_basis(group, weight)
    if not basis:
        return []
    return _solve_on_basis(basis, [_kv1_linear, _kv2_linear])


def lkrv_basis(group, weight: int, depth: int) -> list:
    """Basis of the (w, d) piece of lkrv, as depth-d Lie elements."""
    from .lie import lie_basis
    basis = lie_basis(group, weight, depth)
    if not basis:
        return []

    def lkv1(F):
        H = kv1_H(F).part(depth=depth + 1)
        return {w: c for w, c in H.terms.items() if w[0] != X and w[-1] != X}

    def lkv2(F):
        return trace(q_map(pi_Y(F))).part(depth).terms

    return _solve_on_basis(basis, [lkv1, lkv2])
