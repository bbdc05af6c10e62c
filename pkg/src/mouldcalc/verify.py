"""Randomized and exhaustive identity suites.

Each suite returns a :class:`Report`.  On failure the report carries the
first counterexample as JSON (inputs and residual) so it can be replayed.
Mould identities are compared after truncating every intermediate result
to ``max_depth``; depth-filtration compatibility makes this an exact check
of the identity on all components up to that depth.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field

from . import dihedral as dih
from .flexions import ari, arit, preari
from .generators import (lie_monomials, random_alternal, random_arid, random_bialternal,
                         random_mould, random_push_invariant, random_pus_neutral, word_pairs)
from .groups import Group, parse_group
from .kv import (is_KV1_reformulated, is_KV1_sec, is_KV2, is_LKV1, is_LKV2, krv_basis,
                 leading_sign_f, lkrv_basis, ma, mt_bracket)
from .lie import lie_basis, substitute_z, tilde
from .moulds import mu, swap
from .serialization import collection_to_json, mould_to_json
from .spaces import SpaceSpec, space_basis, space_dimension
from .symmetries import (is_alternal, is_bialternal, is_mantar_invariant, is_pus_neutral,
                         is_push_invariant, satisfies_distribution, satisfies_senary)

__all__ = ["Report", "SUITES", "verify_suite"]


@dataclass
class Report:
    name: str
    passed: bool
    trials: int
    failures: int = 0
    witness: dict = None
    warnings: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"suite": self.name, "passed": self.passed, "trials": self.trials,
               "failures": self.failures}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


class _Tally:
    def __init__(self, name):
        self.name = name
        self.trials = 0
        self.failures = 0
        self.witness = None

    def record(self, ok, witness=None):
        self.trials += 1
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness() if callable(witness) else witness

    def report(self):
        return Report(self.name, self.failures == 0, self.trials, self.failures, self.witness)


def _moulds(**named):
    return {k: mould_to_json(v) for k, v in named.items()}


def _sides(group):
    return ("u", "v")


def suite_jacobi(group, trials, rng, max_depth=3, degree=3, **_):
    """Antisymmetry and Jacobi for ari on both sides."""
    t = _Tally("jacobi")
    T = max_depth
    for side in _sides(group):
        for _ in range(trials):
            A, B, C = (random_mould(rng, group, side, max_depth, degree) for _ in range(3))
            anti = ari(A, B, truncate=T) + ari(B, A, truncate=T)
            jac = (ari(A, ari(B, C, truncate=T), truncate=T)
                   + ari(B, ari(C, A, truncate=T), truncate=T)
                   + ari(C, ari(A, B, truncate=T), truncate=T))
            t.record(anti.is_zero() and jac.is_zero(),
                     lambda: {"side": side, **_moulds(A=A, B=B, C=C, antisymmetry=anti, jacobi=jac)})
    return t.report()


def suite_prelie(group, trials, rng, max_depth=3, degree=3, **_):
    """The preari associator is symmetric in its last two arguments."""
    t = _Tally("prelie")
    T = max_depth

    def assoc(a, b, c):
        return preari(preari(a, b, truncate=T), c, truncate=T) - preari(a, preari(b, c, truncate=T), truncate=T)

    for side in _sides(group):
        for _ in range(trials):
            A, B, C = (random_mould(rng, group, side, max_depth, degree) for _ in range(3))
            d = assoc(A, B, C) - assoc(A, C, B)
            d2 = preari(A, B, truncate=T) - preari(B, A, truncate=T) - ari(A, B, truncate=T)
            t.record(d.is_zero() and d2.is_zero(), lambda: {"side": side, **_moulds(A=A, B=B, C=C, residual=d)})
    return t.report()


def suite_derivation(group, trials, rng, max_depth=3, degree=3, **_):
    """arit(A) is a derivation of the mould product."""
    t = _Tally("derivation")
    T = max_depth
    for side in _sides(group):
        for _ in range(trials):
            A, B, C = (random_mould(rng, group, side, max_depth, degree) for _ in range(3))
            lhs = arit(A, mu(B, C, truncate=T), truncate=T)
            rhs = mu(arit(A, B, truncate=T), C, truncate=T) + mu(B, arit(A, C, truncate=T), truncate=T)
            t.record(lhs == rhs, lambda: {"side": side, **_moulds(A=A, B=B, C=C, residual=lhs - rhs)})
    return t.report()


def suite_aritcomp(group, trials, rng, max_depth=3, degree=3, **_):
    """arit(B) arit(A) - arit(A) arit(B) = arit(ari(A, B))."""
    t = _Tally("aritcomp")
    T = max_depth
    for side in _sides(group):
        for _ in range(trials):
            A, B, C = (random_mould(rng, group, side, max_depth, degree) for _ in range(3))
            lhs = arit(B, arit(A, C, truncate=T), truncate=T) - arit(A, arit(B, C, truncate=T), truncate=T)
            rhs = arit(ari(A, B, truncate=T), C, truncate=T)
            t.record(lhs == rhs, lambda: {"side": side, **_moulds(A=A, B=B, C=C, residual=lhs - rhs)})
    return t.report()


def _closure(name, gen, pred, group, trials, rng, max_depth, bracket_side=None):
    t = _Tally(name)
    for _ in range(trials):
        A, B = gen(), gen()
        C = ari(A, B, truncate=max_depth)
        chk = pred(C)
        t.record(bool(chk), lambda: {**_moulds(A=A, B=B, bracket=C), "check": chk.witness})
    return t.report()


def suite_closure_al(group, trials, rng, max_depth=3, weight=3, **_):
    return _closure("closure-al", lambda: random_alternal(rng, group, weight),
                    is_alternal, group, trials, rng, max_depth)


def suite_closure_push(group, trials, rng, max_depth=3, degree=3, **_):
    return _closure("closure-push", lambda: random_push_invariant(rng, group, max_depth, degree),
                    is_push_invariant, group, trials, rng, max_depth)


def suite_closure_pusnu(group, trials, rng, max_depth=3, degree=3, **_):
    return _closure("closure-pusnu", lambda: random_pus_neutral(rng, group, max_depth, degree),
                    is_pus_neutral, group, trials, rng, max_depth)


def suite_closure_alal(group, trials, rng, max_depth=3, **_):
    return _closure("closure-alal", lambda: random_bialternal(rng, group),
                    is_bialternal, group, trials, rng, max_depth)


def suite_closure_dist(group, trials, rng, max_depth=3, **_):
    return _closure("closure-dist", lambda: random_arid(rng, group),
                    satisfies_distribution, group, trials, rng, max_depth)


def suite_swapari(group, trials, rng, max_depth=3, degree=3, **_):
    """swap(ari_u(A, B)) = ari_v(swap A, swap B) for push-invariant A, B."""
    t = _Tally("swapari")
    T = max_depth
    for _ in range(trials):
        A = random_push_invariant(rng, group, max_depth, degree)
        B = random_push_invariant(rng, group, max_depth, degree)
        lhs = swap(ari(A, B, truncate=T))
        rhs = ari(swap(A), swap(B), truncate=T)
        t.record(lhs == rhs, lambda: _moulds(A=A, B=B, residual=lhs - rhs))
    return t.report()


def _alal_bases(group, weight, max_depth, which="ALAL"):
    for w in range(2, weight + 1):
        for d in range(2, min(w, max_depth) + 1):
            yield w, d, space_basis(SpaceSpec(which, group, w, d))


def suite_bialternal_push(group, trials, rng, weight=6, max_depth=3, **_):
    """Bialternal moulds are push-invariant (basis elements and random sums)."""
    t = _Tally("bialternal-push")
    for w, d, basis in _alal_bases(group, weight, max_depth):
        for M in basis:
            t.record(bool(is_push_invariant(M)), lambda: _moulds(M=M))
    for _ in range(trials):
        M = random_bialternal(rng, group)
        t.record(bool(is_push_invariant(M)), lambda: _moulds(M=M))
    return t.report()


def suite_bialternal_pusnu(group, trials, rng, weight=6, max_depth=3, **_):
    """The swap of a depth >= 2 bialternal mould is pus-neutral."""
    t = _Tally("bialternal-pusnu")
    for w, d, basis in _alal_bases(group, weight, max_depth):
        for M in basis:
            t.record(bool(is_pus_neutral(swap(M))), lambda: _moulds(M=M))
    for _ in range(trials):
        M = random_bialternal(rng, group, slots=((3, 2), (4, 2), (5, 2), (5, 3), (6, 2)))
        t.record(bool(is_pus_neutral(swap(M))), lambda: _moulds(M=M))
    return t.report()


def suite_ma_hom(group, trials, rng, weight=5, **_):
    """ma turns the mt bracket into ari; images are alternal and mantar-invariant.

    Exhaustive over pairs of Lyndon basis elements with total weight <= weight.
    """
    t = _Tally("ma-hom")
    mons = lie_monomials(group, weight - 1 if weight > 1 else 1)
    for f in mons:
        M = ma(f)
        t.record(bool(is_alternal(M)) and bool(is_mantar_invariant(M)),
                 lambda: {"f": repr(f), **_moulds(ma=M)})
    for f1, f2 in word_pairs(mons, weight):
        lhs = ma(mt_bracket(f1, f2))
        rhs = ari(ma(f1), ma(f2))
        t.record(lhs == rhs, lambda: {"f1": repr(f1), "f2": repr(f2), **_moulds(residual=lhs - rhs)})
    return t.report()


def _ma_tilde(F):
    return ma(tilde(substitute_z(F)))


def suite_kv_equiv(group, trials, rng, weight=4, **_):
    """KV conditions against their mould reformulations, plus krv dimensions."""
    t = _Tally("kv-equiv")
    for w in range(2, weight + 1):
        krv = krv_basis(group, w)
        for F in lie_basis(group, w) + krv:
            M = _ma_tilde(F)
            k1, k1b, k2 = bool(is_KV1_sec(F)), bool(is_KV1_reformulated(F)), bool(is_KV2(F))
            sen, pn = bool(satisfies_senary(M)), bool(is_pus_neutral(swap(M)))
            t.record(k1 == k1b == sen and k2 == pn,
                     lambda: {"F": repr(F), "KV1_sec": k1, "KV1_reformulated": k1b, "senary": sen,
                              "KV2": k2, "pus_neutral": pn})
        for F in krv:
            t.record(bool(satisfies_senary(_ma_tilde(F))) and bool(is_alternal(_ma_tilde(F))),
                     lambda: {"F": repr(F)})
        mould_dim = space_dimension(SpaceSpec("SENA_PUSNU+AL", group, w, 1))
        t.record(len(krv) == mould_dim,
                 {"weight": w, "krv_dimension": len(krv), "mould_dimension": mould_dim})
    return t.report()


def suite_lkv_equiv(group, trials, rng, weight=6, max_depth=3, **_):
    """LKV1/LKV2 against push-invariance/pus-neutrality, plus lkrv dimensions."""
    t = _Tally("lkv-equiv")
    for w in range(2, weight + 1):
        for d in range(1, min(w, max_depth) + 1):
            lk = lkrv_basis(group, w, d)
            for F in lie_basis(group, w, d) + lk:
                M = ma(tilde(leading_sign_f(F, d)))
                a, b = bool(is_LKV1(F, d)), bool(is_LKV2(F, d))
                p, q = bool(is_push_invariant(M)), bool(is_pus_neutral(swap(M)))
                t.record(a == p and b == q, lambda: {"F": repr(F), "depth": d, "LKV1": a, "push": p,
                                                     "LKV2": b, "pus_neutral": q})
            mould_dim = space_dimension(SpaceSpec("PUSH_PUSNU+AL", group, w, d))
            t.record(len(lk) == mould_dim, {"weight": w, "depth": d, "lkrv_dimension": len(lk),
                                            "mould_dimension": mould_dim})
    return t.report()


_DIHEDRAL_SLOTS = ((3, 2), (4, 2), (5, 2), (5, 3))


def suite_dihedral_sym(group, trials, rng, slots=_DIHEDRAL_SLOTS, **_):
    """Double-shuffle solutions satisfy cyclic, inversion and reflection symmetry."""
    t = _Tally("dihedral-sym")
    for w, m in slots:
        for Z in dih.double_shuffle_basis(w, m, group):
            chk = dih.check_dihedral(Z)
            t.record(bool(chk), lambda: {"collection": collection_to_json(Z), "check": chk.witness})
    return t.report()


def suite_reform_dihedral(group, trials, rng, slots=_DIHEDRAL_SLOTS, **_):
    """to_mould sends double-shuffle solutions to bialternal moulds, dimensions agree."""
    t = _Tally("reform-dihedral")
    for w, m in slots:
        basis = dih.double_shuffle_basis(w, m, group)
        for Z in basis:
            M = dih.to_mould(Z)
            t.record(bool(is_bialternal(M)) and dih.from_mould(M, w, m) == Z,
                     lambda: {"collection": collection_to_json(Z)})
        alal = space_dimension(SpaceSpec("ALAL", group, w, m))
        t.record(len(basis) == alal, {"weight": w, "depth": m, "dihedral_dimension": len(basis),
                                      "alal_dimension": alal})
    return t.report()


def suite_embedding(group, trials, rng, weight=5, max_depth=3, **_):
    """Depth >= 2 bialternal moulds land in the push/pusnu space; with the
    distribution relations they also satisfy them."""
    t = _Tally("embedding")
    for w, d, basis in _alal_bases(group, weight, max_depth):
        for M in basis:
            t.record(bool(is_push_invariant(M)) and bool(is_pus_neutral(swap(M))), lambda: _moulds(M=M))
    for w, d, basis in _alal_bases(group, weight, max_depth, "ARID_ALAL"):
        for M in basis:
            t.record(bool(is_push_invariant(M)) and bool(is_pus_neutral(swap(M)))
                     and bool(satisfies_distribution(M)), lambda: _moulds(M=M))
    return t.report()


def suite_flexions(group, trials, rng, max_len=3, **_):
    """Flexion laws on both sides and the shuffle coproduct identity, exhaustively."""
    from .flexion_laws import check_laws, check_shuffle_coproduct
    t = _Tally("flexions")
    for side in ("u", "v"):
        count, failures = check_laws(group, side, max_len)
        t.trials += count - 1
        t.record(not failures, lambda: {"side": side, "law": failures[0][0],
                                        "labels": [list(p) for p in failures[0][1]]})
    count, failures = check_shuffle_coproduct(max_len=max_len)
    t.trials += count - 1
    t.record(not failures, lambda: {"shuffle_coproduct": [list(x) for x in failures[0][:2]]})
    return t.report()


SUITES = {
    "jacobi": suite_jacobi,
    "flexions": suite_flexions,
    "prelie": suite_prelie,
    "derivation": suite_derivation,
    "aritcomp": suite_aritcomp,
    "closure-al": suite_closure_al,
    "closure-push": suite_closure_push,
    "closure-pusnu": suite_closure_pusnu,
    "closure-alal": suite_closure_alal,
    "closure-dist": suite_closure_dist,
    "swapari": suite_swapari,
    "bialternal-push": suite_bialternal_push,
    "bialternal-pusnu": suite_bialternal_pusnu,
    "ma-hom": suite_ma_hom,
    "kv-equiv": suite_kv_equiv,
    "lkv-equiv": suite_lkv_equiv,
    "dihedral-sym": suite_dihedral_sym,
    "reform-dihedral": suite_reform_dihedral,
    "embedding": suite_embedding,
}

# Suites whose inputs are drawn at random; the others are exhaustive.
_RANDOMIZED = {"jacobi", "prelie", "derivation", "aritcomp", "closure-al", "closure-push",
               "closure-pusnu", "closure-alal", "closure-dist", "swapari"}


def verify_suite(name: str, group="trivial", trials: int = 20, seed: int = 0, **params) -> Report:
    """Run one suite.  ``trials=0`` on a randomized suite is a vacuous pass."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    group = parse_group(group) if not isinstance(group, Group) else group
    if trials <= 0 and name in _RANDOMIZED:
        msg = f"suite {name!r} ran with trials=0; nothing was checked"
        warnings.warn(msg)
        return Report(name, True, 0, warnings=[msg])
    rng = random.Random(seed)
    return SUITES[name](group, trials, rng, **params)
