"""Acceptance criteria, one test per criterion.

Each test records a ``criterion N: PASS/FAIL`` line, printed in the
terminal summary and on stdout when run as a script.
"""
import json
import random
import time

import pytest

from mouldcalc.algebra import kernel_basis
from mouldcalc.dihedral import double_shuffle_basis
from mouldcalc.flexions import ari
from mouldcalc.generators import random_mould
from mouldcalc.groups import parse_group
from mouldcalc.kv import lkrv_basis
from mouldcalc.moulds import i_N, m_N
from mouldcalc.serialization import dumps, loads
from mouldcalc.spaces import SpaceSpec, space_basis, space_dimension
from mouldcalc.verify import verify_suite

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance

T, C2, C3 = (parse_group(n) for n in ("trivial", "c2", "c3"))


class Criterion:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.failures = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def expect(self, ok, what):
        if not ok:
            self.failures.append(what)

    def report(self, rep, what=None):
        self.expect(rep.passed, what or json.dumps(rep.to_json(), default=str)[:500])
        return rep

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is None and elapsed > self.budget:
            self.failures.append(f"took {elapsed:.1f}s, budget {self.budget}s")
        ok = exc_type is None and not self.failures
        line = f"criterion {self.number:>2} {self.title}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
        if exc_type is None:
            assert not self.failures, self.failures


def test_lie_structure():
    with Criterion(1, "ari antisymmetry and Jacobi", 60) as c:
        for G in (T, C2, C3):
            rep = c.report(verify_suite("jacobi", G, trials=25, seed=1, max_depth=3, degree=3))
            c.expect(rep.trials >= 50, f"only {rep.trials} triples over {G}")


def test_derivation_prelie_composition():
    with Criterion(2, "derivation, pre-Lie and composition identities", 60) as c:
        for name in ("derivation", "prelie", "aritcomp"):
            for G in (T, C2, C3):
                rep = c.report(verify_suite(name, G, trials=13, seed=2, max_depth=3, degree=3))
                c.expect(rep.trials >= 25, f"{name}: only {rep.trials} triples over {G}")


def test_flexion_lemmas():
    with Criterion(3, "flexion laws and shuffle coproduct", 30) as c:
        c.report(verify_suite("flexions", C2, max_len=3))


def test_closure_theorems():
    with Criterion(4, "closure of symmetry spaces under ari", 120) as c:
        for name in ("closure-al", "closure-push", "closure-pusnu", "closure-alal", "closure-dist"):
            for G in (T, C2, C3):
                rep = c.report(verify_suite(name, G, trials=20, seed=3, max_depth=3))
                c.expect(rep.trials >= 20, f"{name}: only {rep.trials} pairs over {G}")
        # m_N and i_N commute with ari; both preserve depth, so truncation is exact
        rng = random.Random(4)
        for name in ("c2", "c4", "c2x2"):
            G = parse_group(name)
            for _ in range(20):
                A, B = random_mould(rng, G, "u", 3, 3), random_mould(rng, G, "u", 3, 3)
                for N in G.divisors_of_order():
                    for f in (m_N, i_N):
                        c.expect(f(ari(A, B, truncate=3), N) == ari(f(A, N), f(B, N), truncate=3), f"{f.__name__} with N={N} over {name}")


def test_ma_bridge():
    with Criterion(5, "ma sends the mt bracket to ari", 120) as c:
        for G in (T, C2):
            c.report(verify_suite("ma-hom", G, weight=5))


def test_kv_reformulation():
    with Criterion(6, "KV conditions and krv dimensions", 300) as c:
        for G in (T, C2):
            c.report(verify_suite("kv-equiv", G, weight=4))


def test_bigraded_bridge():
    with Criterion(7, "LKV conditions and lkrv dimensions", 300) as c:
        c.report(verify_suite("lkv-equiv", T, weight=6, max_depth=3))


def test_dihedral_reformulation():
    with Criterion(8, "dihedral symmetries of double-shuffle solutions", 300) as c:
        for G in (T, C2):
            for name in ("dihedral-sym", "reform-dihedral"):
                c.report(verify_suite(name, G))
        # over the trivial group the listed slots are all zero; add slots with solutions
        for name in ("dihedral-sym", "reform-dihedral"):
            rep = c.report(verify_suite(name, T, slots=((8, 2), (10, 2))))
            c.expect(rep.trials >= 2, "trivial-group dihedral slots were vacuous")


def test_embedding():
    with Criterion(9, "bialternal moulds embed in push/pusnu", 120) as c:
        for G in (T, C2):
            c.report(verify_suite("embedding", G, weight=5, max_depth=3))
        rep = c.report(verify_suite("embedding", T, weight=8, max_depth=3))
        c.expect(rep.trials > 0, "trivial-group embedding check was vacuous")


def test_forced_dimensions():
    with Criterion(10, "forced depth-one dimensions", 30) as c:
        for w in range(2, 16):
            d = space_dimension(SpaceSpec("ALAL", T, w, 1))
            c.expect(d == w % 2, f"dim ALAL_({w},1) = {d}")
            c.expect(lkrv_basis(T, w, 1) == [], f"lkrv_({w},1) is nonzero")


def test_infrastructure():
    with Criterion(11, "serialization, kernels and determinism", 30) as c:
        rng = random.Random(5)
        for G in (T, C2, C3):
            for _ in range(20):
                M = random_mould(rng, G, rng.choice("uv"), 3, 3)
                text = dumps(M)
                c.expect(loads(text) == M and dumps(loads(text)) == text, "mould round trip")
        for Z in double_shuffle_basis(4, 2, C2):
            c.expect(dumps(loads(dumps(Z))) == dumps(Z), "collection round trip")
        for _ in range(20):
            rows, cols = rng.randint(1, 6), rng.randint(1, 8)
            A = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
            for v in kernel_basis(A, cols):
                c.expect(all(sum(a * x for a, x in zip(r, v)) == 0 for r in A), "kernel vector")
        a = verify_suite("jacobi", C2, trials=5, seed=9).to_json()
        b = verify_suite("jacobi", C2, trials=5, seed=9).to_json()
        c.expect(a == b, "jacobi rerun differs")
        spec = SpaceSpec("ALAL", C3, 5, 2)
        c.expect([dumps(M) for M in space_basis(spec)] == [dumps(M) for M in space_basis(spec)],
                 "basis rerun differs")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
