from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from mouldcalc.algebra import SparsePoly
from mouldcalc.groups import parse_group
from mouldcalc.moulds import Mould

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GROUP_NAMES = ["trivial", "c2", "c3", "c4", "c2x2", "c2x3"]

groups = st.sampled_from(GROUP_NAMES).map(parse_group)
small_groups = st.sampled_from(["trivial", "c2", "c3"]).map(parse_group)

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def exponents(arity, max_degree=3):
    return st.lists(st.integers(0, max_degree), min_size=arity, max_size=arity).map(tuple).filter(
        lambda e: sum(e) <= max_degree)


def polys(arity, max_degree=3, max_terms=4):
    return st.dictionaries(exponents(arity, max_degree), rationals, max_size=max_terms).map(
        lambda d: SparsePoly(arity, d))


@st.composite
def moulds(draw, group=None, side=None, max_depth=3, max_degree=3):
    G = draw(small_groups) if group is None else group
    side = draw(st.sampled_from("uv")) if side is None else side
    comps = {}
    for m in range(1, max_depth + 1):
        sigmas = st.lists(st.integers(0, G.order - 1), min_size=m, max_size=m).map(tuple)
        comps[m] = draw(st.dictionaries(sigmas, polys(m, max_degree, 2), max_size=2))
    return Mould(G, side, comps)


def u1(*coeffs):
    """Polynomial in one variable from its coefficient list c0, c1, ..."""
    return SparsePoly(1, {(k,): c for k, c in enumerate(coeffs) if c})


def poly(arity, terms):
    return SparsePoly(arity, terms)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
