"""Bases and dimensions of graded pieces of mould spaces.

The ambient space for a (w, d) slot is spanned by moulds with one entry:
an index tuple in Gamma^d carrying a monomial of degree w - d.  Each
requested symmetry contributes the residual map of
:mod:`mouldcalc.symmetries`; applying it to every ambient basis mould gives
the columns of an exact linear system whose nullspace is the space.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Eliminator, SparsePoly
from .exceptions import TooLarge
from .groups import Group, parse_group
from .moulds import Mould
from .symmetries import residuals

__all__ = ["SpaceSpec", "space_basis", "space_dimension", "ambient_slots",
           "SPACE_KINDS", "monomials", "max_ambient"]

DEFAULT_MAX_AMBIENT = 20000

# Named spaces as sets of atomic constraints.  "dist" expands to the
# distribution relation for each requested N.
SPACE_KINDS = {
    "AL": ("al",),
    "SWAP_AL": ("swap_al",),
    "ALAL": ("al", "swap_al", "parity"),
    "PUSH": ("push",),
    "PUSNU_SWAP": ("pusnu_swap",),
    "PUSH_PUSNU": ("push", "pusnu_swap"),
    "SENA_PUSNU": ("senary", "pusnu_swap"),
    "DIST": ("dist",),
    "ARID_ALAL": ("al", "swap_al", "parity", "dist"),
}

# Spaces whose constraints couple neighbouring depths; their (w, d) slot
# means "weight w, components at depths d..w".
_FILTERED = {"senary"}


def max_ambient() -> int:
    return int(os.environ.get("MOULD_MAX_AMBIENT", DEFAULT_MAX_AMBIENT))


@dataclass(frozen=True)
class SpaceSpec:
    """Which space, over which group, at which bidegree.

    ``which`` names one of :data:`SPACE_KINDS` or an intersection written
    with ``+`` (e.g. ``"PUSH_PUSNU+AL"``).  ``ns`` lists the N used by the
    distribution relation (default: every divisor of the group order).
    ``side`` selects the presentation of the ambient moulds.
    """

    which: str
    group: Group
    weight: int
    depth: int
    ns: tuple = None
    side: str = "u"

    def __post_init__(self):
        if not isinstance(self.group, Group):
            object.__setattr__(self, "group", parse_group(self.group))
        if self.depth < 1 or self.weight < self.depth:
            raise ValueError("need weight >= depth >= 1")
        for part in self.which.upper().split("+"):
            if part not in SPACE_KINDS:
                raise ValueError(f"unknown space {part!r}; choose from {sorted(SPACE_KINDS)}")

    @property
    def constraints(self) -> tuple:
        names = []
        for part in self.which.upper().split("+"):
            for c in SPACE_KINDS[part]:
                if c not in names:
                    names.append(c)
        out = []
        for c in names:
            if c == "dist":
                ns = self.ns if self.ns is not None else tuple(self.group.divisors_of_order())
                out.extend(("dist", n) for n in ns if n != 1)
            else:
                out.append(c)
        return tuple(out)

    @property
    def filtered(self) -> bool:
        return any(c in _FILTERED for c in self.constraints if isinstance(c, str))

    def to_json(self) -> dict:
        out = {"space": self.which, "group": self.group.to_json(),
               "weight": self.weight, "depth": self.depth, "side": self.side}
        if self.ns is not None:
            out["N"] = list(self.ns)
        return out


def monomials(arity: int, degree: int) -> list:
    """Exponent vectors of the given total degree, graded-lex descending."""
    if arity == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(arity - 1, degree - first):
            out.append((first,) + rest)
    return out


def ambient_slots(spec: SpaceSpec) -> list:
    """Ordered list of (depth, sigma, exponent) coordinates."""
    G = spec.group
    depths = range(spec.depth, spec.weight + 1) if spec.filtered else (spec.depth,)
    slots = []
    for m in depths:
        monos = monomials(m, spec.weight - m)
        for sigma in itertools.product(range(G.order), repeat=m):
            for e in monos:
                slots.append((m, sigma, e))
    return slots


def _unit_mould(spec, slot) -> Mould:
    m, sigma, e = slot
    return Mould._raw(spec.group, spec.side, {m: {sigma: SparsePoly._raw(m, {e: Fraction(1)})}})


def _check_size(n):
    limit = max_ambient()
    if n > limit:
        raise TooLarge(f"ambient dimension {n} exceeds the guard {limit} "
                       "(set MOULD_MAX_AMBIENT to raise it)")


def _eliminate(spec: SpaceSpec):
    slots = ambient_slots(spec)
    _check_size(len(slots))
    constraints = spec.constraints
    # Columns are images of ambient basis moulds; transpose into rows.
    rows = {}
    for j, slot in enumerate(slots):
        for key, poly in residuals(_unit_mould(spec, slot), constraints).items():
            for e, c in poly.terms.items():
                rows.setdefault(key + (e,), {})[j] = c
    elim = Eliminator(len(slots))
    for r in rows.values():
        if elim.full():
            break
        elim.add_row(r)
    return slots, elim


def _vector_to_mould(spec, slots, vec) -> Mould:
    comps = {}
    for (m, sigma, e), c in zip(slots, vec):
        if c:
            comps.setdefault(m, {}).setdefault(sigma, {})[e] = c
    return Mould._raw(spec.group, spec.side,
                      {m: {s: SparsePoly._raw(m, t) for s, t in b.items()} for m, b in comps.items()})


def space_basis(spec: SpaceSpec) -> list:
    """Canonical basis of the space described by ``spec``, as moulds."""
    slots, elim = _eliminate(spec)
    return [_vector_to_mould(spec, slots, v) for v in elim.kernel()]


def space_dimension(spec: SpaceSpec) -> int:
    slots, elim = _eliminate(spec)
    return len(slots) - elim.rank


def ambient_dimension(spec: SpaceSpec) -> int:
    return len(ambient_slots(spec))


def coordinates(spec: SpaceSpec, M: Mould) -> list:
    """Coefficient vector of M in the ambient slot basis of ``spec``."""
    slots = ambient_slots(spec)
    out = []
    for m, sigma, e in slots:
        out.append(M.component(m).get(sigma, SparsePoly.zero(m)).coefficient(e))
    return out
