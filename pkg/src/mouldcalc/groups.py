"""Finite abelian groups presented as products of cyclic groups.

Elements are enumerated lexicographically by residue vector, identity
first.  Internally every element is identified with its position in that
enumeration so moulds can index by small integers and group operations are
table lookups.
"""
from __future__ import annotations

import itertools
import re
from functools import cached_property

from .exceptions import GroupMismatch

__all__ = ["Group", "GroupElement", "parse_group", "compose", "inverse",
           "nth_roots", "power_subgroup", "elements"]


class Group:
    """The group Z/N1 x ... x Z/Nk.

    Parameters
    ----------
    moduli : sequence of int
        Orders of the cyclic factors.  Factors of order 1 are kept as given
        so that element residue vectors keep their length.
    """

    __slots__ = ("moduli", "__dict__")

    def __init__(self, moduli=()):
        moduli = tuple(int(n) for n in moduli)
        if any(n < 1 for n in moduli):
            raise ValueError(f"cyclic factors must have order >= 1, got {moduli}")
        self.moduli = moduli

    # -- identity and hashing -------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Group) and self.moduli == other.moduli

    def __hash__(self):
        return hash(("Group", self.moduli))

    def __repr__(self):
        return f"Group({list(self.moduli)})"

    def __str__(self):
        if not self.moduli:
            return "c1"
        return "c" + "x".join(str(n) for n in self.moduli)

    def __len__(self):
        return self.order

    # -- enumeration ----------------------------------------------------------
    @cached_property
    def order(self) -> int:
        n = 1
        for m in self.moduli:
            n *= m
        return n

    @cached_property
    def residues(self) -> tuple:
        """Residue vectors of all elements in canonical order."""
        return tuple(itertools.product(*(range(n) for n in self.moduli)))

    @cached_property
    def _index(self) -> dict:
        return {r: i for i, r in enumerate(self.residues)}

    @cached_property
    def mul_table(self) -> tuple:
        res, idx, mods = self.residues, self._index, self.moduli
        return tuple(
            tuple(idx[tuple((x + y) % n for x, y, n in zip(a, b, mods))] for b in res)
            for a in res
        )

    @cached_property
    def inv_table(self) -> tuple:
        idx, mods = self._index, self.moduli
        return tuple(idx[tuple((-x) % n for x, n in zip(a, mods))] for a in self.residues)

    def index_of(self, residues) -> int:
        """Position of the element with the given residue vector."""
        r = tuple(int(x) for x in residues)
        if len(r) != len(self.moduli):
            raise ValueError(f"element {list(r)} has wrong length for {self!r}")
        r = tuple(x % n for x, n in zip(r, self.moduli))
        return self._index[r]

    def element(self, residues) -> "GroupElement":
        return GroupElement(self, self.index_of(residues))

    def elements(self) -> list:
        return [GroupElement(self, i) for i in range(self.order)]

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, 0)

    # -- index-level arithmetic (hot paths) ------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        """a * b^-1."""
        return self.mul_table[a][self.inv_table[b]]

    def power(self, a: int, n: int) -> int:
        r = self.residues[a]
        return self._index[tuple((x * n) % m for x, m in zip(r, self.moduli))]

    def prod(self, items) -> int:
        acc = 0
        table = self.mul_table
        for a in items:
            acc = table[acc][a]
        return acc

    def roots(self, g: int, n: int) -> list:
        """Indices of all t with t^n = g, ascending."""
        return [t for t in range(self.order) if self.power(t, n) == g]

    def power_set(self, n: int) -> list:
        """Indices of the subgroup {g^n}, ascending."""
        return sorted({self.power(a, n) for a in range(self.order)})

    def torsion_order(self, n: int) -> int:
        return len(self.roots(0, n))

    def divisors_of_order(self) -> list:
        return [n for n in range(1, self.order + 1) if self.order % n == 0]

    def to_json(self) -> dict:
        return {"cyclic": list(self.moduli)}

    @classmethod
    def from_json(cls, data) -> "Group":
        return cls(data["cyclic"])


class GroupElement:
    """An element of a :class:`Group`, stored by enumeration index."""

    __slots__ = ("group", "index")

    def __init__(self, group: Group, index: int):
        self.group = group
        self.index = index

    @property
    def residues(self) -> tuple:
        return self.group.residues[self.index]

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and self.group == other.group
                and self.index == other.index)

    def __hash__(self):
        return hash((self.group, self.index))

    def __repr__(self):
        r = self.residues
        return str(r[0]) if len(r) == 1 else str(r)

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __pow__(self, n: int):
        return GroupElement(self.group, self.group.power(self.index, n))


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    if a.group != b.group:
        raise GroupMismatch(f"cannot compose elements of {a.group!r} and {b.group!r}")
    return GroupElement(a.group, a.group.mul(a.index, b.index))


def inverse(a: GroupElement) -> GroupElement:
    return GroupElement(a.group, a.group.inv(a.index))


def nth_roots(g: GroupElement, n: int) -> set:
    if n < 1:
        raise ValueError("N must be positive")
    return {GroupElement(g.group, t) for t in g.group.roots(g.index, n)}


def elements(group: Group) -> list:
    return group.elements()


class PowerSubgroup:
    """The subgroup {g^N} with a cyclic presentation and its embedding."""

    def __init__(self, ambient: Group, n: int):
        if n < 1:
            raise ValueError("N must be positive")
        self.ambient = ambient
        self.n = n
        # The image of Z/m under multiplication by n is cyclic of order
        # m / gcd(m, n), generated by the residue gcd(m, n).
        from math import gcd
        gens = [gcd(m, n) % m if m > 1 else 0 for m in ambient.moduli]
        self.group = Group([m // gcd(m, n) for m in ambient.moduli])
        self._gens = gens

    def embed(self, element: GroupElement) -> GroupElement:
        if element.group != self.group:
            raise GroupMismatch("element is not in the presented subgroup")
        r = tuple(x * g for x, g in zip(element.residues, self._gens))
        return self.ambient.element(r)

    def image(self) -> set:
        return {self.embed(e) for e in self.group.elements()}


def power_subgroup(group: Group, n: int) -> PowerSubgroup:
    return PowerSubgroup(group, n)


_SHORTHAND = re.compile(r"^c(\d+(?:x\d+)*)$")


def parse_group(text) -> Group:
    """Parse ``c4``, ``c2x3`` or ``trivial`` (``c1``) into a :class:`Group`."""
    if isinstance(text, Group):
        return text
    s = str(text).strip().lower()
    if s in ("trivial", "e", "1", ""):
        return Group(())
    m = _SHORTHAND.match(s)
    if not m:
        raise ValueError(f"cannot parse group {text!r}; expected e.g. c4 or c2x3")
    moduli = [int(p) for p in m.group(1).split("x")]
    moduli = [n for n in moduli if n != 1]
    return Group(moduli)
