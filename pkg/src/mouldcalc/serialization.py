"""JSON documents for rationals, polynomials, moulds, dihedral collections and bases.

All writers produce canonical output: sigma tuples sorted
lexicographically, polynomial terms in graded lexicographic order, and
``json.dumps`` with fixed separators, so equal objects serialize to equal
bytes.
"""
from __future__ import annotations

import json

from .algebra import SparsePoly, format_rational, parse_rational
from .dihedral import DihedralCollection
from .groups import Group
from .moulds import Mould

__all__ = ["poly_to_json", "poly_from_json", "mould_to_json", "mould_from_json",
           "collection_to_json", "collection_from_json", "basis_document",
           "load_document", "dumps", "loads"]


def poly_to_json(p: SparsePoly) -> list:
    return [{"c": format_rational(c), "e": list(e)} for e, c in p.sorted_terms()]


def poly_from_json(data, arity: int) -> SparsePoly:
    terms = {}
    for t in data:
        e = tuple(int(v) for v in t["e"])
        if len(e) != arity:
            raise ValueError(f"exponent vector {list(e)} does not have length {arity}")
        c = parse_rational(str(t["c"]))
        terms[e] = terms.get(e, 0) + c
    return SparsePoly(arity, terms)


def _sigma_json(G, sigma):
    return [list(G.residues[s]) for s in sigma]


def _sigma_from(G, data):
    return tuple(G.index_of(tuple(int(v) for v in r)) for r in data)


def mould_to_json(M: Mould) -> dict:
    G = M.group
    comps = []
    for m in sorted(M.components):
        block = M.components[m]
        entries = [{"sigma": _sigma_json(G, s), "poly": poly_to_json(block[s])}
                   for s in sorted(block) if block[s]]
        if entries:
            comps.append({"depth": m, "entries": entries})
    return {"side": M.side, "group": G.to_json(), "depth0": format_rational(M.depth0),
            "components": comps}


def mould_from_json(data) -> Mould:
    G = Group.from_json(data["group"])
    comps = {}
    for comp in data.get("components", []):
        m = int(comp["depth"])
        block = comps.setdefault(m, {})
        for ent in comp["entries"]:
            sigma = _sigma_from(G, ent["sigma"])
            if len(sigma) != m:
                raise ValueError(f"sigma of length {len(sigma)} at depth {m}")
            p = poly_from_json(ent["poly"], m)
            block[sigma] = block[sigma] + p if sigma in block else p
    return Mould(G, data.get("side", "u"), comps, parse_rational(str(data.get("depth0", "0"))))


def collection_to_json(Z: DihedralCollection) -> dict:
    G = Z.group
    entries = [{"g": _sigma_json(G, g), "poly": poly_to_json(Z.data[g])} for g in sorted(Z.data)]
    return {"dihedral": True, "group": G.to_json(), "weight": Z.weight, "depth": Z.depth,
            "entries": entries}


def collection_from_json(data) -> DihedralCollection:
    G = Group.from_json(data["group"])
    m = int(data["depth"])
    entries = {}
    for ent in data.get("entries", []):
        g = _sigma_from(G, ent["g"])
        entries[g] = poly_from_json(ent["poly"], m)
    return DihedralCollection(G, int(data["weight"]), m, entries)


def basis_document(header: dict, dimension: int, ambient_dimension: int, items) -> dict:
    """Metadata header followed by the basis elements."""
    out = []
    for x in items:
        out.append(collection_to_json(x) if isinstance(x, DihedralCollection) else mould_to_json(x))
    return {"spec": header, "dimension": dimension, "ambient_dimension": ambient_dimension,
            "basis": out}


def load_document(data):
    """Decode a mould, a dihedral collection, or a list of either."""
    if isinstance(data, list):
        return [load_document(d) for d in data]
    if isinstance(data, dict) and "basis" in data:
        return [load_document(d) for d in data["basis"]]
    if isinstance(data, dict) and data.get("dihedral"):
        return collection_from_json(data)
    if isinstance(data, dict) and "components" in data:
        return mould_from_json(data)
    raise ValueError("not a mould or dihedral collection document")


def dumps(obj, indent=None) -> str:
    if isinstance(obj, Mould):
        obj = mould_to_json(obj)
    elif isinstance(obj, DihedralCollection):
        obj = collection_to_json(obj)
    if indent is None:
        return json.dumps(obj, separators=(",", ":"))
    return json.dumps(obj, indent=indent)


def loads(text: str):
    return load_document(json.loads(text))
