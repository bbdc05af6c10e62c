import json
import random

import pytest
from hypothesis import given

from mouldcalc.algebra import SparsePoly
from mouldcalc.dihedral import DihedralCollection, double_shuffle_basis
from mouldcalc.generators import random_lie
from mouldcalc.groups import parse_group
from mouldcalc.moulds import Mould
from mouldcalc.parsing import format_ncpoly, parse_lie
from mouldcalc.serialization import (basis_document, dumps, load_document, loads, mould_from_json,
                                     mould_to_json, poly_from_json)
from mouldcalc.spaces import SpaceSpec, space_basis

from conftest import moulds, poly


@given(moulds())
def test_mould_round_trip(M):
    text = dumps(M)
    back = loads(text)
    assert back == M
    assert dumps(back) == text


def test_rationals_are_exact_strings():
    M = Mould(parse_group("c2"), "v", {1: {(1,): poly(1, {(2,): "-3/7"})}}, depth0="1/2")
    data = mould_to_json(M)
    assert data["depth0"] == "1/2"
    assert data["components"][0]["entries"][0]["poly"] == [{"c": "-3/7", "e": [2]}]
    assert data["components"][0]["entries"][0]["sigma"] == [[1]]
    assert mould_from_json(data) == M


def test_equal_moulds_give_equal_bytes():
    G = parse_group("c3")
    a = Mould(G, "u", {2: {(1, 2): poly(2, {(1, 0): 1}), (0, 1): poly(2, {(0, 1): 2})}})
    b = Mould(G, "u", {2: {(0, 1): poly(2, {(0, 1): 2}), (1, 2): poly(2, {(1, 0): 1})}})
    assert dumps(a) == dumps(b)


def test_collection_round_trip():
    for Z in double_shuffle_basis(4, 2, parse_group("c2")) + [DihedralCollection(parse_group("c3"), 3, 1)]:
        assert loads(dumps(Z)) == Z


def test_basis_document():
    spec = SpaceSpec("ALAL", parse_group("c2"), 4, 2)
    basis = space_basis(spec)
    doc = basis_document({"space": "ALAL"}, len(basis), 16, basis)
    assert doc["dimension"] == 1
    assert load_document(json.loads(json.dumps(doc))) == basis


def test_bad_documents():
    with pytest.raises(ValueError):
        load_document({"something": 1})
    with pytest.raises(ValueError):
        poly_from_json([{"c": "1", "e": [1, 0]}], 1)
    bad = mould_to_json(Mould(parse_group("c2"), "u", {2: {(0, 1): poly(2, {(1, 0): 1})}}))
    bad["components"][0]["depth"] = 3
    with pytest.raises(ValueError):
        mould_from_json(bad)


def test_duplicate_terms_add():
    p = poly_from_json([{"c": "1", "e": [1]}, {"c": "1/2", "e": [1]}], 1)
    assert p == SparsePoly(1, {(1,): "3/2"})


def test_lie_expressions_round_trip():
    rng = random.Random(0)
    for name in ("trivial", "c2", "c2x2"):
        G = parse_group(name)
        for w in range(1, 5):
            h = random_lie(rng, G, w, terms=3)
            assert parse_lie(format_ncpoly(h), G) == h
