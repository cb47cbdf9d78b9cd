import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from gpdcover.core import interval_groupoid, product
from gpdcover.errors import (
    DuplicateId,
    IoError,
    MissingComposite,
    ParseError,
    UnknownObject,
)
from gpdcover.io import dumps, load_document, parse_document, to_json, write_document
from gpdcover.library import additive_structure, cyclic_groupoid, reduction

import corpus
from oracles import random_functor, random_groupoid

INTERVAL_DOC = {
    "kind": "groupoid",
    "objects": ["0", "1"],
    "morphisms": [
        {"id": "id0", "src": "0", "tgt": "0"},
        {"id": "id1", "src": "1", "tgt": "1"},
        {"id": "i", "src": "0", "tgt": "1"},
        {"id": "iinv", "src": "1", "tgt": "0"},
    ],
    "compose": [
        ["id0", "id0", "id0"], ["id0", "i", "i"], ["id1", "id1", "id1"], ["id1", "iinv", "iinv"],
        ["i", "id1", "i"], ["i", "iinv", "id0"], ["iinv", "id0", "iinv"], ["iinv", "i", "id1"],
    ],
}


def test_interval_document():
    doc = parse_document(json.dumps(INTERVAL_DOC))
    assert doc.kind == "groupoid"
    assert doc.value == interval_groupoid()


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_document("[1, 2")
    with pytest.raises(ParseError):
        parse_document(json.dumps({**INTERVAL_DOC, "extra": 1}))
    with pytest.raises(ParseError):
        parse_document(json.dumps({"kind": "ring"}))
    dup = dict(INTERVAL_DOC, objects=["0", "1", "0"])
    with pytest.raises(ParseError):
        parse_document(json.dumps(dup))


def test_semantic_errors_surface():
    short = dict(INTERVAL_DOC, compose=INTERVAL_DOC["compose"][:-1])
    with pytest.raises(MissingComposite):
        parse_document(json.dumps(short))
    stray = dict(INTERVAL_DOC, morphisms=INTERVAL_DOC["morphisms"] + [{"id": "k", "src": "0",
                                                                       "tgt": "2"}])
    with pytest.raises(UnknownObject):
        parse_document(json.dumps(stray))


def test_missing_file(tmp_path):
    with pytest.raises(IoError):
        load_document(tmp_path / "absent.gpd")
    ref = {"kind": "functor", "domain": "absent.gpd", "codomain": "absent.gpd",
           "objects": {}, "morphisms": {}}
    (tmp_path / "f.fun").write_text(json.dumps(ref))
    with pytest.raises(IoError):
        load_document(tmp_path / "f.fun")


def test_file_references(tmp_path):
    (tmp_path / "j.gpd").write_text(json.dumps(INTERVAL_DOC))
    doc = {"kind": "functor", "domain": {"product": ["j.gpd", "j.gpd"]}, "codomain": "j.gpd",
           "objects": {}, "morphisms": {}}
    P = product(interval_groupoid(), interval_groupoid())
    left = {P.pair_object(x, y): x for x in "01" for y in "01"}
    doc["objects"] = left
    doc["morphisms"] = {P.pair_morphism(a, b): a for a in P.left.morphisms for b in P.right.morphisms}
    (tmp_path / "pr.fun").write_text(json.dumps(doc))
    f = load_document(tmp_path / "pr.fun").value
    assert f.domain == P and f.codomain == interval_groupoid()
    assert f(P.pair_morphism("i", "iinv")) == "i"


def test_duplicate_morphism_id():
    doc = dict(INTERVAL_DOC, morphisms=INTERVAL_DOC["morphisms"] + [INTERVAL_DOC["morphisms"][0]])
    with pytest.raises((ParseError, DuplicateId)):
        parse_document(json.dumps(doc))


@pytest.mark.parametrize("value", [
    reduction(4, 2),
    additive_structure(3),
    corpus.queries()["s3-inner.nat"],
    corpus.queries()["s3-inner.hom"],
    product(interval_groupoid(), cyclic_groupoid(2)),
])
def test_roundtrip_examples(value, tmp_path):
    path = tmp_path / "doc.json"
    write_document(value, path)
    back = load_document(path).value
    assert dumps(back) == dumps(value)
    assert json.loads(path.read_text()) == to_json(value)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_roundtrip_random(seed):
    rng = random.Random(seed)
    G, H = random_groupoid(rng, 4, 16), random_groupoid(rng, 4, 16)
    g = parse_document(dumps(G)).value
    assert g == G and g.objects == G.objects and g.morphisms == G.morphisms
    f = random_functor(rng, G, H)
    back = parse_document(dumps(f)).value
    assert back == f
    assert dumps(back) == dumps(f)
