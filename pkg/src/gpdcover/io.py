"""JSON documents for groupoids, functors, natural isomorphisms and categorical groups.

A reference to a groupoid or functor inside a document may be an inline
document, a path (relative to the referring file), or for groupoids
``{"product": [left, right]}``.  Inside a catgroup document the tensor
and inverse may omit ``domain``/``codomain``; they default to
``carrier x carrier`` and ``carrier``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from .catgroup import CatGroupStructure
from .core import Groupoid, ProductGroupoid, build_groupoid, product
from .errors import IoError, ParseError
from .functors import GroupoidMorphism
from .homotopy import NaturalIsomorphism

Value = Union[Groupoid, GroupoidMorphism, NaturalIsomorphism, CatGroupStructure]

KINDS = ("groupoid", "functor", "natiso", "catgroup")

_FIELDS = {
    "groupoid": ({"kind", "objects", "morphisms", "compose"}, {"identities", "inverses"}),
    "functor": ({"kind", "domain", "codomain", "objects", "morphisms"}, set()),
    "natiso": ({"kind", "source", "target", "components"}, set()),
    "catgroup": ({"kind", "carrier", "tensor", "inv", "unit"}, set()),
}


@dataclass(frozen=True)
class Document:
    kind: str
    value: Value


# --- parsing -------------------------------------------------------------------

def parse_document(text: str, base: Path | str | None = None) -> Document:
    """Strict parse of one document; ``base`` resolves relative file references."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    base = Path(base) if base is not None else Path.cwd()
    return _Reader(base).document(raw, "$")


def load_document(path: Path | str) -> Document:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_document(text, path.parent)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}", exc.line, exc.column) from None


class _Reader:
    def __init__(self, base: Path):
        self.base = base
        self._cache: dict[Path, Document] = {}

    def document(self, raw: Any, where: str) -> Document:
        kind = self._kind(raw, where)
        if kind == "groupoid":
            return Document(kind, self.groupoid_body(raw, where))
        if kind == "functor":
            return Document(kind, self.functor_body(raw, where))
        if kind == "natiso":
            return Document(kind, self.natiso_body(raw, where))
        return Document(kind, self.catgroup_body(raw, where))

    def _kind(self, raw, where, expect=None, defaults=()):
        if not isinstance(raw, dict):
            raise ParseError(f"{where}: expected an object")
        kind = raw.get("kind")
        if kind not in KINDS:
            raise ParseError(f"{where}: unknown kind {kind!r}")
        if expect is not None and kind != expect:
            raise ParseError(f"{where}: expected a {expect} document, got {kind}")
        required, optional = _FIELDS[kind]
        extra = sorted(set(raw) - required - optional)
        if extra:
            raise ParseError(f"{where}: unknown field {extra[0]!r}")
        missing = sorted(required - set(raw) - set(defaults))
        if missing:
            raise ParseError(f"{where}: missing field {missing[0]!r}")
        return kind

    def _follow(self, raw, where, kind):
        """Resolve a path reference; returns the loaded value or None for inline data."""
        if not isinstance(raw, str):
            return None
        path = (self.base / raw).resolve()
        if path not in self._cache:
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as exc:
                raise IoError(f"{where}: cannot read {raw}: {exc.strerror}") from None
            try:
                sub = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: {exc.msg}", exc.lineno, exc.colno) from None
            self._cache[path] = _Reader(path.parent).document(sub, str(raw))
        doc = self._cache[path]
        if doc.kind != kind:
            raise ParseError(f"{where}: {raw} holds a {doc.kind}, expected a {kind}")
        return doc.value

    # groupoids

    def groupoid(self, raw, where) -> Groupoid:
        found = self._follow(raw, where, "groupoid")
        if found is not None:
            return found
        if isinstance(raw, dict) and set(raw) == {"product"}:
            pair = raw["product"]
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{where}.product: expected two groupoids")
            return product(self.groupoid(pair[0], f"{where}.product[0]"),
                           self.groupoid(pair[1], f"{where}.product[1]"))
        self._kind(raw, where, "groupoid")
        return self.groupoid_body(raw, where)

    def groupoid_body(self, raw, where) -> Groupoid:
        objects = _str_list(raw["objects"], f"{where}.objects")
        morphisms = raw["morphisms"]
        if not isinstance(morphisms, list):
            raise ParseError(f"{where}.morphisms: expected a list")
        triples = []
        seen = set()
        for i, m in enumerate(morphisms):
            w = f"{where}.morphisms[{i}]"
            if not isinstance(m, dict):
                raise ParseError(f"{w}: expected an object")
            if set(m) != {"id", "src", "tgt"}:
                bad = sorted(set(m) ^ {"id", "src", "tgt"})[0]
                raise ParseError(f"{w}: unexpected or missing field {bad!r}")
            for key in ("id", "src", "tgt"):
                if not isinstance(m[key], str):
                    raise ParseError(f"{w}.{key}: expected a string")
            if m["id"] in seen:
                raise ParseError(f"{w}: duplicate morphism id {m['id']!r}")
            seen.add(m["id"])
            triples.append((m["id"], m["src"], m["tgt"]))
        if len(set(objects)) != len(objects):
            dup = next(x for x in objects if objects.count(x) > 1)
            raise ParseError(f"{where}.objects: duplicate object id {dup!r}")
        compose = raw["compose"]
        if not isinstance(compose, list):
            raise ParseError(f"{where}.compose: expected a list")
        entries = [tuple(_str_list(e, f"{where}.compose[{i}]", 3)) for i, e in enumerate(compose)]
        identities = _str_map(raw["identities"], f"{where}.identities") if "identities" in raw else None
        inverses = _str_map(raw["inverses"], f"{where}.inverses") if "inverses" in raw else None
        return build_groupoid(objects, triples, entries, identities, inverses)

    # functors

    def functor(self, raw, where, domain=None, codomain=None) -> GroupoidMorphism:
        found = self._follow(raw, where, "functor")
        if found is not None:
            return found
        defaults = [k for k, v in (("domain", domain), ("codomain", codomain)) if v is not None]
        self._kind(raw, where, "functor", defaults)
        return self.functor_body(raw, where, domain, codomain)

    def functor_body(self, raw, where, domain=None, codomain=None) -> GroupoidMorphism:
        dom = self.groupoid(raw["domain"], f"{where}.domain") if "domain" in raw else domain
        cod = self.groupoid(raw["codomain"], f"{where}.codomain") if "codomain" in raw else codomain
        return GroupoidMorphism(dom, cod, _str_map(raw["objects"], f"{where}.objects"),
                                _str_map(raw["morphisms"], f"{where}.morphisms"))

    def natiso_body(self, raw, where) -> NaturalIsomorphism:
        f = self.functor(raw["source"], f"{where}.source")
        g = self.functor(raw["target"], f"{where}.target")
        return NaturalIsomorphism(f, g, _str_map(raw["components"], f"{where}.components"))

    def catgroup_body(self, raw, where) -> CatGroupStructure:
        G = self.groupoid(raw["carrier"], f"{where}.carrier")
        P = product(G, G)
        tensor = self.functor(raw["tensor"], f"{where}.tensor", P, G)
        inv = self.functor(raw["inv"], f"{where}.inv", G, G)
        if not isinstance(raw["unit"], str):
            raise ParseError(f"{where}.unit: expected a string")
        return CatGroupStructure(G, tensor, inv, raw["unit"])


def _str_list(raw, where, length=None) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise ParseError(f"{where}: expected a list of strings")
    if length is not None and len(raw) != length:
        raise ParseError(f"{where}: expected {length} entries")
    return list(raw)


def _str_map(raw, where) -> dict[str, str]:
    if not isinstance(raw, dict) or not all(isinstance(v, str) for v in raw.values()):
        raise ParseError(f"{where}: expected an object mapping ids to ids")
    return dict(raw)


# --- printing ------------------------------------------------------------------

def groupoid_to_json(G: Groupoid) -> dict:
    if isinstance(G, ProductGroupoid):
        return {"product": [groupoid_to_json(G.left), groupoid_to_json(G.right)]}
    return _flat(G)


def functor_to_json(f: GroupoidMorphism, with_ends: bool = True) -> dict:
    out: dict[str, Any] = {"kind": "functor"}
    if with_ends:
        out["domain"] = groupoid_to_json(f.domain)
        out["codomain"] = groupoid_to_json(f.codomain)
    out["objects"] = {x: f.object_map[x] for x in f.domain.objects}
    out["morphisms"] = {a: f.morphism_map[a] for a in f.domain.morphisms}
    return out


def to_json(value: Value) -> dict:
    if isinstance(value, Groupoid):
        # a bare product is written out in full so it stays a groupoid document
        return _flat(value)
    if isinstance(value, GroupoidMorphism):
        return functor_to_json(value)
    if isinstance(value, NaturalIsomorphism):
        return {
            "kind": "natiso",
            "source": functor_to_json(value.source),
            "target": functor_to_json(value.target),
            "components": {x: value.components[x] for x in value.source.domain.objects},
        }
    if isinstance(value, CatGroupStructure):
        return {
            "kind": "catgroup",
            "carrier": groupoid_to_json(value.carrier),
            "tensor": functor_to_json(value.tensor, with_ends=False),
            "inv": functor_to_json(value.inv, with_ends=False),
            "unit": value.unit,
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _flat(G: Groupoid) -> dict:
    return {
        "kind": "groupoid",
        "objects": list(G.objects),
        "morphisms": [{"id": a, "src": G.src(a), "tgt": G.tgt(a)} for a in G.morphisms],
        "compose": [[a, b, G.compose(a, b)] for a, b in G.composable_pairs()],
        "identities": {x: G.identity(x) for x in G.objects},
        "inverses": {a: G.inverse(a) for a in G.morphisms},
    }


def dumps(value: Value) -> str:
    """Deterministic text form; short lists of ids stay on one line."""
    return _format(to_json(value), 0) + "\n"


def _format(obj, depth: int) -> str:
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        if all(isinstance(v, str) for v in obj.values()) and depth > 0:
            items = [f"{json.dumps(k)}: {json.dumps(v)}" for k, v in obj.items()]
            return "{\n" + ",\n".join(pad + i for i in items) + "\n" + end + "}"
        items = [f"{json.dumps(k)}: {_format(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(pad + i for i in items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(isinstance(v, str) for v in obj):
            return json.dumps(obj)
        if all(isinstance(v, dict) and all(isinstance(w, str) for w in v.values()) for v in obj):
            return "[\n" + ",\n".join(pad + json.dumps(v) for v in obj) + "\n" + end + "]"
        return "[\n" + ",\n".join(pad + _format(v, depth + 1) for v in obj) + "\n" + end + "]"
    return json.dumps(obj)


def write_document(value: Value, path: Path | str) -> None:
    try:
        Path(path).write_text(dumps(value), encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror}") from None

