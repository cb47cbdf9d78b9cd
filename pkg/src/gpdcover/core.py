"""Finite groupoids: data model, validation and standard constructions.

Composition convention used everywhere in the package: for morphisms
``a: x -> y`` and ``b: y -> z`` the composite "b after a" is written
``G.compose(a, b)``.  The stored table is keyed by the pair ``(a, b)``
and is defined exactly when ``tgt(a) == src(b)``.

Objects and morphisms are nonempty strings.  Their insertion order is the
canonical order; every set-valued query returns ids in that order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateId,
    EmptySet,
    IllTypedComposite,
    MissingComposite,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAGroup,
    UnknownId,
    UnknownObject,
    ValidationError,
)

PAIR_SEP = "|"


def pair_id(a: str, b: str) -> str:
    """Token naming the pair ``(a, b)`` in a product groupoid."""
    return f"{a}{PAIR_SEP}{b}"


class Groupoid:
    """An immutable finite groupoid.

    Instances are produced by :func:`build_groupoid` (validating) or by the
    constructions in this module, which are valid by construction.
    """

    __slots__ = (
        "objects", "morphisms", "_src", "_tgt", "_identity", "_inverse",
        "_table", "_obj_index", "_mor_index", "_stars", "_homs",
    )

    def __init__(self, objects, morphisms, src, tgt, identity, inverse, table):
        self.objects: tuple[str, ...] = tuple(objects)
        self.morphisms: tuple[str, ...] = tuple(morphisms)
        self._src: dict[str, str] = dict(src)
        self._tgt: dict[str, str] = dict(tgt)
        self._identity: dict[str, str] = dict(identity)
        self._inverse: dict[str, str] = dict(inverse)
        self._table: dict[tuple[str, str], str] | None = table
        self._obj_index = {x: i for i, x in enumerate(self.objects)}
        self._mor_index = {a: i for i, a in enumerate(self.morphisms)}
        stars: dict[str, list[str]] = {x: [] for x in self.objects}
        homs: dict[tuple[str, str], list[str]] = {}
        for a in self.morphisms:
            x, y = self._src[a], self._tgt[a]
            stars[x].append(a)
            homs.setdefault((x, y), []).append(a)
        self._stars = {x: tuple(v) for x, v in stars.items()}
        self._homs = {k: tuple(v) for k, v in homs.items()}

    # -- basic structure ----------------------------------------------------

    def src(self, a: str) -> str:
        return self._src[self._check_morphism(a)]

    def tgt(self, a: str) -> str:
        return self._tgt[self._check_morphism(a)]

    def identity(self, x: str) -> str:
        return self._identity[self._check_object(x)]

    def inverse(self, a: str) -> str:
        return self._inverse[self._check_morphism(a)]

    def compose(self, a: str, b: str) -> str:
        """Return ``b`` after ``a``; requires ``tgt(a) == src(b)``."""
        try:
            return self._table[(a, b)]
        except KeyError:
            self._check_morphism(a)
            self._check_morphism(b)
            raise IllTypedComposite(
                f"{b} after {a} is undefined: tgt({a})={self._tgt[a]} "
                f"but src({b})={self._src[b]}", witness=(a, b)) from None

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        for a in self.morphisms:
            for b in self._stars[self._tgt[a]]:
                yield a, b

    @property
    def table(self) -> dict[tuple[str, str], str]:
        return self._table

    def has_object(self, x) -> bool:
        return x in self._obj_index

    def has_morphism(self, a) -> bool:
        return a in self._mor_index

    def _check_object(self, x: str) -> str:
        if x not in self._obj_index:
            raise UnknownObject(f"unknown object {x!r}", witness=x)
        return x

    def _check_morphism(self, a: str) -> str:
        if a not in self._mor_index:
            raise UnknownId(f"unknown morphism {a!r}", witness=a)
        return a

    def object_order(self, x: str) -> int:
        return self._obj_index[x]

    def morphism_order(self, a: str) -> int:
        return self._mor_index[a]

    # -- derived queries ----------------------------------------------------

    def star(self, x: str) -> tuple[str, ...]:
        """Morphisms with source ``x``."""
        return self._stars[self._check_object(x)]

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        self._check_object(x)
        self._check_object(y)
        return self._homs.get((x, y), ())

    def object_group(self, x: str) -> Subgroup:
        return Subgroup(self, x, self.hom(x, x))

    def components(self) -> list[tuple[str, ...]]:
        """Connected components, each in canonical order, listed by first object."""
        seen: set[str] = set()
        out = []
        for x in self.objects:
            if x in seen:
                continue
            comp = {x}
            queue = deque([x])
            while queue:
                w = queue.popleft()
                for a in self._stars[w]:
                    v = self._tgt[a]
                    if v not in comp:
                        comp.add(v)
                        queue.append(v)
            seen |= comp
            out.append(tuple(y for y in self.objects if y in comp))
        return out

    def is_connected(self) -> bool:
        # the empty groupoid counts as connected
        return len(self.components()) <= 1

    def is_simply_connected(self) -> bool:
        n = len(self.objects)
        return len(self._homs) == n * n and all(len(h) == 1 for h in self._homs.values())

    def has_thin_homs(self) -> bool:
        """Every hom-set has at most one element."""
        return all(len(h) <= 1 for h in self._homs.values())

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Groupoid):
            return NotImplemented
        if self.objects != other.objects or self.morphisms != other.morphisms:
            return False
        if self._src != other._src or self._tgt != other._tgt:
            return False
        return all(self.compose(a, b) == other.compose(a, b)
                   for a, b in self.composable_pairs())

    def __hash__(self):
        return hash((self.objects, self.morphisms))

    def __repr__(self):
        return f"<Groupoid: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def __len__(self):
        return len(self.morphisms)


class ProductGroupoid(Groupoid):
    """``left x right`` with componentwise structure.

    Ids are ``"a|b"`` tokens.  Composition is computed on demand so that
    iterated products stay cheap.
    """

    __slots__ = ("left", "right", "_opair", "_mpair", "_ounpair", "_munpair")

    def __init__(self, left: Groupoid, right: Groupoid):
        self.left = left
        self.right = right
        self._opair: dict[tuple[str, str], str] = {}
        self._mpair: dict[tuple[str, str], str] = {}
        for x, y in cartesian(left.objects, right.objects):
            self._opair[(x, y)] = pair_id(x, y)
        for a, b in cartesian(left.morphisms, right.morphisms):
            self._mpair[(a, b)] = pair_id(a, b)
        self._ounpair = {v: k for k, v in self._opair.items()}
        self._munpair = {v: k for k, v in self._mpair.items()}
        if len(self._ounpair) != len(self._opair) or len(self._munpair) != len(self._mpair):
            raise DuplicateId("product ids collide; factor ids contain the pair separator")
        mp = self._mpair
        op = self._opair
        src = {mp[a, b]: op[left._src[a], right._src[b]] for a, b in mp}
        tgt = {mp[a, b]: op[left._tgt[a], right._tgt[b]] for a, b in mp}
        ident = {op[x, y]: mp[left._identity[x], right._identity[y]] for x, y in op}
        inv = {mp[a, b]: mp[left._inverse[a], right._inverse[b]] for a, b in mp}
        super().__init__(op.values(), mp.values(), src, tgt, ident, inv, None)

    def pair_object(self, x: str, y: str) -> str:
        try:
            return self._opair[(x, y)]
        except KeyError:
            raise UnknownObject(f"no object ({x}, {y}) in product", witness=(x, y)) from None

    def pair_morphism(self, a: str, b: str) -> str:
        try:
            return self._mpair[(a, b)]
        except KeyError:
            raise UnknownId(f"no morphism ({a}, {b}) in product", witness=(a, b)) from None

    def unpair_object(self, x: str) -> tuple[str, str]:
        return self._ounpair[self._check_object(x)]

    def unpair_morphism(self, a: str) -> tuple[str, str]:
        return self._munpair[self._check_morphism(a)]

    def compose(self, a: str, b: str) -> str:
        try:
            a1, a2 = self._munpair[a]
            b1, b2 = self._munpair[b]
        except KeyError:
            self._check_morphism(a)
            self._check_morphism(b)
            raise
        if self._tgt[a] != self._src[b]:
            raise IllTypedComposite(f"{b} after {a} is undefined", witness=(a, b))
        return self._mpair[(self.left.compose(a1, b1), self.right.compose(a2, b2))]

    @property
    def table(self) -> dict[tuple[str, str], str]:
        if self._table is None:
            self._table = {(a, b): self.compose(a, b) for a, b in self.composable_pairs()}
        return self._table

    def __eq__(self, other):
        if isinstance(other, ProductGroupoid) and self.objects == other.objects:
            if self.left == other.left and self.right == other.right:
                return True
        return super().__eq__(other)

    __hash__ = Groupoid.__hash__


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of the object group at ``base``; ``elements`` in canonical order."""

    groupoid: Groupoid
    base: str
    elements: tuple[str, ...]

    def __post_init__(self):
        order = self.groupoid.morphism_order
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements), key=order)))

    def __contains__(self, a) -> bool:
        return a in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def issubset(self, other: Subgroup) -> bool:
        return self.base == other.base and set(self.elements) <= set(other.elements)

    def is_closed(self) -> bool:
        """Contains the identity and is closed under composition and inverse."""
        G = self.groupoid
        el = set(self.elements)
        if G.identity(self.base) not in el:
            return False
        if any(G.src(a) != self.base or G.tgt(a) != self.base for a in el):
            return False
        return all(G.inverse(a) in el for a in el) and all(
            G.compose(a, b) in el for a in el for b in el)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return (self.base == other.base and set(self.elements) == set(other.elements)
                and (self.groupoid is other.groupoid or self.groupoid == other.groupoid))

    def __hash__(self):
        return hash((self.base, frozenset(self.elements)))

    def __repr__(self):
        return f"Subgroup({self.base}: {{{', '.join(self.elements)}}})"


# --- construction & validation ------------------------------------------------

def build_groupoid(
    objects: Iterable[str],
    morphisms: Iterable[Sequence[str]],
    compose: Iterable[Sequence[str]],
    identities: Mapping[str, str] | None = None,
    inverses: Mapping[str, str] | None = None,
) -> Groupoid:
    """Validate a raw description and return the groupoid.

    ``morphisms`` holds ``(id, src, tgt)`` triples and ``compose`` holds
    ``(a, b, c)`` triples meaning ``c`` is ``b`` after ``a``.  Omitted
    identities and inverses are inferred from the table.

    Checks run in a fixed order and the first failure is raised: ids,
    references, composite typing, totality on composable pairs, identities,
    inverses, associativity.
    """
    objects = list(objects)
    morphisms = [tuple(m) for m in morphisms]
    entries = [tuple(e) for e in compose]

    for x in objects:
        _check_token(x, "object")
    obj_set: set[str] = set()
    for x in objects:
        if x in obj_set:
            raise DuplicateId(f"duplicate object id {x!r}", witness=x)
        obj_set.add(x)

    src: dict[str, str] = {}
    tgt: dict[str, str] = {}
    order: list[str] = []
    for m in morphisms:
        if len(m) != 3:
            raise ValidationError(f"morphism entry {m!r} is not (id, src, tgt)")
        a, x, y = m
        _check_token(a, "morphism")
        if a in src:
            raise DuplicateId(f"duplicate morphism id {a!r}", witness=a)
        for end in (x, y):
            if end not in obj_set:
                raise UnknownObject(f"morphism {a} mentions unknown object {end!r}", witness=end)
        src[a], tgt[a] = x, y
        order.append(a)

    table = _read_table(entries, src)
    for (a, b), c in table.items():
        if tgt[a] != src[b] or src[c] != src[a] or tgt[c] != tgt[b]:
            raise IllTypedComposite(
                f"entry {b} after {a} = {c} violates the source/target law", witness=(a, b, c))

    stars: dict[str, list[str]] = {x: [] for x in objects}
    for a in order:
        stars[src[a]].append(a)
    for a in order:
        for b in stars[tgt[a]]:
            if (a, b) not in table:
                raise MissingComposite(f"no composite listed for {b} after {a}", witness=(a, b))

    identity = _identities(objects, order, src, tgt, table, identities)
    inverse = _inverses(order, src, tgt, table, identity, inverses)

    for a in order:
        for b in stars[tgt[a]]:
            ba = table[(a, b)]
            for c in stars[tgt[b]]:
                if table[(ba, c)] != table[(a, table[(b, c)])]:
                    raise NonAssociative(
                        f"({c} {b}) {a} != {c} ({b} {a})", witness=(a, b, c))

    return Groupoid(objects, order, src, tgt, identity, inverse, table)


def _read_table(entries, src) -> dict[tuple[str, str], str]:
    # fast path for well-formed input; the loop below finds the first problem otherwise
    try:
        table = {(a, b): c for a, b, c in entries}
    except ValueError:
        table = None
    if table is not None and len(table) == len(entries) and src.keys() >= set().union(*entries):
        return table
    table = {}
    for e in entries:
        if len(e) != 3:
            raise ValidationError(f"composition entry {e!r} is not (a, b, c)")
        a, b, c = e
        for m in (a, b, c):
            if m not in src:
                raise UnknownId(f"composition entry mentions unknown morphism {m!r}", witness=m)
        if (a, b) in table:
            raise DuplicateId(f"composite of ({a}, {b}) listed twice", witness=(a, b))
        table[(a, b)] = c
    return table


def _check_token(x, kind: str) -> None:
    if not isinstance(x, str) or not x:
        raise ValidationError(f"{kind} ids must be nonempty strings, got {x!r}", witness=x)


def _identities(objects, order, src, tgt, table, given):
    identity: dict[str, str] = {}
    if given is not None:
        for x in given:
            if x not in set(objects):
                raise UnknownObject(f"identity listed for unknown object {x!r}", witness=x)
        for e in given.values():
            if e not in src:
                raise UnknownId(f"unknown identity morphism {e!r}", witness=e)
    for x in objects:
        if given is not None and x in given:
            e = given[x]
            if src[e] != x or tgt[e] != x:
                raise NoIdentity(f"listed identity {e} is not a loop at {x}", witness=x)
        else:
            loops = [e for e in order if src[e] == x and tgt[e] == x and table[(e, e)] == e]
            if len(loops) != 1:
                raise NoIdentity(f"no unique idempotent loop at {x}", witness=x)
            e = loops[0]
        identity[x] = e
    for a in order:
        if table[(identity[src[a]], a)] != a or table[(a, identity[tgt[a]])] != a:
            x = src[a] if table[(identity[src[a]], a)] != a else tgt[a]
            raise NoIdentity(f"{identity[x]} is not neutral for {a}", witness=x)
    return identity


def _inverses(order, src, tgt, table, identity, given):
    inverse: dict[str, str] = {}
    if given is not None:
        for a, b in given.items():
            if a not in src or b not in src:
                raise UnknownId(f"inverse entry ({a}, {b}) mentions an unknown morphism",
                                witness=a if a not in src else b)
    for a in order:
        x, y = src[a], tgt[a]
        if given is not None and a in given:
            cands = [given[a]]
        else:
            cands = [b for b in order if src[b] == y and tgt[b] == x]
        found = None
        for b in cands:
            if (src[b] == y and tgt[b] == x
                    and table[(a, b)] == identity[x] and table[(b, a)] == identity[y]):
                found = b
                break
        if found is None:
            raise NoInverse(f"{a} has no two-sided inverse", witness=a)
        inverse[a] = found
    return inverse


def validate_groupoid(G: Groupoid) -> Groupoid:
    """Re-run the full axiom check on an already constructed groupoid."""
    return build_groupoid(**groupoid_spec(G))


def groupoid_spec(G: Groupoid) -> dict:
    """The raw description of ``G`` accepted by :func:`build_groupoid`."""
    return {
        "objects": list(G.objects),
        "morphisms": [(a, G.src(a), G.tgt(a)) for a in G.morphisms],
        "compose": [(a, b, G.compose(a, b)) for a, b in G.composable_pairs()],
        "identities": {x: G.identity(x) for x in G.objects},
        "inverses": {a: G.inverse(a) for a in G.morphisms},
    }


# --- standard constructions ----------------------------------------------------

def product(G: Groupoid, H: Groupoid) -> ProductGroupoid:
    return ProductGroupoid(G, H)


def interval_groupoid() -> Groupoid:
    """Two objects ``0``, ``1`` and one invertible morphism ``i: 0 -> 1``."""
    return Groupoid(
        ("0", "1"),
        ("id0", "id1", "i", "iinv"),
        {"id0": "0", "id1": "1", "i": "0", "iinv": "1"},
        {"id0": "0", "id1": "1", "i": "1", "iinv": "0"},
        {"0": "id0", "1": "id1"},
        {"id0": "id0", "id1": "id1", "i": "iinv", "iinv": "i"},
        {
            ("id0", "id0"): "id0", ("id0", "i"): "i",
            ("id1", "id1"): "id1", ("id1", "iinv"): "iinv",
            ("i", "id1"): "i", ("i", "iinv"): "id0",
            ("iinv", "id0"): "iinv", ("iinv", "i"): "id1",
        },
    )


def codiscrete_morphism(x: str, y: str) -> str:
    return f"{x}->{y}"


def codiscrete(labels: Iterable[str]) -> Groupoid:
    """The groupoid with exactly one morphism ``x->y`` for each ordered pair."""
    labels = list(labels)
    if not labels:
        raise EmptySet("codiscrete groupoid needs at least one object")
    if len(set(labels)) != len(labels):
        raise DuplicateId("repeated label", witness=labels)
    for x in labels:
        _check_token(x, "object")
    m = codiscrete_morphism
    mors = [m(x, y) for x, y in cartesian(labels, labels)]
    if len(set(mors)) != len(mors):
        raise DuplicateId("labels collide under the x->y naming")
    return Groupoid(
        labels,
        mors,
        {m(x, y): x for x, y in cartesian(labels, labels)},
        {m(x, y): y for x, y in cartesian(labels, labels)},
        {x: m(x, x) for x in labels},
        {m(x, y): m(y, x) for x, y in cartesian(labels, labels)},
        {(m(x, y), m(y, z)): m(x, z) for x, y, z in cartesian(labels, labels, labels)},
    )


def check_group_table(table: Sequence[Sequence[int]]) -> int:
    """Validate a Cayley table (``table[i][j]`` is ``i*j``); return the identity index."""
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroup(f"row {i} has length {len(row)}, expected {n}", witness=i)
        for j, k in enumerate(row):
            if not isinstance(k, int) or not 0 <= k < n:
                raise NotAGroup(f"entry ({i}, {j}) = {k!r} is outside the set", witness=(i, j))
    for i, j, k in cartesian(range(n), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAGroup(f"not associative at ({i}, {j}, {k})", witness=(i, j, k))
    units = [e for e in range(n) if all(table[e][j] == j == table[j][e] for j in range(n))]
    if not units:
        raise NotAGroup("no identity element")
    e = units[0]
    for i in range(n):
        if not any(table[i][j] == e == table[j][i] for j in range(n)):
            raise NotAGroup(f"element {i} has no inverse", witness=i)
    return e


def group_as_groupoid(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    obj: str = "*",
) -> Groupoid:
    """One-object groupoid of a group; ``compose(a, b)`` is the product ``b*a``."""
    e = check_group_table(table)
    n = len(table)
    labels = [str(i) for i in range(n)] if labels is None else list(labels)
    if len(labels) != n:
        raise NotAGroup(f"{len(labels)} labels for a table of order {n}")
    inv = {i: next(j for j in range(n) if table[i][j] == e) for i in range(n)}
    return build_groupoid(
        [obj],
        [(lab, obj, obj) for lab in labels],
        [(labels[a], labels[b], labels[table[b][a]]) for a in range(n) for b in range(n)],
        identities={obj: labels[e]},
        inverses={labels[i]: labels[inv[i]] for i in range(n)},
    )


def disjoint_union(*parts: Groupoid, tags: Sequence[str] | None = None) -> Groupoid:
    """Disjoint union; ids of part ``k`` are prefixed ``"<tag>:"`` (tag defaults to ``k``)."""
    tags = [str(k) for k in range(len(parts))] if tags is None else list(tags)
    objects, morphisms = [], []
    src, tgt, ident, inv, table = {}, {}, {}, {}, {}
    for tag, G in zip(tags, parts):
        def o(x, t=tag):
            return f"{t}:{x}"
        objects += [o(x) for x in G.objects]
        morphisms += [o(a) for a in G.morphisms]
        for a in G.morphisms:
            src[o(a)], tgt[o(a)], inv[o(a)] = o(G.src(a)), o(G.tgt(a)), o(G.inverse(a))
        for x in G.objects:
            ident[o(x)] = o(G.identity(x))
        for a, b in G.composable_pairs():
            table[(o(a), o(b))] = o(G.compose(a, b))
    if len(set(objects)) != len(objects) or len(set(morphisms)) != len(morphisms):
        raise DuplicateId("tags must be distinct")
    return Groupoid(objects, morphisms, src, tgt, ident, inv, table)


def relabel(G: Groupoid, objects: Mapping[str, str], morphisms: Mapping[str, str]) -> Groupoid:
    """Isomorphic copy of ``G`` with ids renamed (order preserved)."""
    o, m = dict(objects), dict(morphisms)
    if len(set(o.values())) != len(G.objects) or len(set(m.values())) != len(G.morphisms):
        raise DuplicateId("relabeling is not injective")
    return Groupoid(
        [o[x] for x in G.objects],
        [m[a] for a in G.morphisms],
        {m[a]: o[G.src(a)] for a in G.morphisms},
        {m[a]: o[G.tgt(a)] for a in G.morphisms},
        {o[x]: m[G.identity(x)] for x in G.objects},
        {m[a]: m[G.inverse(a)] for a in G.morphisms},
        {(m[a], m[b]): m[G.compose(a, b)] for a, b in G.composable_pairs()},
    )
