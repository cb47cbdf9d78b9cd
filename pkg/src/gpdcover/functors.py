"""Functors (morphisms of groupoids) and the standard ones built from products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping

from .core import Groupoid, ProductGroupoid, product
from .errors import DomainMismatch, DomainNotProduct, UnknownId, UnknownObject


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: truthy when it passed, otherwise carries a witness."""

    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self):
        return self.ok


PASS = Verdict(True)


@dataclass(frozen=True, eq=False)
class GroupoidMorphism:
    """A pair of maps on objects and morphisms; see :func:`validate_functor` for the laws."""

    domain: Groupoid
    codomain: Groupoid
    object_map: Mapping[str, str]
    morphism_map: Mapping[str, str]

    def __post_init__(self):
        om, mm = dict(self.object_map), dict(self.morphism_map)
        object.__setattr__(self, "object_map", om)
        object.__setattr__(self, "morphism_map", mm)
        D, C = self.domain, self.codomain
        for x in om:
            if not D.has_object(x):
                raise UnknownObject(f"object map mentions {x!r}, not in the domain", witness=x)
        for a in mm:
            if not D.has_morphism(a):
                raise UnknownId(f"morphism map mentions {a!r}, not in the domain", witness=a)
        for x in D.objects:
            if x not in om:
                raise UnknownObject(f"object map is not defined at {x!r}", witness=x)
            if not C.has_object(om[x]):
                raise UnknownObject(f"{x} is sent to {om[x]!r}, not in the codomain", witness=om[x])
        for a in D.morphisms:
            if a not in mm:
                raise UnknownId(f"morphism map is not defined at {a!r}", witness=a)
            if not C.has_morphism(mm[a]):
                raise UnknownId(f"{a} is sent to {mm[a]!r}, not in the codomain", witness=mm[a])

    def obj(self, x: str) -> str:
        return self.object_map[x]

    def __call__(self, a: str) -> str:
        return self.morphism_map[a]

    def __eq__(self, other):
        if not isinstance(other, GroupoidMorphism):
            return NotImplemented
        return (self.object_map == other.object_map
                and self.morphism_map == other.morphism_map
                and self.domain == other.domain
                and self.codomain == other.codomain)

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(self.morphism_map.items())))

    def __repr__(self):
        return f"<GroupoidMorphism {self.domain!r} -> {self.codomain!r}>"


def validate_functor(f: GroupoidMorphism) -> Verdict:
    """Check ``s f = f s``, ``t f = f t`` and ``f(ba) = f(b) f(a)``.

    The witness is the first violation in canonical order: a morphism for
    the typing laws, a composable pair ``(a, b)`` for composition.
    """
    D, C = f.domain, f.codomain
    om, mm = f.object_map, f.morphism_map
    for a in D.morphisms:
        if C.src(mm[a]) != om[D.src(a)]:
            return Verdict(False, a, f"source of f({a}) is not f(src {a})")
        if C.tgt(mm[a]) != om[D.tgt(a)]:
            return Verdict(False, a, f"target of f({a}) is not f(tgt {a})")
    for a, b in D.composable_pairs():
        if mm[D.compose(a, b)] != C.compose(mm[a], mm[b]):
            return Verdict(False, (a, b), f"f({b} after {a}) != f({b}) after f({a})")
    for x in D.objects:
        if mm[D.identity(x)] != C.identity(om[x]):
            return Verdict(False, D.identity(x), f"f(1_{x}) is not an identity")
    for a in D.morphisms:
        if mm[D.inverse(a)] != C.inverse(mm[a]):
            return Verdict(False, a, f"f({a}^-1) != f({a})^-1")
    return PASS


def identity_functor(G: Groupoid) -> GroupoidMorphism:
    return GroupoidMorphism(G, G, {x: x for x in G.objects}, {a: a for a in G.morphisms})


def compose_functors(f: GroupoidMorphism, g: GroupoidMorphism) -> GroupoidMorphism:
    """``g`` after ``f``."""
    if not (f.codomain is g.domain or f.codomain == g.domain):
        raise DomainMismatch("codomain of the first functor is not the domain of the second")
    return GroupoidMorphism(
        f.domain, g.codomain,
        {x: g.object_map[y] for x, y in f.object_map.items()},
        {a: g.morphism_map[b] for a, b in f.morphism_map.items()},
    )


def is_isomorphism(f: GroupoidMorphism) -> bool:
    return (len(set(f.object_map.values())) == len(f.codomain.objects) == len(f.domain.objects)
            and len(set(f.morphism_map.values())) == len(f.codomain.morphisms)
            == len(f.domain.morphisms))


def inverse_functor(f: GroupoidMorphism) -> GroupoidMorphism:
    if not is_isomorphism(f):
        raise DomainMismatch("functor is not bijective")
    return GroupoidMorphism(
        f.codomain, f.domain,
        {y: x for x, y in f.object_map.items()},
        {b: a for a, b in f.morphism_map.items()},
    )


def constant_functor(G: Groupoid, H: Groupoid, e: str) -> GroupoidMorphism:
    """Every object to ``e`` and every morphism to ``1_e``."""
    one = H.identity(e)
    return GroupoidMorphism(G, H, {x: e for x in G.objects}, {a: one for a in G.morphisms})


def projections(P: ProductGroupoid) -> tuple[GroupoidMorphism, GroupoidMorphism]:
    if not isinstance(P, ProductGroupoid):
        raise DomainNotProduct("not a product groupoid")
    left = GroupoidMorphism(
        P, P.left,
        {x: P.unpair_object(x)[0] for x in P.objects},
        {a: P.unpair_morphism(a)[0] for a in P.morphisms},
    )
    right = GroupoidMorphism(
        P, P.right,
        {x: P.unpair_object(x)[1] for x in P.objects},
        {a: P.unpair_morphism(a)[1] for a in P.morphisms},
    )
    return left, right


def product_with_projections(G: Groupoid, H: Groupoid):
    """``G x H`` together with its two projection functors."""
    P = product(G, H)
    return (P, *projections(P))


def _square(G: Groupoid, P: ProductGroupoid | None) -> ProductGroupoid:
    if P is None:
        return product(G, G)
    if not isinstance(P, ProductGroupoid) or not (P.left == G and P.right == G):
        raise DomainMismatch("expected the product of the groupoid with itself")
    return P


def injection_left(G: Groupoid, e: str, P: ProductGroupoid | None = None) -> GroupoidMorphism:
    """``a -> (a, 1_e)`` into ``G x G``."""
    P = _square(G, P)
    one = G.identity(e)
    return GroupoidMorphism(
        G, P,
        {x: P.pair_object(x, e) for x in G.objects},
        {a: P.pair_morphism(a, one) for a in G.morphisms},
    )


def injection_right(G: Groupoid, e: str, P: ProductGroupoid | None = None) -> GroupoidMorphism:
    """``a -> (1_e, a)`` into ``G x G``."""
    P = _square(G, P)
    one = G.identity(e)
    return GroupoidMorphism(
        G, P,
        {x: P.pair_object(e, x) for x in G.objects},
        {a: P.pair_morphism(one, a) for a in G.morphisms},
    )


def product_functor(
    f: GroupoidMorphism,
    g: GroupoidMorphism,
    domain: ProductGroupoid | None = None,
    codomain: ProductGroupoid | None = None,
) -> GroupoidMorphism:
    """``f x g`` acting componentwise."""
    P = product(f.domain, g.domain) if domain is None else domain
    Q = product(f.codomain, g.codomain) if codomain is None else codomain
    om, mm = {}, {}
    for x in P.objects:
        x1, x2 = P.unpair_object(x)
        om[x] = Q.pair_object(f.object_map[x1], g.object_map[x2])
    for a in P.morphisms:
        a1, a2 = P.unpair_morphism(a)
        mm[a] = Q.pair_morphism(f.morphism_map[a1], g.morphism_map[a2])
    return GroupoidMorphism(P, Q, om, mm)


def pairing(
    f: GroupoidMorphism,
    g: GroupoidMorphism,
    codomain: ProductGroupoid | None = None,
) -> GroupoidMorphism:
    """``(f, g)``: ``a -> (f(a), g(a))``; both functors share a domain."""
    if not (f.domain is g.domain or f.domain == g.domain):
        raise DomainMismatch("pairing needs functors with a common domain")
    Q = product(f.codomain, g.codomain) if codomain is None else codomain
    C = f.domain
    return GroupoidMorphism(
        C, Q,
        {x: Q.pair_object(f.object_map[x], g.object_map[x]) for x in C.objects},
        {a: Q.pair_morphism(f.morphism_map[a], g.morphism_map[a]) for a in C.morphisms},
    )


def _require_product(F: GroupoidMorphism) -> ProductGroupoid:
    P = F.domain
    if not isinstance(P, ProductGroupoid):
        raise DomainNotProduct("functor domain is not a product groupoid")
    return P


def induced_partial(F: GroupoidMorphism, x: str) -> GroupoidMorphism:
    """``F(x, -)``: ``d -> F(x, d)`` and ``b -> F(1_x, b)``."""
    P = _require_product(F)
    C, D = P.left, P.right
    one = C.identity(x)
    return GroupoidMorphism(
        D, F.codomain,
        {d: F.object_map[P.pair_object(x, d)] for d in D.objects},
        {b: F.morphism_map[P.pair_morphism(one, b)] for b in D.morphisms},
    )


def induced_partial_right(F: GroupoidMorphism, y: str) -> GroupoidMorphism:
    """``F(-, y)``: ``c -> F(c, y)`` and ``a -> F(a, 1_y)``."""
    P = _require_product(F)
    C, D = P.left, P.right
    one = D.identity(y)
    return GroupoidMorphism(
        C, F.codomain,
        {c: F.object_map[P.pair_object(c, y)] for c in C.objects},
        {a: F.morphism_map[P.pair_morphism(a, one)] for a in C.morphisms},
    )


def rebracket(L: ProductGroupoid, R: ProductGroupoid) -> GroupoidMorphism:
    """The canonical isomorphism ``(A x B) x C -> A x (B x C)``."""
    if not (isinstance(L, ProductGroupoid) and isinstance(L.left, ProductGroupoid)
            and isinstance(R, ProductGroupoid) and isinstance(R.right, ProductGroupoid)):
        raise DomainNotProduct("rebracketing needs (A x B) x C and A x (B x C)")
    om, mm = {}, {}
    for x in L.objects:
        ab, c = L.unpair_object(x)
        a, b = L.left.unpair_object(ab)
        om[x] = R.pair_object(a, R.right.pair_object(b, c))
    for m in L.morphisms:
        ab, c = L.unpair_morphism(m)
        a, b = L.left.unpair_morphism(ab)
        mm[m] = R.pair_morphism(a, R.right.pair_morphism(b, c))
    return GroupoidMorphism(L, R, om, mm)
