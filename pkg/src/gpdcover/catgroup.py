"""Group-groupoids, categorical groups, and lifting them along coverings."""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import NamedTuple

from .core import Groupoid, ProductGroupoid, product
from .covering import CoveringMorphism, lift_morphism
from .errors import (
    AxiomFailed,
    BasePointMismatch,
    DomainNotProduct,
    NotAFunctor,
    NotSimplyConnected,
    SignatureMismatch,
    UnknownObject,
)
from .functors import (
    PASS,
    GroupoidMorphism,
    Verdict,
    compose_functors,
    constant_functor,
    identity_functor,
    injection_left,
    injection_right,
    pairing,
    product_functor,
    rebracket,
    validate_functor,
)
from .homotopy import NaturalIsomorphism, are_homotopic


class Witnesses(NamedTuple):
    """Natural isomorphisms for the three axioms (five comparisons)."""

    associator: NaturalIsomorphism
    left_unitor: NaturalIsomorphism
    right_unitor: NaturalIsomorphism
    left_inverse: NaturalIsomorphism
    right_inverse: NaturalIsomorphism


@dataclass(frozen=True, eq=False)
class CatGroupStructure:
    """Product functor ``tensor: G x G -> G``, inverse ``inv: G -> G`` and unit object."""

    carrier: Groupoid
    tensor: GroupoidMorphism
    inv: GroupoidMorphism
    unit: str
    witnesses: Witnesses | None = None

    def __post_init__(self):
        G = self.carrier
        P = self.tensor.domain
        if not isinstance(P, ProductGroupoid):
            raise DomainNotProduct("tensor must be defined on carrier x carrier")
        if not (P.left == G and P.right == G and self.tensor.codomain == G):
            raise SignatureMismatch("tensor must be a map carrier x carrier -> carrier")
        if not (self.inv.domain == G and self.inv.codomain == G):
            raise SignatureMismatch("inverse must be a map carrier -> carrier")
        if not G.has_object(self.unit):
            raise UnknownObject(f"unit {self.unit!r} is not an object", witness=self.unit)

    @property
    def square(self) -> ProductGroupoid:
        return self.tensor.domain

    def tensor_morphisms(self, a: str, b: str) -> str:
        return self.tensor(self.square.pair_morphism(a, b))

    def tensor_objects(self, x: str, y: str) -> str:
        return self.tensor.obj(self.square.pair_object(x, y))

    @cached_property
    def axiom_functors(self) -> dict:
        """The functor pairs compared by the three axioms, keyed by axiom number."""
        G, P, t, u, e = self.carrier, self.square, self.tensor, self.inv, self.unit
        ident = identity_functor(G)
        left = product(P, G)            # (G x G) x G
        right = product(G, P)           # G x (G x G)
        assoc_l = compose_functors(product_functor(t, ident, domain=left, codomain=P), t)
        assoc_r = compose_functors(
            rebracket(left, right),
            compose_functors(product_functor(ident, t, domain=right, codomain=P), t))
        const = constant_functor(G, G, e)
        return {
            1: [(assoc_l, assoc_r)],
            2: [(compose_functors(injection_left(G, e, P), t), ident),
                (compose_functors(injection_right(G, e, P), t), ident)],
            3: [(compose_functors(pairing(ident, u, P), t), const),
                (compose_functors(pairing(u, ident, P), t), const)],
        }


def check_interchange(S: CatGroupStructure) -> Verdict:
    """``(b a) (x) (d c) == (b (x) d)(a (x) c)`` for composable ``(a, b)`` and ``(c, d)``.

    Also checks that the tensor respects sources and targets, without which
    the right-hand side is not defined.
    """
    G, P, t = S.carrier, S.square, S.tensor
    for m in P.morphisms:
        a, c = P.unpair_morphism(m)
        if G.src(t(m)) != S.tensor_objects(G.src(a), G.src(c)):
            return Verdict(False, (a, c), f"source of {a} (x) {c} is wrong")
        if G.tgt(t(m)) != S.tensor_objects(G.tgt(a), G.tgt(c)):
            return Verdict(False, (a, c), f"target of {a} (x) {c} is wrong")
    pairs = list(G.composable_pairs())
    for a, b in pairs:
        ba = G.compose(a, b)
        for c, d in pairs:
            lhs = S.tensor_morphisms(ba, G.compose(c, d))
            rhs = G.compose(S.tensor_morphisms(a, c), S.tensor_morphisms(b, d))
            if lhs != rhs:
                return Verdict(False, (a, b, c, d), "interchange fails")
    return PASS


def validate_group_groupoid(S: CatGroupStructure) -> Verdict:
    """Strict check: functoriality and the three group axioms as exact equalities.

    The witness is ``(axiom, detail)`` where axiom is ``"interchange"``,
    ``"inverse-functor"``, ``1``, ``2`` or ``3``.
    """
    v = check_interchange(S)
    if not v:
        return Verdict(False, ("interchange", v.witness), v.reason)
    v = validate_functor(S.inv)
    if not v:
        return Verdict(False, ("inverse-functor", v.witness), v.reason)
    for which, pairs in S.axiom_functors.items():
        for lhs, rhs in pairs:
            bad = _first_difference(lhs, rhs)
            if bad is not None:
                return Verdict(False, (which, bad), f"axiom {which} fails at {bad}")
    return PASS


def _first_difference(f: GroupoidMorphism, g: GroupoidMorphism):
    for x in f.domain.objects:
        if f.obj(x) != g.obj(x):
            return x
    for a in f.domain.morphisms:
        if f(a) != g(a):
            return a
    return None


def validate_categorical_group(S: CatGroupStructure) -> CatGroupStructure:
    """Find natural isomorphisms for the three axioms; return ``S`` with them attached."""
    for name, F in (("tensor", S.tensor), ("inverse", S.inv)):
        v = validate_functor(F)
        if not v:
            raise NotAFunctor(f"{name} is not a functor: {v.reason}", witness=v.witness)
    found = []
    labels = {1: ["associativity"], 2: ["left unit", "right unit"],
              3: ["right inverse", "left inverse"]}
    for which, pairs in S.axiom_functors.items():
        for (lhs, rhs), label in zip(pairs, labels[which]):
            sigma = are_homotopic(lhs, rhs)
            if sigma is None:
                raise AxiomFailed(f"axiom {which} ({label}) fails: functors are not homotopic",
                                  which, label)
            found.append(sigma)
    return replace(S, witnesses=Witnesses(*found))


def is_catgroup_morphism(f: GroupoidMorphism, S: CatGroupStructure, T: CatGroupStructure) -> Verdict:
    """``f(a (x) b) == f(a) (x) f(b)`` for every pair of morphisms; witness ``(a, b)``."""
    if not (f.domain == S.carrier and f.codomain == T.carrier):
        raise SignatureMismatch("functor does not run between the two carriers")
    G = S.carrier
    for a in G.morphisms:
        for b in G.morphisms:
            if f(S.tensor_morphisms(a, b)) != T.tensor_morphisms(f(a), f(b)):
                return Verdict(False, (a, b), f"f({a} (x) {b}) != f({a}) (x) f({b})")
    return PASS


def lift_categorical_group(p: CoveringMorphism, S: CatGroupStructure, unit: str) -> CatGroupStructure:
    """Transport ``S`` along ``p`` to its 1-connected covering groupoid.

    The lifted tensor is the unique lift of ``tensor (p x p)`` sending
    ``(unit, unit)`` to ``unit``; the lifted inverse is the unique lift of
    ``inv p`` fixing ``unit``.
    """
    Gt = p.domain
    if not (p.codomain is S.carrier or p.codomain == S.carrier):
        raise SignatureMismatch("covering does not land in the carrier")
    if not Gt.has_object(unit):
        raise UnknownObject(f"unknown object {unit!r}", witness=unit)
    if not Gt.is_simply_connected():
        raise NotSimplyConnected("covering groupoid must be 1-connected")
    if p.obj(unit) != S.unit:
        raise BasePointMismatch(f"p({unit}) = {p.obj(unit)} is not the unit {S.unit}",
                                witness=unit)
    Pt = product(Gt, Gt)
    pp = product_functor(p.functor, p.functor, domain=Pt, codomain=S.square)
    tensor = lift_morphism(p, compose_functors(pp, S.tensor), Pt.pair_object(unit, unit), unit)
    inv = lift_morphism(p, compose_functors(p.functor, S.inv), unit, unit)
    return validate_categorical_group(CatGroupStructure(Gt, tensor, inv, unit))


def group_structure(G: Groupoid, mul, inv, unit: str) -> CatGroupStructure:
    """Structure from Python callables on ids: ``mul`` acts on objects and on morphisms alike."""
    P = product(G, G)
    tensor = GroupoidMorphism(
        P, G,
        {P.pair_object(x, y): mul(x, y) for x in G.objects for y in G.objects},
        {P.pair_morphism(a, b): mul(a, b) for a in G.morphisms for b in G.morphisms},
    )
    u = GroupoidMorphism(G, G, {x: inv(x) for x in G.objects}, {a: inv(a) for a in G.morphisms})
    return CatGroupStructure(G, tensor, u, unit)
