"""Natural isomorphisms and homotopies of functors over the interval groupoid."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .core import Groupoid, ProductGroupoid, interval_groupoid, product
from .covering import CoveringMorphism, lift_morphism
from .errors import (
    BasePointMismatch,
    DomainNotCxJ,
    InvalidNatIso,
    NotAFunctor,
    NotSimplyConnected,
    SignatureMismatch,
    UnknownId,
    UnknownObject,
)
from .functors import (
    PASS,
    GroupoidMorphism,
    Verdict,
    induced_partial_right,
    validate_functor,
)

INTERVAL = interval_groupoid()


@dataclass(frozen=True, eq=False)
class NaturalIsomorphism:
    """Components ``sigma(x): f(x) -> g(x)`` for a pair of parallel functors."""

    source: GroupoidMorphism
    target: GroupoidMorphism
    components: Mapping[str, str]

    def __post_init__(self):
        comps = dict(self.components)
        object.__setattr__(self, "components", comps)
        C, D = self.source.domain, self.source.codomain
        for x in comps:
            if not C.has_object(x):
                raise UnknownObject(f"component given at unknown object {x!r}", witness=x)
        for x in C.objects:
            if x not in comps:
                raise UnknownObject(f"no component at {x!r}", witness=x)
            if not D.has_morphism(comps[x]):
                raise UnknownId(f"component {comps[x]!r} is not a morphism", witness=comps[x])

    def __getitem__(self, x: str) -> str:
        return self.components[x]

    def __eq__(self, other):
        if not isinstance(other, NaturalIsomorphism):
            return NotImplemented
        return (self.components == other.components and self.source == other.source
                and self.target == other.target)

    def __hash__(self):
        return hash(tuple(self.components.items()))


def _parallel(f: GroupoidMorphism, g: GroupoidMorphism) -> bool:
    return ((f.domain is g.domain or f.domain == g.domain)
            and (f.codomain is g.codomain or f.codomain == g.codomain))


def validate_nat_iso(sigma: NaturalIsomorphism) -> Verdict:
    """Typing of every component and every naturality square.

    Witness is an object for a typing failure, else the first ``alpha``
    with ``sigma(y) f(alpha) != g(alpha) sigma(x)``.
    """
    f, g = sigma.source, sigma.target
    if not _parallel(f, g):
        raise SignatureMismatch("source and target functors are not parallel")
    C, D = f.domain, f.codomain
    for x in C.objects:
        s = sigma[x]
        if D.src(s) != f.obj(x) or D.tgt(s) != g.obj(x):
            return Verdict(False, x, f"component at {x} is not a morphism f({x}) -> g({x})")
    for a in C.morphisms:
        x, y = C.src(a), C.tgt(a)
        if D.compose(f(a), sigma[y]) != D.compose(sigma[x], g(a)):
            return Verdict(False, a, f"naturality square at {a} does not commute")
    return PASS


def identity_nat_iso(f: GroupoidMorphism) -> NaturalIsomorphism:
    D = f.codomain
    return NaturalIsomorphism(f, f, {x: D.identity(f.obj(x)) for x in f.domain.objects})


def invert_nat_iso(sigma: NaturalIsomorphism) -> NaturalIsomorphism:
    D = sigma.source.codomain
    return NaturalIsomorphism(sigma.target, sigma.source,
                              {x: D.inverse(s) for x, s in sigma.components.items()})


def compose_nat_isos(sigma: NaturalIsomorphism, tau: NaturalIsomorphism) -> NaturalIsomorphism:
    """``tau`` after ``sigma`` for ``sigma: f -> g`` and ``tau: g -> h``."""
    if sigma.target != tau.source:
        raise SignatureMismatch("natural isomorphisms are not composable")
    D = sigma.source.codomain
    return NaturalIsomorphism(sigma.source, tau.target,
                              {x: D.compose(sigma[x], tau[x]) for x in sigma.components})


@dataclass(frozen=True, eq=False)
class HomotopyFunctor:
    """A functor ``C x J -> D``; its restrictions to 0 and 1 are the endpoints."""

    functor: GroupoidMorphism

    def __post_init__(self):
        P = self.functor.domain
        if not isinstance(P, ProductGroupoid) or P.right != INTERVAL:
            raise DomainNotCxJ("homotopy domain must be C x J")

    @property
    def base(self) -> Groupoid:
        return self.functor.domain.left

    @property
    def source(self) -> GroupoidMorphism:
        return induced_partial_right(self.functor, "0")

    @property
    def target(self) -> GroupoidMorphism:
        return induced_partial_right(self.functor, "1")

    def __eq__(self, other):
        if not isinstance(other, HomotopyFunctor):
            return NotImplemented
        return self.functor == other.functor

    def __hash__(self):
        return hash(self.functor)


def cylinder(C: Groupoid) -> ProductGroupoid:
    return product(C, INTERVAL)


def nat_iso_to_homotopy(sigma: NaturalIsomorphism) -> HomotopyFunctor:
    """Build ``F`` with ``F(a, i) = g(a) sigma(x)`` and ``F(a, i^-1) = f(a) sigma(x)^-1``."""
    ok = validate_nat_iso(sigma)
    if not ok:
        raise InvalidNatIso(f"not a natural isomorphism: {ok.reason}", witness=ok.witness)
    f, g = sigma.source, sigma.target
    C, D = f.domain, f.codomain
    P = cylinder(C)
    om, mm = {}, {}
    for x in C.objects:
        om[P.pair_object(x, "0")] = f.obj(x)
        om[P.pair_object(x, "1")] = g.obj(x)
    for a in C.morphisms:
        s = sigma[C.src(a)]
        mm[P.pair_morphism(a, "id0")] = f(a)
        mm[P.pair_morphism(a, "id1")] = g(a)
        mm[P.pair_morphism(a, "i")] = D.compose(s, g(a))
        mm[P.pair_morphism(a, "iinv")] = D.compose(D.inverse(s), f(a))
    return HomotopyFunctor(GroupoidMorphism(P, D, om, mm))


def homotopy_to_nat_iso(F: HomotopyFunctor) -> NaturalIsomorphism:
    """Components ``sigma(x) = F(1_x, i)``."""
    if not isinstance(F, HomotopyFunctor):
        F = HomotopyFunctor(F)
    G = F.functor
    P = G.domain
    C = P.left
    comps = {x: G(P.pair_morphism(C.identity(x), "i")) for x in C.objects}
    return NaturalIsomorphism(F.source, F.target, comps)


def are_homotopic(f: GroupoidMorphism, g: GroupoidMorphism) -> NaturalIsomorphism | None:
    """A natural isomorphism ``f -> g`` if one exists, else ``None``.

    Equal functors get the identity.  Otherwise each connected component of
    the domain is solved separately: every candidate for the component at
    its first object is propagated along a spanning tree via
    ``sigma(y) = g(a) sigma(x) f(a)^-1`` and then checked on all squares;
    the first candidate in canonical order that works is kept.
    """
    if not _parallel(f, g):
        raise SignatureMismatch("functors are not parallel")
    if f == g:
        return identity_nat_iso(f)
    C, D = f.domain, f.codomain
    comps: dict[str, str] = {}
    for comp in C.components():
        z = comp[0]
        tree = []
        seen = {z}
        queue = deque([z])
        while queue:
            w = queue.popleft()
            for a in C.star(w):
                v = C.tgt(a)
                if v not in seen:
                    seen.add(v)
                    tree.append(a)
                    queue.append(v)
        arrows = [a for x in comp for a in C.star(x)]
        for cand in D.hom(f.obj(z), g.obj(z)):
            local = {z: cand}
            for a in tree:
                # sigma(y) = g(a) . sigma(x) . f(a)^-1
                local[C.tgt(a)] = D.compose(D.compose(D.inverse(f(a)), local[C.src(a)]), g(a))
            if all(D.compose(f(a), local[C.tgt(a)]) == D.compose(local[C.src(a)], g(a))
                   for a in arrows):
                comps.update(local)
                break
        else:
            return None
    return NaturalIsomorphism(f, g, comps)


@dataclass(frozen=True)
class LiftedHomotopy:
    homotopy: HomotopyFunctor
    source: GroupoidMorphism
    target: GroupoidMorphism


def lift_homotopy(p: CoveringMorphism, F: HomotopyFunctor, z: str, xt: str) -> LiftedHomotopy:
    """Lift ``F`` through ``p`` starting at ``(z, 0) -> xt``; the base groupoid must be 1-connected."""
    if not isinstance(F, HomotopyFunctor):
        F = HomotopyFunctor(F)
    ok = validate_functor(F.functor)
    if not ok:
        raise NotAFunctor(f"homotopy is not a functor: {ok.reason}", witness=ok.witness)
    C = F.base
    if not C.is_simply_connected():
        raise NotSimplyConnected("the homotopy's domain must be 1-connected")
    P = F.functor.domain
    z0 = P.pair_object(z, "0")
    if p.obj(xt) != F.functor.obj(z0):
        raise BasePointMismatch(
            f"p({xt}) = {p.obj(xt)} but F({z}, 0) = {F.functor.obj(z0)}", witness=(z, xt))
    lifted = HomotopyFunctor(lift_morphism(p, F.functor, z0, xt))
    return LiftedHomotopy(lifted, lifted.source, lifted.target)
