"""Covering morphisms, lifting of functors and universal covers."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .core import Groupoid, Subgroup, codiscrete, codiscrete_morphism
from .errors import (
    BasePointMismatch,
    CharGroupNotContained,
    CriterionFailed,
    NotConnected,
    NotCovering,
    NotAFunctor,
    SignatureMismatch,
    UnknownObject,
)
from .functors import GroupoidMorphism, compose_functors, is_isomorphism, validate_functor

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CoveringMorphism:
    """A functor certified to be bijective on every star.

    ``star_inverse[x][g]`` is the unique morphism of the star at ``x``
    sent to ``g``.
    """

    functor: GroupoidMorphism
    star_inverse: Mapping[str, Mapping[str, str]]

    @property
    def domain(self) -> Groupoid:
        return self.functor.domain

    @property
    def codomain(self) -> Groupoid:
        return self.functor.codomain

    def obj(self, x: str) -> str:
        return self.functor.object_map[x]

    def __call__(self, a: str) -> str:
        return self.functor.morphism_map[a]

    def lift(self, x: str, g: str) -> str:
        """Unique morphism starting at ``x`` lying over ``g``."""
        try:
            return self.star_inverse[x][g]
        except KeyError:
            if not self.domain.has_object(x):
                raise UnknownObject(f"unknown object {x!r}", witness=x) from None
            raise BasePointMismatch(
                f"{g} does not start at p({x}) = {self.obj(x)}", witness=(x, g)) from None


def check_covering(p: GroupoidMorphism) -> CoveringMorphism:
    """Certify ``p`` as a covering morphism or raise :class:`NotCovering`."""
    ok = validate_functor(p)
    if not ok:
        raise NotAFunctor(f"not a functor: {ok.reason}", witness=ok.witness)
    Gt, G = p.domain, p.codomain
    inverse: dict[str, dict[str, str]] = {}
    for x in Gt.objects:
        star = Gt.star(x)
        base = G.star(p.object_map[x])
        back: dict[str, str] = {}
        for a in star:
            g = p.morphism_map[a]
            if g in back:
                raise NotCovering(
                    f"star at {x} is not mapped injectively: {back[g]} and {a} both go to {g} "
                    f"(star sizes {len(star)} vs {len(base)})",
                    x, "injective", (len(star), len(base)))
            back[g] = a
        if len(back) != len(base):
            missing = next(g for g in base if g not in back)
            raise NotCovering(
                f"star at {x} does not reach {missing} "
                f"(star sizes {len(star)} vs {len(base)})",
                x, "surjective", (len(star), len(base)))
        inverse[x] = back
    return CoveringMorphism(p, inverse)


def characteristic_group(p: CoveringMorphism, x: str) -> Subgroup:
    """Image of the object group at ``x`` under ``p``."""
    loops = p.domain.hom(x, x)
    return Subgroup(p.codomain, p.obj(x), tuple(p(a) for a in loops))


def compose_coverings(p: CoveringMorphism, q: CoveringMorphism) -> CoveringMorphism:
    """``q`` after ``p``, re-certified."""
    return check_covering(compose_functors(p.functor, q.functor))


def _spanning_tree(K: Groupoid, z: str) -> list[tuple[str, str]]:
    """Breadth-first tree edges ``(a, new object)`` from ``z`` in canonical order."""
    seen = {z}
    edges = []
    queue = deque([z])
    while queue:
        w = queue.popleft()
        for a in K.star(w):
            v = K.tgt(a)
            if v not in seen:
                seen.add(v)
                edges.append((a, v))
                queue.append(v)
    return edges


def _loop_outside(p: CoveringMorphism, q: GroupoidMorphism, z: str, xt: str):
    chars = characteristic_group(p, xt)
    for loop in q.domain.hom(z, z):
        if q(loop) not in chars:
            return loop, q(loop), chars.elements
    return None


def lift_morphism(p: CoveringMorphism, q: GroupoidMorphism, z: str, xt: str) -> GroupoidMorphism:
    """The unique ``r`` with ``p r = q`` and ``r(z) = xt``.

    Raises :class:`CriterionFailed` when some loop at ``z`` maps outside
    the characteristic group of ``p`` at ``xt``.
    """
    K = q.domain
    Gt = p.domain
    if not (q.codomain is p.codomain or q.codomain == p.codomain):
        raise SignatureMismatch("q does not land in the base of the covering")
    if not K.has_object(z):
        raise UnknownObject(f"unknown object {z!r}", witness=z)
    if not Gt.has_object(xt):
        raise UnknownObject(f"unknown object {xt!r}", witness=xt)
    if not K.is_connected():
        raise NotConnected("the domain of q is not connected")
    if p.obj(xt) != q.obj(z):
        raise BasePointMismatch(
            f"p({xt}) = {p.obj(xt)} but q({z}) = {q.obj(z)}", witness=(z, xt))

    omap = {z: xt}
    for a, v in _spanning_tree(K, z):
        omap[v] = Gt.tgt(p.lift(omap[K.src(a)], q(a)))
    mmap = {}
    consistent = True
    for a in K.morphisms:
        lifted = p.lift(omap[K.src(a)], q(a))
        if Gt.tgt(lifted) != omap[K.tgt(a)]:
            consistent = False
            break
        mmap[a] = lifted
    if consistent:
        r = GroupoidMorphism(K, Gt, omap, mmap)
        if validate_functor(r):
            return r
    found = _loop_outside(p, q, z, xt)
    if found is None:  # pragma: no cover - excluded by the lifting theorem
        raise AssertionError("lift failed although every loop image is in the characteristic group")
    loop, image, chars = found
    raise CriterionFailed(
        f"loop {loop} at {z} maps to {image}, outside the characteristic group "
        f"{{{', '.join(chars)}}} at {xt}", loop, image, chars)


@dataclass(frozen=True)
class Factorization:
    covering: CoveringMorphism
    isomorphism: bool

    @property
    def functor(self) -> GroupoidMorphism:
        return self.covering.functor


def factor_covering(p: CoveringMorphism, xt: str, q: CoveringMorphism, zt: str) -> Factorization:
    """Unique covering ``r`` with ``p = q r`` and ``r(xt) = zt``."""
    for c, name in ((p, "p"), (q, "q")):
        if not (c.domain.is_connected() and c.codomain.is_connected()):
            raise NotConnected(f"{name} is not a connected covering")
    if not (p.codomain is q.codomain or p.codomain == q.codomain):
        raise SignatureMismatch("coverings have different bases")
    if p.obj(xt) != q.obj(zt):
        raise BasePointMismatch(
            f"p({xt}) = {p.obj(xt)} but q({zt}) = {q.obj(zt)}", witness=(xt, zt))
    C = characteristic_group(p, xt)
    D = characteristic_group(q, zt)
    if not C.issubset(D):
        extra = [g for g in C if g not in D]
        raise CharGroupNotContained(
            f"characteristic group of p contains {extra[0]}, not in that of q", witness=extra[0])
    r = check_covering(lift_morphism(q, p.functor, xt, zt))
    iso = C == D
    if iso and not is_isomorphism(r.functor):  # pragma: no cover
        raise AssertionError("equal characteristic groups but r is not bijective")
    return Factorization(r, iso)


def is_universal_covering(p: CoveringMorphism) -> bool:
    return (p.domain.is_connected() and p.codomain.is_connected()
            and p.domain.has_thin_homs())


def universal_cover(G: Groupoid, x: str) -> tuple[Groupoid, CoveringMorphism]:
    """Codiscrete groupoid on the star at ``x`` covering ``G``.

    Object ``a`` lies over ``tgt(a)`` and the morphism ``a->b`` over
    ``b`` after ``a^-1``.
    """
    if not G.is_connected():
        raise NotConnected("universal cover needs a connected groupoid")
    star = G.star(x)
    U = codiscrete(star)
    om = {a: G.tgt(a) for a in star}
    mm = {codiscrete_morphism(a, b): G.compose(G.inverse(a), b) for a in star for b in star}
    return U, check_covering(GroupoidMorphism(U, G, om, mm))


def subgroup_cover(G: Groupoid, x: str, H: Subgroup) -> tuple[Groupoid, CoveringMorphism, str]:
    """Connected covering of ``G`` whose characteristic group at the base is ``H``.

    Objects are the classes of the star at ``x`` under ``a ~ a h``
    (``h`` in ``H``); the morphism ``[a]g`` from ``[a]`` lies over ``g``
    and ends at ``[g a]``.  Returns the groupoid, the covering and the
    base object ``[1_x]``.
    """
    if not G.is_connected():
        raise NotConnected("subgroup cover needs a connected groupoid")
    if H.base != x or not H.is_closed():
        raise SignatureMismatch("H must be a subgroup of the object group at x")
    star = G.star(x)
    cls: dict[str, str] = {}
    reps: list[str] = []
    for a in star:
        if a in cls:
            continue
        reps.append(a)
        for h in H:
            cls[G.compose(h, a)] = a
    objects = reps
    name = {a: f"[{a}]" for a in reps}
    morphisms, src, tgt, over = [], {}, {}, {}
    key: dict[tuple[str, str], str] = {}
    for r in reps:
        for g in G.star(G.tgt(r)):
            m = f"{name[r]}{g}"
            morphisms.append(m)
            src[m] = name[r]
            tgt[m] = name[cls[G.compose(r, g)]]
            over[m] = g
            key[(r, g)] = m
    ident = {name[r]: key[(r, G.identity(G.tgt(r)))] for r in reps}
    inv, table = {}, {}
    for r in reps:
        for g in G.star(G.tgt(r)):
            m = key[(r, g)]
            r2 = cls[G.compose(r, g)]
            inv[m] = key[(r2, G.inverse(g))]
            for h in G.star(G.tgt(g)):
                table[(m, key[(r2, h)])] = key[(r, G.compose(g, h))]
    Gt = Groupoid([name[r] for r in objects], morphisms, src, tgt, ident, inv, table)
    p = GroupoidMorphism(Gt, G, {name[r]: G.tgt(r) for r in reps}, over)
    return Gt, check_covering(p), name[cls[G.identity(x)]]
