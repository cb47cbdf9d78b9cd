import random
from itertools import product as cartesian

import pytest
from hypothesis import given, settings, strategies as st

from gpdcover.core import codiscrete, group_as_groupoid, interval_groupoid, product
from gpdcover.errors import DomainMismatch, DomainNotProduct, UnknownId, UnknownObject
from gpdcover.functors import (
    GroupoidMorphism,
    compose_functors,
    constant_functor,
    identity_functor,
    induced_partial,
    induced_partial_right,
    injection_left,
    injection_right,
    inverse_functor,
    is_isomorphism,
    projections,
    validate_functor,
)
from gpdcover.library import (
    cyclic_groupoid,
    group_homomorphism,
    reduction,
    small_groups,
)

from oracles import group_homs, random_functor, random_groupoid


def test_identity_is_functor():
    for G in (interval_groupoid(), cyclic_groupoid(4), codiscrete("abc")):
        assert validate_functor(identity_functor(G))


def test_reduction_z4_z2():
    assert validate_functor(reduction(4, 2))


def test_involution_to_generator_fails_at_square():
    f = group_homomorphism(cyclic_groupoid(2), cyclic_groupoid(3), {"0": "0", "1": "1"})
    v = validate_functor(f)
    assert not v
    assert v.witness == ("1", "1")


def test_unknown_ids_rejected():
    G = cyclic_groupoid(2)
    with pytest.raises(UnknownId):
        GroupoidMorphism(G, G, {"*": "*"}, {"0": "0", "1": "7"})
    with pytest.raises(UnknownObject):
        GroupoidMorphism(G, G, {"*": "?"}, {"0": "0", "1": "1"})


def test_compose_with_identity_and_constant():
    f = reduction(4, 2)
    assert compose_functors(f, identity_functor(f.codomain)) == f
    J = interval_groupoid()
    C3 = codiscrete(["0", "1", "2"])
    incl = GroupoidMorphism(J, C3, {"0": "0", "1": "1"},
                            {"id0": "0->0", "id1": "1->1", "i": "0->1", "iinv": "1->0"})
    assert validate_functor(incl)
    point = codiscrete(["pt"])
    collapse = constant_functor(C3, point, "pt")
    assert compose_functors(incl, collapse) == constant_functor(J, point, "pt")
    with pytest.raises(DomainMismatch):
        compose_functors(collapse, incl)


def test_is_isomorphism():
    assert is_isomorphism(identity_functor(cyclic_groupoid(3)))
    assert not is_isomorphism(reduction(4, 2))
    C = codiscrete(["0", "1"])
    swap = GroupoidMorphism(C, C, {"0": "1", "1": "0"},
                            {"0->0": "1->1", "1->1": "0->0", "0->1": "1->0", "1->0": "0->1"})
    assert validate_functor(swap) and is_isomorphism(swap)
    inv = inverse_functor(swap)
    assert validate_functor(inv)
    assert compose_functors(swap, inv) == identity_functor(C)


def test_injections():
    J = interval_groupoid()
    i1 = injection_left(J, "0")
    P = i1.codomain
    assert i1("i") == P.pair_morphism("i", "id0")
    left, right = projections(P)
    assert compose_functors(i1, left) == identity_functor(J)
    assert compose_functors(i1, right) == constant_functor(J, J, "0")
    i2 = injection_right(J, "0", P)
    assert compose_functors(i2, right) == identity_functor(J)
    assert validate_functor(i1) and validate_functor(i2)


def test_constant_functor():
    c = constant_functor(interval_groupoid(), cyclic_groupoid(2), "*")
    assert c("i") == c("iinv") == "0"
    assert validate_functor(c)
    f = reduction(4, 2)
    assert compose_functors(f, constant_functor(f.codomain, codiscrete("p"), "p")) == \
        constant_functor(f.domain, codiscrete("p"), "p")


def test_induced_partials_of_projections():
    C, D = interval_groupoid(), cyclic_groupoid(3)
    P = product(C, D)
    left, right = projections(P)
    assert induced_partial(right, "0") == identity_functor(D)
    assert induced_partial(left, "0") == constant_functor(D, C, "0")
    assert induced_partial_right(left, "*") == identity_functor(C)
    with pytest.raises(DomainNotProduct):
        induced_partial(identity_functor(C), "0")


@pytest.mark.parametrize("a,b", [("Z2", "Z4"), ("Z4", "Z2"), ("S3", "Z2"), ("Z2xZ2", "S3"),
                                 ("Z3", "S3")])
def test_functor_check_agrees_with_homomorphism_oracle(a, b):
    groups = small_groups()
    A, B = groups[a], groups[b]
    homs = set(group_homs(A, B))
    GA, GB = group_as_groupoid(A), group_as_groupoid(B)
    for images in cartesian(range(len(B)), repeat=len(A)):
        f = GroupoidMorphism(GA, GB, {"*": "*"}, {str(i): str(j) for i, j in enumerate(images)})
        assert bool(validate_functor(f)) == (images in homs)


seeds = st.integers(min_value=0, max_value=10**6)


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_composites_of_functors_are_functors(seed):
    rng = random.Random(seed)
    A, B, C = (random_groupoid(rng, 3, 10) for _ in range(3))
    f, g = random_functor(rng, A, B), random_functor(rng, B, C)
    assert f is not None and g is not None
    assert validate_functor(f) and validate_functor(g)
    h = compose_functors(f, g)
    assert validate_functor(h)
    for x in A.objects:
        assert h(A.identity(x)) == C.identity(h.obj(x))
    for a in A.morphisms:
        assert h(A.inverse(a)) == C.inverse(h(a))


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_induced_partials_are_functors(seed):
    rng = random.Random(seed)
    C, D, E = (random_groupoid(rng, 2, 8) for _ in range(3))
    F = random_functor(rng, product(C, D), E)
    assert validate_functor(F)
    for x in C.objects:
        assert validate_functor(induced_partial(F, x))
    for y in D.objects:
        assert validate_functor(induced_partial_right(F, y))

