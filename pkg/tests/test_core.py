import random

import pytest
from hypothesis import given, settings, strategies as st

from gpdcover.core import (
    Groupoid,
    build_groupoid,
    codiscrete,
    disjoint_union,
    group_as_groupoid,
    groupoid_spec,
    interval_groupoid,
    product,
    validate_groupoid,
)
from gpdcover.errors import (
    DuplicateId,
    EmptySet,
    IllTypedComposite,
    MissingComposite,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotAGroup,
    UnknownObject,
)
from gpdcover.functors import projections, validate_functor
from gpdcover.library import cyclic_groupoid, cyclic_table, is_abelian, symmetric_table

from oracles import random_groupoid


def z_table_entries(n):
    t = cyclic_table(n)
    return [(str(a), str(b), str(t[b][a])) for a in range(n) for b in range(n)]


def one_object(n, entries):
    return build_groupoid(["*"], [(str(i), "*", "*") for i in range(n)], entries)


class TestBuild:
    def test_z3(self):
        G = one_object(3, z_table_entries(3))
        assert G.objects == ("*",)
        assert G.morphisms == ("0", "1", "2")
        assert G.identity("*") == "0"
        assert G.inverse("1") == "2"
        assert G.compose("1", "2") == "0"

    def test_missing_composite(self):
        with pytest.raises(MissingComposite) as exc:
            build_groupoid(
                ["x", "y", "z"],
                [("1x", "x", "x"), ("1y", "y", "y"), ("1z", "z", "z"),
                 ("a", "x", "y"), ("b", "y", "z")],
                [("1x", "1x", "1x"), ("1y", "1y", "1y"), ("1z", "1z", "1z"),
                 ("1x", "a", "a"), ("a", "1y", "a"), ("1y", "b", "b"), ("b", "1z", "b")],
            )
        assert exc.value.witness == ("a", "b")

    def test_perturbed_z4_reports_missing_inverse(self):
        # 2+2 changed from 0 to 1: identity 0 survives, then no inverse exists for 2
        entries = [(a, b, "1") if (a, b) == ("2", "2") else (a, b, c)
                   for a, b, c in z_table_entries(4)]
        with pytest.raises(NoInverse) as exc:
            one_object(4, entries)
        assert exc.value.witness == "2"

    def test_non_associative_when_inverses_given(self):
        # same perturbation but with listed inverses: only associativity can object
        entries = [(a, b, "1") if (a, b) == ("2", "2") else (a, b, c)
                   for a, b, c in z_table_entries(4)]
        with pytest.raises((NonAssociative, NoInverse)):
            build_groupoid(["*"], [(str(i), "*", "*") for i in range(4)], entries,
                           identities={"*": "0"},
                           inverses={"0": "0", "1": "3", "2": "2", "3": "1"})

    def test_ill_typed(self):
        J = interval_groupoid()
        spec = groupoid_spec(J)
        spec["compose"] = [(a, b, "id1") if (a, b) == ("i", "iinv") else (a, b, c)
                           for a, b, c in spec["compose"]]
        with pytest.raises(IllTypedComposite):
            build_groupoid(**spec)

    def test_duplicate_ids(self):
        with pytest.raises(DuplicateId):
            build_groupoid(["x", "x"], [], [])
        with pytest.raises(DuplicateId):
            build_groupoid(["x"], [("e", "x", "x"), ("e", "x", "x")], [("e", "e", "e")])

    def test_no_identity(self):
        # a single loop whose square is not itself has no idempotent
        with pytest.raises(NoIdentity):
            build_groupoid(["x"], [("a", "x", "x"), ("b", "x", "x")],
                           [("a", "a", "b"), ("a", "b", "a"), ("b", "a", "a"), ("b", "b", "a")])

    def test_listed_identity_must_be_neutral(self):
        with pytest.raises(NoIdentity):
            build_groupoid(["*"], [("0", "*", "*"), ("1", "*", "*")],
                           [("0", "0", "0"), ("0", "1", "1"), ("1", "0", "1"), ("1", "1", "0")],
                           identities={"*": "1"})

    def test_unknown_object(self):
        with pytest.raises(UnknownObject):
            build_groupoid(["x"], [("a", "x", "y")], [])

    def test_empty_groupoid(self):
        E = build_groupoid([], [], [])
        assert E.is_connected()
        assert E.is_simply_connected()


class TestQueries:
    def test_star(self):
        assert cyclic_groupoid(3).star("*") == ("0", "1", "2")
        assert interval_groupoid().star("0") == ("id0", "i")
        C = codiscrete(["x0", "x1", "x2"])
        assert len(C.star("x0")) == 3
        with pytest.raises(UnknownObject):
            C.star("nope")

    def test_hom(self):
        assert interval_groupoid().hom("0", "1") == ("i",)
        assert len(cyclic_groupoid(3).hom("*", "*")) == 3
        U = disjoint_union(cyclic_groupoid(2), cyclic_groupoid(3))
        assert U.hom("0:*", "1:*") == ()

    def test_object_group(self):
        assert len(cyclic_groupoid(3).object_group("*")) == 3
        og = codiscrete(["x0", "x1", "x2"]).object_group("x0")
        assert og.elements == ("x0->x0",)
        assert interval_groupoid().object_group("0").elements == ("id0",)
        assert og.is_closed()

    def test_connectivity(self):
        assert codiscrete(["a", "b", "c"]).is_connected()
        assert not disjoint_union(cyclic_groupoid(2), cyclic_groupoid(3)).is_connected()
        J = interval_groupoid()
        assert J.is_connected() and J.is_simply_connected()
        assert not cyclic_groupoid(3).is_simply_connected()
        assert codiscrete(["a", "b", "c", "d"]).is_simply_connected()

    def test_interval(self):
        J = interval_groupoid()
        assert len(J.objects) == 2 and len(J.morphisms) == 4
        assert J.compose("i", "iinv") == J.identity("0")
        assert validate_groupoid(J) == J


class TestConstructions:
    def test_product_counts(self):
        J = interval_groupoid()
        P = product(J, J)
        assert len(P.objects) == 4 and len(P.morphisms) == 16
        assert validate_groupoid(P) == P

    def test_product_with_trivial(self):
        G = cyclic_groupoid(3)
        T = cyclic_groupoid(1)
        P = product(G, T)
        left, _ = projections(P)
        assert len(P.morphisms) == len(G.morphisms)
        assert len(set(left.morphism_map.values())) == len(G.morphisms)

    def test_z2_times_z3_is_cyclic_of_order_6(self):
        P = product(cyclic_groupoid(2), cyclic_groupoid(3))
        assert len(P.objects) == 1 and len(P.morphisms) == 6
        # some element generates the whole group, so it is Z/6
        for g in P.morphisms:
            seen, h = set(), g
            while h not in seen:
                seen.add(h)
                h = P.compose(h, g)
            if len(seen) == 6:
                break
        else:
            pytest.fail("no element of order 6")

    def test_group_as_groupoid(self):
        assert len(cyclic_groupoid(2).morphisms) == 2
        S3 = group_as_groupoid(symmetric_table())
        assert len(S3.morphisms) == 6
        assert any(S3.compose(a, b) != S3.compose(b, a)
                   for a in S3.morphisms for b in S3.morphisms)
        with pytest.raises(NotAGroup):
            group_as_groupoid([[0, 1], [0, 0]])
        with pytest.raises(NotAGroup):
            # a Latin square that is not associative
            group_as_groupoid([[0, 1, 2], [1, 0, 2], [2, 2, 0]])

    def test_group_order_matches_product(self):
        # compose(a, b) is the group product b*a
        t = symmetric_table()
        S3 = group_as_groupoid(t)
        for a in range(6):
            for b in range(6):
                assert S3.compose(str(a), str(b)) == str(t[b][a])

    def test_codiscrete(self):
        C2 = codiscrete(["0", "1"])
        assert len(C2.morphisms) == 4 and C2.is_simply_connected()
        assert len(codiscrete(["a"]).morphisms) == 1
        C3 = codiscrete(["0", "1", "2"])
        assert len(C3.morphisms) == 9 and C3.is_simply_connected()
        with pytest.raises(EmptySet):
            codiscrete([])


# --- invariants ---------------------------------------------------------------

seeds = st.integers(min_value=0, max_value=10**6)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_groupoid_invariants(seed):
    G = random_groupoid(random.Random(seed))
    for a in G.morphisms:
        assert G.inverse(G.inverse(a)) == a
        assert G.src(G.inverse(a)) == G.tgt(a)
    for x in G.objects:
        assert G.inverse(G.identity(x)) == G.identity(x)
    assert sum(len(G.star(x)) for x in G.objects) == len(G.morphisms)
    for a, b in G.composable_pairs():
        for c in G.star(G.tgt(b)):
            assert G.compose(G.compose(a, b), c) == G.compose(a, G.compose(b, c))
    if G.is_simply_connected():
        assert G.is_connected()
        assert all(G.object_group(x).is_trivial() for x in G.objects)


@settings(max_examples=15, deadline=None)
@given(seeds, seeds)
def test_products_are_groupoids_with_functorial_projections(s1, s2):
    G = random_groupoid(random.Random(s1), 3, 8)
    H = random_groupoid(random.Random(s2), 3, 8)
    P = product(G, H)
    assert validate_groupoid(P) == P
    for pr in projections(P):
        assert validate_functor(pr)


@pytest.mark.parametrize("table", [cyclic_table(4), symmetric_table()])
def test_object_group_recovers_table(table):
    G = group_as_groupoid(table)
    og = G.object_group("*")
    assert set(og) == {str(i) for i in range(len(table))}
    assert is_abelian(table) == all(G.compose(a, b) == G.compose(b, a) for a in og for b in og)
    for a in og:
        for b in og:
            assert G.compose(a, b) == str(table[int(b)][int(a)])


def test_equality_ignores_construction_route():
    P = product(cyclic_groupoid(2), interval_groupoid())
    Q = build_groupoid(**groupoid_spec(P))
    assert type(Q) is Groupoid
    assert P == Q and Q == P
