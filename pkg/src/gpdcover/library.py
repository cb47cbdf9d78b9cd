"""Small groups and the standard example groupoids, functors and structures."""

from __future__ import annotations

from itertools import permutations

from .catgroup import CatGroupStructure, group_structure
from .core import Groupoid, codiscrete, codiscrete_morphism, disjoint_union, group_as_groupoid
from .functors import GroupoidMorphism

Table = list[list[int]]


def cyclic_table(n: int) -> Table:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct_product_table(A: Table, B: Table) -> Table:
    m = len(B)
    return [[A[i // m][j // m] * m + B[i % m][j % m] for j in range(len(A) * m)]
            for i in range(len(A) * m)]


def permutation_table(perms) -> Table:
    """Cayley table of a list of permutations closed under composition; ``(p*q)(k) = p(q(k))``."""
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[k] for k in q)] for q in perms] for p in perms]


def generated(gens, degree: int) -> list[tuple[int, ...]]:
    ident = tuple(range(degree))
    out = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[k] for k in g)
                if q not in seen:
                    seen.add(q)
                    out.append(q)
                    nxt.append(q)
        frontier = nxt
    return out


def symmetric_table(n: int = 3) -> Table:
    return permutation_table(sorted(permutations(range(n))))


def dihedral_table(n: int = 4) -> Table:
    rot = tuple((k + 1) % n for k in range(n))
    ref = tuple((-k) % n for k in range(n))
    return permutation_table(generated([rot, ref], n))


def quaternion_table() -> Table:
    # elements (sign, unit) with units 1, i, j, k encoded 0..3
    units = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
             (1, 0): (1, 1), (2, 0): (1, 2), (3, 0): (1, 3),
             (1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
             (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
             (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}
    elems = [(s, u) for s in (1, -1) for u in range(4)]
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = units[(u1, u2)]
            row.append(index[(s1 * s2 * s, u)])
        table.append(row)
    return table


def small_groups() -> dict[str, Table]:
    """One representative of every isomorphism class of groups of order at most 8."""
    z = cyclic_table
    return {
        "Z1": z(1), "Z2": z(2), "Z3": z(3), "Z4": z(4),
        "Z2xZ2": direct_product_table(z(2), z(2)),
        "Z5": z(5), "Z6": z(6), "S3": symmetric_table(3), "Z7": z(7), "Z8": z(8),
        "Z4xZ2": direct_product_table(z(4), z(2)),
        "Z2xZ2xZ2": direct_product_table(direct_product_table(z(2), z(2)), z(2)),
        "D4": dihedral_table(4), "Q8": quaternion_table(),
    }


def is_abelian(table: Table) -> bool:
    n = len(table)
    return all(table[i][j] == table[j][i] for i in range(n) for j in range(n))


def identity_of(table: Table) -> int:
    n = len(table)
    return next(e for e in range(n) if all(table[e][j] == j for j in range(n)))


def inverse_of(table: Table, i: int) -> int:
    e = identity_of(table)
    return next(j for j in range(len(table)) if table[i][j] == e)


def cyclic_groupoid(n: int) -> Groupoid:
    return group_as_groupoid(cyclic_table(n))


def group_homomorphism(G: Groupoid, H: Groupoid, images) -> GroupoidMorphism:
    """Functor between one-object groupoids given by a map (or dict) on morphisms."""
    (x,), (y,) = G.objects, H.objects
    f = images if callable(images) else images.__getitem__
    return GroupoidMorphism(G, H, {x: y}, {a: f(a) for a in G.morphisms})


def reduction(n: int, m: int) -> GroupoidMorphism:
    """``Z/n -> Z/m``, ``k -> k mod m``."""
    return group_homomorphism(cyclic_groupoid(n), cyclic_groupoid(m),
                              lambda a: str(int(a) % m))


def cyclic_codiscrete_cover(n: int) -> GroupoidMorphism:
    """``codiscrete(Z/n) -> Z/n`` sending ``g->h`` to ``h - g``."""
    U = codiscrete([str(i) for i in range(n)])
    B = cyclic_groupoid(n)
    return GroupoidMorphism(
        U, B, {x: "*" for x in U.objects},
        {codiscrete_morphism(str(g), str(h)): str((h - g) % n)
         for g in range(n) for h in range(n)})


def additive_structure(n: int) -> CatGroupStructure:
    """One-object ``Z/n`` with tensor given by addition."""
    G = cyclic_groupoid(n)

    def mul(a, b):
        return "*" if a == "*" else str((int(a) + int(b)) % n)

    def inv(a):
        return "*" if a == "*" else str(-int(a) % n)

    return group_structure(G, mul, inv, "*")


def table_structure(table: Table, tensor: Table | None = None, inverse=None) -> CatGroupStructure:
    """One-object groupoid of ``table`` with tensor ``tensor`` (default: the group product).

    ``tensor[a][b]`` is ``a (x) b`` on morphism labels; ``inverse`` maps
    labels to labels (default: inverses for ``tensor`` when it is a group).
    """
    tensor = table if tensor is None else tensor
    G = group_as_groupoid(table)
    if inverse is None:
        inverse = {str(i): str(inverse_of(tensor, i)) for i in range(len(table))}

    def mul(a, b):
        return "*" if a == "*" else str(tensor[int(a)][int(b)])

    def inv(a):
        return "*" if a == "*" else inverse[a]

    return group_structure(G, mul, inv, "*")


def codiscrete_group_structure(table: Table) -> CatGroupStructure:
    """Codiscrete groupoid on the elements with ``(g->h) (x) (g'->h') = (gg' -> hh')``."""
    n = len(table)
    labels = [str(i) for i in range(n)]
    G = codiscrete(labels)
    e = identity_of(table)

    def split(a):
        x, y = a.split("->")
        return int(x), int(y)

    def mul(a, b):
        if "->" not in a:
            return str(table[int(a)][int(b)])
        (g, h), (g2, h2) = split(a), split(b)
        return codiscrete_morphism(str(table[g][g2]), str(table[h][h2]))

    def inv(a):
        if "->" not in a:
            return str(inverse_of(table, int(a)))
        g, h = split(a)
        return codiscrete_morphism(str(inverse_of(table, g)), str(inverse_of(table, h)))

    return group_structure(G, mul, inv, str(e))


def relabelings(table: Table):
    """Every table obtained by transporting ``table`` along a permutation of its set."""
    n = len(table)
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        yield [[perm[table[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]



def fold_map(G: Groupoid, copies: int = 2) -> GroupoidMorphism:
    """The covering ``G + ... + G -> G`` that forgets which copy."""
    U = disjoint_union(*([G] * copies))
    return GroupoidMorphism(
        U, G,
        {x: x.split(":", 1)[1] for x in U.objects},
        {a: a.split(":", 1)[1] for a in U.morphisms},
    )
