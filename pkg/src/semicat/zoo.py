"""Builtin monoids, groups and categories with stable tables."""

from __future__ import annotations

from .category import FiniteCategory, category_from_data, category_from_monoid
from .core import FiniteMonoid, monoid_from_generators, monoid_from_table
from .errors import UnknownName
from .groups import FiniteGroup, as_group, group_from_table

# B2^1 = {1, a, b, ab, ba, 0} with aba = a, bab = b, aa = bb = 0
B21_LABELS = ("1", "a", "b", "ab", "ba", "0")
B21_TABLE = (
    (0, 1, 2, 3, 4, 5),
    (1, 5, 3, 5, 1, 5),
    (2, 4, 5, 2, 5, 5),
    (3, 1, 5, 3, 5, 5),
    (4, 5, 2, 5, 4, 5),
    (5, 5, 5, 5, 5, 5),
)


def b21() -> FiniteMonoid:
    return monoid_from_table(B21_TABLE, 0, B21_LABELS)


def trivial_monoid() -> FiniteMonoid:
    return monoid_from_table([[0]], 0, ["1"])


def u1() -> FiniteMonoid:
    return monoid_from_table([[0, 1], [1, 1]], 0, ["1", "0"])


def cyclic(n: int) -> FiniteGroup:
    return group_from_table([[(i + j) % n for j in range(n)] for i in range(n)], 0)


def from_permutations(gens, degree=None) -> FiniteGroup:
    return as_group(monoid_from_generators(gens, degree))


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return cyclic(1)
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return from_permutations([swap, cycle])


def alternating(n: int) -> FiniteGroup:
    gens = []
    for i in range(n - 2):
        g = list(range(n))
        g[i], g[i + 1], g[i + 2] = g[i + 1], g[i + 2], g[i]
        gens.append(tuple(g))
    return from_permutations(gens, n)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return from_permutations([rot, ref])


def quaternion() -> FiniteGroup:
    i = (1, 2, 3, 0, 5, 6, 7, 4)   # (0 1 2 3)(4 5 6 7)
    j = (4, 7, 6, 5, 2, 1, 0, 3)   # (0 4 2 6)(1 7 3 5)
    return from_permutations([i, j])


def sl23() -> FiniteGroup:
    """SL(2, 3) acting on the nonzero vectors of F_3^2."""
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    pos = {v: k for k, v in enumerate(vecs)}

    def act(m):
        (a, b), (c, d) = m
        return tuple(pos[((a * x + c * y) % 3, (b * x + d * y) % 3)] for x, y in vecs)

    return from_permutations([act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))])


def direct_product(G: FiniteMonoid, H: FiniteMonoid) -> FiniteMonoid:
    n, m = G.size, H.size
    table = [[G.table[a][c] * m + H.table[b][d] for c in range(n) for d in range(m)]
             for a in range(n) for b in range(m)]
    ident = None
    if G.identity is not None and H.identity is not None:
        ident = G.identity * m + H.identity
    M = monoid_from_table(table, ident, check=False)
    if isinstance(G, FiniteGroup) and isinstance(H, FiniteGroup):
        return as_group(M)
    return M


def adjoin_zero(M: FiniteMonoid) -> FiniteMonoid:
    n = M.size
    table = [list(row) + [n] for row in M.table] + [[n] * (n + 1)]
    labels = (M.labels + ("0",)) if M.labels else None
    return monoid_from_table(table, M.identity, labels, check=False)


def adjoin_identity(M: FiniteMonoid) -> FiniteMonoid:
    n = M.size
    table = [list(row) + [i] for i, row in enumerate(M.table)] + [list(range(n + 1))]
    return monoid_from_table(table, n, check=False)


def full_transformation(n: int) -> FiniteMonoid:
    maps = []
    if n >= 2:
        maps.append(tuple([1, 0] + list(range(2, n))))
        maps.append(tuple(list(range(1, n)) + [0]))
        maps.append(tuple([0, 0] + list(range(2, n))))
    return monoid_from_generators(maps, n)


def left_zero(n: int) -> FiniteMonoid:
    """Left-zero semigroup of size n with an identity adjoined."""
    return adjoin_identity(monoid_from_table([[i] * n for i in range(n)], None, check=False))


def right_zero(n: int) -> FiniteMonoid:
    return adjoin_identity(monoid_from_table([list(range(n)) for _ in range(n)], None,
                                             check=False))


def chain(n: int) -> FiniteMonoid:
    """Semilattice 0 < 1 < ... < n-1 under min; identity is the top."""
    return monoid_from_table([[min(i, j) for j in range(n)] for i in range(n)], n - 1)


def cyclic_monoid(index: int, period: int) -> FiniteMonoid:
    """<a | a^(index+period) = a^index>, elements 1, a, ..., a^(index+period-1)."""
    n = index + period

    def red(k):
        return k if k < n else index + (k - index) % period

    return monoid_from_table([[red(i + j) for j in range(n)] for i in range(n)], 0)


def b2_semigroup() -> FiniteMonoid:
    """Brandt semigroup B2 (no identity): B2^1 minus the identity."""
    rows = [[B21_TABLE[x][y] - 1 for y in range(1, 6)] for x in range(1, 6)]
    return monoid_from_table(rows, None, B21_LABELS[1:])


# --------------------------------------------------------------------------
# categories

def trivial_cat() -> FiniteCategory:
    return category_from_data(1, [(0, 0)], [0], {(0, 0): 0})


def two_object_arrow_cat() -> FiniteCategory:
    """Objects 0, 1; arrows id0, id1, u: 0 -> 1."""
    comp = {(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2}
    return category_from_data(2, [(0, 0), (1, 1), (0, 1)], [0, 1], comp)


def c2_triv_cat() -> FiniteCategory:
    """Local monoids C2 = {id0, g} at 0 and trivial at 1, plus u: 0 -> 1 with gu = u."""
    comp = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0,
            (2, 2): 2,
            (0, 3): 3, (1, 3): 3, (3, 2): 3}
    return category_from_data(2, [(0, 0), (0, 0), (1, 1), (0, 1)], [0, 2], comp)


def iso_pair_cat() -> FiniteCategory:
    """Two isomorphic objects: f: 0 -> 1, f^-1: 1 -> 0 (the groupoid on 2 objects)."""
    arrows = [(0, 0), (1, 1), (0, 1), (1, 0)]
    comp = {(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2, (1, 3): 3, (3, 0): 3,
            (2, 3): 0, (3, 2): 1}
    return category_from_data(2, arrows, [0, 1], comp)


def karoubi(M: FiniteMonoid, idempotents) -> FiniteCategory:
    """Category with one object per listed idempotent e and arrows
    e -> f the elements m with e m f = m."""
    t = M.table
    arrows, elem = [], []
    for i, e in enumerate(idempotents):
        for k, f in enumerate(idempotents):
            for m in range(M.size):
                if t[t[e][m]][f] == m:
                    arrows.append((i, k))
                    elem.append(m)
    index = {(arrows[a], elem[a]): a for a in range(len(arrows))}
    comp = {}
    for a, (s, d) in enumerate(arrows):
        for b, (s2, d2) in enumerate(arrows):
            if d == s2:
                comp[(a, b)] = index[((s, d2), t[elem[a]][elem[b]])]
    ids = [index[((i, i), e)] for i, e in enumerate(idempotents)]
    return category_from_data(len(idempotents), arrows, ids, comp)


MONOIDS = {
    "trivial": trivial_monoid,
    "u1": u1,
    "b21": b21,
    "c2": lambda: cyclic(2),
    "c3": lambda: cyclic(3),
    "c4": lambda: cyclic(4),
    "c6": lambda: cyclic(6),
    "c2xc2": lambda: direct_product(cyclic(2), cyclic(2)),
    "s3": lambda: symmetric(3),
    "d4": lambda: dihedral(4),
    "q8": quaternion,
    "a4": lambda: alternating(4),
    "s4": lambda: symmetric(4),
    "sl23": sl23,
    "c3_0": lambda: adjoin_zero(cyclic(3)),
    "s3_0": lambda: adjoin_zero(symmetric(3)),
    "chain3": lambda: chain(3),
    "lz2": lambda: left_zero(2),
    "rz2": lambda: right_zero(2),
    "t2": lambda: full_transformation(2),
    "t3": lambda: full_transformation(3),
    "cyc2_2": lambda: cyclic_monoid(2, 2),
    "b2": b2_semigroup,
    "u1xc2": lambda: direct_product(u1(), cyclic(2)),
}

CATEGORIES = {
    "trivial_cat": trivial_cat,
    "two_object_arrow_cat": two_object_arrow_cat,
    "c2_triv_cat": c2_triv_cat,
    "iso_pair_cat": iso_pair_cat,
    "b21_cat": lambda: category_from_monoid(b21()),
    "c4_cat": lambda: category_from_monoid(cyclic(4)),
}


def builtin_zoo(name: str):
    if name in MONOIDS:
        return MONOIDS[name]()
    if name in CATEGORIES:
        return CATEGORIES[name]()
    raise UnknownName(f"no zoo object named {name!r}")


def zoo_names():
    return sorted(MONOIDS) + sorted(CATEGORIES)
