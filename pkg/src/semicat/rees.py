"""Rees matrix coordinates for a regular J-class.

Elements of J become triples ``(a, g, b)``: ``a`` indexes the R-class,
``b`` the L-class and ``g`` an element of the maximal subgroup at the base
idempotent. The zero of J^0 (the image of everything strictly below J or
incomparable to it) is ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import FiniteMonoid, GreensData, greens, maximal_subgroup
from .errors import NotInDomain, NotNormal, NotRegular, IndexOutOfRange
from .groups import FiniteGroup, elements_of, is_normal

ZERO = None


@dataclass(frozen=True)
class ReesRepresentation:
    parent: FiniteMonoid
    jclass: int
    base: int                  # base idempotent e
    group: FiniteGroup         # H_e, support in parent
    A: tuple                   # R-class ids of J
    B: tuple                   # L-class ids of J
    C: tuple                   # C[b][a]: group index or ZERO
    row_reps: tuple            # p_a in R_a and L_e
    col_reps: tuple            # q_b in R_e and L_b
    coord: dict                # element of J -> (a, g, b)
    uncoord: dict              # (a, g, b) -> element of J
    greens: GreensData

    @property
    def members(self):
        return self.greens.j_members[self.jclass]

    def to_json(self) -> dict:
        """Debug view; not a stable format."""
        return {
            "jclass": self.jclass,
            "base_idempotent": self.base,
            "group": list(self.group.support),
            "A": list(self.A),
            "B": list(self.B),
            "C": [[None if v is ZERO else v for v in row] for row in self.C],
            "coord": {str(x): list(t) for x, t in sorted(self.coord.items())},
        }


def rees_representation(S: FiniteMonoid, j: int, greens_data=None,
                        base: Optional[int] = None,
                        choose: Callable = min) -> ReesRepresentation:
    """Coordinatize the regular J-class ``j`` of S as M^0(G, A, B, C).

    ``base`` picks the idempotent (default: least in J) and ``choose`` picks
    row/column representatives from their H-classes; any choice is legal and
    every product in J x J is checked against the coordinates.
    """
    g = greens_data or greens(S)
    if not 0 <= j < g.num_j:
        raise IndexOutOfRange(f"J-class {j} outside 0..{g.num_j - 1}")
    if not g.regular[j]:
        raise NotRegular(f"J-class {j} has no idempotent", jclass=j)
    t = S.table
    J = g.j_members[j]
    if base is None:
        base = min(x for x in J if t[x][x] == x)
    e = base
    if g.j_class[e] != j or t[e][e] != e:
        raise NotRegular(f"{e} is not an idempotent of J-class {j}")

    A = tuple(sorted({g.r_class[x] for x in J}))
    B = tuple(sorted({g.l_class[x] for x in J}))
    a_of = {r: i for i, r in enumerate(A)}
    b_of = {l: i for i, l in enumerate(B)}
    G = maximal_subgroup(S, e, g)
    gidx = {x: i for i, x in enumerate(G.support)}

    re, le = g.r_class[e], g.l_class[e]
    p = tuple(choose([x for x in J if g.r_class[x] == r and g.l_class[x] == le]) for r in A)
    q = tuple(choose([x for x in J if g.r_class[x] == re and g.l_class[x] == l]) for l in B)
    # left/right cancellers: u * p_a = e and q_b * v = e
    u = [min(s for s in range(S.size) if t[s][pa] == e) for pa in p]
    v = [min(s for s in range(S.size) if t[qb][s] == e) for qb in q]

    coord = {}
    for x in J:
        a, b = a_of[g.r_class[x]], b_of[g.l_class[x]]
        h = t[t[u[a]][x]][v[b]]
        coord[x] = (a, gidx[h], b)
    uncoord = {}
    for (a, gi, b), x in ((c, x) for x, c in coord.items()):
        y = t[t[p[a]][G.support[gi]]][q[b]]
        assert y == x, f"coordinates of {x} do not reassemble"
        uncoord[(a, gi, b)] = x
    assert len(uncoord) == len(A) * len(B) * G.size

    C = tuple(tuple(gidx.get(t[qb][pa], ZERO) for pa in p) for qb in q)
    for qb in q:
        for pa in p:
            w = t[qb][pa]
            assert (w in gidx) == (g.j_class[w] == j)

    rep = ReesRepresentation(S, j, e, G, A, B, C, p, q, coord, uncoord, g)
    _check_multiplicative(rep)
    return rep


def rees_product(group: FiniteGroup, C, x, y, coset=None):
    """Product in M^0(G, A, B, C), or in M^0(G/N, A, B, C mod N) when
    ``coset`` maps group elements to coset representatives."""
    if x is ZERO or y is ZERO:
        return ZERO
    a, g1, b = x
    a2, g2, b2 = y
    c = C[b][a2]
    if c is ZERO:
        return ZERO
    t = group.table
    h = t[t[g1][c]][g2]
    if coset is not None:
        h = coset[h]
    return (a, h, b2)


def _check_multiplicative(rep: ReesRepresentation) -> None:
    t = rep.parent.table
    for x, cx in rep.coord.items():
        for y, cy in rep.coord.items():
            got = rep.coord.get(t[x][y], ZERO)
            want = rees_product(rep.group, rep.C, cx, cy)
            assert got == want, f"Rees coordinates not multiplicative at ({x}, {y})"


def eta(rep: ReesRepresentation, s: int):
    """Projection of F(J) u J onto J^0."""
    c = rep.coord.get(s)
    if c is not None:
        return c
    g = rep.greens
    if rep.jclass in g.j_below[g.j_class[s]]:
        raise NotInDomain(f"{s} lies strictly above J-class {rep.jclass}", element=s)
    return ZERO


def coset_map(group: FiniteGroup, N) -> tuple:
    """Least representative of gN for every g (N given as element set)."""
    N = elements_of(N, group)
    if not is_normal(group, N) or group.identity not in N:
        raise NotNormal("subgroup is not normal")
    t = group.table
    return tuple(min(t[g][n] for n in N) for g in range(group.size))


def psi(rep: ReesRepresentation, N, x, coset=None):
    """Reduce the group coordinate of a Rees element modulo N."""
    if x is ZERO:
        return ZERO
    coset = coset or coset_map(rep.group, N)
    a, g, b = x
    return (a, coset[g], b)


def reduced_matrix(rep: ReesRepresentation, N) -> tuple:
    coset = coset_map(rep.group, N)
    return tuple(tuple(ZERO if c is ZERO else coset[c] for c in row) for row in rep.C)
