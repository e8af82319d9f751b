"""Radical congruences, GGM quotients, and Mal'cev product membership."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .core import (Congruence, FiniteMonoid, MonoidMorphism, all_congruences,
                   greens, is_compatible, is_lh_congruence, quotient)
from .errors import IncompatiblePartition, NotFitting, WrongPredicateKind
from .groups import elements_of, h_radical
from .partition import canonical
from .rees import coset_map, rees_representation

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GgmResult:
    congruence: Congruence
    quotient: FiniteMonoid
    projection: MonoidMorphism


def _signatures(rep, coset, contexts):
    t = rep.parent.table
    coord = rep.coord
    sigs = []
    for s in range(rep.parent.size):
        sig = []
        for x, y in contexts:
            c = coord.get(t[t[x][s]][y])
            sig.append(None if c is None else (c[0], coset[c[1]], c[2]))
        sigs.append(tuple(sig))
    return sigs


def ggm_congruence(S: FiniteMonoid, j: int, N=None, greens_data=None, rep=None,
                   idempotent_contexts=True) -> Congruence:
    """s ~ t iff x s y and x t y agree in J^0 modulo N for all x, y in J.

    By default x and y range over the idempotents of J only, which gives
    the same relation; ``idempotent_contexts=False`` quantifies over all of J.
    ``N`` is a normal subgroup of the maximal subgroup at the base idempotent
    (element set or FiniteGroup); ``None`` means the trivial subgroup.
    """
    rep = rep or rees_representation(S, j, greens_data)
    G = rep.group
    N = frozenset([G.identity]) if N is None else elements_of(N, G)
    coset = coset_map(G, N)
    J = rep.members
    pool = [x for x in J if S.table[x][x] == x] if idempotent_contexts else list(J)
    contexts = [(x, y) for x in pool for y in pool]
    labels = canonical(_signatures(rep, coset, contexts))
    if not is_compatible(S, labels):
        raise IncompatiblePartition(f"radical relation at J-class {j} is not a congruence")
    return Congruence(labels)


def _faithful(Q: FiniteMonoid, ideal) -> bool:
    t = Q.table
    left = {tuple(t[q][i] for i in ideal) for q in range(Q.size)}
    right = {tuple(t[i][q] for i in ideal) for q in range(Q.size)}
    return len(left) == Q.size == len(right)


def ggm_quotient(S: FiniteMonoid, j: int, N=None, greens_data=None, rep=None) -> GgmResult:
    g = greens_data or greens(S)
    c = ggm_congruence(S, j, N, g, rep)
    Q, proj = quotient(S, c)
    below = g.f_ideal(j)
    if below:
        ideal = sorted({c.class_of[s] for s in below + g.j_members[j]})
        assert _faithful(Q, ideal), f"GGM quotient at J-class {j} is not faithful"
    else:
        log.debug("J-class %d is the minimal ideal; faithfulness check skipped", j)
    return GgmResult(c, Q, proj)


def _check_h(H):
    if H.kind != "group":
        raise WrongPredicateKind(f"{H.name!r} is not a group pseudovariety")
    if not H.fitting:
        raise NotFitting(f"{H.name!r} is not flagged Fitting")


def radical_congruences(S: FiniteMonoid, H, greens_data=None) -> dict:
    """J-class id -> radical congruence at that J-class, for every regular J."""
    _check_h(H)
    g = greens_data or greens(S)
    out = {}
    for j in g.regular_j_classes():
        rep = rees_representation(S, j, g)
        rad = h_radical(rep.group, H)
        out[j] = ggm_congruence(S, j, rad, g, rep)
    return out


def lh_canonical_congruence(S: FiniteMonoid, H, greens_data=None) -> Congruence:
    """Intersection of the radical congruences over all regular J-classes.

    Its projection is the largest LH-morphism out of S; this is asserted.
    """
    parts = radical_congruences(S, H, greens_data).values()
    c = Congruence.trivial(S.size) if not parts else \
        Congruence(canonical(zip(*(p.class_of for p in parts))))
    assert is_lh_congruence(S, c, H), "canonical projection is not an LH-morphism"
    return c


def malcev_membership(M: FiniteMonoid, H, V) -> bool:
    """Decide M in LH (m) V through the GGM quotients at regular J-classes."""
    _check_h(H)
    if V.kind != "monoid":
        raise WrongPredicateKind(f"{V.name!r} is not a monoid pseudovariety")
    g = greens(M)
    for j in g.regular_j_classes():
        rep = rees_representation(M, j, g)
        rad = h_radical(rep.group, H)
        if not V.member(ggm_quotient(M, j, rad, g, rep).quotient):
            return False
    return True


def malcev_membership_oracle(M: FiniteMonoid, H, V, limit=None) -> bool:
    """Brute force: some congruence has its quotient in V and an LH projection."""
    for c in all_congruences(M, limit):
        if is_lh_congruence(M, c, H) and V.member(quotient(M, c)[0]):
            return True
    return False
