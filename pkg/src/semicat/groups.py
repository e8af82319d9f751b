"""Finite groups: subgroups, normal subgroups, series, radicals, and the
registry of pseudovariety predicates used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import config
from .core import (FiniteMonoid, find_identity, greens, induced,
                   is_group_table, monoid_from_table)
from .errors import (IndexOutOfRange, NotFitting, NotGroup,
                     SizeLimitExceeded, UnknownPredicate, WrongPredicateKind)


@dataclass(frozen=True)
class FiniteGroup(FiniteMonoid):
    inverse: tuple = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return self.size

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g"""
        t = self.table
        return t[t[self.inverse[g]][x]][g]

    def __repr__(self):
        return f"<FiniteGroup order={self.size}>"


def _inverses(table, identity):
    return tuple(row.index(identity) for row in table)


def group_from_table(table, identity, labels=None, check=True) -> FiniteGroup:
    """Validate a group table; the inverse map is synthesized."""
    if check:
        M = monoid_from_table(table, identity, labels)
        table, identity, labels = M.table, M.identity, M.labels
    else:
        table = tuple(tuple(r) for r in table)
    if identity is None or not is_group_table(table):
        raise NotGroup("table has non-invertible elements")
    return FiniteGroup(table, identity, labels, None, _inverses(table, identity))


def as_group(M: FiniteMonoid) -> FiniteGroup:
    if isinstance(M, FiniteGroup):
        return M
    ident = M.identity if M.identity is not None else find_identity(M.table)
    if ident is None or not is_group_table(M.table):
        raise NotGroup("monoid is not a group")
    return FiniteGroup(M.table, ident, M.labels, M.support, _inverses(M.table, ident))


# --------------------------------------------------------------------------
# subgroups as element sets

def closure(G: FiniteGroup, gens) -> frozenset:
    """Subgroup generated by ``gens`` as a set of indices of G."""
    t = G.table
    elems = {G.identity}
    frontier = [G.identity]
    gens = list(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def subgroup(G: FiniteGroup, elems) -> FiniteGroup:
    """Wrap a subgroup element set as a FiniteGroup whose support lies in G."""
    sub = induced(G, elems)
    return as_group(sub)


def elements_of(N, G: Optional[FiniteGroup] = None) -> frozenset:
    """Element set (indices in the ambient group) of a subgroup argument."""
    if isinstance(N, FiniteMonoid):
        if N.support is None:
            if G is not None and N.size == G.size:
                return frozenset(range(G.size))
            raise IndexOutOfRange("subgroup carries no embedding into the group")
        return frozenset(N.support)
    return frozenset(N)


def subgroup_generated(G: FiniteGroup, gens) -> FiniteGroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.size:
            raise IndexOutOfRange(f"element {g} outside 0..{G.size - 1}")
    return subgroup(G, closure(G, gens))


def _normal_closure_set(G, xs) -> frozenset:
    conj = {G.conj(x, g) for x in xs for g in range(G.size)}
    return closure(G, conj)


def normal_closure(G: FiniteGroup, x: int) -> FiniteGroup:
    if not 0 <= x < G.size:
        raise IndexOutOfRange(f"element {x} outside 0..{G.size - 1}")
    return subgroup(G, _normal_closure_set(G, [x]))


def is_normal(G: FiniteGroup, elems) -> bool:
    elems = frozenset(elems)
    return all(G.conj(x, g) in elems for x in elems for g in range(G.size))


def normal_subgroup_sets(G: FiniteGroup, limit=None) -> list:
    """Normal subgroups as element sets, ordered by size then content."""
    limit = config.cap("normal_subgroups", limit)
    if G.size > limit:
        raise SizeLimitExceeded(f"group of order {G.size} > {limit}", limit=limit)
    closures = {_normal_closure_set(G, [x]) for x in range(G.size)}
    found = {frozenset([G.identity])}
    for c in sorted(closures, key=sorted):
        found |= {closure(G, n | c) for n in found}
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def all_normal_subgroups(G: FiniteGroup, limit=None) -> list:
    return [subgroup(G, s) for s in normal_subgroup_sets(G, limit)]


def commutator_subgroup(G: FiniteGroup, A, B) -> frozenset:
    t, inv = G.table, G.inverse
    comms = {t[t[inv[a]][inv[b]]][t[a][b]] for a in A for b in B}
    return closure(G, comms)


def derived_series(G: FiniteGroup) -> list:
    series = [frozenset(range(G.size))]
    while True:
        nxt = commutator_subgroup(G, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(G: FiniteGroup) -> list:
    whole = range(G.size)
    series = [frozenset(whole)]
    while True:
        nxt = commutator_subgroup(G, series[-1], whole)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def h_radical(G: FiniteGroup, H: "PseudovarietyPredicate") -> FiniteGroup:
    """Largest normal subgroup of G lying in the Fitting pseudovariety H."""
    if H.kind != "group":
        raise WrongPredicateKind(f"{H.name!r} is not a group pseudovariety")
    if not H.fitting:
        raise NotFitting(f"{H.name!r} is not flagged Fitting")
    members = [N for N in normal_subgroup_sets(G) if H.member(subgroup(G, N))]
    rad = closure(G, frozenset().union(*members))
    R = subgroup(G, rad)
    if not (is_normal(G, rad) and H.member(R)):
        raise NotFitting(f"join of normal {H.name}-subgroups left {H.name}")
    assert all(N <= rad for N in members)
    return R


# --------------------------------------------------------------------------
# Sylow oracle

def _prime_power_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def p_subgroups(G: FiniteGroup, p: int, limit=None) -> set:
    """Every p-subgroup, grown one p-element at a time (brute force)."""
    limit = config.cap("sylow", limit)
    if G.size > limit:
        raise SizeLimitExceeded(f"Sylow search on order {G.size} > {limit}", limit=limit)
    pels = [x for x in range(G.size) if _is_p_power(len(closure(G, [x])), p)]
    found = {frozenset([G.identity])}
    frontier = list(found)
    while frontier:
        nxt = []
        for P in frontier:
            for x in pels:
                if x in P:
                    continue
                Q = closure(G, P | {x})
                if _is_p_power(len(Q), p) and Q not in found:
                    found.add(Q)
                    nxt.append(Q)
        frontier = nxt
    return found


def sylow_subgroups(G: FiniteGroup, p: int) -> list:
    order = _prime_power_part(G.size, p)
    return sorted((P for P in p_subgroups(G, p) if len(P) == order), key=sorted)


def sylow_intersection(G: FiniteGroup, p: int) -> frozenset:
    return frozenset.intersection(*sylow_subgroups(G, p))


# --------------------------------------------------------------------------
# pseudovariety predicates

@dataclass(frozen=True)
class PseudovarietyPredicate:
    """Named membership test for a pseudovariety of groups or of monoids."""

    name: str
    kind: str                       # "group" or "monoid"
    test: Callable = field(compare=False, repr=False)
    fitting: bool = False
    extension_closed: bool = False
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def member(self, M: FiniteMonoid) -> bool:
        key = (M.table, M.identity)
        hit = self._cache.get(key)
        if hit is None:
            if self.kind == "group":
                try:
                    M = as_group(M)
                except NotGroup:
                    hit = False
                else:
                    hit = bool(self.test(M))
            else:
                hit = bool(self.test(M))
            self._cache[key] = hit
        return hit

    def __call__(self, M):
        return self.member(M)


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def is_solvable(G: FiniteGroup) -> bool:
    return len(derived_series(G)[-1]) == 1


def is_nilpotent(G: FiniteGroup) -> bool:
    return len(lower_central_series(G)[-1]) == 1


trivial_group = PseudovarietyPredicate("triv", "group", lambda G: G.size == 1,
                                       fitting=True, extension_closed=True)
nilpotent = PseudovarietyPredicate("nil", "group", is_nilpotent, fitting=True)
solvable = PseudovarietyPredicate("sol", "group", is_solvable,
                                  fitting=True, extension_closed=True)
all_groups = PseudovarietyPredicate("all", "group", lambda G: True,
                                    fitting=True, extension_closed=True)

_p_groups = {}


def p_group(p: int) -> PseudovarietyPredicate:
    if not _is_prime(p):
        raise UnknownPredicate(f"p:{p} needs a prime")
    if p not in _p_groups:
        _p_groups[p] = PseudovarietyPredicate(
            f"p:{p}", "group", lambda G: _is_p_power(G.size, p),
            fitting=True, extension_closed=True)
    return _p_groups[p]


def is_semilattice(M: FiniteMonoid) -> bool:
    t = M.table
    n = M.size
    return all(t[x][x] == x for x in range(n)) and \
        all(t[x][y] == t[y][x] for x in range(n) for y in range(x))


def is_ds(M: FiniteMonoid) -> bool:
    """Regular J-classes are closed under multiplication."""
    g = greens(M)
    t = M.table
    for j in g.regular_j_classes():
        members = g.j_members[j]
        if any(g.j_class[t[x][y]] != j for x in members for y in members):
            return False
    return True


def subgroups_in(M: FiniteMonoid, H: PseudovarietyPredicate) -> bool:
    """Every maximal subgroup of M belongs to H (membership in H-bar)."""
    from .core import maximal_subgroup

    g = greens(M)
    seen = set()
    for e in M.idempotents:
        if g.h_class[e] in seen:
            continue
        seen.add(g.h_class[e])
        if not H.member(maximal_subgroup(M, e, g)):
            return False
    return True


semilattice = PseudovarietyPredicate("sl", "monoid", is_semilattice)
trivial_monoid = PseudovarietyPredicate("mtriv", "monoid", lambda M: M.size == 1)
ds = PseudovarietyPredicate("ds", "monoid", is_ds)


def hbar(H: PseudovarietyPredicate) -> PseudovarietyPredicate:
    return PseudovarietyPredicate(f"hbar:{H.name}", "monoid",
                                  lambda M: subgroups_in(M, H))


def ds_and_hbar(H: PseudovarietyPredicate) -> PseudovarietyPredicate:
    return PseudovarietyPredicate(f"ds&{H.name}", "monoid",
                                  lambda M: is_ds(M) and subgroups_in(M, H))


_REGISTRY = {p.name: p for p in (trivial_group, nilpotent, solvable, all_groups,
                                 semilattice, trivial_monoid, ds)}
_DERIVED = {}


def get_predicate(name: str) -> PseudovarietyPredicate:
    """Look up ``triv|p:<q>|nil|sol|all|sl|mtriv|ds``, ``hbar:<H>``, ``ds&<H>``."""
    if isinstance(name, PseudovarietyPredicate):
        return name
    if name in _REGISTRY:
        return _REGISTRY[name]
    if name.startswith("p:"):
        try:
            return p_group(int(name[2:]))
        except ValueError:
            raise UnknownPredicate(f"bad prime in {name!r}")
    for prefix, make in (("hbar:", hbar), ("ds&", ds_and_hbar)):
        if name.startswith(prefix):
            inner = get_predicate(name[len(prefix):])
            if inner.kind != "group":
                raise UnknownPredicate(f"{name!r} needs a group pseudovariety")
            if name not in _DERIVED:
                _DERIVED[name] = make(inner)
            return _DERIVED[name]
    raise UnknownPredicate(f"no predicate named {name!r}")


def predicate_names():
    return sorted(_REGISTRY) + ["p:<prime>", "hbar:<group>", "ds&<group>"]
