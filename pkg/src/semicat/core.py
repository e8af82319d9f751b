"""Finite monoids and semigroups as multiplication tables.

Elements are dense indices ``0..n-1`` and ``table[x][y]`` is the product
``x*y`` read left to right (first ``x``, then ``y``). A table whose
``identity`` is ``None`` is a semigroup; everything below accepts both.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import config
from .errors import (BadIdentity, DomainMismatch, IncompatiblePartition,
                     IndexOutOfRange, NonAssociative, NotIdempotent,
                     NotSurjective, SamePair, SizeLimitExceeded,
                     WrongPredicateKind)
from .partition import UnionFind, canonical, classes, join, meet, refines

log = logging.getLogger(__name__)

Table = tuple  # tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid (or semigroup when ``identity is None``).

    ``support`` records, for sub-objects, the element of the ambient
    structure that each local index stands for.
    """

    table: Table
    identity: Optional[int]
    labels: Optional[tuple] = None
    support: Optional[tuple] = field(default=None, compare=False)

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def product(self, *xs: int) -> int:
        t = self.table
        acc = xs[0]
        for x in xs[1:]:
            acc = t[acc][x]
        return acc

    @cached_property
    def idempotents(self) -> tuple:
        t = self.table
        return tuple(x for x in range(len(t)) if t[x][x] == x)

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def __repr__(self):
        kind = "FiniteMonoid" if self.identity is not None else "FiniteSemigroup"
        return f"<{kind} size={self.size}>"


def _as_table(table) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


def check_associative(table: Table) -> None:
    n = len(table)
    if n == 0:
        return
    T = np.asarray(table, dtype=np.int64)
    lhs = T[T]                                # lhs[x, y, z] = (xy)z
    rhs = T[np.arange(n)[:, None, None], T[None, :, :]]   # x(yz)
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        x, y, z = (int(v) for v in bad[0])
        raise NonAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})", triple=(x, y, z))


def monoid_from_table(table, identity, labels=None, check=True) -> FiniteMonoid:
    """Validate a square table and wrap it.

    ``identity=None`` builds a semigroup. Pass ``check=False`` only for tables
    that are associative by construction.
    """
    table = _as_table(table)
    n = len(table)
    if n == 0:
        raise IndexOutOfRange("empty table")
    for row in table:
        if len(row) != n:
            raise IndexOutOfRange("table is not square")
        for v in row:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"entry {v} outside 0..{n - 1}", entry=v)
    if identity is not None:
        if not 0 <= identity < n:
            raise IndexOutOfRange(f"identity {identity} outside 0..{n - 1}")
        for x in range(n):
            if table[identity][x] != x or table[x][identity] != x:
                raise BadIdentity(f"{identity} is not neutral for {x}", element=x)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise IndexOutOfRange("labels length differs from size")
    if check:
        check_associative(table)
    return FiniteMonoid(table, identity, labels)


def find_identity(table: Table) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x == table[x][e] for x in range(n)):
            return e
    return None


def monoid_from_generators(maps: Sequence[Sequence[int]], degree=None,
                           limit=None, labels=False) -> FiniteMonoid:
    """Transformation monoid generated by ``maps`` on ``range(degree)``.

    The identity map is always element 0; the rest follow in breadth-first
    order of the right Cayley graph. ``x*y`` applies ``x`` first.
    """
    maps = [tuple(int(v) for v in m) for m in maps]
    if degree is None:
        if not maps:
            raise DomainMismatch("degree required when no maps are given")
        degree = len(maps[0])
    for m in maps:
        if len(m) != degree or any(not 0 <= v < degree for v in m):
            raise DomainMismatch(f"map {m} is not a self-map of range({degree})")
    limit = config.cap("generators", limit)

    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    words = [""]
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for k, g in enumerate(maps):
            xg = tuple(g[i] for i in x)
            if xg not in index:
                if len(elems) >= limit:
                    raise SizeLimitExceeded(f"more than {limit} elements", limit=limit)
                index[xg] = len(elems)
                elems.append(xg)
                words.append(words[index[x]] + _gen_name(k))
                queue.append(xg)

    E = np.asarray(elems, dtype=np.int64).reshape(len(elems), degree)
    table = []
    for x in range(len(elems)):
        rows = E[:, E[x]]                # row y is x*y
        table.append(tuple(index[tuple(r)] for r in rows.tolist()))
    names = tuple(w or "1" for w in words) if labels else None
    return FiniteMonoid(tuple(table), 0, names)


def _gen_name(k):
    return "abcdefghijklmnopqrstuvwxyz"[k] if k < 26 else f"g{k}"


def induced(S: FiniteMonoid, elems: Iterable[int]) -> FiniteMonoid:
    """Subsemigroup on ``elems`` (must be closed), re-indexed in sorted order."""
    elems = sorted(set(elems))
    pos = {x: i for i, x in enumerate(elems)}
    t = S.table
    try:
        table = tuple(tuple(pos[t[x][y]] for y in elems) for x in elems)
    except KeyError:
        raise IndexOutOfRange("subset is not closed under multiplication")
    ident = find_identity(table)
    labels = tuple(S.labels[x] for x in elems) if S.labels else None
    return FiniteMonoid(table, ident, labels, tuple(elems))


# --------------------------------------------------------------------------
# Green's relations

@dataclass(frozen=True)
class GreensData:
    r_class: tuple
    l_class: tuple
    j_class: tuple
    h_class: tuple
    j_below: tuple          # j_below[j] = frozenset of J-class ids <=_J j
    regular: tuple
    idempotents: frozenset

    def j_leq(self, a: int, b: int) -> bool:
        """J-class ``a`` lies below (or equals) J-class ``b``."""
        return a in self.j_below[b]

    @property
    def num_j(self) -> int:
        return len(self.regular)

    @cached_property
    def j_members(self) -> tuple:
        return tuple(tuple(c) for c in classes(self.j_class))

    def regular_j_classes(self):
        return [j for j, r in enumerate(self.regular) if r]

    def f_ideal(self, j: int) -> tuple:
        """Elements s with s not >=_J the J-class ``j``."""
        return tuple(s for s, js in enumerate(self.j_class)
                     if j not in self.j_below[js])


def _scc(n, edges_from):
    rows, cols = [], []
    for x in range(n):
        for y in edges_from(x):
            rows.append(x)
            cols.append(y)
    g = csr_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    _, labels = connected_components(g, directed=True, connection="strong")
    return canonical(labels.tolist())


def greens(S: FiniteMonoid) -> GreensData:
    """Green's relations from strongly connected components of Cayley graphs."""
    n, t = S.size, S.table
    cols = list(zip(*t))
    r = _scc(n, lambda x: t[x])
    l = _scc(n, lambda x: cols[x])
    j = _scc(n, lambda x: t[x] + cols[x])
    h = meet(r, l)

    nj = max(j) + 1
    rep = [None] * nj
    for x in range(n):
        if rep[j[x]] is None:
            rep[j[x]] = x
    below = []
    for jc in range(nj):
        seen = {rep[jc]}
        stack = [rep[jc]]
        while stack:
            x = stack.pop()
            for y in t[x] + cols[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        below.append(frozenset(j[y] for y in seen))

    idem = frozenset(S.idempotents)
    regular = [False] * nj
    for e in idem:
        regular[j[e]] = True
    return GreensData(r, l, j, h, tuple(below), tuple(regular), idem)


def greens_by_ideals(S: FiniteMonoid) -> GreensData:
    """Oracle: Green's relations by comparing principal ideals of S^1."""
    n, t = S.size, S.table
    right = [frozenset(t[x]) | {x} for x in range(n)]
    left = [frozenset(t[y][x] for y in range(n)) | {x} for x in range(n)]
    two = [frozenset(t[u][y] for u in range(n) for y in right[x]) | right[x] | left[x]
           for x in range(n)]
    r = canonical(right)
    l = canonical(left)
    j = canonical(two)
    h = meet(r, l)
    nj = max(j) + 1
    ideal_of = {}
    for x in range(n):
        ideal_of.setdefault(j[x], two[x])
    below = tuple(frozenset(b for b in range(nj) if ideal_of[b] <= ideal_of[a])
                  for a in range(nj))
    idem = frozenset(x for x in range(n) if t[x][x] == x)
    regular = tuple(any(j[e] == jc for e in idem) for jc in range(nj))
    return GreensData(r, l, j, h, below, regular, idem)


# --------------------------------------------------------------------------
# local monoids and subgroups

def _require_idempotent(S, e):
    if not 0 <= e < S.size:
        raise IndexOutOfRange(f"element {e} outside 0..{S.size - 1}")
    if S.table[e][e] != e:
        raise NotIdempotent(f"{e} is not idempotent", element=e)


def local_monoid(S: FiniteMonoid, e: int):
    """The local monoid eSe with identity e; returns (monoid, embedding)."""
    _require_idempotent(S, e)
    t = S.table
    elems = sorted({t[t[e][x]][e] for x in range(S.size)})
    M = induced(S, elems)
    M = FiniteMonoid(M.table, elems.index(e), M.labels, M.support)
    return M, M.support


def maximal_subgroup(S: FiniteMonoid, e: int, greens_data=None):
    """The H-class of the idempotent e as a FiniteGroup (support in S)."""
    from .groups import as_group

    _require_idempotent(S, e)
    g = greens_data or greens(S)
    elems = [x for x in range(S.size) if g.h_class[x] == g.h_class[e]]
    sub = induced(S, elems)
    return as_group(FiniteMonoid(sub.table, elems.index(e), sub.labels, sub.support))


def is_group_table(table: Table) -> bool:
    n = len(table)
    if find_identity(table) is None:
        return False
    full = set(range(n))
    return all(set(row) == full for row in table) and \
        all(set(col) == full for col in zip(*table))


def _local_group_tables(t, elems):
    """Yield, for each idempotent f of the subsemigroup ``elems``, the local
    monoid f*elems*f as a table, or None if it is not a group."""
    elems = list(elems)
    for f in elems:
        if t[f][f] != f:
            continue
        local = sorted({t[t[f][x]][f] for x in elems})
        pos = {x: i for i, x in enumerate(local)}
        table = tuple(tuple(pos[t[x][y]] for y in local) for x in local)
        yield table if is_group_table(table) else None


def _require_group_kind(H):
    if getattr(H, "kind", None) != "group":
        raise WrongPredicateKind(f"{getattr(H, 'name', H)!r} is not a group pseudovariety")


def lh_on_subset(S: FiniteMonoid, elems, H) -> bool:
    """Is the (closed) subset ``elems`` of S a semigroup in LH?"""
    from .groups import group_from_table

    for table in _local_group_tables(S.table, elems):
        if table is None:
            return False
        if not H.member(group_from_table(table, find_identity(table), check=False)):
            return False
    return True


def is_in_LH(S: FiniteMonoid, H) -> bool:
    """Every local monoid eSe is a group belonging to H."""
    _require_group_kind(H)
    return lh_on_subset(S, range(S.size), H)


# --------------------------------------------------------------------------
# congruences

@dataclass(frozen=True)
class Congruence:
    """A partition given by canonical class ids (class 0 holds element 0, ...)."""

    class_of: tuple

    @classmethod
    def from_labels(cls, labels):
        return cls(canonical(labels))

    @classmethod
    def trivial(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def universal(cls, n):
        return cls((0,) * n)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def __len__(self):
        return len(self.class_of)

    def classes(self):
        return classes(self.class_of)

    def same(self, x, y) -> bool:
        return self.class_of[x] == self.class_of[y]

    def refines(self, other) -> bool:
        """self is contained in other (as a set of pairs)."""
        return refines(self.class_of, other.class_of)

    def __le__(self, other):
        return self.refines(other)

    def __and__(self, other):
        return type(self)(meet(self.class_of, other.class_of))

    def __or__(self, other):
        return type(self)(join(self.class_of, other.class_of))

    @property
    def is_trivial(self) -> bool:
        return self.num_classes == len(self.class_of)

    @property
    def is_universal(self) -> bool:
        return self.num_classes <= 1

    def pairs(self):
        """Unordered identified pairs (x < y) in lexicographic order."""
        cls = self.class_of
        n = len(cls)
        return [(x, y) for x in range(n) for y in range(x + 1, n) if cls[x] == cls[y]]


def is_compatible(S: FiniteMonoid, labels) -> bool:
    """Is the partition ``labels`` stable under left and right multiplication?"""
    t = S.table
    n = S.size
    right = {}
    left = {}
    for x in range(n):
        cx = labels[x]
        row = t[x]
        for u in range(n):
            if right.setdefault((cx, u), labels[row[u]]) != labels[row[u]]:
                return False
            v = labels[t[u][x]]
            if left.setdefault((cx, u), v) != v:
                return False
    return True


def congruence_generated(S: FiniteMonoid, pairs) -> Congruence:
    """Smallest congruence containing ``pairs`` (worklist closure)."""
    t = S.table
    n = S.size
    uf = UnionFind(n)
    work = list(pairs)
    while work:
        p, q = work.pop()
        if not uf.union(p, q):
            continue
        tp, tq = t[p], t[q]
        for u in range(n):
            work.append((tp[u], tq[u]))
            work.append((t[u][p], t[u][q]))
    return Congruence(uf.labels())


def principal_congruence(S: FiniteMonoid, x: int, y: int) -> Congruence:
    for v in (x, y):
        if not 0 <= v < S.size:
            raise IndexOutOfRange(f"element {v} outside 0..{S.size - 1}")
    if x == y:
        raise SamePair(f"principal congruence of ({x}, {x})")
    return congruence_generated(S, [(x, y)])


def join_closure(generators, trivial):
    """All joins of subsets of ``generators`` (including the empty join)."""
    found = {trivial}
    for p in generators:
        found |= {c | p for c in found}
    return found


def all_congruences(S: FiniteMonoid, limit=None) -> list:
    """Every congruence on S, finest first. Brute force; capped in size."""
    limit = config.cap("congruences", limit)
    if S.size > limit:
        raise SizeLimitExceeded(f"all_congruences on {S.size} > {limit} elements",
                                limit=limit)
    n = S.size
    principals = {congruence_generated(S, [(x, y)])
                  for x in range(n) for y in range(x + 1, n)}
    found = join_closure(sorted(principals, key=lambda c: c.class_of),
                         Congruence.trivial(n))
    return sorted(found, key=lambda c: (-c.num_classes, c.class_of))


# --------------------------------------------------------------------------
# morphisms and quotients

@dataclass(frozen=True)
class MonoidMorphism:
    source: FiniteMonoid
    target: FiniteMonoid
    map: tuple

    def __call__(self, x):
        return self.map[x]

    @property
    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def kernel(self) -> Congruence:
        return Congruence.from_labels(self.map)

    def preimage(self, y):
        return [x for x, v in enumerate(self.map) if v == y]

    def then(self, other: "MonoidMorphism") -> "MonoidMorphism":
        """Composite: apply self, then other."""
        return MonoidMorphism(self.source, other.target,
                              tuple(other.map[v] for v in self.map))


def morphism(source: FiniteMonoid, target: FiniteMonoid, mapping) -> MonoidMorphism:
    """Validated monoid (or semigroup) morphism."""
    mapping = tuple(int(v) for v in mapping)
    if len(mapping) != source.size or any(not 0 <= v < target.size for v in mapping):
        raise IndexOutOfRange("map does not send source elements into target")
    s, t = source.table, target.table
    for x in range(source.size):
        for y in range(source.size):
            if mapping[s[x][y]] != t[mapping[x]][mapping[y]]:
                raise IncompatiblePartition(f"map not multiplicative at ({x}, {y})")
    if source.identity is not None and target.identity is not None \
            and mapping[source.identity] != target.identity:
        raise BadIdentity("identity not preserved")
    return MonoidMorphism(source, target, mapping)


def quotient(S: FiniteMonoid, c) -> tuple:
    """Quotient S/c and the projection. Class ids become element ids."""
    labels = c.class_of if isinstance(c, Congruence) else canonical(c)
    if len(labels) != S.size:
        raise IncompatiblePartition("partition size differs from monoid size")
    labels = canonical(labels)
    if not is_compatible(S, labels):
        raise IncompatiblePartition("partition is not a congruence")
    k = max(labels) + 1
    rep = [None] * k
    for x, cx in enumerate(labels):
        if rep[cx] is None:
            rep[cx] = x
    t = S.table
    table = tuple(tuple(labels[t[rep[i]][rep[j]]] for j in range(k)) for i in range(k))
    ident = labels[S.identity] if S.identity is not None else None
    Q = FiniteMonoid(table, ident)
    return Q, MonoidMorphism(S, Q, labels)


def is_lh_morphism(phi: MonoidMorphism, H) -> bool:
    """Every idempotent of the target pulls back to a semigroup in LH."""
    _require_group_kind(H)
    if not phi.is_surjective:
        raise NotSurjective("LH-morphisms are quotient maps")
    tt = phi.target.table
    fibres = {}
    for x, v in enumerate(phi.map):
        fibres.setdefault(v, []).append(x)
    return all(lh_on_subset(phi.source, fibres[e], H)
               for e in range(phi.target.size) if tt[e][e] == e)


def is_lh_congruence(S: FiniteMonoid, c: Congruence, H) -> bool:
    """Shortcut for ``is_lh_morphism`` of the projection S -> S/c."""
    _require_group_kind(H)
    t = S.table
    for members in c.classes():
        x = members[0]
        if c.class_of[t[x][x]] != c.class_of[x]:
            continue            # class is not an idempotent of S/c
        if not lh_on_subset(S, members, H):
            return False
    return True


# --------------------------------------------------------------------------
# isomorphism (oracle)

def _signature(S, x):
    t = S.table
    seen = [x]
    y = x
    while True:
        y = t[y][x]
        if y in seen:
            return (t[x][x] == x, len(seen), seen.index(y),
                    sum(1 for z in range(S.size) if t[x][z] == x),
                    sum(1 for z in range(S.size) if t[z][x] == x))
        seen.append(y)


def invariant(M: FiniteMonoid) -> tuple:
    """Isomorphism invariant: sorted per-element signatures."""
    return (M.size, tuple(sorted(_signature(M, x) for x in range(M.size))))


def find_isomorphism(M: FiniteMonoid, N: FiniteMonoid) -> Optional[tuple]:
    """Backtracking search for a multiplication-preserving bijection M -> N."""
    n = M.size
    if n != N.size:
        return None
    a, b = M.table, N.table
    sig_m = [_signature(M, x) for x in range(n)]
    sig_n = [_signature(N, y) for y in range(n)]
    if sorted(sig_m) != sorted(sig_n):
        return None
    order = sorted(range(n), key=lambda x: sum(1 for s in sig_m if s == sig_m[x]))
    image = [None] * n
    used = [False] * n

    def consistent(x):
        for z in range(n):
            if image[z] is None:
                continue
            for p, q in ((x, z), (z, x)):
                r = a[p][q]
                if image[r] is not None and image[r] != b[image[p]][image[q]]:
                    return False
        return True

    def search(k):
        if k == n:
            return True
        x = order[k]
        for y in range(n):
            if used[y] or sig_n[y] != sig_m[x]:
                continue
            image[x] = y
            used[y] = True
            if consistent(x) and search(k + 1):
                return True
            image[x] = None
            used[y] = False
        return False

    if search(0):
        if M.identity is not None and N.identity is not None \
                and image[M.identity] != N.identity:
            return None
        return tuple(image)
    return None
