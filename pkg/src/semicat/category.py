"""Finite categories and identity-on-objects quotient morphisms.

Arrows are indices; ``compose[(i, j)]`` is the composite "i then j",
defined exactly when ``dst(i) == src(j)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

from . import config
from .core import (Congruence, FiniteMonoid, MonoidMorphism, is_lh_morphism,
                   join_closure)
from .errors import (BadComposition, BadIdentity, IncompatiblePartition,
                     IndexOutOfRange, Injective, NonAssociative,
                     NonCoterminalClass, NotCoterminal, NotQuotient, SamePair,
                     ParseError, SizeLimitExceeded)
from .partition import UnionFind, canonical

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteCategory:
    num_objects: int
    arrows: tuple                  # (src, dst) per arrow
    identities: tuple              # identity arrow per object
    compose: dict = field(compare=False, hash=False)

    def __hash__(self):
        return hash((self.num_objects, self.arrows, self.identities))

    def __eq__(self, other):
        return isinstance(other, FiniteCategory) and \
            (self.num_objects, self.arrows, self.identities) == \
            (other.num_objects, other.arrows, other.identities) and \
            self.compose == other.compose

    @property
    def num_arrows(self) -> int:
        return len(self.arrows)

    def src(self, a):
        return self.arrows[a][0]

    def dst(self, a):
        return self.arrows[a][1]

    def mul(self, a, b):
        """Composite of a then b, or None when undefined."""
        return self.compose.get((a, b))

    @cached_property
    def out_arrows(self) -> tuple:
        out = [[] for _ in range(self.num_objects)]
        for a, (s, _) in enumerate(self.arrows):
            out[s].append(a)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_arrows(self) -> tuple:
        out = [[] for _ in range(self.num_objects)]
        for a, (_, d) in enumerate(self.arrows):
            out[d].append(a)
        return tuple(tuple(x) for x in out)

    def hom(self, c, d) -> tuple:
        return tuple(a for a in self.out_arrows[c] if self.arrows[a][1] == d)

    def coterminal(self, a, b) -> bool:
        return self.arrows[a] == self.arrows[b]

    def __repr__(self):
        return f"<FiniteCategory objects={self.num_objects} arrows={self.num_arrows}>"


def category_from_data(num_objects, arrows, identities, compose, check=True) -> FiniteCategory:
    """Build and validate a category.

    ``compose`` maps ``(i, j)`` pairs (or ``"i,j"`` strings) to arrows.
    """
    arrows = tuple((int(s), int(d)) for s, d in arrows)
    identities = tuple(int(i) for i in identities)
    comp = {}
    for key, v in compose.items():
        if isinstance(key, str):
            i, _, j = key.partition(",")
            key = (int(i), int(j))
        comp[(int(key[0]), int(key[1]))] = int(v)
    C = FiniteCategory(int(num_objects), arrows, identities, comp)
    if check:
        validate_category(C)
    return C


def category_to_json(C: FiniteCategory) -> dict:
    return {
        "objects": C.num_objects,
        "arrows": [{"src": s, "dst": d} for s, d in C.arrows],
        "identities": list(C.identities),
        "compose": {f"{i},{j}": k for (i, j), k in sorted(C.compose.items())},
    }


def category_from_json(data: dict) -> FiniteCategory:
    """Parse and fully validate the category JSON object."""
    try:
        arrows = [(a["src"], a["dst"]) for a in data["arrows"]]
        return category_from_data(data["objects"], arrows, data["identities"],
                                  data["compose"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed category JSON: {exc}") from None


def validate_category(C: FiniteCategory) -> None:
    n, k = C.num_arrows, C.num_objects
    if len(C.identities) != k:
        raise BadIdentity("one identity arrow per object required")
    for s, d in C.arrows:
        if not (0 <= s < k and 0 <= d < k):
            raise IndexOutOfRange(f"arrow endpoint outside 0..{k - 1}")
    for (i, j), v in C.compose.items():
        if not (0 <= i < n and 0 <= j < n and 0 <= v < n):
            raise IndexOutOfRange(f"compose entry {(i, j)} -> {v} out of range")
        if C.dst(i) != C.src(j):
            raise BadComposition(f"composite of non-composable arrows {i}, {j}")
        if C.arrows[v] != (C.src(i), C.dst(j)):
            raise BadComposition(f"composite {i};{j} = {v} has wrong endpoints")
    for i in range(n):
        for j in C.out_arrows[C.dst(i)]:
            if (i, j) not in C.compose:
                raise BadComposition(f"composite {i};{j} missing")
    for c, e in enumerate(C.identities):
        if not 0 <= e < n or C.arrows[e] != (c, c):
            raise BadIdentity(f"identity of object {c} is not a loop at {c}")
        for a in C.out_arrows[c]:
            if C.compose[(e, a)] != a:
                raise BadIdentity(f"identity {e} not neutral on the left of {a}")
        for a in C.in_arrows[c]:
            if C.compose[(a, e)] != a:
                raise BadIdentity(f"identity {e} not neutral on the right of {a}")
    comp = C.compose
    for a in range(n):
        for b in C.out_arrows[C.dst(a)]:
            ab = comp[(a, b)]
            for c in C.out_arrows[C.dst(b)]:
                if comp[(ab, c)] != comp[(a, comp[(b, c)])]:
                    raise NonAssociative(f"({a};{b});{c} differs from {a};({b};{c})",
                                         triple=(a, b, c))


def category_from_monoid(M: FiniteMonoid) -> FiniteCategory:
    """M viewed as a one-object category (arrow ids = element ids)."""
    if M.identity is None:
        raise BadIdentity("a one-object category needs a monoid")
    n = M.size
    comp = {(i, j): M.table[i][j] for i in range(n) for j in range(n)}
    return FiniteCategory(1, ((0, 0),) * n, (M.identity,), comp)


def local_arrows(C: FiniteCategory, c: int) -> tuple:
    return C.hom(c, c)


def local_monoid_at(C: FiniteCategory, c: int) -> FiniteMonoid:
    """The endomorphism monoid C(c, c); ``support`` lists the arrow ids."""
    if not 0 <= c < C.num_objects:
        raise IndexOutOfRange(f"object {c} outside 0..{C.num_objects - 1}")
    elems = local_arrows(C, c)
    pos = {a: i for i, a in enumerate(elems)}
    table = tuple(tuple(pos[C.compose[(a, b)]] for b in elems) for a in elems)
    return FiniteMonoid(table, pos[C.identities[c]], None, elems)


def consolidation(C: FiniteCategory):
    """C with a zero and an identity adjoined; undefined composites become 0.

    Arrow ``a`` stays element ``a``; zero is ``n`` and the new identity is
    ``n + 1``. Returns (monoid, arrow embedding).
    """
    n = C.num_arrows
    zero, one = n, n + 1
    table = []
    for x in range(n + 2):
        row = []
        for y in range(n + 2):
            if x == one:
                row.append(y)
            elif y == one:
                row.append(x)
            elif x == zero or y == zero:
                row.append(zero)
            else:
                row.append(C.compose.get((x, y), zero))
        table.append(tuple(row))
    M = FiniteMonoid(tuple(table), one)
    return M, tuple(range(n))


# --------------------------------------------------------------------------
# congruences and quotients

class CatCongruence(Congruence):
    """Partition of arrows into coterminal, composition-stable classes."""


def is_cat_compatible(C: FiniteCategory, labels) -> bool:
    first = {}
    for a, c in enumerate(labels):
        b = first.setdefault(c, a)
        if C.arrows[a] != C.arrows[b]:
            return False
    comp = C.compose
    right, left = {}, {}
    for a in range(C.num_arrows):
        ca = labels[a]
        for u in C.out_arrows[C.dst(a)]:
            v = labels[comp[(a, u)]]
            if right.setdefault((ca, u), v) != v:
                return False
        for u in C.in_arrows[C.src(a)]:
            v = labels[comp[(u, a)]]
            if left.setdefault((ca, u), v) != v:
                return False
    return True


def cat_congruence_generated(C: FiniteCategory, pairs) -> CatCongruence:
    comp = C.compose
    uf = UnionFind(C.num_arrows)
    work = list(pairs)
    for x, y in work:
        if not C.coterminal(x, y):
            raise NotCoterminal(f"arrows {x} and {y} are not coterminal", pair=(x, y))
    while work:
        p, q = work.pop()
        if not uf.union(p, q):
            continue
        for u in C.out_arrows[C.dst(p)]:
            work.append((comp[(p, u)], comp[(q, u)]))
        for u in C.in_arrows[C.src(p)]:
            work.append((comp[(u, p)], comp[(u, q)]))
    return CatCongruence(uf.labels())


def cat_principal_congruence(C: FiniteCategory, x: int, y: int) -> CatCongruence:
    for v in (x, y):
        if not 0 <= v < C.num_arrows:
            raise IndexOutOfRange(f"arrow {v} outside 0..{C.num_arrows - 1}")
    if x == y:
        raise SamePair(f"principal congruence of ({x}, {x})")
    if not C.coterminal(x, y):
        raise NotCoterminal(f"arrows {x} and {y} are not coterminal")
    return cat_congruence_generated(C, [(x, y)])


def coterminal_pairs(C: FiniteCategory):
    return [(x, y) for x in range(C.num_arrows) for y in range(x + 1, C.num_arrows)
            if C.arrows[x] == C.arrows[y]]


def all_cat_congruences(C: FiniteCategory, limit=None) -> list:
    """Every congruence on C, finest first (brute force, capped by arrows)."""
    limit = config.cap("cat_congruences", limit)
    if C.num_arrows > limit:
        raise SizeLimitExceeded(f"{C.num_arrows} arrows > {limit}", limit=limit)
    principals = {cat_congruence_generated(C, [p]) for p in coterminal_pairs(C)}
    found = join_closure(sorted(principals, key=lambda c: c.class_of),
                         CatCongruence.trivial(C.num_arrows))
    return sorted(found, key=lambda c: (-c.num_classes, c.class_of))


@dataclass(frozen=True)
class CatMorphism:
    """Identity-on-objects functor given by its arrow map."""

    source: FiniteCategory
    target: FiniteCategory
    arrow_map: tuple

    def __call__(self, a):
        return self.arrow_map[a]

    @property
    def is_surjective(self) -> bool:
        return len(set(self.arrow_map)) == self.target.num_arrows

    @property
    def is_injective(self) -> bool:
        return len(set(self.arrow_map)) == self.source.num_arrows

    def kernel(self) -> CatCongruence:
        return CatCongruence.from_labels(self.arrow_map)

    def preimage(self, b):
        return [a for a, v in enumerate(self.arrow_map) if v == b]

    def then(self, other: "CatMorphism") -> "CatMorphism":
        return CatMorphism(self.source, other.target,
                           tuple(other.arrow_map[v] for v in self.arrow_map))


def cat_morphism(source, target, arrow_map) -> CatMorphism:
    """Validated identity-on-objects morphism."""
    arrow_map = tuple(int(v) for v in arrow_map)
    if source.num_objects != target.num_objects:
        raise BadComposition("morphisms are identity on objects")
    if len(arrow_map) != source.num_arrows or \
            any(not 0 <= v < target.num_arrows for v in arrow_map):
        raise IndexOutOfRange("arrow map out of range")
    for a, v in enumerate(arrow_map):
        if source.arrows[a] != target.arrows[v]:
            raise BadComposition(f"arrow {a} changes endpoints")
    for c in range(source.num_objects):
        if arrow_map[source.identities[c]] != target.identities[c]:
            raise BadIdentity(f"identity at {c} not preserved")
    for (i, j), k in source.compose.items():
        if target.compose[(arrow_map[i], arrow_map[j])] != arrow_map[k]:
            raise BadComposition(f"composition not preserved at ({i}, {j})")
    return CatMorphism(source, target, arrow_map)


def cat_quotient(C: FiniteCategory, k) -> tuple:
    """Quotient category C/k and its projection; class ids become arrow ids."""
    labels = k.class_of if isinstance(k, Congruence) else tuple(k)
    if len(labels) != C.num_arrows:
        raise IncompatiblePartition("partition size differs from arrow count")
    labels = canonical(labels)
    first = {}
    for a, c in enumerate(labels):
        b = first.setdefault(c, a)
        if C.arrows[a] != C.arrows[b]:
            raise NonCoterminalClass(f"arrows {b} and {a} share a class")
    if not is_cat_compatible(C, labels):
        raise IncompatiblePartition("partition is not stable under composition")
    nk = max(labels) + 1 if labels else 0
    rep = [first[c] for c in range(nk)]
    arrows = tuple(C.arrows[r] for r in rep)
    comp = {}
    for i in range(nk):
        for b in C.out_arrows[C.dst(rep[i])]:
            comp[(i, labels[b])] = labels[C.compose[(rep[i], b)]]
    ids = tuple(labels[e] for e in C.identities)
    D = FiniteCategory(C.num_objects, arrows, ids, comp)
    return D, CatMorphism(C, D, labels)


def identity_morphism(C: FiniteCategory) -> CatMorphism:
    return CatMorphism(C, C, tuple(range(C.num_arrows)))


def restrict_to_local(phi: CatMorphism, c: int) -> MonoidMorphism:
    """phi restricted to C_c -> D_c, as a monoid morphism."""
    Mc = local_monoid_at(phi.source, c)
    Dc = local_monoid_at(phi.target, c)
    pos = {a: i for i, a in enumerate(Dc.support)}
    return MonoidMorphism(Mc, Dc, tuple(pos[phi.arrow_map[a]] for a in Mc.support))


def consolidate_morphism(phi: CatMorphism) -> MonoidMorphism:
    """The induced phi_cd: C^cd -> D^cd (0 -> 0, 1 -> 1)."""
    Ccd, _ = consolidation(phi.source)
    Dcd, _ = consolidation(phi.target)
    m = phi.target.num_arrows
    return MonoidMorphism(Ccd, Dcd, phi.arrow_map + (m, m + 1))


def _require_quotient(phi: CatMorphism):
    if not phi.is_surjective:
        raise NotQuotient("morphism is not surjective on arrows")


def is_lh_morphism_cat(phi: CatMorphism, H) -> bool:
    """LH-morphism test, object by object on the local monoids."""
    _require_quotient(phi)
    return all(is_lh_morphism(restrict_to_local(phi, c), H)
               for c in range(phi.source.num_objects))


def is_lh_morphism_cat_direct(phi: CatMorphism, H) -> bool:
    """Oracle: every idempotent arrow of the target pulls back into LH."""
    from .core import lh_on_subset

    _require_quotient(phi)
    Ccd, _ = consolidation(phi.source)
    D = phi.target
    for e in range(D.num_arrows):
        if D.compose.get((e, e)) == e:
            if not lh_on_subset(Ccd, phi.preimage(e), H):
                return False
    return True


def is_mpq(phi: CatMorphism) -> bool:
    """Is the kernel of phi a minimal non-trivial congruence?"""
    _require_quotient(phi)
    if phi.is_injective:
        raise Injective("the trivial congruence is not a maximal proper quotient")
    K = phi.kernel()
    return all(cat_congruence_generated(phi.source, [p]) == K for p in K.pairs())


def _least_minimal_pair(C: FiniteCategory, K: CatCongruence):
    for p in K.pairs():
        P = cat_congruence_generated(C, [p])
        if all(cat_congruence_generated(C, [q]) == P for q in P.pairs()):
            return P
    raise AssertionError("non-trivial kernel without a minimal congruence")


def mpq_factorize(phi: CatMorphism) -> list:
    """Split a quotient morphism into a chain of maximal proper quotients.

    At each step the minimal principal congruence with the least generating
    pair (lexicographic on arrow ids) below the remaining kernel is peeled off.
    """
    _require_quotient(phi)
    chain = []
    C = phi.source
    rest = phi.arrow_map           # current arrows of C -> target arrows
    while len(set(rest)) < C.num_arrows:
        K = CatCongruence.from_labels(rest)
        P = _least_minimal_pair(C, K)
        Cq, step = cat_quotient(C, P)
        chain.append(step)
        nxt = [None] * Cq.num_arrows
        for a, v in enumerate(rest):
            nxt[step.arrow_map[a]] = v
        rest = tuple(nxt)
        C = Cq
    if chain:
        # the last codomain matches phi.target through the bijection ``rest``
        last = chain[-1]
        assert sorted(rest) == list(range(phi.target.num_arrows))
        chain[-1] = CatMorphism(last.source, phi.target,
                                tuple(rest[v] for v in last.arrow_map))
    composite = tuple(range(phi.source.num_arrows))
    for step in chain:
        composite = tuple(step.arrow_map[v] for v in composite)
    assert composite == phi.arrow_map
    return chain


# --------------------------------------------------------------------------
# kernel categories

@dataclass(frozen=True)
class KernelCategory:
    """K_phi with labels: objects are (n_L, n_R) pairs of target arrows and
    each arrow is represented by its least triple (n_L, m, n_R)."""

    category: FiniteCategory
    objects: tuple
    arrow_reps: tuple
    class_of_triple: dict = field(compare=False, hash=False)


def kernel_category(phi, limit=None) -> KernelCategory:
    """The kernel category of a quotient morphism (monoid morphisms are
    treated as one-object categories)."""
    if isinstance(phi, MonoidMorphism):
        phi = CatMorphism(category_from_monoid(phi.source),
                          category_from_monoid(phi.target), phi.map)
    _require_quotient(phi)
    C, D, f = phi.source, phi.target, phi.arrow_map
    limit = config.cap("kernel_objects", limit)

    objects = [(nl, nr) for nl in range(D.num_arrows) for nr in D.out_arrows[D.dst(nl)]]
    if len(objects) > limit:
        raise SizeLimitExceeded(f"{len(objects)} kernel objects > {limit}", limit=limit)
    obj_id = {o: i for i, o in enumerate(objects)}
    fibre = [[] for _ in range(D.num_arrows)]
    for a, v in enumerate(f):
        fibre[v].append(a)
    cc, dc = C.compose, D.compose

    triples = []
    keys = []
    for nl in range(D.num_arrows):
        for m in C.out_arrows[D.dst(nl)]:
            for nr in D.out_arrows[C.dst(m)]:
                lifts_l, lifts_r = fibre[nl], fibre[nr]
                src = obj_id[(nl, dc[(f[m], nr)])]
                dst = obj_id[(dc[(nl, f[m])], nr)]
                sig = tuple(cc[(cc[(ml, m)], mr)] for ml in lifts_l for mr in lifts_r)
                triples.append((nl, m, nr))
                keys.append((nl, nr, src, dst, sig))
    labels = canonical(keys)
    nk = max(labels) + 1
    reps = [None] * nk
    arrows = [None] * nk
    for t, (tr, key) in enumerate(zip(triples, keys)):
        c = labels[t]
        if reps[c] is None:
            reps[c] = tr
            arrows[c] = (key[2], key[3])
    class_of = {tr: labels[t] for t, tr in enumerate(triples)}

    by_src = [[] for _ in objects]
    for t, key in enumerate(keys):
        by_src[key[2]].append(t)
    comp = {}
    for t1, (nl, m, _) in enumerate(triples):
        c1 = labels[t1]
        for t2 in by_src[keys[t1][3]]:
            _, m2, nr = triples[t2]
            prod = class_of[(nl, cc[(m, m2)], nr)]
            if comp.setdefault((c1, labels[t2]), prod) != prod:
                raise IncompatiblePartition("kernel identification is not a congruence")
    ids = tuple(class_of[(nl, C.identities[D.dst(nl)], nr)] for nl, nr in objects)
    K = FiniteCategory(len(objects), tuple(arrows), ids, comp)
    return KernelCategory(K, tuple(objects), tuple(reps), class_of)


# --------------------------------------------------------------------------
# local pseudovariety membership

def ell_membership(C: FiniteCategory, P) -> bool:
    """All local monoids lie in P (groups in P, for a group predicate)."""
    return all(P.member(local_monoid_at(C, c)) for c in range(C.num_objects))


def ell_malcev_membership(C: FiniteCategory, H, V) -> bool:
    from .ggm import malcev_membership

    return all(malcev_membership(local_monoid_at(C, c), H, V)
               for c in range(C.num_objects))


@dataclass(frozen=True)
class SupertechResult:
    category: FiniteCategory
    projection: CatMorphism
    congruence: CatCongruence
    consolidated: Congruence       # canonical congruence on C^cd


def supertech_construct(C: FiniteCategory, H, V=None) -> SupertechResult:
    """Quotient of C by the canonical LH-congruence of its consolidation,
    cut down to coterminal arrows.

    When ``V`` is given and every local monoid lies in LH (m) V, the result
    is asserted to lie locally in V with an LH-morphism projection.
    """
    from .ggm import lh_canonical_congruence

    Ccd, emb = consolidation(C)
    canon = lh_canonical_congruence(Ccd, H)
    keys = [(C.arrows[a], canon.class_of[emb[a]]) for a in range(C.num_arrows)]
    k = CatCongruence.from_labels(keys)
    D, psi = cat_quotient(C, k)

    for c in range(C.num_objects):
        Mc = local_monoid_at(C, c)
        inner = lh_canonical_congruence(Mc, H)
        restricted = Congruence.from_labels([k.class_of[a] for a in Mc.support])
        assert restricted == inner, f"restriction to object {c} differs"

    if V is not None and ell_malcev_membership(C, H, V):
        assert ell_membership(D, V)
        assert is_lh_morphism_cat(psi, H)
    return SupertechResult(D, psi, k, canon)
