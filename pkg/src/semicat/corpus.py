"""Seeded corpora of small monoids, groups, categories and quotient maps."""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from .category import (CatCongruence, FiniteCategory, cat_congruence_generated,
                       cat_quotient, category_from_monoid, coterminal_pairs)
from .core import find_isomorphism, invariant, monoid_from_generators
from .errors import SizeLimitExceeded
from . import zoo


@dataclass(frozen=True)
class CorpusSpec:
    kind: str                 # "monoids" | "groups" | "categories"
    size_bound: int
    source: str = "builtin"   # "builtin" | "random" | "both" | a directory of JSON files
    count: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.size_bound < 1:
            raise ValueError("size_bound must be at least 1")
        if self.kind not in ("monoids", "groups", "categories"):
            raise ValueError(f"unknown corpus kind {self.kind!r}")
        if self.source not in ("builtin", "random", "both") and \
                not Path(self.source).is_dir():
            raise ValueError(f"corpus source {self.source!r} is not a directory")


def load_corpus(spec: CorpusSpec):
    """(name, object) pairs described by ``spec``, sorted by name."""
    if spec.source not in ("builtin", "random", "both"):
        return _load_directory(spec)
    out = []
    builtin = spec.source in ("builtin", "both")
    rand = spec.source in ("random", "both")
    if spec.kind == "monoids":
        if builtin:
            out += builtin_monoids(spec.size_bound)
        if rand:
            out += random_monoids(spec.count, spec.size_bound, spec.seed)
    elif spec.kind == "groups":
        out += group_corpus(spec.size_bound)
    else:
        if builtin:
            out += [(n, C) for n, C in builtin_categories() if C.num_arrows <= spec.size_bound]
        if rand:
            out += random_categories(spec.count, 3, spec.size_bound, spec.seed)
    return sorted(out, key=lambda item: item[0])


def _load_directory(spec: CorpusSpec):
    from .jsonio import (category_from_json, group_from_json, is_category_json,
                         monoid_from_json, read_json)
    out = []
    for path in sorted(Path(spec.source).glob("*.json")):
        data = read_json(path)
        if spec.kind == "categories":
            if not is_category_json(data):
                continue
            obj = category_from_json(data)
            size = obj.num_arrows
        elif is_category_json(data):
            continue
        else:
            obj = group_from_json(data) if spec.kind == "groups" else monoid_from_json(data)
            size = obj.size
        if size <= spec.size_bound:
            out.append((path.stem, obj))
    return out


def builtin_monoids(bound: int):
    out = []
    for name in sorted(zoo.MONOIDS):
        M = zoo.MONOIDS[name]()
        if M.identity is not None and M.size <= bound:
            out.append((name, M))
    return out


def _random_map(rng, degree):
    return tuple(rng.randrange(degree) for _ in range(degree))


def random_monoid(rng, max_size, max_degree=5):
    """One random transformation monoid with at most ``max_size`` elements,
    or None when the draw overshoots."""
    degree = rng.randint(2, max_degree)
    gens = [_random_map(rng, degree) for _ in range(rng.randint(1, 3))]
    try:
        return monoid_from_generators(gens, degree, limit=max_size)
    except SizeLimitExceeded:
        return None


def random_monoids(count: int, max_size: int = 6, seed: int = 0,
                   distinct: bool = True, max_tries: int = 200000):
    """``count`` random monoids, pairwise non-isomorphic when ``distinct``."""
    rng = random.Random(seed)
    found = []
    seen_tables = set()
    by_invariant = {}
    tries = 0
    while len(found) < count and tries < max_tries:
        tries += 1
        M = random_monoid(rng, max_size)
        if M is None:
            continue
        if M.table in seen_tables:
            continue
        seen_tables.add(M.table)
        if distinct:
            bucket = by_invariant.setdefault(invariant(M), [])
            if any(find_isomorphism(M, N) is not None for N in bucket):
                continue
            bucket.append(M)
        found.append((f"rand{seed}_{len(found)}", M))
    return found


def monoid_corpus(bound: int = 8, count: int = 200, max_size: int = 6, seed: int = 0):
    return builtin_monoids(bound) + random_monoids(count, max_size, seed)


def group_corpus(bound: int = 24):
    """Named groups of order at most ``bound``."""
    C, P = zoo.cyclic, zoo.direct_product
    items = [(f"c{n}", lambda n=n: C(n)) for n in range(1, 25)]
    items += [(f"d{n}", lambda n=n: zoo.dihedral(n)) for n in range(3, 13)]
    items += [
        ("c2xc2", lambda: P(C(2), C(2))),
        ("c2xc4", lambda: P(C(2), C(4))),
        ("c2^3", lambda: P(P(C(2), C(2)), C(2))),
        ("c3xc3", lambda: P(C(3), C(3))),
        ("c2xc6", lambda: P(C(2), C(6))),
        ("c4xc4", lambda: P(C(4), C(4))),
        ("c2xc8", lambda: P(C(2), C(8))),
        ("c2^2xc4", lambda: P(P(C(2), C(2)), C(4))),
        ("c2^4", lambda: P(P(C(2), C(2)), P(C(2), C(2)))),
        ("c3xc6", lambda: P(C(3), C(6))),
        ("c2xc10", lambda: P(C(2), C(10))),
        ("c2xc12", lambda: P(C(2), C(12))),
        ("c2^2xc6", lambda: P(P(C(2), C(2)), C(6))),
        ("q8", zoo.quaternion),
        ("a4", lambda: zoo.alternating(4)),
        ("s4", lambda: zoo.symmetric(4)),
        ("sl23", zoo.sl23),
        ("c2xs3", lambda: P(C(2), zoo.symmetric(3))),
        ("c3xs3", lambda: P(C(3), zoo.symmetric(3))),
        ("c2xd4", lambda: P(C(2), zoo.dihedral(4))),
        ("c2xq8", lambda: P(C(2), zoo.quaternion())),
        ("c4xs3", lambda: P(C(4), zoo.symmetric(3))),
        ("c2xa4", lambda: P(C(2), zoo.alternating(4))),
        ("c2^2xs3", lambda: P(P(C(2), C(2)), zoo.symmetric(3))),
        ("c3xq8", lambda: P(C(3), zoo.quaternion())),
        ("c3xd4", lambda: P(C(3), zoo.dihedral(4))),
        ("c2xd6", lambda: P(C(2), zoo.dihedral(6))),
    ]
    out = []
    for name, make in items:
        G = make()
        if G.size <= bound:
            out.append((name, G))
    return out


def builtin_categories():
    return [(name, zoo.CATEGORIES[name]()) for name in sorted(zoo.CATEGORIES)]


def random_category(rng, max_objects=3, max_arrows=12, monoid_size=10):
    """A Karoubi-style category on 1..max_objects idempotents of a random
    monoid, or None when it has too many arrows."""
    M = random_monoid(rng, monoid_size)
    if M is None:
        return None
    idem = list(M.idempotents)
    k = rng.randint(1, max_objects)
    objs = [rng.choice(idem) for _ in range(k)]
    C = zoo.karoubi(M, objs)
    if C.num_arrows > max_arrows:
        return None
    return C


def random_categories(count: int, max_objects=3, max_arrows=12, seed=0,
                      max_tries=100000):
    rng = random.Random(seed)
    seen = set()
    out = []
    tries = 0
    while len(out) < count and tries < max_tries:
        tries += 1
        C = random_category(rng, max_objects, max_arrows)
        if C is None:
            continue
        key = (C.num_objects, C.arrows, C.identities, tuple(sorted(C.compose.items())))
        if key in seen:
            continue
        seen.add(key)
        out.append((f"rcat{seed}_{len(out)}", C))
    return out


def category_corpus(count=40, max_objects=3, max_arrows=12, seed=0):
    base = [(n, C) for n, C in builtin_categories()
            if C.num_objects <= max_objects and C.num_arrows <= max_arrows]
    for name in ("u1", "c2", "c3", "lz2", "chain3", "cyc2_2", "u1xc2", "t2"):
        M = zoo.MONOIDS[name]()
        if M.size <= max_arrows:
            base.append((f"{name}_cat", category_from_monoid(M)))
    return base + random_categories(count, max_objects, max_arrows, seed)


def homset_universal(C: FiniteCategory) -> CatCongruence:
    return CatCongruence.from_labels(C.arrows)


def quotient_congruences(C: FiniteCategory, rng, count=4):
    """A handful of non-trivial congruences on C: principal ones, a join of
    two, and the hom-set-universal one."""
    pairs = coterminal_pairs(C)
    if not pairs:
        return []
    found = {}
    for p in rng.sample(pairs, min(count, len(pairs))):
        k = cat_congruence_generated(C, [p])
        found.setdefault(k.class_of, k)
    if len(pairs) >= 2:
        p, q = rng.sample(pairs, 2)
        k = cat_congruence_generated(C, [p, q])
        found.setdefault(k.class_of, k)
    k = homset_universal(C)
    found.setdefault(k.class_of, k)
    return [found[key] for key in sorted(found)]


def quotient_morphisms(categories, per_category=4, seed=0):
    """(name, morphism) pairs for the category corpus."""
    rng = random.Random(seed)
    out = []
    for name, C in categories:
        for i, k in enumerate(quotient_congruences(C, rng, per_category)):
            _, phi = cat_quotient(C, k)
            out.append((f"{name}/q{i}", phi))
    return out
