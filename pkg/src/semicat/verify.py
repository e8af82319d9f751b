"""Corpus-wide invariant suites.

Each suite checks one structural fact on a seeded corpus against an
independent brute-force route and reports every discrepancy.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import corpus as corp
from .category import (CatMorphism, all_cat_congruences, cat_quotient,
                       consolidate_morphism, consolidation, ell_malcev_membership,
                       ell_membership, is_lh_morphism_cat,
                       is_lh_morphism_cat_direct, is_mpq, kernel_category,
                       local_monoid_at, mpq_factorize, supertech_construct)
from .core import (Congruence, all_congruences, is_group_table,
                   find_isomorphism, greens, greens_by_ideals, is_lh_congruence,
                   is_lh_morphism, principal_congruence, quotient)
from .ggm import (ggm_congruence, lh_canonical_congruence, malcev_membership,
                  malcev_membership_oracle)
from .groups import (as_group, closure, get_predicate, h_radical, is_ds, is_normal,
                     normal_subgroup_sets, subgroup, subgroups_in,
                     sylow_intersection)
from .rees import coset_map, rees_product, rees_representation

H_NAMES = ("triv", "p:2", "sol", "all")


@dataclass
class VerifyConfig:
    bound: int = 8                # builtin monoids up to this size
    random_monoids: int = 200     # random monoids of size <= random_size
    random_size: int = 6
    categories: int = 60          # random categories (<= 3 objects, <= 12 arrows)
    seed: int = 0
    jobs: int = 1
    greens_bound: int = 50
    group_bound: int = 24
    corpus_dir: Optional[str] = None   # extra JSON inputs merged into every corpus


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self):
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures[:20], "seconds": round(self.seconds, 2)}


def _map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(it) for it in items]


def _collect(name, fn, items, jobs):
    start = time.perf_counter()
    res = SuiteResult(name)
    for checked, failures in _map(fn, items, jobs):
        res.checked += checked
        res.failures.extend(failures)
    res.seconds = time.perf_counter() - start
    return res


# --------------------------------------------------------------------------
# corpora (cached per configuration)

_cache = {}


def _cached(key, make):
    if key not in _cache:
        _cache[key] = make()
    return _cache[key]


def _extra(cfg, kind, bound):
    if not cfg.corpus_dir:
        return []
    return corp.load_corpus(corp.CorpusSpec(kind, bound, cfg.corpus_dir))


def monoids(cfg: VerifyConfig):
    return _cached(("monoids", cfg.bound, cfg.random_monoids, cfg.random_size, cfg.seed,
                    cfg.corpus_dir),
                   lambda: corp.monoid_corpus(cfg.bound, cfg.random_monoids,
                                              cfg.random_size, cfg.seed)
                   + _extra(cfg, "monoids", 10))


def big_monoids(cfg: VerifyConfig):
    """Monoids up to ``greens_bound`` elements for the structural oracles."""
    def make():
        out = [(n, M) for n, M in corp.builtin_monoids(cfg.greens_bound)]
        out += corp.random_monoids(60, cfg.greens_bound, cfg.seed + 1, distinct=False)
        return out + _extra(cfg, "monoids", cfg.greens_bound)
    return _cached(("big", cfg.greens_bound, cfg.seed, cfg.corpus_dir), make)


def groups(cfg: VerifyConfig):
    def make():
        out = corp.group_corpus(cfg.group_bound)
        for name, M in _extra(cfg, "monoids", cfg.group_bound):
            if is_group_table(M.table):
                out.append((name, as_group(M)))
        return out
    return _cached(("groups", cfg.group_bound, cfg.corpus_dir), make)


def categories(cfg: VerifyConfig):
    return _cached(("cats", cfg.categories, cfg.seed, cfg.corpus_dir),
                   lambda: corp.category_corpus(cfg.categories, 3, 12, cfg.seed)
                   + _extra(cfg, "categories", 12))


def morphisms(cfg: VerifyConfig):
    return _cached(("morphs", cfg.categories, cfg.seed, cfg.corpus_dir),
                   lambda: corp.quotient_morphisms(categories(cfg), 4, cfg.seed))


# --------------------------------------------------------------------------
# monoid suites

def _maximality_item(item):
    name, M = item
    failures = []
    congs = all_congruences(M)
    checked = 0
    for hn in H_NAMES:
        H = get_predicate(hn)
        canon = lh_canonical_congruence(M, H)
        lh = [c for c in congs if is_lh_congruence(M, c, H)]
        checked += 1
        if not is_lh_morphism(quotient(M, canon)[1], H):
            failures.append(f"{name} H={hn}: canonical projection not LH")
        if canon not in lh:
            failures.append(f"{name} H={hn}: canonical congruence not among LH congruences")
        for c in lh:
            if not c.refines(canon):
                failures.append(f"{name} H={hn}: LH congruence {c.class_of} not below canonical")
    return checked, failures


def suite_maximality(cfg):
    return _collect("maximality", _maximality_item, monoids(cfg), cfg.jobs)


def _membership_item(item):
    name, M = item
    sl = get_predicate("sl")
    failures = []
    for hn in H_NAMES:
        H = get_predicate(hn)
        a = malcev_membership(M, H, sl)
        b = malcev_membership_oracle(M, H, sl)
        if a != b:
            failures.append(f"{name} H={hn}: decision {a} vs brute force {b}")
    return len(H_NAMES), failures


def suite_membership(cfg):
    return _collect("membership", _membership_item, monoids(cfg), cfg.jobs)


def _ps_item(item):
    name, M = item
    sl = get_predicate("sl")
    failures = []
    ds = is_ds(M)
    for hn in H_NAMES:
        H = get_predicate(hn)
        a = malcev_membership(M, H, sl)
        b = ds and subgroups_in(M, H)
        if a != b:
            failures.append(f"{name} H={hn}: LH(m)Sl={a} but DS&Hbar={b}")
    return len(H_NAMES), failures


def suite_putcha_schutzenberger(cfg):
    return _collect("putcha-schutzenberger", _ps_item, monoids(cfg), cfg.jobs)


def _greens_item(item):
    name, M = item
    a, b = greens(M), greens_by_ideals(M)
    failures = []
    for field_ in ("r_class", "l_class", "j_class", "h_class", "j_below", "regular",
                   "idempotents"):
        if getattr(a, field_) != getattr(b, field_):
            failures.append(f"{name}: {field_} differs from ideal oracle")
    return 1, failures


def suite_greens(cfg):
    return _collect("greens", _greens_item, big_monoids(cfg), cfg.jobs)


def _rees_item(item):
    name, M = item
    g = greens(M)
    t = M.table
    failures = []
    checked = 0
    for j in g.regular_j_classes():
        rep = rees_representation(M, j, g)
        J = g.j_members[j]
        checked += 1
        triples = {rep.coord[x] for x in J}
        if len(triples) != len(J) or \
                len(J) != len(rep.A) * rep.group.size * len(rep.B):
            failures.append(f"{name} J{j}: coordinates are not a bijection")
        for x in J:
            if rep.uncoord[rep.coord[x]] != x:
                failures.append(f"{name} J{j}: uncoord(coord({x})) != {x}")
        for x in J:
            for y in J:
                want = rees_product(rep.group, rep.C, rep.coord[x], rep.coord[y])
                got = rep.coord.get(t[x][y])
                if got != want:
                    failures.append(f"{name} J{j}: product {x}*{y} breaks coordinates")
        # psi is a morphism of Rees semigroups for every normal subgroup
        for N in normal_subgroup_sets(rep.group):
            coset = coset_map(rep.group, N)
            red = lambda c: None if c is None else (c[0], coset[c[1]], c[2])
            for x in J:
                for y in J:
                    lhs = rees_product(rep.group, rep.C, red(rep.coord[x]),
                                       red(rep.coord[y]), coset)
                    if lhs != red(rep.coord.get(t[x][y])):
                        failures.append(f"{name} J{j}: psi not multiplicative")
    return checked, failures


def suite_rees(cfg):
    return _collect("rees", _rees_item, big_monoids(cfg), cfg.jobs)


def _radcong_item(item):
    name, M = item
    g = greens(M)
    failures = []
    checked = 0
    for j in g.regular_j_classes():
        rep = rees_representation(M, j, g)
        for N in normal_subgroup_sets(rep.group):
            a = ggm_congruence(M, j, N, g, rep)
            b = ggm_congruence(M, j, N, g, rep, idempotent_contexts=False)
            checked += 1
            if a != b:
                failures.append(f"{name} J{j} |N|={len(N)}: idempotent contexts differ")
    return checked, failures


def suite_radcong(cfg):
    return _collect("radcong", _radcong_item, monoids(cfg), cfg.jobs)


def _choice_item(item):
    """Different base idempotents and representatives give the same congruence."""
    name, M = item
    g = greens(M)
    failures = []
    checked = 0
    for j in g.regular_j_classes():
        J = g.j_members[j]
        idem = [x for x in J if M.table[x][x] == x]
        ref = {}
        for hn in H_NAMES:
            H = get_predicate(hn)
            rep = rees_representation(M, j, g)
            ref[hn] = ggm_congruence(M, j, h_radical(rep.group, H), g, rep)
        for e in idem:
            for choose in (min, max):
                rep = rees_representation(M, j, g, base=e, choose=choose)
                for hn in H_NAMES:
                    c = ggm_congruence(M, j, h_radical(rep.group, get_predicate(hn)), g, rep)
                    checked += 1
                    if c != ref[hn]:
                        failures.append(f"{name} J{j} base={e}: GGM congruence depends on choice")
                    elif find_isomorphism(quotient(M, c)[0], quotient(M, ref[hn])[0]) is None:
                        failures.append(f"{name} J{j}: quotients not isomorphic")
    return checked, failures


def suite_choice(cfg):
    return _collect("choice", _choice_item, monoids(cfg), cfg.jobs)


def _comp_item(item):
    """phi = psi gamma with phi LH implies psi and gamma LH."""
    name, M = item
    failures = []
    checked = 0
    congs = all_congruences(M)
    for hn in H_NAMES:
        H = get_predicate(hn)
        lh = [c for c in congs if is_lh_congruence(M, c, H)]
        for big in lh:
            Q_big, _ = quotient(M, big)
            for small in congs:
                if not small.refines(big):
                    continue
                Q_small, psi_ = quotient(M, small)
                reps = {}
                for x, cx in enumerate(small.class_of):
                    reps.setdefault(cx, x)
                gamma = Congruence.from_labels(
                    [big.class_of[reps[i]] for i in range(Q_small.size)])
                checked += 1
                if not is_lh_morphism(psi_, H):
                    failures.append(f"{name} H={hn}: first factor not LH")
                if not is_lh_congruence(Q_small, gamma, H):
                    failures.append(f"{name} H={hn}: second factor not LH")
    return checked, failures


def suite_comp(cfg):
    items = [it for it in monoids(cfg) if it[1].size <= 6][:80]
    return _collect("comp", _comp_item, items, cfg.jobs)


# --------------------------------------------------------------------------
# groups

def _sylow_item(item):
    name, G = item
    failures = []
    checked = 0
    n = G.size
    for p in (q for q in range(2, n + 1) if n % q == 0 and
              all(q % d for d in range(2, int(q ** 0.5) + 1))):
        rad = frozenset(h_radical(G, get_predicate(f"p:{p}")).support)
        checked += 1
        if rad != sylow_intersection(G, p):
            failures.append(f"{name} p={p}: radical differs from Sylow intersection")
    return checked, failures


def suite_sylow(cfg):
    return _collect("sylow", _sylow_item, groups(cfg), cfg.jobs)


def _fitting_item(item):
    name, G = item
    failures = []
    checked = 0
    normals = normal_subgroup_sets(G)
    for hn in ("triv", "p:2", "p:3", "nil", "sol", "all"):
        H = get_predicate(hn)
        members = [N for N in normals if H.member(subgroup(G, N))]
        rad = frozenset(h_radical(G, H).support)
        checked += 1
        if not is_normal(G, rad) or not H.member(subgroup(G, rad)) or \
                any(not N <= rad for N in members):
            failures.append(f"{name} H={hn}: radical not the largest normal H-subgroup")
        for a in members:
            for b in members:
                if not H.member(subgroup(G, closure(G, a | b))):
                    failures.append(f"{name} H={hn}: Fitting closure fails")
    return checked, failures


def suite_fitting(cfg):
    return _collect("fitting", _fitting_item, groups(cfg), cfg.jobs)


# --------------------------------------------------------------------------
# category suites

def _lhtocd_item(item):
    name, phi = item
    failures = []
    cd = consolidate_morphism(phi)
    for hn in H_NAMES:
        H = get_predicate(hn)
        a = is_lh_morphism_cat(phi, H)
        b = is_lh_morphism(cd, H)
        c = is_lh_morphism_cat_direct(phi, H)
        if a != b:
            failures.append(f"{name} H={hn}: category {a} vs consolidation {b}")
        if a != c:
            failures.append(f"{name} H={hn}: local {a} vs idempotent preimages {c}")
    return len(H_NAMES), failures


def suite_lhtocd(cfg):
    return _collect("LHtocd", _lhtocd_item, morphisms(cfg), cfg.jobs)


def is_mps_bruteforce(f) -> bool:
    """Minimality of a monoid kernel via principal congruences on the monoid."""
    K = f.kernel()
    return all(principal_congruence(f.source, x, y) == K for x, y in K.pairs())


def _toconsolidate_item(item):
    name, phi = item
    if phi.is_injective:
        return 0, []
    failures = []
    cd = consolidate_morphism(phi)
    a = is_mpq(phi)
    b = is_mps_bruteforce(cd)
    if a != b:
        failures.append(f"{name}: MPQ {a} vs consolidated MPS {b}")
    if cd.source.size <= 10:
        K = cd.kernel()
        minimal = not any(c != K and not c.is_trivial and c.refines(K)
                          for c in all_congruences(cd.source))
        if minimal != a:
            failures.append(f"{name}: MPQ {a} vs congruence lattice {minimal}")
    return 1, failures


def suite_toconsolidate(cfg):
    return _collect("toconsolidate", _toconsolidate_item, morphisms(cfg), cfg.jobs)


def _technical_item(item):
    name, C = item
    failures = []
    checked = 0
    Ccd, _ = consolidation(C)
    g = greens(Ccd)
    for c in range(C.num_objects):
        Mc = local_monoid_at(C, c)
        arrows = Mc.support
        gc = greens(Mc)
        # J and H classes of C_c agree with those computed inside C^cd
        for i, x in enumerate(arrows):
            for k, y in enumerate(arrows):
                checked += 1
                if (g.j_class[x] == g.j_class[y]) != (gc.j_class[i] == gc.j_class[k]):
                    failures.append(f"{name} c={c}: J-relation of {x},{y} differs")
                if (g.h_class[x] == g.h_class[y]) != (gc.h_class[i] == gc.h_class[k]):
                    failures.append(f"{name} c={c}: H-relation of {x},{y} differs")
            hx = {z for z in range(Ccd.size) if g.h_class[z] == g.h_class[x]}
            if not hx <= set(arrows):
                failures.append(f"{name} c={c}: H-class of {x} leaves C_c")
        for hn in H_NAMES:
            H = get_predicate(hn)
            inner = {}
            for jc in gc.regular_j_classes():
                rep = rees_representation(Mc, jc, gc)
                inner[jc] = ggm_congruence(Mc, jc, h_radical(rep.group, H), gc, rep)
            for j in g.regular_j_classes():
                rep = rees_representation(Ccd, j, g)
                cong = ggm_congruence(Ccd, j, h_radical(rep.group, H), g, rep)
                restricted = Congruence.from_labels([cong.class_of[a] for a in arrows])
                local = [i for i, a in enumerate(arrows) if g.j_class[a] == j]
                checked += 1
                if not local:
                    if not restricted.is_universal:
                        failures.append(f"{name} c={c} J{j} H={hn}: disjoint J separates C_c")
                    continue
                jcs = {gc.j_class[i] for i in local}
                if len(jcs) != 1:
                    failures.append(f"{name} c={c} J{j}: J meets C_c in several J-classes")
                    continue
                jc = jcs.pop()
                if sorted(local) != list(gc.j_members[jc]) or not gc.regular[jc]:
                    failures.append(f"{name} c={c} J{j}: J cap C_c is not a regular J-class")
                    continue
                if restricted != inner[jc]:
                    failures.append(f"{name} c={c} J{j} H={hn}: restriction differs")
    return checked, failures


def suite_technical(cfg):
    return _collect("technical", _technical_item, categories(cfg), cfg.jobs)


def kernel_embedding(phi: CatMorphism):
    """Map K_phi into K_(phi_cd); returns (arrow map, failures)."""
    K = kernel_category(phi)
    Kcd = kernel_category(consolidate_morphism(phi))
    Kc, Kd = K.category, Kcd.category
    obj_cd = {o: i for i, o in enumerate(Kcd.objects)}
    failures = []
    obj_map = [obj_cd[o] for o in K.objects]
    amap = [Kcd.class_of_triple[tr] for tr in K.arrow_reps]
    if len(set(amap)) != len(amap):
        failures.append("arrow map not injective")
    for a, (s, d) in enumerate(Kc.arrows):
        if Kd.arrows[amap[a]] != (obj_map[s], obj_map[d]):
            failures.append(f"arrow {a} changes endpoints")
    for (a, b), ab in Kc.compose.items():
        if Kd.compose[(amap[a], amap[b])] != amap[ab]:
            failures.append(f"composition not preserved at ({a}, {b})")
    for o, e in enumerate(Kc.identities):
        if amap[e] != Kd.identities[obj_map[o]]:
            failures.append(f"identity at object {o} not preserved")
    image = set(obj_map)
    full = {x for x, (s, d) in enumerate(Kd.arrows) if s in image and d in image}
    if full != set(amap):
        failures.append("image is not the full subcategory")
    return amap, failures


def _kernelin_item(item):
    name, phi = item
    _, fails = kernel_embedding(phi)
    return 1, [f"{name}: {f}" for f in fails]


def suite_kernelin(cfg):
    return _collect("kernelin", _kernelin_item, morphisms(cfg), cfg.jobs)


def _mpq_lh_morphisms(phi, H):
    """MPQ LH-morphisms reachable from phi: phi itself and its factors."""
    if phi.is_injective or not is_lh_morphism_cat(phi, H):
        return []
    return [phi] + mpq_factorize(phi)


def _passtocat_item(item):
    name, phi = item
    failures = []
    checked = 0
    for hn in ("p:2", "sol", "all"):
        H = get_predicate(hn)
        for f in _mpq_lh_morphisms(phi, H):
            if not (is_mpq(f) and is_lh_morphism_cat(f, H)):
                continue
            checked += 1
            if not ell_membership(kernel_category(f).category, H):
                failures.append(f"{name} H={hn}: kernel category not locally in H")
    return checked, failures


def suite_passtocat(cfg):
    return _collect("passtocat", _passtocat_item, morphisms(cfg), cfg.jobs)


def _mpsreduction_item(item):
    name, phi = item
    failures = []
    chain = mpq_factorize(phi)
    composite = tuple(range(phi.source.num_arrows))
    for step in chain:
        composite = tuple(step.arrow_map[v] for v in composite)
        if not is_mpq(step):
            failures.append(f"{name}: factor is not an MPQ")
    if composite != phi.arrow_map:
        failures.append(f"{name}: factors do not compose to phi")
    for hn in H_NAMES:
        H = get_predicate(hn)
        if is_lh_morphism_cat(phi, H) and \
                not all(is_lh_morphism_cat(s, H) for s in chain):
            failures.append(f"{name} H={hn}: factor of an LH-morphism is not LH")
    return 1, failures


def suite_mpsreduction(cfg):
    return _collect("mpsreduction", _mpsreduction_item, morphisms(cfg), cfg.jobs)


def _supertech_item(item):
    name, C = item
    sl = get_predicate("sl")
    failures = []
    congs = all_cat_congruences(C)
    for hn in H_NAMES:
        H = get_predicate(hn)
        local = ell_malcev_membership(C, H, sl)
        if local:
            st = supertech_construct(C, H, sl)
            if not ell_membership(st.category, sl):
                failures.append(f"{name} H={hn}: constructed quotient not locally Sl")
            if not is_lh_morphism_cat(st.projection, H):
                failures.append(f"{name} H={hn}: constructed projection not LH")
        witness = False
        for k in congs:
            D, phi = cat_quotient(C, k)
            if ell_membership(D, sl) and is_lh_morphism_cat(phi, H):
                witness = True
                break
        if witness != local:
            failures.append(f"{name} H={hn}: local membership {local} vs brute force {witness}")
    return len(H_NAMES), failures


def tiny_categories(cfg):
    return [(n, C) for n, C in categories(cfg) if C.num_objects <= 2 and C.num_arrows <= 10]


def suite_supertech(cfg):
    return _collect("supertech", _supertech_item, tiny_categories(cfg), cfg.jobs)


SUITES = {
    "maximality": suite_maximality,
    "membership": suite_membership,
    "putcha-schutzenberger": suite_putcha_schutzenberger,
    "LHtocd": suite_lhtocd,
    "toconsolidate": suite_toconsolidate,
    "technical": suite_technical,
    "kernelin": suite_kernelin,
    "passtocat": suite_passtocat,
    "supertech": suite_supertech,
    "greens": suite_greens,
    "rees": suite_rees,
    "sylow": suite_sylow,
    "radcong": suite_radcong,
    "choice": suite_choice,
    "comp": suite_comp,
    "mpsreduction": suite_mpsreduction,
    "fitting": suite_fitting,
}

ALIASES = {
    "LHmap": "maximality",
    "GGMLH": "membership",
    "forgotten": "LHtocd",
    "nointersect": "technical",
    "Jrelpasses": "technical",
    "maxsubgroups": "technical",
    "unionofH": "technical",
    "finishproof": "supertech",
}


def run_suite(name: str, cfg: VerifyConfig = None) -> SuiteResult:
    cfg = cfg or VerifyConfig()
    return SUITES[ALIASES.get(name, name)](cfg)
