import pytest

from semicat import zoo
from semicat.core import (Congruence, all_congruences, find_isomorphism, greens,
                          is_lh_congruence, quotient)
from semicat.errors import NotFitting, NotNormal, WrongPredicateKind
from semicat.ggm import (ggm_congruence, ggm_quotient, lh_canonical_congruence,
                         malcev_membership, malcev_membership_oracle,
                         radical_congruences)
from semicat.groups import (PseudovarietyPredicate, get_predicate, h_radical,
                            normal_subgroup_sets)
from semicat.rees import rees_representation

B21 = zoo.b21()
H_NAMES = ("triv", "p:2", "sol", "all")
sl = get_predicate("sl")


def test_group_case_gives_cosets():
    G = zoo.symmetric(3)
    for N in normal_subgroup_sets(G):
        c = ggm_congruence(G, 0, N)
        assert c.num_classes == 6 // len(N)
        assert all(c.same(G.identity, n) for n in N)


def test_c4_mod_c2():
    G = zoo.cyclic(4)
    res = ggm_quotient(G, 0, {0, 2})
    assert find_isomorphism(res.quotient, zoo.cyclic(2)) is not None
    assert res.projection.map == (0, 1, 0, 1)


def test_b21_is_its_own_ggm():
    g = greens(B21)
    j = g.j_class[1]
    assert ggm_congruence(B21, j, None, g).is_trivial
    res = ggm_quotient(B21, j, None, g)
    assert res.quotient.table == B21.table


def test_u1_bottom_class_oracle():
    # the only context is x = y = 0, and 0*s*0 = 0 for both elements
    U = zoo.u1()
    g = greens(U)
    j = g.j_class[1]
    restricted = ggm_congruence(U, j, None, g)
    full = ggm_congruence(U, j, None, g, idempotent_contexts=False)
    assert restricted == full
    assert restricted.is_universal


def test_ggm_rejects_non_normal():
    S3 = zoo.symmetric(3)
    t = next(x for x in range(6) if x != S3.identity and S3.table[x][x] == S3.identity)
    with pytest.raises(NotNormal):
        ggm_congruence(S3, 0, {S3.identity, t})


def test_ggm_fixed_points_have_trivial_congruence():
    # a GGM quotient with trivial N is its own GGM at the image J-class
    for name in ("t3", "b21", "chain3", "cyc2_2"):
        M = zoo.MONOIDS[name]()
        g = greens(M)
        for j in g.regular_j_classes():
            Q, proj = quotient(M, ggm_congruence(M, j, None, g))
            x = g.j_members[j][0]
            gq = greens(Q)
            assert ggm_congruence(Q, gq.j_class[proj.map[x]], None, gq).is_trivial


def test_canonical_group_case():
    G = zoo.symmetric(4)
    for hn in H_NAMES + ("p:3", "nil"):
        rad = h_radical(G, get_predicate(hn))
        c = lh_canonical_congruence(G, get_predicate(hn))
        assert c.num_classes == G.size // rad.size


def test_canonical_trivial_monoid():
    assert lh_canonical_congruence(zoo.trivial_monoid(), get_predicate("all")).is_trivial


def test_canonical_b21_is_trivial():
    for hn in H_NAMES:
        assert lh_canonical_congruence(B21, get_predicate(hn)).is_trivial


def test_radical_congruences_keys_are_regular_classes():
    M = zoo.full_transformation(3)
    g = greens(M)
    assert sorted(radical_congruences(M, get_predicate("sol"), g)) == \
        list(g.regular_j_classes())


def test_malcev_examples():
    assert not malcev_membership(B21, get_predicate("triv"), sl)
    assert not malcev_membership_oracle(B21, get_predicate("triv"), sl)
    assert malcev_membership(zoo.cyclic(2), get_predicate("p:2"), get_predicate("mtriv"))
    assert not malcev_membership(zoo.cyclic(2), get_predicate("triv"), get_predicate("mtriv"))
    # members of V are always in the Mal'cev product
    for name in ("chain3", "u1", "trivial"):
        assert malcev_membership(zoo.MONOIDS[name](), get_predicate("triv"), sl)


@pytest.mark.parametrize("name", ["lz2", "rz2", "u1xc2", "c3_0", "s3_0", "t2", "cyc2_2"])
def test_malcev_agrees_with_oracle(name):
    M = zoo.MONOIDS[name]()
    for hn in H_NAMES:
        H = get_predicate(hn)
        for V in ("sl", "mtriv", "ds"):
            assert malcev_membership(M, H, get_predicate(V)) == \
                malcev_membership_oracle(M, H, get_predicate(V))


def test_predicate_kind_checks():
    with pytest.raises(WrongPredicateKind):
        malcev_membership(B21, sl, sl)
    with pytest.raises(WrongPredicateKind):
        malcev_membership(B21, get_predicate("triv"), get_predicate("triv"))
    fake = PseudovarietyPredicate("fake", "group", lambda G: True)
    with pytest.raises(NotFitting):
        lh_canonical_congruence(B21, fake)


def test_choice_independence():
    M = zoo.full_transformation(3)
    g = greens(M)
    for j in g.regular_j_classes():
        ref = ggm_congruence(M, j, None, g)
        for e in (x for x in g.j_members[j] if M.table[x][x] == x):
            rep = rees_representation(M, j, g, base=e, choose=max)
            assert ggm_congruence(M, j, None, g, rep) == ref
            rad = h_radical(rep.group, get_predicate("sol"))
            ref_rad = ggm_congruence(M, j, h_radical(rees_representation(M, j, g).group,
                                                     get_predicate("sol")), g)
            assert ggm_congruence(M, j, rad, g, rep) == ref_rad


def test_canonical_is_largest_lh_congruence_on_t2():
    M = zoo.full_transformation(2)
    for hn in H_NAMES:
        H = get_predicate(hn)
        canon = lh_canonical_congruence(M, H)
        lh = [c for c in all_congruences(M) if is_lh_congruence(M, c, H)]
        assert canon in lh and all(c <= canon for c in lh)
        assert isinstance(canon, Congruence)
