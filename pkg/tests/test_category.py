import pytest

from semicat import zoo
from semicat.category import (CatCongruence, all_cat_congruences, cat_morphism,
                              cat_principal_congruence, cat_quotient, category_from_data,
                              category_from_json, category_from_monoid, category_to_json,
                              consolidate_morphism, consolidation, ell_malcev_membership,
                              ell_membership, identity_morphism, is_lh_morphism_cat,
                              is_lh_morphism_cat_direct, is_mpq, kernel_category,
                              local_monoid_at, mpq_factorize, supertech_construct)
from semicat.core import (all_congruences, find_isomorphism, is_lh_morphism,
                          lh_on_subset, morphism, principal_congruence, quotient)
from semicat.errors import (BadComposition, BadIdentity, IncompatiblePartition,
                            Injective, NonAssociative, NonCoterminalClass,
                            NotCoterminal, NotQuotient, SamePair)
from semicat.ggm import lh_canonical_congruence
from semicat.groups import get_predicate

TWO = zoo.two_object_arrow_cat()
ID0, ID1, U = 0, 1, 2
p2 = get_predicate("p:2")
triv = get_predicate("triv")
sl = get_predicate("sl")


# --- construction -----------------------------------------------------------

def test_trivial_category_from_json():
    C = category_from_json({"objects": 1, "arrows": [{"src": 0, "dst": 0}],
                            "identities": [0], "compose": {"0,0": 0}})
    assert C == zoo.trivial_cat()


def test_monoid_as_category_round_trips():
    C = category_from_monoid(zoo.b21())
    assert category_from_json(category_to_json(C)) == C
    assert local_monoid_at(C, 0).table == zoo.b21().table


def test_two_object_composition():
    assert TWO.mul(U, ID1) == U and TWO.mul(ID0, U) == U
    assert category_from_json(category_to_json(TWO)) == TWO


def test_validation_errors():
    # composite defined on a non-composable pair
    with pytest.raises(BadComposition):
        category_from_data(2, [(0, 0), (1, 1), (0, 1)], [0, 1],
                           {(0, 0): 0, (1, 1): 1, (0, 2): 2, (2, 1): 2, (1, 0): 0})
    with pytest.raises(BadIdentity):
        category_from_data(1, [(0, 0), (0, 0)], [1], {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1})
    bad = [[0, 1, 2], [1, 2, 2], [2, 1, 2]]
    with pytest.raises(NonAssociative):
        category_from_data(1, [(0, 0)] * 3, [0],
                           {(i, j): bad[i][j] for i in range(3) for j in range(3)})


# --- local monoids and consolidation ----------------------------------------

def test_local_monoids():
    assert local_monoid_at(zoo.trivial_cat(), 0).size == 1
    assert local_monoid_at(TWO, 0).size == 1
    assert local_monoid_at(zoo.c2_triv_cat(), 0).size == 2


def test_consolidation_trivial():
    M, emb = consolidation(zoo.trivial_cat())
    assert M.size == 3 and emb == (0,)
    assert M.table[0][0] == 0 and M.identity != 0


def test_consolidation_size_formula():
    C = category_from_monoid(zoo.cyclic_monoid(2, 3))
    assert C.num_arrows == 5
    assert consolidation(C)[0].size == 7


def test_consolidation_two_object():
    M, _ = consolidation(TWO)
    zero = 3
    assert M.size == 5
    assert M.table[U][U] == zero
    assert M.table[ID0][U] == U and M.table[U][ID1] == U
    assert M.table[ID1][U] == zero
    # local identities stay distinct from the adjoined identity
    assert M.identity == 4 and M.table[ID0][ID1] == zero


# --- congruences and quotients ----------------------------------------------

def test_cat_quotient_trivial_congruence_is_identity():
    D, phi = cat_quotient(TWO, [0, 1, 2])
    assert D == TWO and phi.arrow_map == (0, 1, 2)


def test_cat_quotient_group_homset_universal():
    C = category_from_monoid(zoo.cyclic(2))
    D, phi = cat_quotient(C, [0, 0])
    assert D == zoo.trivial_cat() and phi.is_surjective


def test_cat_quotient_errors():
    with pytest.raises(NonCoterminalClass):
        cat_quotient(TWO, [0, 0, 1])
    C = category_from_monoid(zoo.b21())
    with pytest.raises(IncompatiblePartition):
        cat_quotient(C, [0, 0, 1, 1, 1, 1])


def test_cat_principal_congruence():
    with pytest.raises(NotCoterminal):
        cat_principal_congruence(TWO, ID0, U)
    with pytest.raises(SamePair):
        cat_principal_congruence(TWO, U, U)
    B21 = zoo.b21()
    C = category_from_monoid(B21)
    for x, y in ((3, 5), (1, 2), (0, 5)):
        assert cat_principal_congruence(C, x, y).class_of == \
            principal_congruence(B21, x, y).class_of


def test_all_cat_congruences_one_object_matches_monoid():
    for name in ("b21", "c4", "u1xc2"):
        M = zoo.MONOIDS[name]()
        cats = {k.class_of for k in all_cat_congruences(category_from_monoid(M))}
        assert cats == {c.class_of for c in all_congruences(M)}


# --- LH-morphisms -----------------------------------------------------------

def test_identity_is_lh():
    for C in (TWO, zoo.c2_triv_cat(), zoo.iso_pair_cat()):
        assert is_lh_morphism_cat(identity_morphism(C), triv)


def test_one_object_defers_to_monoid():
    G = zoo.cyclic(4)
    C = category_from_monoid(G)
    _, phi = cat_quotient(C, [0, 1, 0, 1])
    mono = morphism(G, zoo.cyclic(2), [0, 1, 0, 1])
    for hn in ("triv", "p:2", "all"):
        H = get_predicate(hn)
        assert is_lh_morphism_cat(phi, H) == is_lh_morphism(mono, H)


def test_lh_consolidation_cross_check():
    C = zoo.c2_triv_cat()
    _, phi = cat_quotient(C, [0, 0, 1, 2])
    for hn in ("triv", "p:2", "sol"):
        H = get_predicate(hn)
        a = is_lh_morphism_cat(phi, H)
        assert a == is_lh_morphism(consolidate_morphism(phi), H)
        assert a == is_lh_morphism_cat_direct(phi, H)
    assert is_lh_morphism_cat(phi, p2) and not is_lh_morphism_cat(phi, triv)


def test_lh_on_subset_for_semigroup_preimages():
    M, _ = consolidation(TWO)
    assert lh_on_subset(M, [ID0], triv)
    assert not lh_on_subset(M, [ID0, 3], triv)


def test_not_quotient():
    discrete = category_from_data(2, [(0, 0), (1, 1)], [0, 1], {(0, 0): 0, (1, 1): 1})
    inc = cat_morphism(discrete, TWO, [0, 1])
    with pytest.raises(NotQuotient):
        is_lh_morphism_cat(inc, triv)
    with pytest.raises(NotQuotient):
        kernel_category(inc)


# --- MPQ --------------------------------------------------------------------

C4 = category_from_monoid(zoo.cyclic(4))


def test_mpq_examples():
    _, to_c2 = cat_quotient(C4, [0, 1, 0, 1])
    _, to_trivial = cat_quotient(C4, [0, 0, 0, 0])
    assert is_mpq(to_c2)
    assert not is_mpq(to_trivial)
    with pytest.raises(Injective):
        is_mpq(identity_morphism(C4))


def test_mpq_factorize_examples():
    assert mpq_factorize(identity_morphism(C4)) == []
    _, to_c2 = cat_quotient(C4, [0, 1, 0, 1])
    assert mpq_factorize(to_c2) == [to_c2]
    _, to_trivial = cat_quotient(C4, [0, 0, 0, 0])
    chain = mpq_factorize(to_trivial)
    assert len(chain) == 2
    assert chain[0].kernel().class_of == (0, 1, 0, 1)
    assert chain[-1].target == to_trivial.target


def test_mpq_matches_congruence_lattice():
    B21 = category_from_monoid(zoo.b21())
    congs = all_cat_congruences(B21)
    for k in congs:
        if k.is_trivial:
            continue
        _, phi = cat_quotient(B21, k)
        minimal = not any(d != k and not d.is_trivial and d.refines(k) for d in congs)
        assert is_mpq(phi) == minimal


# --- kernel categories ------------------------------------------------------

def test_kernel_onto_trivial_monoid():
    M = zoo.full_transformation(2)
    C = category_from_monoid(M)
    _, phi = cat_quotient(C, [0] * M.size)
    K = kernel_category(phi)
    assert K.category.num_objects == 1
    assert find_isomorphism(local_monoid_at(K.category, 0), M) is not None


def test_kernel_of_identity_on_trivial():
    K = kernel_category(identity_morphism(zoo.trivial_cat()))
    assert K.category.num_objects == 1 and K.category.num_arrows == 1


def test_kernel_c4_onto_c2():
    _, phi = cat_quotient(C4, [0, 1, 0, 1])
    K = kernel_category(phi)
    assert K.category.num_objects == 4
    for c in range(4):
        assert find_isomorphism(local_monoid_at(K.category, c), zoo.cyclic(2)) is not None
    assert ell_membership(K.category, p2)
    assert not ell_membership(K.category, triv)


def test_kernel_accepts_monoid_morphisms():
    G = zoo.cyclic(4)
    K = kernel_category(morphism(G, zoo.cyclic(2), [0, 1, 0, 1]))
    assert K.category.num_objects == 4


def test_kernel_includes_non_composable_labels():
    # (id0, u, id1) is an arrow although id0 id1 is not composable;
    # in the target id0, id1, u are arrows 0, 1, 2 and u is arrow 3 of C
    C = zoo.c2_triv_cat()
    _, phi = cat_quotient(C, [0, 0, 1, 2])
    K = kernel_category(phi)
    assert (0, 3, 1) in K.class_of_triple
    src, dst = K.category.arrows[K.class_of_triple[(0, 3, 1)]]
    assert K.objects[src] == (0, 2) and K.objects[dst] == (2, 1)


# --- local membership and the supertech construction ------------------------

def test_ell_membership():
    assert ell_membership(zoo.trivial_cat(), sl)
    assert not ell_membership(category_from_monoid(zoo.b21()), sl)
    assert ell_malcev_membership(zoo.c2_triv_cat(), p2, sl)
    assert not ell_malcev_membership(zoo.c2_triv_cat(), triv, sl)


def test_supertech_trivial():
    res = supertech_construct(zoo.trivial_cat(), triv, sl)
    assert res.category == zoo.trivial_cat()
    assert res.projection.arrow_map == (0,)


def test_supertech_one_object():
    for name in ("b21", "u1xc2", "s3_0", "t2"):
        M = zoo.MONOIDS[name]()
        for hn in ("triv", "p:2", "sol"):
            H = get_predicate(hn)
            res = supertech_construct(category_from_monoid(M), H)
            canon = lh_canonical_congruence(M, H)
            assert res.congruence.class_of == canon.class_of
            assert local_monoid_at(res.category, 0).table == quotient(M, canon)[0].table


def test_supertech_c2_triv_cat():
    C = zoo.c2_triv_cat()
    res = supertech_construct(C, p2, sl)
    D = res.category
    assert all(local_monoid_at(D, c).size == 1 for c in range(2))
    assert is_lh_morphism_cat(res.projection, p2)
    assert ell_membership(D, sl)
    assert isinstance(res.congruence, CatCongruence)
