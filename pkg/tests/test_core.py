import pytest

from semicat import zoo
from semicat.core import (Congruence, all_congruences, find_isomorphism, greens,
                          greens_by_ideals, induced, is_compatible, is_in_LH,
                          is_lh_congruence, is_lh_morphism, local_monoid,
                          maximal_subgroup, monoid_from_generators, monoid_from_table,
                          morphism, principal_congruence, quotient)
from semicat.errors import (BadIdentity, DomainMismatch, IncompatiblePartition,
                            IndexOutOfRange, NonAssociative, NotIdempotent,
                            NotSurjective, SamePair, SizeLimitExceeded,
                            WrongPredicateKind)
from semicat.groups import get_predicate

B21 = zoo.b21()
A, B, AB, BA, Z = 1, 2, 3, 4, 5
triv = get_predicate("triv")


def names(M, xs):
    return {M.label(x) for x in xs}


# --- construction -----------------------------------------------------------

def test_trivial_table():
    M = monoid_from_table([[0]], 0)
    assert M.size == 1 and M.identity == 0


def test_u1_table_is_semilattice():
    U = zoo.u1()
    assert get_predicate("sl").member(U)
    assert U.idempotents == (0, 1)


def test_b21_relations():
    t = B21.table
    assert B21.size == 6
    assert t[t[A][B]][A] == A and t[t[B][A]][B] == B
    assert t[A][A] == Z and t[B][B] == Z
    assert t[A][B] == AB and t[B][A] == BA


def test_non_associative_rejected():
    # 0 is an identity; 1*1 = 2, 2*1 = 1, 1*2 = 2, 2*2 = 2 is not associative
    bad = [[0, 1, 2], [1, 2, 2], [2, 1, 2]]
    with pytest.raises(NonAssociative):
        monoid_from_table(bad, 0)


def test_bad_identity_and_ranges():
    with pytest.raises(BadIdentity):
        monoid_from_table([[0, 1], [1, 1]], 1)
    with pytest.raises(IndexOutOfRange):
        monoid_from_table([[0, 2], [1, 1]], 0)
    with pytest.raises(IndexOutOfRange):
        monoid_from_table([[0, 1]], 0)


def test_generators_empty_is_trivial():
    M = monoid_from_generators([], 3)
    assert M.size == 1


def test_generators_constant_map():
    M = monoid_from_generators([(0, 0)])
    assert M.size == 2
    c = 1
    assert M.table[c][c] == c


def test_generators_domain_mismatch():
    with pytest.raises(DomainMismatch):
        monoid_from_generators([(0, 1), (0, 1, 2)])


def test_generators_cap():
    with pytest.raises(SizeLimitExceeded):
        monoid_from_generators([(1, 2, 3, 4, 0), (1, 0, 2, 3, 4)], limit=50)


def test_b21_from_matrix_units():
    # points 0 and 1 carry the matrix units, 4 is a sink, 2 and 3 fall into it
    a = (1, 4, 4, 4, 4)
    b = (4, 0, 4, 4, 4)
    M = monoid_from_generators([a, b])
    assert M.size == 6
    assert find_isomorphism(M, B21) is not None


def test_full_transformation_sizes():
    assert zoo.full_transformation(2).size == 4
    assert zoo.full_transformation(3).size == 27


# --- Green's relations ------------------------------------------------------

def test_greens_trivial():
    g = greens(zoo.trivial_monoid())
    assert g.num_j == 1 and g.regular == (True,)


def test_greens_b21():
    g = greens(B21)
    assert g.num_j == 3
    assert all(g.regular)
    top, mid, bottom = g.j_class[0], g.j_class[A], g.j_class[Z]
    assert len({top, mid, bottom}) == 3
    assert {g.j_class[x] for x in (A, B, AB, BA)} == {mid}
    assert g.j_leq(mid, top) and g.j_leq(bottom, mid) and not g.j_leq(top, mid)
    # the middle J-class is a 2x2 egg-box of singleton H-classes
    assert len({g.h_class[x] for x in (A, B, AB, BA)}) == 4
    assert g.r_class[A] == g.r_class[AB] and g.l_class[A] == g.l_class[BA]


def test_greens_group_single_h_class():
    g = greens(zoo.cyclic(3))
    assert g.num_j == 1 and len(set(g.h_class)) == 1


@pytest.mark.parametrize("name", ["b21", "t3", "s3_0", "chain3", "cyc2_2", "lz2", "rz2", "b2"])
def test_greens_matches_ideal_oracle(name):
    M = zoo.MONOIDS[name]()
    assert greens(M) == greens_by_ideals(M)


# --- local monoids and subgroups --------------------------------------------

def test_local_monoid_at_identity():
    M, emb = local_monoid(B21, 0)
    assert M.table == B21.table and emb == tuple(range(6))


def test_local_monoid_b21_ab():
    M, emb = local_monoid(B21, AB)
    assert names(B21, emb) == {"ab", "0"}
    assert get_predicate("sl").member(M)
    assert emb[M.identity] == AB


def test_local_monoid_group():
    G = zoo.symmetric(3)
    M, _ = local_monoid(G, G.identity)
    assert M.size == 6


def test_local_monoid_needs_idempotent():
    with pytest.raises(NotIdempotent):
        local_monoid(B21, A)


def test_maximal_subgroups():
    assert maximal_subgroup(zoo.trivial_monoid(), 0).size == 1
    assert maximal_subgroup(B21, AB).size == 1
    M = zoo.adjoin_zero(zoo.cyclic(3))
    H = maximal_subgroup(M, M.identity)
    assert H.size == 3 and find_isomorphism(H, zoo.cyclic(3)) is not None


# --- LH ---------------------------------------------------------------------

def test_is_in_lh():
    assert is_in_LH(zoo.symmetric(3), get_predicate("sol"))
    assert not is_in_LH(zoo.symmetric(3), get_predicate("p:2"))
    assert not is_in_LH(B21, triv)
    assert not is_in_LH(zoo.u1(), triv)
    # the Brandt semigroup without identity has local monoids {e, 0}
    assert not is_in_LH(zoo.b2_semigroup(), get_predicate("all"))
    # left zero semigroups are in LI
    lz = induced(zoo.left_zero(2), [0, 1])
    assert is_in_LH(lz, triv)


def test_is_in_lh_rejects_monoid_predicate():
    with pytest.raises(WrongPredicateKind):
        is_in_LH(B21, get_predicate("sl"))


# --- congruences ------------------------------------------------------------

def test_principal_same_pair():
    with pytest.raises(SamePair):
        principal_congruence(zoo.trivial_monoid(), 0, 0)


def test_principal_u1():
    assert principal_congruence(zoo.u1(), 0, 1).is_universal


def test_principal_b21_collapses_ideal():
    c = principal_congruence(B21, AB, Z)
    assert c.num_classes == 2
    assert all(c.same(x, Z) for x in (A, B, AB, BA))
    assert not c.same(0, Z)
    Q, _ = quotient(B21, c)
    assert Q.size == 2 and get_predicate("sl").member(Q)


def test_principal_b21_matches_lattice():
    c = principal_congruence(B21, AB, Z)
    above = [d for d in all_congruences(B21) if d.same(AB, Z)]
    assert c in above and all(c <= d for d in above)


@pytest.mark.parametrize("name,count", [("trivial", 1), ("u1", 2), ("c2", 2),
                                        ("c4", 3), ("c2xc2", 5), ("s3", 3)])
def test_all_congruences_counts(name, count):
    assert len(all_congruences(zoo.MONOIDS[name]())) == count


def test_all_congruences_cap():
    with pytest.raises(SizeLimitExceeded):
        all_congruences(zoo.full_transformation(3))


def set_partitions(n):
    if n == 0:
        yield []
        return
    for labels in set_partitions(n - 1):
        for c in range(max(labels, default=-1) + 2):
            yield labels + [c]


@pytest.mark.parametrize("name", ["u1", "b21", "c4", "s3", "chain3", "t2", "u1xc2",
                                  "cyc2_2", "lz2", "s3_0", "c3_0"])
def test_all_congruences_against_partition_scan(name):
    M = zoo.MONOIDS[name]()
    scan = {Congruence.from_labels(p).class_of for p in set_partitions(M.size)
            if is_compatible(M, p)}
    assert {c.class_of for c in all_congruences(M)} == scan


def test_congruence_lattice_ops():
    c = Congruence.from_labels([5, 5, 2, 2])
    d = Congruence.from_labels([0, 1, 1, 2])
    assert c.class_of == (0, 0, 1, 1)
    assert (c & d).is_trivial
    assert (c | d).is_universal
    assert Congruence.trivial(4) <= c <= Congruence.universal(4)


def test_quotient_trivial_and_universal():
    Q, proj = quotient(B21, Congruence.trivial(6))
    assert Q.table == B21.table and proj.map == tuple(range(6))
    Q, _ = quotient(B21, Congruence.universal(6))
    assert Q.size == 1


def test_quotient_rejects_non_congruence():
    labels = [0, 0, 1, 1, 1, 1]
    assert not is_compatible(B21, labels)
    with pytest.raises(IncompatiblePartition):
        quotient(B21, Congruence.from_labels(labels))


# --- morphisms --------------------------------------------------------------

def test_identity_morphism_is_lh():
    for hn in ("triv", "p:2", "all"):
        assert is_lh_morphism(morphism(B21, B21, range(6)), get_predicate(hn))


def test_b21_onto_u1_is_not_lh_for_triv():
    # the preimage of 0 is {a, b, ab, ba, 0}; its local monoid at ab is {ab, 0}
    phi = morphism(B21, zoo.u1(), [0, 1, 1, 1, 1, 1])
    assert not is_lh_morphism(phi, triv)
    assert not is_lh_morphism(phi, get_predicate("all"))


def test_c4_onto_c2_is_lh_for_2_groups():
    phi = morphism(zoo.cyclic(4), zoo.cyclic(2), [0, 1, 0, 1])
    assert is_lh_morphism(phi, get_predicate("p:2"))
    assert not is_lh_morphism(phi, triv)
    assert is_lh_congruence(zoo.cyclic(4), phi.kernel(), get_predicate("p:2"))


def test_morphism_validation():
    with pytest.raises(IncompatiblePartition):
        morphism(zoo.cyclic(4), zoo.cyclic(2), [0, 1, 1, 1])
    with pytest.raises(NotSurjective):
        is_lh_morphism(morphism(zoo.trivial_monoid(), zoo.u1(), [0]), triv)


def test_isomorphism_relabeled():
    M = zoo.full_transformation(2)
    perm = [0, 3, 1, 2]
    inv = [perm.index(i) for i in range(4)]
    table = [[perm[M.table[inv[x]][inv[y]]] for y in range(4)] for x in range(4)]
    N = monoid_from_table(table, perm[M.identity])
    iso = find_isomorphism(M, N)
    assert iso is not None
    assert all(iso[M.table[x][y]] == N.table[iso[x]][iso[y]] for x in range(4) for y in range(4))
    assert find_isomorphism(zoo.cyclic(4), zoo.direct_product(zoo.cyclic(2), zoo.cyclic(2))) is None
