"""Finite monoids, Green's structure, GGM quotients, and LH-morphisms of
finite categories."""

from .category import (CatCongruence, CatMorphism, FiniteCategory, KernelCategory,
                       all_cat_congruences, cat_morphism, cat_principal_congruence,
                       cat_quotient, category_from_data, category_from_json,
                       category_from_monoid, category_to_json, consolidate_morphism,
                       consolidation, ell_malcev_membership, ell_membership,
                       is_lh_morphism_cat, is_mpq, kernel_category, local_monoid_at,
                       mpq_factorize, supertech_construct)
from .core import (Congruence, FiniteMonoid, GreensData, MonoidMorphism,
                   all_congruences, congruence_generated, find_isomorphism, greens,
                   greens_by_ideals, is_in_LH, is_lh_congruence, is_lh_morphism,
                   local_monoid, maximal_subgroup, monoid_from_generators,
                   monoid_from_table, morphism, principal_congruence, quotient)
from .errors import SemicatError
from .ggm import (ggm_congruence, ggm_quotient, lh_canonical_congruence,
                  malcev_membership, malcev_membership_oracle)
from .groups import (FiniteGroup, PseudovarietyPredicate, all_normal_subgroups,
                     get_predicate, group_from_table, h_radical, normal_closure,
                     subgroup_generated)
from .jsonio import (congruence_from_json, congruence_to_json, group_from_json,
                     monoid_from_json, monoid_to_json)
from .rees import ZERO, ReesRepresentation, eta, psi, rees_representation
from .zoo import builtin_zoo

__all__ = [
    "CatCongruence",
    "CatMorphism",
    "FiniteCategory",
    "KernelCategory",
    "all_cat_congruences",
    "cat_morphism",
    "cat_principal_congruence",
    "cat_quotient",
    "category_from_data",
    "category_from_json",
    "category_from_monoid",
    "category_to_json",
    "consolidate_morphism",
    "consolidation",
    "ell_malcev_membership",
    "ell_membership",
    "is_lh_morphism_cat",
    "is_mpq",
    "kernel_category",
    "local_monoid_at",
    "mpq_factorize",
    "supertech_construct",
    "Congruence",
    "FiniteMonoid",
    "GreensData",
    "MonoidMorphism",
    "all_congruences",
    "congruence_generated",
    "find_isomorphism",
    "greens",
    "greens_by_ideals",
    "is_in_LH",
    "is_lh_congruence",
    "is_lh_morphism",
    "local_monoid",
    "maximal_subgroup",
    "monoid_from_generators",
    "monoid_from_table",
    "morphism",
    "principal_congruence",
    "quotient",
    "SemicatError",
    "ggm_congruence",
    "ggm_quotient",
    "lh_canonical_congruence",
    "malcev_membership",
    "malcev_membership_oracle",
    "FiniteGroup",
    "PseudovarietyPredicate",
    "all_normal_subgroups",
    "get_predicate",
    "group_from_table",
    "h_radical",
    "normal_closure",
    "subgroup_generated",
    "congruence_from_json",
    "congruence_to_json",
    "group_from_json",
    "monoid_from_json",
    "monoid_to_json",
    "ZERO",
    "ReesRepresentation",
    "eta",
    "psi",
    "rees_representation",
    "builtin_zoo",
]
