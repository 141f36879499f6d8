"""Finite quasigroups, soft sets over them, congruences and cosets"""

from quasisoft_cli.algebra.congruence import (
    Congruence,
    all_normal_congruences,
    format_congruence,
    generated_normal_congruence,
    is_normal_congruence,
    is_normal_subquasigroup,
    iter_partitions,
    parse_congruence,
    quotient,
)
from quasisoft_cli.algebra.core import (
    CayleyTable,
    OperationKind,
    Permutation,
    Side,
    ValidatedQuasigroup,
    distributive_identities,
    emit_table,
    evaluate,
    nuclei,
    parastrophe,
    parastrophe_classes,
    parse_table,
    properties,
    restrict,
    translation,
    validate,
)
from quasisoft_cli.algebra.cosets import (
    coset_family,
    coset_soft,
    is_normal_soft,
    quotient_family,
    translate_subset,
    verify_coset_theorems,
    verify_distributive_theorems,
)
from quasisoft_cli.algebra.isomorphism import IsoWitness, are_isomorphic, relabel
from quasisoft_cli.algebra.softquasigroup import (
    Metrics,
    SoftClass,
    SoftQuasigroup,
    amgm_holds,
    classify,
    is_distributive_soft,
    metrics,
    nuclear_check,
    parastrophe_metric_equality,
    soft_group_criterion,
    soft_parastrophe,
    soft_quasigroup_criterion,
    soft_subquasigroup_of,
    verify_six_equivalences,
)
from quasisoft_cli.algebra.softset import (
    SoftSet,
    extended_intersection,
    extended_union,
    parse_soft_set,
    restricted_intersection,
    soft_equal,
    soft_subset,
)
from quasisoft_cli.algebra.subalgebra import (
    all_subquasigroups,
    check_parastrophe_invariance,
    closure,
    group_criterion,
    induced,
    is_closed,
    is_subquasigroup,
)
from quasisoft_cli.algebra.subsets import SubsetMask, format_subset, parse_subset

__all__ = [
    "CayleyTable",
    "Congruence",
    "IsoWitness",
    "Metrics",
    "OperationKind",
    "Permutation",
    "Side",
    "SoftClass",
    "SoftQuasigroup",
    "SoftSet",
    "SubsetMask",
    "ValidatedQuasigroup",
    "all_normal_congruences",
    "all_subquasigroups",
    "amgm_holds",
    "are_isomorphic",
    "check_parastrophe_invariance",
    "classify",
    "closure",
    "coset_family",
    "coset_soft",
    "is_normal_soft",
    "distributive_identities",
    "emit_table",
    "evaluate",
    "extended_intersection",
    "extended_union",
    "format_congruence",
    "format_subset",
    "generated_normal_congruence",
    "group_criterion",
    "induced",
    "is_closed",
    "is_distributive_soft",
    "is_normal_congruence",
    "is_normal_subquasigroup",
    "is_subquasigroup",
    "iter_partitions",
    "metrics",
    "nuclear_check",
    "nuclei",
    "parastrophe",
    "parastrophe_classes",
    "parastrophe_metric_equality",
    "parse_congruence",
    "parse_soft_set",
    "parse_subset",
    "parse_table",
    "properties",
    "quotient",
    "quotient_family",
    "relabel",
    "restrict",
    "restricted_intersection",
    "soft_equal",
    "soft_group_criterion",
    "soft_parastrophe",
    "soft_quasigroup_criterion",
    "soft_subquasigroup_of",
    "soft_subset",
    "translate_subset",
    "translation",
    "validate",
    "verify_coset_theorems",
    "verify_distributive_theorems",
    "verify_six_equivalences",
]
