"""Amenability constants of centres of finite group algebras.

Thin wrapper around the C++ core. Exact values come back as
``fractions.Fraction``; character tables as nested lists of complex values.
"""

from ._core import (  # noqa: F401
    CharTable,
    ConjClassPartition,
    GroupTable,
    ZlcConstructionError,
    ZlcNumericError,
    ZlcUsageError,
    a2xb_group,
    abelian_product,
    affine_group,
    amzl_direct_norm,
    amzl_general,
    amzl_two_degree,
    build_from_generators,
    center_order,
    character_degrees,
    character_table,
    class_mult_coefficient,
    closed_form_a2xb,
    closed_form_affine,
    closed_form_dihedral,
    closed_form_extraspecial,
    closed_form_frobenius,
    conjugacy_classes,
    cyclic,
    derived_subgroup_order,
    dihedral,
    extraspecial_heisenberg,
    figure1_minima,
    frobenius_cyclic,
    frobenius_min_scan,
    is_abelian,
    lemma_linear_block_norm,
    linear_character_count,
    parse_generators,
    quaternion8,
    run_acceptance_checks,
    two_degree_profile,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
