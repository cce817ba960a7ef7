"""Exact character theory for symmetric-group blocks and wreath products.

The package computes, over exact integers and rationals, the canonical
signed bijection between the irreducible characters of a block of a
symmetric group and those of the principal block of the matching wreath
product, and verifies its defining identities (value agreement, vanishing
ranges, heights, separation, and lattice equalities) at desk scale.
"""

from .abacus import (
    block_weight,
    circularly_nondecreasing,
    contains_p,
    p_core,
    p_quotient,
    p_sign,
    runner_permutation,
)
from .isometry import build_isometry, isometry_image, isometry_row
from .partitions import (
    GuardExceeded,
    Partition,
    conjugate,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .symchar import SnClassFunction, character_value, degree, irr_class_function, mn_value
from .wreath import (
    WreathClassFunction,
    enumerate_irr_wreath,
    enumerate_wreath_classes,
    zeta_irr,
)

__version__ = "0.1.0"

__all__ = [
    "GuardExceeded",
    "Partition",
    "SnClassFunction",
    "WreathClassFunction",
    "block_weight",
    "build_isometry",
    "character_value",
    "circularly_nondecreasing",
    "conjugate",
    "contains_p",
    "degree",
    "enumerate_irr_wreath",
    "enumerate_partitions",
    "enumerate_wreath_classes",
    "format_partition",
    "irr_class_function",
    "isometry_image",
    "isometry_row",
    "mn_value",
    "p_core",
    "p_quotient",
    "p_sign",
    "parse_partition",
    "runner_permutation",
    "zeta_irr",
    "__version__",
]
