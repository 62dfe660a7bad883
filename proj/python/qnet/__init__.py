"""Structural controllability and single-driver augmentation of directed networks."""

from ._qnet import (
    AugmentationPlan,
    Network,
    NetworkError,
    analyze,
    apply_plan,
    contract_supervertex,
    generic_rank_check,
    lin_check,
    maximum_matching,
    minimum_drivers,
    parse_network,
    plan_augmentation,
)

__all__ = [
    "AugmentationPlan",
    "Network",
    "NetworkError",
    "analyze",
    "apply_plan",
    "contract_supervertex",
    "generic_rank_check",
    "lin_check",
    "maximum_matching",
    "minimum_drivers",
    "parse_network",
    "plan_augmentation",
]
