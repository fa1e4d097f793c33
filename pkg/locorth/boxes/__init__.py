"""
Boîtes non-signalantes : construction, validation, fichiers
"""

from .box import (
    Box,
    BoxVerdict,
    deterministic_box,
    mix,
    pr_box,
    pr_box_variant,
    support,
    tensor,
    tensor_power,
    unconditional_joint,
    uniform_box,
    validate,
)
from .lhv import LHVModel, from_lhv, random_local_box, random_ns_box

__all__ = [
    "Box",
    "BoxVerdict",
    "LHVModel",
    "deterministic_box",
    "from_lhv",
    "mix",
    "pr_box",
    "pr_box_variant",
    "random_local_box",
    "random_ns_box",
    "support",
    "tensor",
    "tensor_power",
    "unconditional_joint",
    "uniform_box",
    "validate",
]
