"""Constructive local antimagic labelings of theta graphs and friends."""

from .base import Labeled
from .matrices import (
    LabelMatrix, build_lambda, build_psi, label_theta_2s4, label_theta_2s4_alternate,
    theta_2s4_colors,
)
from .sequence_labelings import (
    label_paired_paths, label_theta_4m, label_theta_4m3, label_theta_4m3_five,
)
from .transforms import (
    check_spider_structure, label_cycle_union_A, label_cycle_union_B, lift_two_coloring,
    merge_cycle_union, merge_spider_pendants, spider_condition,
)

__all__ = [
    "Labeled", "LabelMatrix", "build_lambda", "build_psi", "label_theta_2s4",
    "label_theta_2s4_alternate", "theta_2s4_colors", "label_paired_paths",
    "label_theta_4m", "label_theta_4m3", "label_theta_4m3_five",
    "check_spider_structure", "label_cycle_union_A", "label_cycle_union_B",
    "lift_two_coloring", "merge_cycle_union", "merge_spider_pendants", "spider_condition",
]
