# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Contrib submodule containing system classification and the witness finders."""

import logging

from .catalog import expected_profile, list_entries, make_system
from .constants import beta, compute_J, gamma, pigeonhole, stirling_partitions, thresholds
from .extremal import max_shape_free
from .finder import (
    find_generic,
    find_high_rank,
    find_nontrivial,
    find_shape,
    find_shape_w,
    grow_shape,
    recombine_blocks,
    run_finder,
)
from .formats import read_matrix, read_pointset, write_matrix, write_pointset
from .pigeonhole import pigeonhole_pair
from .pointset import PointSet, SearchBudget, SearchReport
from .replacement import eliminate_breaking_pair, find_collision, replace_multiple, replace_single
from .sumset import (
    air_sumset,
    ap_in_difference,
    generic_in_air_sumset,
    max_tricoloured,
    verify_tricoloured,
)
from .system import SystemMatrix, classify_theorems, column_classes, decompose_irreducible, validate
from .witness import SolutionTuple, ann_bal, classify_tuple, is_generic, is_linearly_generic

logger = logging.getLogger(__name__)


__all__ = [
    "PointSet",
    "SearchBudget",
    "SearchReport",
    "SolutionTuple",
    "SystemMatrix",
    "air_sumset",
    "ann_bal",
    "ap_in_difference",
    "beta",
    "classify_theorems",
    "classify_tuple",
    "column_classes",
    "compute_J",
    "decompose_irreducible",
    "eliminate_breaking_pair",
    "expected_profile",
    "find_collision",
    "find_generic",
    "find_high_rank",
    "find_nontrivial",
    "find_shape",
    "find_shape_w",
    "gamma",
    "generic_in_air_sumset",
    "grow_shape",
    "is_generic",
    "is_linearly_generic",
    "list_entries",
    "make_system",
    "max_shape_free",
    "max_tricoloured",
    "pigeonhole",
    "pigeonhole_pair",
    "read_matrix",
    "read_pointset",
    "recombine_blocks",
    "replace_multiple",
    "replace_single",
    "run_finder",
    "stirling_partitions",
    "thresholds",
    "validate",
    "verify_tricoloured",
    "write_matrix",
    "write_pointset",
]
