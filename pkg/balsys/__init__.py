# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""balsys finds shapes and generic solutions of balanced linear systems over finite fields.

A balanced system has coefficient rows summing to zero, so constant tuples
always solve it. Given a large enough subset S of F_q^n, balsys constructs
solutions with pairwise distinct entries (shapes) and solutions satisfying
no relation beyond those forced by the system (generic solutions), and
reports the sizes at which these constructions are guaranteed to succeed.
"""

from . import contrib, errors, testing, warnings
from .contrib import (
    PointSet,
    SearchBudget,
    SolutionTuple,
    SystemMatrix,
    classify_tuple,
    find_generic,
    find_shape,
    make_system,
    run_finder,
    validate,
)
from .core.field import FieldCtx, fq_init, parse_order
from .version import __version__

__all__ = [
    "__version__",
    "contrib",
    "errors",
    "testing",
    "warnings",
    "FieldCtx",
    "PointSet",
    "SearchBudget",
    "SolutionTuple",
    "SystemMatrix",
    "classify_tuple",
    "find_generic",
    "find_shape",
    "fq_init",
    "make_system",
    "parse_order",
    "run_finder",
    "validate",
]
