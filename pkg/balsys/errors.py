# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Errors raised by balsys."""

# The subpackage error modules (e.g. balsys.core.errors) are used to bundle
# exceptions that are relevant beyond a single module. This top-level errors
# module is used to expose user-facing exception classes.

from .common.errors import ConfigError
from .contrib.errors import (
    BelowThresholdError,
    BudgetExceededError,
    DegenerateListError,
    DegenerateSystemError,
    FormatError,
    NotApplicableError,
    NotFoundError,
    UnknownSystemError,
)
from .core.errors import DimensionError, Error, FieldError, InternalConsistencyError

__all__ = [
    "BelowThresholdError",
    "BudgetExceededError",
    "ConfigError",
    "DegenerateListError",
    "DegenerateSystemError",
    "DimensionError",
    "Error",
    "FieldError",
    "FormatError",
    "InternalConsistencyError",
    "NotApplicableError",
    "NotFoundError",
    "UnknownSystemError",
]
