# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Errors raised by balsys.core classes."""


class Error(Exception):
    """Base class used for balsys Errors."""

    pass


class FieldError(Error, ValueError):
    """Raised for an unsupported field order or an invalid element encoding."""

    pass


class DimensionError(Error, ValueError):
    """Raised when vectors or matrices have incompatible shapes."""

    pass


class InternalConsistencyError(Error, AssertionError):
    """Two independent checks of the same property disagree.

    This indicates a bug in balsys rather than a problem with the input.
    """

    pass
