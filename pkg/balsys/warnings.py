# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Module for balsys warnings."""


class BelowThresholdWarning(UserWarning):
    """Indicates that a finder runs below the size that guarantees success.

    The thresholds are sufficient conditions, so a search below the
    threshold may still succeed. The warning is only issued when the threshold
    check was explicitly overridden.
    """

    pass


__all__ = ["BelowThresholdWarning"]
