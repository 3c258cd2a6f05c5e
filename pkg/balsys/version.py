# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Define balsys version."""


__version__ = "0.1.0"

# Version of the JSON report layout.
SCHEMA_VERSION = "1"


__all__ = [
    "__version__",
    "SCHEMA_VERSION",
]
