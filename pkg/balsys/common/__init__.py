# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Common submodule containing configuration parsing."""
