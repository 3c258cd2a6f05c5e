# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Core submodule containing exact finite-field arithmetic and linear algebra."""
