# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""Validate config schema."""

import logging

try:
    from configobj.validate import Validator, VdtTypeError, VdtValueError
except ImportError:  # configobj < 5.1
    from validate import Validator, VdtTypeError, VdtValueError

from ..core.errors import FieldError
from ..core.field import parse_order

logger = logging.getLogger(__name__)


def field_order(value, *args, **kwargs):
    """Return a field order written as ``p`` or ``p^s``."""
    if isinstance(value, list):
        raise VdtTypeError(value)
    try:
        return parse_order(value).label
    except FieldError:
        raise VdtValueError(value)


def get_validator():  # noqa: D103
    return Validator({"field_order": field_order})


cfg = """
[search]
seed = integer(default=0)
budget = integer(min=1, default=None)
threads = integer(min=1, default=1)
override_threshold = boolean(default=False)
verify_limit = integer(min=0, default=1000000)

[constants]
tol = float(min=0, default=1e-10)
gamma_mode = option('flat', 'tower', default='flat')

[output]
format = option('text', 'json', default='text')

[catalog]
default_q = field_order(default='5')
"""
