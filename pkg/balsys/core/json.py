# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
"""JSON encoding of reports."""
import logging
from json import JSONEncoder, load, loads
from json.decoder import JSONDecodeError
from typing import Any, Dict, Optional

import numpy

logger = logging.getLogger(__name__)


class CustomJSONEncoder(JSONEncoder):
    """Attempt to JSON-encode objects beyond the default supported types.

    numpy scalars and arrays are converted to Python numbers and lists.
    Other objects are encoded through their ``_as_dict()`` method; tuples of
    coordinates are written as lists.
    """

    def default(self, o: Any) -> Dict[str, Any]:
        if isinstance(o, numpy.bool_):
            return bool(o)
        if isinstance(o, numpy.number):
            return o.item()
        elif isinstance(o, numpy.ndarray):
            return o.tolist()
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        try:
            return o._as_dict()
        except AttributeError:
            # Call the super method, which raises a TypeError if it cannot
            # encode the object.
            return super().default(o)


def _encodable(o: Any) -> Any:
    # Named tuples never reach default(), so convert them up front.
    if hasattr(o, "_as_dict"):
        return _encodable(o._as_dict())
    if isinstance(o, dict):
        return {k: _encodable(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_encodable(v) for v in o]
    return o


def dumps(o: Any, sort_keys: bool = True, indent: Optional[int] = None) -> str:
    """Convert a JSON-compatible mapping into a string.

    Keys are sorted by default so equal reports encode to equal bytes.
    """
    return CustomJSONEncoder(sort_keys=sort_keys, indent=indent).encode(_encodable(o))


__all__ = ["loads", "load", "dumps", "JSONDecodeError", "CustomJSONEncoder"]
