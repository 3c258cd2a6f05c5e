# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import numpy as np
import pytest

from balsys.contrib.catalog import expected_profile, make_system
from balsys.contrib.constants import gamma
from balsys.contrib.extremal import max_shape_free
from balsys.core import json


class TestJSON:
    def test_numpy(self):
        data = {"a": np.int64(3), "b": np.array([[1, 2]]), "c": np.bool_(True), "d": np.float64(0.5)}
        assert json.loads(json.dumps(data)) == {"a": 3, "b": [[1, 2]], "c": True, "d": 0.5}

    def test_sets(self):
        assert json.dumps({"s": {3, 1, 2}}) == '{"s": [1, 2, 3]}'

    def test_sorted_keys(self):
        assert json.dumps({"b": 1, "a": 2}) == '{"a": 2, "b": 1}'

    def test_as_dict(self, F5):
        data = json.loads(json.dumps({"profile": make_system("star", F5).profile}))
        assert data["profile"]["type_rc"]
        assert data["profile"]["flags"]["generic_clauses"] == ["rank_gap"]

    def test_named_tuples(self, three_ap_F3):
        data = json.loads(json.dumps([expected_profile("star", 5), gamma(3)]))
        assert data[0]["shape_clauses"] == ["nonzero_sum"]
        assert data[1]["q"] == 3
        result = json.loads(json.dumps(max_shape_free(three_ap_F3, 1)))
        assert result["size"] == 2
        assert result["witness"]["n"] == 1

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            json.dumps({"x": object()})
