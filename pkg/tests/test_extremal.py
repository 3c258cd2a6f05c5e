# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest

from balsys.contrib.enumeration import first_solution
from balsys.contrib.extremal import max_shape_free, shape_hypergraph


class TestShapeFree:
    @pytest.mark.parametrize("n, size", [(1, 2), (2, 4)])
    def test_three_ap(self, three_ap_F3, n, size):
        result = max_shape_free(three_ap_F3, n)
        assert result.size == size
        assert result.exact
        assert len(result.witness) == size
        assert (0,) * n in result.witness
        assert first_solution(three_ap_F3, result.witness, lambda t: t.distinct == 3) is None

    def test_budget(self, three_ap_F3):
        result = max_shape_free(three_ap_F3, 2, budget=3)
        assert not result.exact
        assert result.evaluations == 3
        assert result._as_dict()["exact"] is False

    def test_too_large(self, three_ap_F3):
        with pytest.raises(ValueError):
            max_shape_free(three_ap_F3, 7)


class TestHypergraph:
    def test_lines(self, three_ap_F3):
        incident = shape_hypergraph(three_ap_F3, 2)
        # every point of the plane lies on four lines
        assert all(len(edges) == 4 for edges in incident)
        assert len(set().union(*incident)) == 12
